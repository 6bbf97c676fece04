"""Gadget data tables.

Each table lists the vertices of a gadget with the coordinates of its
drawing, the edges (arcs point from the first to the second vertex), the
port stubs and, per side of the gadget, the ports in boundary order: top
and bottom left to right, left and right top to bottom.

For the undirected gadgets, every interior vertex except the ones listed
as ``crossing`` is non-crossing.
"""

from typing import NamedTuple, Tuple, Dict


Coordinates = Tuple[int, int]


class GadgetTable(NamedTuple):
    kind:     str
    directed: bool
    vertices: Tuple[Tuple[str, Coordinates], ...]
    edges:    Tuple[Tuple[str, str], ...]
    sides:    Dict[str, Tuple[str, ...]]
    crossing: Tuple[str, ...] = ()


# -- UNDIRECTED -- #

_EXCHANGER_VERTICES = (
    # crossing vertices
    ('a', (14, 18)), ('b', (12, 16)), ('c', (16, 16)), ('d', (14, 14)),
    # interior
    ('u1', (6, 22)), ('u2', (10, 22)), ('u3', (18, 22)), ('u4', (22, 22)),
    ('u5', (10, 18)), ('u6', (18, 18)), ('u7', (10, 14)), ('u8', (18, 14)),
    ('u9', (6, 10)), ('u10', (10, 10)), ('u11', (18, 10)), ('u12', (22, 10)),
    # ports
    ('s1', (6, 24)), ('s2', (10, 24)), ('s3', (18, 24)), ('s4', (22, 24)),
    ("s'1", (6, 8)), ("s'2", (10, 8)), ("s'3", (18, 8)), ("s'4", (22, 8)),
    ('t1', (4, 22)), ('t2', (4, 10)), ("t'1", (24, 22)), ("t'2", (24, 10)),
)

_EXCHANGER_EDGES = (
    # lower half
    ('u9', 't2'), ("s'1", 'u9'), ("s'2", 'u10'), ('u12', "t'2"), ("s'4", 'u12'), ('u11', "s'3"), ('u12', 'u11'),
    ('u8', 'u12'), ('u11', 'u8'), ('d', 'u11'), ('u10', 'd'), ('u10', 'u7'), ('u9', 'u10'), ('u7', 'u9'),
    # centre and right
    ('u4', "t'1"), ('s4', 'u4'), ('u3', 's3'), ('u4', 'u3'), ('u6', 'u4'), ('u8', 'u6'), ('c', 'u8'), ('d', 'c'),
    ('b', 'd'), ('u7', 'b'), ('u5', 'u7'), ('b', 'u5'), ('a', 'b'), ('c', 'a'), ('u6', 'c'), ('u3', 'u6'), ('a', 'u3'),
    # upper left
    ('u2', 'a'), ('u5', 'u2'), ('u1', 'u5'), ('u2', 's2'), ('u1', 'u2'), ('u1', 't1'), ('s1', 'u1'),
)

_EXCHANGER_SIDES = {
    'top':    ('s1', 's2', 's3', 's4'),
    'bottom': ("s'1", "s'2", "s'3", "s'4"),
    'left':   ('t1', 't2'),
    'right':  ("t'1", "t'2"),
}

XCH = GadgetTable(kind='XCH', directed=False, vertices=_EXCHANGER_VERTICES, edges=_EXCHANGER_EDGES, sides=_EXCHANGER_SIDES,
                  crossing=('a', 'b', 'c', 'd'))

LIC = GadgetTable(kind='LIC', directed=False, vertices=_EXCHANGER_VERTICES, edges=_EXCHANGER_EDGES, sides=_EXCHANGER_SIDES,
                  crossing=('a', 'b', 'c', 'd', 'u5', 'u6'))


# -- DIRECTED: TRACK SWITCHES -- #

_SWITCH_SIDES = {
    'top':    ('b', 'c'),
    'bottom': ("b'", "c'"),
    'left':   ('a',),
    'right':  ("a'",),
}

NO = GadgetTable(kind='NO', directed=True,
                 vertices=(('a', (3, 21)), ("a'", (9, 21)), ('b', (5, 23)), ("b'", (5, 19)), ('c', (7, 23)), ("c'", (7, 19)),
                           ('v1', (5, 21)), ('v2', (7, 21))),
                 edges=(('a', 'v1'), ('b', 'v1'), ('v1', 'v2'), ('v1', "b'"), ('c', 'v2'), ('v2', "a'"), ('v2', "c'")),
                 sides=_SWITCH_SIDES)

YES = GadgetTable(kind='YES', directed=True,
                  vertices=(('a', (13, 21)), ("a'", (21, 21)), ('b', (15, 24)), ("b'", (15, 18)), ('c', (19, 24)), ("c'", (19, 18)),
                            ('p1', (15, 22)), ('p2', (19, 22)), ('p3', (19, 20)), ('p4', (17, 20)), ('p5', (17, 22)), ('p6', (15, 20))),
                  edges=(('a', 'p1'), ('b', 'p1'), ('c', 'p2'), ('p2', 'p3'), ('p3', "a'"), ('p3', "c'"), ('p4', 'p3'),
                         ('p2', 'p5'), ('p4', 'p6'), ('p5', 'p4'), ('p1', 'p5'), ('p6', "b'"), ('p1', 'p6')),
                  sides=_SWITCH_SIDES)

ON = GadgetTable(kind='ON', directed=True,
                 vertices=(('a', (7, 25)), ("a'", (7, 19)), ('b', (5, 23)), ("b'", (9, 23)), ('c', (5, 21)), ("c'", (9, 21)),
                           ('o1', (7, 23)), ('o2', (7, 21))),
                 edges=(('a', 'o1'), ('b', 'o1'), ('o1', "b'"), ('o1', 'o2'), ('c', 'o2'), ('o2', "c'"), ('o2', "a'")),
                 sides={
                     'top':    ('a',),
                     'bottom': ("a'",),
                     'left':   ('b', 'c'),
                     'right':  ("b'", "c'"),
                 })


# -- DIRECTED: TRACK LOCKS -- #

IF = GadgetTable(kind='IF', directed=True,
                 vertices=(('a', (6, 26)), ('b', (2, 22)), ('b2', (14, 22)), ('b1', (14, 20)), ('a1', (8, 18)), ('a2', (12, 18)),
                           ('i1', (4, 22)), ('i2', (6, 22)), ('i3', (8, 22)), ('i4', (10, 22)), ('i5', (6, 24)),
                           ('i6', (10, 24)), ('i7', (4, 20)), ('i8', (8, 20)), ('i9', (10, 20)), ('i10', (12, 20))),
                 edges=(('a', 'i5'), ('i5', 'i2'), ('i5', 'i6'), ('i6', 'i4'), ('b', 'i1'), ('i1', 'i2'), ('i1', 'i7'),
                        ('i2', 'i3'), ('i3', 'i4'), ('i3', 'i8'), ('i4', 'b2'), ('i4', 'i9'), ('i7', 'i8'), ('i8', 'i9'),
                        ('i8', 'a1'), ('i9', 'i10'), ('i10', 'b1'), ('i10', 'a2')),
                 sides={
                     'top':    ('a',),
                     'bottom': ('a1', 'a2'),
                     'left':   ('b',),
                     'right':  ('b2', 'b1'),
                 })

LL = GadgetTable(kind='LL', directed=True,
                 vertices=(('a', (18, 26)), ('b1', (22, 28)), ('b2', (24, 28)), ('a1', (26, 20)), ('a2', (26, 24)), ('b', (24, 16)),
                           ('j1', (20, 26)), ('j2', (22, 26)), ('j3', (20, 22)), ('j4', (22, 22)), ('j5', (24, 22)),
                           ('j6', (24, 20)), ('j7', (22, 18)), ('j8', (24, 18)), ('j9', (22, 24)), ('j10', (24, 24))),
                 edges=(('a', 'j1'), ('j1', 'j2'), ('j1', 'j3'), ('j3', 'j4'), ('j4', 'j5'), ('j6', 'a1'), ('j7', 'j8'),
                        ('j4', 'j7'), ('j9', 'j4'), ('j10', 'a2'), ('j9', 'j10'), ('j2', 'j9'), ('b1', 'j2'), ('b2', 'j10'),
                        ('j10', 'j5'), ('j5', 'j6'), ('j6', 'j8'), ('j8', 'b')),
                 sides={
                     'top':    ('b1', 'b2'),
                     'bottom': ('b',),
                     'left':   ('a',),
                     'right':  ('a2', 'a1'),
                 })

TT = GadgetTable(kind='TT', directed=True,
                 vertices=(('a', (4, 14)), ('b1', (2, 10)), ('b2', (2, 8)), ('a2', (6, 6)), ('a1', (10, 6)), ('b', (14, 8)),
                           ('k1', (4, 12)), ('k2', (4, 10)), ('k3', (8, 12)), ('k4', (6, 10)), ('k5', (8, 10)),
                           ('k6', (12, 10)), ('k7', (6, 8)), ('k8', (8, 8)), ('k9', (10, 8)), ('k10', (12, 8))),
                 edges=(('a', 'k1'), ('k1', 'k2'), ('k1', 'k3'), ('b1', 'k2'), ('k2', 'k4'), ('k4', 'k5'), ('k4', 'k7'),
                        ('k3', 'k5'), ('k5', 'k8'), ('k5', 'k6'), ('k6', 'k10'), ('k7', 'k8'), ('k7', 'a2'), ('b2', 'k7'),
                        ('k8', 'k9'), ('k9', 'k10'), ('k9', 'a1'), ('k10', 'b')),
                 sides={
                     'top':    ('a',),
                     'bottom': ('a2', 'a1'),
                     'left':   ('b1', 'b2'),
                     'right':  ('b',),
                 })

VV = GadgetTable(kind='VV', directed=True,
                 vertices=(('a1', (22, 12)), ('a2', (24, 12)), ('b2', (20, 10)), ('b1', (20, 8)), ('a', (24, 6)), ('b', (28, 8)),
                           ('m1', (22, 10)), ('m2', (24, 10)), ('m3', (26, 10)), ('m4', (24, 8)), ('m5', (26, 8))),
                 edges=(('a2', 'm2'), ('a1', 'm1'), ('m2', 'm3'), ('m1', 'm2'), ('b2', 'm1'), ('m3', 'm5'), ('m2', 'm4'),
                        ('m4', 'a'), ('m5', 'b'), ('m4', 'm5'), ('b1', 'm4')),
                 sides={
                     'top':    ('a1', 'a2'),
                     'bottom': ('a',),
                     'left':   ('b2', 'b1'),
                     'right':  ('b',),
                 })


TABLES = {table.kind: table for table in (XCH, LIC, YES, NO, ON, IF, LL, TT, VV)}
UNDIRECTED_KINDS = ('XCH', 'LIC')
DIRECTED_KINDS = ('YES', 'NO', 'ON', 'IF', 'LL', 'TT', 'VV')
