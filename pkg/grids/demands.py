"""Demand specifications over grid boundaries.

A specification is a sequence of ``DemandTerm``. Each endpoint group is
either a boundary side, given by its set name, or a tuple of individual
stubs:

    =============  =================
    set name       boundary side
    =============  =================
    ``S``, ``X``   top
    ``S'``, ``X'`` bottom
    ``T``, ``Y``   left
    ``T'``, ``Y'`` right
    =============  =================

Individual stubs use the same letters in lower case, followed by their
1-based index along the side (``s1``, ``x'3``, ``y'6``).
"""

import re
from typing import NamedTuple, Tuple, Union, Sequence, Dict

from .builder import CutRegistry
from hardpaths.graphs import RotationGraph, DemandClass, Instance
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import UnknownVertexError


EndpointGroup = Union[str, Tuple[str, ...]]


class DemandTerm(NamedTuple):
    sources: EndpointGroup
    sinks:   EndpointGroup
    count:   int = 1
    name:    str = ''


_SETS = {'S': 'top', 'X': 'top', "S'": 'bottom', "X'": 'bottom', 'T': 'left', 'Y': 'left', "T'": 'right', "Y'": 'right'}
_STUB = re.compile(r"^([sxty])('?)([1-9][0-9]*)$")


LEMMA_SPECS: Dict[str, Tuple[DemandTerm, ...]] = {
    # a single XCH: two vertical and two horizontal paths
    'xch_22': (DemandTerm('S', "S'", 2, 'vertical'),
               DemandTerm('T', "T'", 2, 'horizontal')),
    # a single XCH: two vertical paths entering on the left, one horizontal path
    'xch_12': (DemandTerm(('s1', 's2'), "S'", 2, 'vertical'),
               DemandTerm('T', "T'", 1, 'horizontal')),
    'lic_22': (DemandTerm(('s1', 's2'), "S'", 2, 'vertical'),
               DemandTerm('T', "T'", 2, 'horizontal')),
    # a single LIC keeping its vertical paths on the left or on the right
    'lic_12_left': (DemandTerm('T', "T'", 1, 'horizontal'),
                    DemandTerm(('s1',), ("s'1",), 1, 'left outer'),
                    DemandTerm(('s2',), ("s'2",), 1, 'left inner')),
    'lic_12_right': (DemandTerm('T', "T'", 1, 'horizontal'),
                     DemandTerm(('s3',), ("s'3",), 1, 'right inner'),
                     DemandTerm(('s4',), ("s'4",), 1, 'right outer')),
    # a column of three LIC, the horizontal paths shifted by one row
    'lic_shift': (DemandTerm('X', "X'", 2, 'vertical'),
                  DemandTerm(('y1', 'y2'), ("y'1",), 1, 'C'),
                  DemandTerm(('y3',), ("y'2",), 1, 'D'),
                  DemandTerm(('y4',), ("y'3",), 1, 'E'),
                  DemandTerm(('y5',), ("y'4",), 1, 'F'),
                  DemandTerm(('y6',), ("y'5",), 1, 'H'),
                  DemandTerm("X'", ("y'6",), 1, 'I')),
    # a column of three XCH with five horizontal paths
    'xch_grid3': (DemandTerm('Y', "Y'", 5, 'horizontal'),
                  DemandTerm(('x1',), ("x'1",), 1, 'A'),
                  DemandTerm(('x2',), ("x'2",), 1, 'B')),
}


def _side_of(set_name: str) -> str:
    try:
        return _SETS[set_name]
    except KeyError:
        raise UnknownVertexError(hardpaths_err_header(obj_name='standard_demand') + f"unknown endpoint set {set_name!r}; expected one of {sorted(_SETS.keys())}.")


def resolve_stub(registry: CutRegistry, name: str) -> str:
    """The boundary vertex of an individual stub name such as ``s'3``."""
    match = _STUB.match(name)
    if match is None:
        raise UnknownVertexError(hardpaths_err_header(obj_name='standard_demand') + f"cannot interpret stub name {name!r}.")
    letter, prime, index = match.groups()
    side = _side_of(letter.upper() + prime)
    stubs = registry.boundary[side]
    if int(index) > len(stubs):
        raise UnknownVertexError(hardpaths_err_header(obj_name='standard_demand') + f"stub {name} does not exist: the {side} side has {len(stubs)} stubs.")
    return stubs[int(index) - 1]


def resolve_group(registry: CutRegistry, group: EndpointGroup) -> Tuple[str, ...]:
    if isinstance(group, str):
        return registry.boundary[_side_of(group)]
    return tuple(resolve_stub(registry, name) for name in group)


DemandSpecType = Union[str, Sequence[DemandTerm]]


def standard_demand(grid: Tuple[RotationGraph, CutRegistry], spec: DemandSpecType) -> Instance:
    """The instance asking for the paths of ``spec`` on a built grid.

    ``spec`` is either the name of an entry of ``LEMMA_SPECS`` or a
    sequence of demand terms.
    """
    graph, registry = grid
    if isinstance(spec, str):
        try:
            spec = LEMMA_SPECS[spec]
        except KeyError:
            raise ValueError(hardpaths_err_header(obj_name='standard_demand') + f"unknown demand specification {spec!r}; expected one of {sorted(LEMMA_SPECS.keys())}.")

    demands = []
    for term in spec:
        term = DemandTerm(*term)
        demands.append(DemandClass.of(resolve_group(registry, term.sources), resolve_group(registry, term.sinks), count=term.count, name=term.name))
    return Instance(graph, demands)
