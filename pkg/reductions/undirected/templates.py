"""Routings of single XCH/LIC cells, as used by the witness builder.

A template routes two vertical paths entering on one side of the top of the
cell, and one or two horizontal paths. The vertical paths either shift to
the other side or keep their side at the bottom. Templates are found by the
solver once and memoised; combinations that admit no routing are recorded
as ``None``.
"""

from functools import lru_cache
from typing import NamedTuple, Optional, Dict, Tuple

from hardpaths.gadgets import build_gadget, register_gadget_cache, UNDIRECTED_KINDS
from hardpaths.graphs import DemandClass, Instance, Routing, vertex_sequence, reverse_path
from hardpaths.solver import SearchPolicy, solve
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import BudgetExceededError


ENTRY_SIDES = ('left', 'right')
BEHAVIOURS = ('shift', 'keep')

_TEMPLATE_POLICY = SearchPolicy(mode='witness', node_budget=10 ** 6, verify=True)


class TemplateKey(NamedTuple):
    kind:        str
    horizontals: int
    entry:       str
    behaviour:   str
    # for a single horizontal path: the indices of its left and right stubs
    h_entry:     Optional[int] = None
    h_exit:      Optional[int] = None


# entry stub -> (edges in traversal order, exit stub)
Segments = Dict[str, Tuple[Tuple[str, ...], str]]


class Template(NamedTuple):
    key:        TemplateKey
    routing:    Routing
    vertical:   Segments
    horizontal: Segments


def exit_side(entry: str, behaviour: str) -> str:
    if behaviour == 'keep':
        return entry
    return 'right' if entry == 'left' else 'left'


def _vertical_stubs(side: str, bottom: bool) -> Tuple[str, str]:
    stubs = ('1', '2') if side == 'left' else ('3', '4')
    return tuple(("s'" if bottom else 's') + k for k in stubs)


def template_instance(key: TemplateKey) -> Instance:
    gadget = build_gadget(key.kind)
    vertical = DemandClass.of(_vertical_stubs(key.entry, False), _vertical_stubs(exit_side(key.entry, key.behaviour), True), count=2, name='vertical')
    if key.horizontals == 2:
        horizontal = DemandClass.of(gadget.side('left'), gadget.side('right'), count=2, name='horizontal')
    else:
        horizontal = DemandClass.of({f"t{key.h_entry}"}, {f"t'{key.h_exit}"}, count=1, name='horizontal')
    return Instance(gadget.graph, [vertical, horizontal])


def _segments(instance: Instance, routing: Routing, demand: int) -> Segments:
    segments = {}
    for path in routing:
        if path.demand != demand:
            continue
        if path.start not in instance.demands[demand].sources:
            path = reverse_path(instance.graph, path)
        vertices = vertex_sequence(instance.graph, path)
        segments[vertices[0]] = (path.edges, vertices[-1])
    return segments


@lru_cache(maxsize=None)
def _cell_template(key: TemplateKey) -> Optional[Template]:
    instance = template_instance(key)
    result = solve(instance, _TEMPLATE_POLICY)
    if not result.conclusive:
        raise BudgetExceededError(hardpaths_err_header(obj_name='cell_template') + f"no answer for {key} within {_TEMPLATE_POLICY.node_budget} nodes.")
    if result.unsat:
        return None
    routing = result.witnesses[0]
    return Template(key=key, routing=routing, vertical=_segments(instance, routing, 0), horizontal=_segments(instance, routing, 1))


register_gadget_cache(_cell_template)


def check_key(key: TemplateKey) -> TemplateKey:
    if key.kind not in UNDIRECTED_KINDS or key.entry not in ENTRY_SIDES or key.behaviour not in BEHAVIOURS or key.horizontals not in (1, 2):
        raise ValueError(hardpaths_err_header(obj_name='cell_template') + f"invalid template key {key}.")
    if key.horizontals == 1 and not (key.h_entry in (1, 2) and key.h_exit in (1, 2)):
        raise ValueError(hardpaths_err_header(obj_name='cell_template') + f"a single horizontal path needs its entry and exit stubs: {key}.")
    if key.horizontals == 2 and not (key.h_entry is None and key.h_exit is None):
        raise ValueError(hardpaths_err_header(obj_name='cell_template') + f"two horizontal paths use both stubs on each side: {key}.")
    return key


def cell_template(key: TemplateKey) -> Optional[Template]:
    """The memoised routing for ``key``, or ``None`` if there is none."""
    return _cell_template(check_key(TemplateKey(*key)))


def template_keys() -> Tuple[TemplateKey, ...]:
    keys = []
    for kind in UNDIRECTED_KINDS:
        for entry in ENTRY_SIDES:
            for behaviour in BEHAVIOURS:
                keys.append(TemplateKey(kind, 2, entry, behaviour))
                for h_entry in (1, 2):
                    for h_exit in (1, 2):
                        keys.append(TemplateKey(kind, 1, entry, behaviour, h_entry, h_exit))
    return tuple(keys)


def template_cache_build() -> Dict[TemplateKey, Optional[Template]]:
    """Every template, realisable or not."""
    return {key: cell_template(key) for key in template_keys()}
