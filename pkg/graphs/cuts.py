from typing import NamedTuple, FrozenSet, Iterable, Union

from .rotationgraph import RotationGraph
from .instance import Instance, DemandClass
from hardpaths.utils import UnknownType, UNKNOWN


class Cut(NamedTuple):
    """The edges with exactly one extremity in a vertex set ``U``.

    For directed graphs ``outgoing`` and ``incoming`` partition ``edges``
    into the arcs leaving and entering ``U``; undirected edges can be used
    in both directions, so both fields equal ``edges``.
    """
    edges:    FrozenSet[str]
    outgoing: FrozenSet[str]
    incoming: FrozenSet[str]


def delta(graph: RotationGraph, U: Iterable[str]) -> Cut:
    U = graph.check_vertices(U, obj_name='delta')

    edges, outgoing, incoming = set(), set(), set()
    for e, (u, v) in graph.edges.items():
        if (u in U) != (v in U):
            edges.add(e)
            if u in U:
                outgoing.add(e)
            else:
                incoming.add(e)

    edges = frozenset(edges)
    if graph.directed:
        return Cut(edges=edges, outgoing=frozenset(outgoing), incoming=frozenset(incoming))
    return Cut(edges=edges, outgoing=edges, incoming=edges)


def crossing_demand(cls: DemandClass, U: FrozenSet[str], directed: bool) -> Union[int, UnknownType]:
    """The number of paths of ``cls`` that must cross ``delta(U)``.

    Directed demands only count when they must leave ``U``. A class whose
    sources (or sinks) lie on both sides of the cut is indeterminate.
    """
    sources_in = cls.sources <= U
    sources_out = len(cls.sources & U) == 0
    sinks_in = cls.sinks <= U
    sinks_out = len(cls.sinks & U) == 0

    if not ((sources_in or sources_out) and (sinks_in or sinks_out)):
        return UNKNOWN

    if sources_in and sinks_out:
        return cls.count
    if sources_out and sinks_in and not directed:
        return cls.count
    return 0


class TightnessReport(NamedTuple):
    verdict:  Union[bool, UnknownType]
    slack:    int
    capacity: int
    demand:   int


def is_tight(instance: Instance, U: Iterable[str]) -> TightnessReport:
    """Decide whether ``delta(U)`` is a tight cut of ``instance``.

    The slack is the capacity of the cut (for directed graphs: the arcs
    leaving ``U``) minus the demand that must cross it; demand classes
    straddling the cut are left out of the slack and make the verdict
    ``UNKNOWN``.
    """
    graph = instance.graph
    U = graph.check_vertices(U, obj_name='is_tight')
    cut = delta(graph, U)
    capacity = len(cut.outgoing) if graph.directed else len(cut.edges)

    demand = 0
    indeterminate = False
    for cls in instance.demands:
        d = crossing_demand(cls, U, graph.directed)
        if d is UNKNOWN:
            indeterminate = True
        else:
            demand += d

    slack = capacity - demand
    verdict = UNKNOWN if indeterminate else (slack == 0)
    return TightnessReport(verdict=verdict, slack=slack, capacity=capacity, demand=demand)
