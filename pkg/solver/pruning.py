"""Necessary conditions checked on partial routings.

A ``CutPruner`` compares, for every registered cut, the number of unused
cut edges with the number of paths that still have to go across the cut.
``residual_max_flow`` bounds the number of edge-disjoint paths that the
unused edges can still carry between two vertex sets.
"""

import networkx as nx
from typing import NamedTuple, Tuple, List, Dict, Iterable, FrozenSet, Set, Optional

from hardpaths.graphs import Instance, RotationGraph, delta
from hardpaths.utils import hardpaths_err_header


_SUPER_SOURCE = ('super', 'source')
_SUPER_SINK = ('super', 'sink')


def _side(vertices: FrozenSet[str], U: FrozenSet[str]) -> Optional[bool]:
    inside = len(vertices & U)
    if inside == len(vertices):
        return True
    if inside == 0:
        return False
    return None


class RegisteredCut(NamedTuple):
    U:          FrozenSet[str]
    outgoing:   FrozenSet[str]
    incoming:   FrozenSet[str]
    # per class: whether its sources and its sinks lie inside U (None if split)
    sources_in: Tuple[Optional[bool], ...]
    sinks_in:   Tuple[Optional[bool], ...]


class CutPruner(object):
    """Capacity bookkeeping over a set of registered cuts.

    The search reports every edge it takes and releases; ``feasible`` then
    answers in time proportional to the number of cuts.
    """

    def __init__(self, instance: Instance, cuts: Tuple[RegisteredCut, ...]):

        super(CutPruner, self).__init__()

        self._directed = instance.graph.directed
        self._cuts = cuts
        self._used_out = [0] * len(cuts)
        self._used_in = [0] * len(cuts)

        self._out_of: Dict[str, List[int]] = {}
        self._in_of: Dict[str, List[int]] = {}
        for i, cut in enumerate(cuts):
            for e in cut.outgoing:
                self._out_of.setdefault(e, []).append(i)
            for e in cut.incoming:
                self._in_of.setdefault(e, []).append(i)

    @property
    def cuts(self) -> Tuple[RegisteredCut, ...]:
        return self._cuts

    def __len__(self) -> int:
        return len(self._cuts)

    def use(self, e: str) -> None:
        for i in self._out_of.get(e, ()):
            self._used_out[i] += 1
        for i in self._in_of.get(e, ()):
            self._used_in[i] += 1

    def release(self, e: str) -> None:
        for i in self._out_of.get(e, ()):
            self._used_out[i] -= 1
        for i in self._in_of.get(e, ()):
            self._used_in[i] -= 1

    def feasible(self, unstarted: List[int], open_class: Optional[int], head: Optional[str]) -> bool:
        """Whether every cut still has room for the paths that must cross it.

        ``unstarted[k]`` is the number of paths of class ``k`` that have not
        been started yet; the open path (if any) belongs to ``open_class``
        and currently ends at ``head``.
        """
        for i, cut in enumerate(self._cuts):

            need_out, need_in = 0, 0
            for k, n in enumerate(unstarted):
                if n == 0:
                    continue
                if cut.sources_in[k] is True and cut.sinks_in[k] is False:
                    need_out += n
                elif cut.sources_in[k] is False and cut.sinks_in[k] is True:
                    need_in += n

            if open_class is not None:
                sinks_in = cut.sinks_in[open_class]
                if sinks_in is not None:
                    head_in = head in cut.U
                    if head_in and not sinks_in:
                        need_out += 1
                    elif (not head_in) and sinks_in:
                        need_in += 1

            if self._directed:
                if need_out > len(cut.outgoing) - self._used_out[i]:
                    return False
                if need_in > len(cut.incoming) - self._used_in[i]:
                    return False
            elif need_out + need_in > len(cut.outgoing) - self._used_out[i]:
                return False

        return True


def register_cuts(instance: Instance, cuts: Iterable[Iterable[str]]) -> CutPruner:
    """Prepare the vertex sets ``cuts`` for capacity pruning.

    Each element of ``cuts`` is a vertex set ``U``; the pruner watches the
    edges of ``delta(U)``. Empty and full vertex sets do not define cuts.
    """
    graph = instance.graph
    registered = []
    for U in cuts:
        U = graph.check_vertices(U, obj_name='register_cuts')
        if len(U) == 0 or len(U) == graph.n_vertices:
            raise ValueError(hardpaths_err_header(obj_name='register_cuts') + "a cut must separate the vertex set into two nonempty parts.")
        cut = delta(graph, U)
        registered.append(RegisteredCut(U=U,
                                        outgoing=cut.outgoing,
                                        incoming=cut.incoming,
                                        sources_in=tuple(_side(cls.sources, U) for cls in instance.demands),
                                        sinks_in=tuple(_side(cls.sinks, U) for cls in instance.demands)))
    return CutPruner(instance, tuple(registered))


def residual_max_flow(graph: RotationGraph, used: Set[str], sources: Dict[str, int], sinks: Iterable[str]) -> int:
    """The maximum number of edge-disjoint paths on the unused edges of
    ``graph`` from the vertices of ``sources`` (each offering as many paths
    as its value) to ``sinks``."""
    g = nx.DiGraph()
    for e, (u, v) in graph.edges.items():
        if e in used:
            continue
        arcs = ((u, v),) if graph.directed else ((u, v), (v, u))
        for a, b in arcs:
            if g.has_edge(a, b):
                g[a][b]['capacity'] += 1
            else:
                g.add_edge(a, b, capacity=1)

    demand = 0
    for s, n in sources.items():
        if n > 0:
            g.add_edge(_SUPER_SOURCE, s, capacity=n)
            demand += n
    for t in sinks:
        g.add_edge(t, _SUPER_SINK, capacity=demand)

    if demand == 0 or (_SUPER_SOURCE not in g) or (_SUPER_SINK not in g):
        return 0
    return nx.maximum_flow_value(g, _SUPER_SOURCE, _SUPER_SINK)
