"""Replace non-crossing vertices by 4-cycles.

Two paths meeting at a degree-4 vertex ``v`` without crossing each other
use two pairs of edges which are consecutive in the rotation at ``v``.
Splitting ``v`` into four vertices joined by a cycle, each one keeping
one of the original edges, lets paths through in exactly those ways: a
solution of the instance where ``v`` is non-crossing is a solution of
the split instance and vice versa.
"""

from typing import List, Tuple

from hardpaths.graphs import RotationGraph, Instance
from .rewriter import ApplicationPoint, Finder, InstanceDraft, Applier, Rewriter
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import UnsupportedDegreeError, PreconditionError


class NonCrossingVertex(ApplicationPoint):

    def __init__(self, vertex: str, rotation: Tuple[str, ...]):
        self._vertex = vertex
        self._rotation = rotation

    @property
    def vertex(self) -> str:
        return self._vertex

    @property
    def rotation(self) -> Tuple[str, ...]:
        return self._rotation


class NonCrossingFinder(Finder):

    def find(self, instance: Instance) -> List[NonCrossingVertex]:
        graph = instance.graph
        aps = []
        for v in graph.vertices:
            if not graph.is_noncrossing(v):
                continue
            if graph.degree(v) != 4:
                raise UnsupportedDegreeError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"non-crossing vertex {v} has degree {graph.degree(v)}; only degree-4 vertices can be split.")
            aps.append(NonCrossingVertex(v, graph.rotation[v]))
        return aps

    def check_aps_commutativity(self, aps: List[NonCrossingVertex]) -> bool:
        return len(aps) == len(set(ap.vertex for ap in aps))


class NonCrossingSplitter(Applier):

    @staticmethod
    def corner(v: str, k: int) -> str:
        return f"{v}#{k}"

    @staticmethod
    def side(v: str, k: int) -> str:
        return f"{v}#c{k}{(k + 1) % 4}"

    def _apply(self, draft: InstanceDraft, ap: NonCrossingVertex, id_: str) -> None:

        builder = draft.builder
        v = ap.vertex

        for k in range(0, 4):
            builder.add_vertex(NonCrossingSplitter.corner(v, k), label=id_)
        for k, e in enumerate(ap.rotation):
            builder.reattach(e, v, NonCrossingSplitter.corner(v, k))
        for k in range(0, 4):
            builder.add_edge(NonCrossingSplitter.side(v, k), NonCrossingSplitter.corner(v, k), NonCrossingSplitter.corner(v, (k + 1) % 4), label=id_)

        # the corner facing e_k sees, counter-clockwise: e_k, the next corner, the previous corner
        for k, e in enumerate(ap.rotation):
            builder.set_rotation(NonCrossingSplitter.corner(v, k), (e, NonCrossingSplitter.side(v, k), NonCrossingSplitter.side(v, (k - 1) % 4)))

        builder.remove_vertex(v)


class NonCrossingExpander(Rewriter):

    def __init__(self):
        name = 'NCX'
        finder = NonCrossingFinder()
        applier = NonCrossingSplitter()
        super(NonCrossingExpander, self).__init__(name=name,
                                                  finder=finder,
                                                  applier=applier)


def expand_instance(instance: Instance) -> Instance:
    """Split every non-crossing vertex of ``instance``.

    Demand endpoints must not be non-crossing: they would be split into
    four vertices.
    """
    terminals = set()
    for cls in instance.demands:
        terminals |= cls.sources | cls.sinks
    clash = sorted(terminals & instance.graph.noncrossing)
    if len(clash) > 0:
        raise PreconditionError(hardpaths_err_header(obj_name='expand_instance') + f"demand endpoints {clash} are non-crossing vertices.")

    return NonCrossingExpander()(instance)


def expand_noncrossing(graph: RotationGraph) -> RotationGraph:
    return NonCrossingExpander()(Instance(graph)).graph
