from __future__ import annotations

from collections import Counter
from typing import NamedTuple, Tuple, FrozenSet, Iterable, List, Dict, Optional, Any

from .rotationgraph import RotationGraph
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import MalformedRoutingError


class DemandClass(NamedTuple):
    """A request of ``count`` paths, each from a vertex of ``sources`` to a
    vertex of ``sinks``.

    Paths of a ``crossing_exempt`` class may cross any other path at any
    vertex (they model the no-paths of the undirected reduction).
    """
    sources:         FrozenSet[str]
    sinks:           FrozenSet[str]
    count:           int
    crossing_exempt: bool = False
    name:            str = ''

    @staticmethod
    def of(sources: Iterable[str], sinks: Iterable[str], count: int = 1, crossing_exempt: bool = False, name: str = '') -> DemandClass:
        sources = frozenset((sources,)) if isinstance(sources, str) else frozenset(sources)
        sinks = frozenset((sinks,)) if isinstance(sinks, str) else frozenset(sinks)
        return DemandClass(sources=sources, sinks=sinks, count=count, crossing_exempt=crossing_exempt, name=name)


class Instance(object):
    """A routing graph together with its demand classes.

    All capacities are one: multiplicity is expressed with parallel edges.
    ``metadata`` carries optional, JSON-friendly information about how the
    instance was built (cell maps, cut registries, terminal names).
    """

    def __init__(self,
                 graph:    RotationGraph,
                 demands:  Iterable[DemandClass] = (),
                 metadata: Optional[Dict[str, Any]] = None):

        super(Instance, self).__init__()

        demands = tuple(demands)
        for i, cls in enumerate(demands):
            if not isinstance(cls, DemandClass):
                raise TypeError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"demand {i} is a {type(cls)}, not a DemandClass.")
            if cls.count < 1:
                raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"demand {i} requests {cls.count} paths; counts must be positive.")
            if len(cls.sources) == 0 or len(cls.sinks) == 0:
                raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"demand {i} has an empty source or sink set.")
            graph.check_vertices(cls.sources | cls.sinks, obj_name=self.__class__.__name__)

        self._graph = graph
        self._demands = demands
        self._metadata = dict(metadata) if metadata is not None else {}

    @property
    def graph(self) -> RotationGraph:
        return self._graph

    @property
    def demands(self) -> Tuple[DemandClass, ...]:
        return self._demands

    @property
    def metadata(self) -> Dict[str, Any]:
        return self._metadata

    @property
    def total_demand(self) -> int:
        return sum(cls.count for cls in self._demands)

    def with_demands(self, demands: Iterable[DemandClass]) -> Instance:
        return Instance(self._graph, demands, self._metadata)

    def with_graph(self, graph: RotationGraph) -> Instance:
        return Instance(graph, self._demands, self._metadata)

    def __str__(self) -> str:
        return f"Instance({self._graph}, {len(self._demands)} demand classes, total demand {self.total_demand})"


class Path(NamedTuple):
    """A path of a routing: the index of its demand class, its edges in
    traversal order, and its first vertex."""
    demand: int
    edges:  Tuple[str, ...]
    start:  str


class Routing(list):
    """A list of ``Path``s which refuses any other kind of element."""

    def __init__(self, paths: Iterable[Path] = ()):
        super(Routing, self).__init__()
        for path in paths:
            self.append(path)

    @staticmethod
    def _check_path(path) -> Path:
        if not isinstance(path, Path):
            raise TypeError(hardpaths_err_header(obj_name='Routing') + f"expected a Path, received {type(path)}.")
        return path

    def append(self, path: Path) -> None:
        super(Routing, self).append(Routing._check_path(path))

    def extend(self, paths: Iterable[Path]) -> None:
        for path in paths:
            self.append(path)

    def insert(self, index: int, path: Path) -> None:
        super(Routing, self).insert(index, Routing._check_path(path))

    def __setitem__(self, index, path) -> None:
        if isinstance(index, slice):
            path = [Routing._check_path(p) for p in path]
        else:
            path = Routing._check_path(path)
        super(Routing, self).__setitem__(index, path)

    def of_demand(self, demand: int) -> List[int]:
        """Indices of the paths assigned to demand class ``demand``."""
        return [i for i, path in enumerate(self) if path.demand == demand]

    def edge_multiset(self) -> Counter:
        return Counter(e for path in self for e in path.edges)

    def canonical(self) -> Routing:
        """Sort paths by demand class, then by edge-identifier sequence."""
        return Routing(sorted(self, key=lambda path: (path.demand, path.edges, path.start)))

    def key(self) -> Tuple[Tuple[int, Tuple[str, ...], str], ...]:
        return tuple((path.demand, path.edges, path.start) for path in self.canonical())

    def __str__(self) -> str:
        return '\n'.join(f"[{i}] class {path.demand}: {path.start} -> " + ' '.join(path.edges) for i, path in enumerate(self))

    def show(self) -> None:
        print(str(self))


def vertex_sequence(graph: RotationGraph, path: Path) -> Tuple[str, ...]:
    """The vertex sequence traversed by ``path``.

    Raises ``MalformedRoutingError`` if an edge does not continue the walk
    (for arcs: if it is not traversed from tail to head).
    """
    if not graph.has_vertex(path.start):
        raise MalformedRoutingError(hardpaths_err_header(obj_name='vertex_sequence') + f"path starts at unknown vertex {path.start}.")
    vertices = [path.start]
    for e in path.edges:
        if e not in graph.edges:
            raise MalformedRoutingError(hardpaths_err_header(obj_name='vertex_sequence') + f"unknown edge {e}.")
        u, v = graph.edges[e]
        here = vertices[-1]
        if here == u:
            vertices.append(v)
        elif (here == v) and (not graph.directed):
            vertices.append(u)
        else:
            raise MalformedRoutingError(hardpaths_err_header(obj_name='vertex_sequence') + f"edge {e} does not continue the walk at vertex {here}.")
    return tuple(vertices)


def reverse_path(graph: RotationGraph, path: Path) -> Path:
    """The same undirected path, traversed from its other extremity."""
    vertices = vertex_sequence(graph, path)
    return Path(demand=path.demand, edges=tuple(reversed(path.edges)), start=vertices[-1])


def path_from_vertices(graph: RotationGraph, demand: int, vertices: Iterable[str]) -> Path:
    """Build a path from the sequence of vertices it visits.

    Between two consecutive vertices the first unused edge (in identifier
    order) is taken; for directed graphs it must point forward.
    """
    vertices = list(vertices)
    used = set()
    edges = []
    for u, v in zip(vertices[:-1], vertices[1:]):
        candidates = sorted(e for e in graph.out_edges(u) if (e not in used) and (graph.other_end(e, u) == v))
        if len(candidates) == 0:
            raise MalformedRoutingError(hardpaths_err_header(obj_name='path_from_vertices') + f"no unused edge leads from {u} to {v}.")
        used.add(candidates[0])
        edges.append(candidates[0])
    return Path(demand=demand, edges=tuple(edges), start=vertices[0])
