from __future__ import annotations

import math
import networkx as nx
from types import MappingProxyType
from typing import NamedTuple, Dict, List, Tuple, Iterable, Mapping, Optional, FrozenSet

from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import UnknownVertexError


class Edge(NamedTuple):
    """The two extremities of an edge; for arcs, ``u`` is the tail and ``v``
    the head."""
    u: str
    v: str


Position = Tuple[float, float]


class RotationGraph(object):
    """A loopless multigraph with a rotation system.

    Each vertex carries the cyclic (counter-clockwise) sequence of its
    incident edge identifiers; parallel edges are distinct identifiers with
    identical extremities. A graph is either wholly undirected or wholly
    directed. Vertices in ``noncrossing`` are the vertices where two paths
    may meet but never cross.

    Instances are immutable: use ``RotationGraphBuilder`` to create them.
    """

    def __init__(self,
                 vertices:    Tuple[str, ...],
                 edges:       Dict[str, Edge],
                 rotation:    Dict[str, Tuple[str, ...]],
                 noncrossing: FrozenSet[str],
                 directed:    bool,
                 labels:      Dict[str, str],
                 positions:   Dict[str, Position]):

        super(RotationGraph, self).__init__()

        self._vertices = vertices
        self._vertex_set = frozenset(vertices)
        self._edges = MappingProxyType(dict(edges))
        self._rotation = MappingProxyType(dict(rotation))
        self._noncrossing = frozenset(noncrossing)
        self._directed = directed
        self._labels = MappingProxyType(dict(labels))
        self._positions = MappingProxyType(dict(positions))

        self._rotation_index: Dict[str, Dict[str, int]] = {}

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> Mapping[str, Edge]:
        return self._edges

    @property
    def rotation(self) -> Mapping[str, Tuple[str, ...]]:
        return self._rotation

    @property
    def noncrossing(self) -> FrozenSet[str]:
        return self._noncrossing

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def labels(self) -> Mapping[str, str]:
        return self._labels

    @property
    def positions(self) -> Mapping[str, Position]:
        return self._positions

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set

    def check_vertices(self, vertices: Iterable[str], obj_name: str = "") -> FrozenSet[str]:
        """Return ``vertices`` as a set, after checking that all of them
        belong to this graph."""
        vertices = frozenset(vertices)
        unknown = vertices.difference(self._vertex_set)
        if len(unknown) > 0:
            raise UnknownVertexError(hardpaths_err_header(obj_name=obj_name) + f"unknown vertices {sorted(unknown)}.")
        return vertices

    def endpoints(self, e: str) -> Edge:
        try:
            return self._edges[e]
        except KeyError:
            raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"unknown edge {e}.")

    def other_end(self, e: str, v: str) -> str:
        u, w = self.endpoints(e)
        if v == u:
            return w
        elif v == w:
            return u
        else:
            raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"edge {e} is not incident to vertex {v}.")

    def incident(self, v: str) -> Tuple[str, ...]:
        """The incident edges of ``v``, in rotation order."""
        return self._rotation[v]

    def degree(self, v: str) -> int:
        return len(self._rotation[v])

    def out_edges(self, v: str) -> Tuple[str, ...]:
        if not self._directed:
            return self._rotation[v]
        return tuple(e for e in self._rotation[v] if self._edges[e].u == v)

    def in_edges(self, v: str) -> Tuple[str, ...]:
        if not self._directed:
            return self._rotation[v]
        return tuple(e for e in self._rotation[v] if self._edges[e].v == v)

    def rotation_index(self, v: str) -> Dict[str, int]:
        """Position of each incident edge in the rotation at ``v``."""
        try:
            return self._rotation_index[v]
        except KeyError:
            index = {e: i for i, e in enumerate(self._rotation[v])}
            self._rotation_index[v] = index
            return index

    def is_noncrossing(self, v: str) -> bool:
        return v in self._noncrossing

    def with_noncrossing(self, noncrossing: Iterable[str]) -> RotationGraph:
        """A copy of this graph with a different non-crossing set."""
        noncrossing = self.check_vertices(noncrossing, obj_name=self.__class__.__name__)
        return RotationGraph(self._vertices, dict(self._edges), dict(self._rotation), noncrossing, self._directed, dict(self._labels), dict(self._positions))

    def to_networkx(self) -> nx.MultiGraph:
        """A ``networkx`` view of this graph, keyed by edge identifier."""
        g = nx.MultiDiGraph() if self._directed else nx.MultiGraph()
        g.add_nodes_from(self._vertices)
        for e, (u, v) in self._edges.items():
            g.add_edge(u, v, key=e, label=self._labels.get(e, ''))
        nx.set_node_attributes(g, {v: self._labels.get(v, '') for v in self._vertices}, 'label')
        nx.set_node_attributes(g, {v: list(self._rotation[v]) for v in self._vertices}, 'rotation')
        nx.set_node_attributes(g, {v: (v in self._noncrossing) for v in self._vertices}, 'noncrossing')
        return g

    def __eq__(self, other) -> bool:
        return isinstance(other, RotationGraph) and \
               (self._vertices == other._vertices) and \
               (dict(self._edges) == dict(other._edges)) and \
               (dict(self._rotation) == dict(other._rotation)) and \
               (self._noncrossing == other._noncrossing) and \
               (self._directed == other._directed) and \
               (dict(self._labels) == dict(other._labels))

    def __hash__(self):
        return hash((self._vertices, tuple(self._edges.items()), self._directed))

    def __reduce__(self):
        # mapping proxies cannot be pickled
        return (RotationGraph, (self._vertices, dict(self._edges), dict(self._rotation), self._noncrossing, self._directed, dict(self._labels), dict(self._positions)))

    def __str__(self) -> str:
        kind = 'directed' if self._directed else 'undirected'
        return f"RotationGraph({kind}, {self.n_vertices} vertices, {self.n_edges} edges, {len(self._noncrossing)} non-crossing)"


def counterclockwise_order(centre: Position, incident: List[Tuple[str, Position]]) -> Tuple[str, ...]:
    """Sort edges by the counter-clockwise angle of their far extremity.

    Ties (parallel edges) keep their input order.
    """
    cx, cy = centre
    keyed = [(math.atan2(y - cy, x - cx) % (2 * math.pi), i, e) for i, (e, (x, y)) in enumerate(incident)]
    return tuple(e for _, _, e in sorted(keyed))


class RotationGraphBuilder(object):
    """The mutable counterpart of ``RotationGraph``.

    Rotations can be given explicitly with ``set_rotation``; vertices that
    have a position and whose neighbours all have positions get the
    counter-clockwise geometric order; every other vertex keeps the order in
    which its edges were added.
    """

    def __init__(self, directed: bool = False):
        super(RotationGraphBuilder, self).__init__()
        self._directed = directed
        self._vertices: Dict[str, None] = {}
        self._edges: Dict[str, Edge] = {}
        self._incidence: Dict[str, List[str]] = {}
        self._rotation: Dict[str, Tuple[str, ...]] = {}
        self._noncrossing: set = set()
        self._labels: Dict[str, str] = {}
        self._positions: Dict[str, Position] = {}

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(self._vertices)

    @property
    def edges(self) -> Dict[str, Edge]:
        return dict(self._edges)

    def has_vertex(self, v: str) -> bool:
        return v in self._vertices

    def has_edge(self, e: str) -> bool:
        return e in self._edges

    def incident(self, v: str) -> Tuple[str, ...]:
        return tuple(self._incidence[v])

    def add_vertex(self, v: str, label: Optional[str] = None, position: Optional[Position] = None) -> None:
        if v in self._vertices:
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"vertex {v} already exists.")
        self._vertices[v] = None
        self._incidence[v] = []
        if label is not None:
            self._labels[v] = label
        if position is not None:
            self._positions[v] = position

    def add_edge(self, e: str, u: str, v: str, label: Optional[str] = None) -> None:
        if e in self._edges:
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"edge {e} already exists.")
        if u == v:
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"edge {e} would be a loop at {u}.")
        for w in (u, v):
            if w not in self._vertices:
                raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"edge {e} refers to unknown vertex {w}.")
        self._edges[e] = Edge(u, v)
        for w in (u, v):
            self._incidence[w].append(e)
            if w in self._rotation:  # explicit rotations grow at their end
                self._rotation[w] = self._rotation[w] + (e,)
        if label is not None:
            self._labels[e] = label

    def reattach(self, e: str, old: str, new: str) -> None:
        """Move the extremity ``old`` of edge ``e`` to vertex ``new``.

        The rotation at the other extremity is left untouched; ``new``
        receives ``e`` at the end of its incidence list.
        """
        u, v = self._edges[e]
        if old not in (u, v):
            raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"edge {e} is not incident to {old}.")
        if new not in self._vertices:
            raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"unknown vertex {new}.")
        self._edges[e] = Edge(new if u == old else u, new if v == old else v)
        self._incidence[old].remove(e)
        if old in self._rotation:
            self._rotation[old] = tuple(f for f in self._rotation[old] if f != e)
        self._incidence[new].append(e)
        if new in self._rotation:
            self._rotation[new] = self._rotation[new] + (e,)

    def remove_vertex(self, v: str) -> None:
        """Remove ``v`` together with its incident edges."""
        for e in list(self._incidence[v]):
            self.remove_edge(e)
        del self._vertices[v]
        del self._incidence[v]
        self._rotation.pop(v, None)
        self._noncrossing.discard(v)
        self._labels.pop(v, None)
        self._positions.pop(v, None)

    def remove_edge(self, e: str) -> None:
        u, v = self._edges.pop(e)
        for w in (u, v):
            self._incidence[w].remove(e)
            if w in self._rotation:
                self._rotation[w] = tuple(f for f in self._rotation[w] if f != e)
        self._labels.pop(e, None)

    def set_rotation(self, v: str, order: Iterable[str]) -> None:
        self._rotation[v] = tuple(order)

    def set_noncrossing(self, vertices: Iterable[str]) -> None:
        self._noncrossing = set(vertices)

    def add_noncrossing(self, v: str) -> None:
        self._noncrossing.add(v)

    def _geometric_rotation(self, v: str) -> Optional[Tuple[str, ...]]:
        if v not in self._positions:
            return None
        incident = []
        for e in self._incidence[v]:
            a, b = self._edges[e]
            w = b if a == v else a
            if w not in self._positions:
                return None
            incident.append((e, self._positions[w]))
        return counterclockwise_order(self._positions[v], incident)

    def build(self) -> RotationGraph:

        rotation = {}
        for v in self._vertices:
            if v in self._rotation:
                order = self._rotation[v]
                if sorted(order) != sorted(self._incidence[v]):
                    raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"the rotation at {v} is not a permutation of its incident edges.")
            else:
                order = self._geometric_rotation(v)
                if order is None:
                    order = tuple(self._incidence[v])
            rotation[v] = order

        unknown = self._noncrossing.difference(self._vertices)
        if len(unknown) > 0:
            raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"non-crossing vertices {sorted(unknown)} do not exist.")

        return RotationGraph(vertices=tuple(self._vertices),
                             edges=dict(self._edges),
                             rotation=rotation,
                             noncrossing=frozenset(self._noncrossing),
                             directed=self._directed,
                             labels=dict(self._labels),
                             positions=dict(self._positions))

    @staticmethod
    def from_graph(g: RotationGraph) -> RotationGraphBuilder:
        """Start editing a copy of ``g``."""
        builder = RotationGraphBuilder(directed=g.directed)
        for v in g.vertices:
            builder.add_vertex(v, label=g.labels.get(v), position=g.positions.get(v))
        for e, (u, v) in g.edges.items():
            builder.add_edge(e, u, v, label=g.labels.get(e))
        for v in g.vertices:  # must follow the edges: `add_edge` extends explicit rotations
            builder.set_rotation(v, g.rotation[v])
        builder.set_noncrossing(g.noncrossing)
        return builder
