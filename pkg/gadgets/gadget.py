from __future__ import annotations

import contextlib
from functools import lru_cache
from typing import Dict, Tuple, List, Iterator, Mapping

from .tables import GadgetTable, TABLES, UNDIRECTED_KINDS, DIRECTED_KINDS
from hardpaths.graphs import RotationGraph, RotationGraphBuilder
from hardpaths.utils import hardpaths_err_header, hardpaths_log_header
from hardpaths.utils import UnknownVertexError


SIDES = ('top', 'bottom', 'left', 'right')
GADGET_KINDS = UNDIRECTED_KINDS + DIRECTED_KINDS


class PortMap(object):
    """Named boundary stubs of a gadget, grouped by side.

    Within a side, ports are listed in boundary order: top and bottom from
    left to right, left and right from top to bottom.
    """

    def __init__(self, vertices: Mapping[str, str], sides: Mapping[str, Tuple[str, ...]]):

        super(PortMap, self).__init__()

        names = [name for side in SIDES for name in sides.get(side, ())]
        if len(names) != len(set(names)):
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + "port names must be unique.")
        unknown = set(names).difference(vertices.keys())
        if len(unknown) > 0:
            raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"ports {sorted(unknown)} have no vertex.")

        self._vertices = dict(vertices)
        self._sides = {side: tuple(sides.get(side, ())) for side in SIDES}

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for side in SIDES for name in self._sides[side])

    @property
    def sides(self) -> Dict[str, Tuple[str, ...]]:
        return dict(self._sides)

    def side(self, side: str) -> Tuple[str, ...]:
        """The vertices of the ports on ``side``, in boundary order."""
        return tuple(self._vertices[name] for name in self._sides[side])

    def __getitem__(self, name: str) -> str:
        try:
            return self._vertices[name]
        except KeyError:
            raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"unknown port {name}.")

    def __contains__(self, name: str) -> bool:
        return name in self._vertices

    def vertices(self) -> Tuple[str, ...]:
        return tuple(self._vertices[name] for name in self.names)


class Gadget(object):
    """A rotation graph with named port stubs."""

    def __init__(self, graph: RotationGraph, ports: PortMap, kind: str):
        super(Gadget, self).__init__()
        graph.check_vertices(ports.vertices(), obj_name=self.__class__.__name__)
        self._graph = graph
        self._ports = ports
        self._kind = kind

    @property
    def graph(self) -> RotationGraph:
        return self._graph

    @property
    def ports(self) -> PortMap:
        return self._ports

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def directed(self) -> bool:
        return self._graph.directed

    def port(self, name: str) -> str:
        return self._ports[name]

    def side(self, side: str) -> Tuple[str, ...]:
        return self._ports.side(side)

    @property
    def interior(self) -> Tuple[str, ...]:
        ports = set(self._ports.vertices())
        return tuple(v for v in self._graph.vertices if v not in ports)

    @property
    def crossing(self) -> Tuple[str, ...]:
        """The interior vertices where paths may cross."""
        return tuple(v for v in self.interior if not self._graph.is_noncrossing(v))

    def audit(self) -> List[str]:
        """Degree anomalies: ports must be stubs of degree one, interior
        vertices of undirected gadgets must have degree four."""
        problems = []
        for name in self._ports.names:
            v = self._ports[name]
            if self._graph.degree(v) != 1:
                problems.append(f"port {name} has degree {self._graph.degree(v)}")
        if not self.directed:
            for v in self.interior:
                if self._graph.degree(v) != 4:
                    problems.append(f"interior vertex {v} has degree {self._graph.degree(v)}")
        return problems

    def show(self) -> None:
        print(hardpaths_log_header(obj_name=self._kind) + f"{self._graph}")
        for side, names in self._ports.sides.items():
            print(hardpaths_log_header(obj_name=self._kind) + f"{side:>6}: " + ', '.join(f"{name}={self._ports[name]}" for name in names))
        problems = self.audit()
        print(hardpaths_log_header(obj_name=self._kind) + ("degree audit passed." if len(problems) == 0 else '; '.join(problems)))


def edge_id(u: str, v: str) -> str:
    return f"{u}-{v}"


def gadget_from_table(table: GadgetTable) -> Gadget:
    """Assemble a gadget from its data table.

    Vertex labels keep the drawing coordinates; rotations are the
    counter-clockwise order of the neighbours in the drawing.
    """
    builder = RotationGraphBuilder(directed=table.directed)
    for v, (x, y) in table.vertices:
        builder.add_vertex(v, label=f"({x},{y})", position=(float(x), float(y)))
    for u, v in table.edges:
        builder.add_edge(edge_id(u, v), u, v)

    ports = PortMap({name: name for side in SIDES for name in table.sides[side]}, table.sides)
    if not table.directed:
        port_vertices = set(ports.vertices())
        builder.set_noncrossing(v for v, _ in table.vertices if (v not in port_vertices) and (v not in table.crossing))

    return Gadget(builder.build(), ports, table.kind)


def resolve_kind(kind: str) -> str:
    canonical = kind.upper() if isinstance(kind, str) else None
    if canonical not in TABLES:
        raise ValueError(hardpaths_err_header(obj_name='resolve_kind') + f"unknown gadget kind {kind!r}; expected one of {GADGET_KINDS}.")
    return canonical


_DERIVED_CACHES: List = []


def register_gadget_cache(cached_function) -> None:
    """Declare an `lru_cache`d function whose results depend on gadget
    tables, so that `mutated_table` can invalidate it."""
    _DERIVED_CACHES.append(cached_function)


def _clear_caches() -> None:
    _build_gadget.cache_clear()
    for cached_function in _DERIVED_CACHES:
        cached_function.cache_clear()


@lru_cache(maxsize=None)
def _build_gadget(kind: str) -> Gadget:
    return gadget_from_table(TABLES[kind])


def build_gadget(kind: str) -> Gadget:
    return _build_gadget(resolve_kind(kind))


@contextlib.contextmanager
def mutated_table(kind: str, edge_index: int) -> Iterator[GadgetTable]:
    """Temporarily remove one edge from the table of ``kind``.

    Every ``build_gadget(kind)`` issued inside the block returns the
    mutated gadget; the original table is restored on exit.
    """
    kind = resolve_kind(kind)
    original = TABLES[kind]
    if not (0 <= edge_index < len(original.edges)):
        raise ValueError(hardpaths_err_header(obj_name='mutated_table') + f"{kind} has no edge {edge_index}.")
    mutated = original._replace(edges=original.edges[:edge_index] + original.edges[edge_index + 1:])

    TABLES[kind] = mutated
    _clear_caches()
    try:
        yield mutated
    finally:
        TABLES[kind] = original
        _clear_caches()
