from __future__ import annotations

from typing import NamedTuple, Dict, Tuple, FrozenSet, Iterable, Union, Sequence

from .gridspec import GridSpec, CellSpecType
from hardpaths.gadgets import SIDES, Gadget, PortMap
from hardpaths.graphs import RotationGraph, RotationGraphBuilder
from hardpaths.utils import hardpaths_err_header, hardpaths_log_header
from hardpaths.utils import UnknownVertexError


Cell = Tuple[int, int]

# prefixes of the boundary stubs, per side
BOUNDARY_PREFIXES = {'top': 'x', 'bottom': "x'", 'left': 'y', 'right': "y'"}


def cell_prefix(column: int, row: int) -> str:
    return f"M({column},{row})."


class CellView(NamedTuple):
    """The vertices and edges of one cell, keyed by their name inside the
    gadget. Stubs fused with a neighbour have no vertex, but their edge maps
    to the fused edge."""
    column:   int
    row:      int
    kind:     str
    vertices: Dict[str, str]
    edges:    Dict[str, str]


class CutRegistry(object):
    """Addresses of a built grid: cells, vertical and horizontal cuts, and
    boundary stubs.

    The ``i``-th vertical cut holds the edges joining columns ``i`` and
    ``i + 1`` (two per row for XCH/LIC grids); the ``j``-th horizontal
    cut the edges joining rows ``j`` and ``j + 1``.
    """

    def __init__(self,
                 columns:    int,
                 rows:       int,
                 kinds:      Dict[Cell, str],
                 vertex_map: Dict[Cell, Dict[str, str]],
                 edge_map:   Dict[Cell, Dict[str, str]],
                 vertical:   Dict[int, Tuple[str, ...]],
                 horizontal: Dict[int, Tuple[str, ...]],
                 boundary:   Dict[str, Tuple[str, ...]]):

        super(CutRegistry, self).__init__()

        self._columns = columns
        self._rows = rows
        self._kinds = kinds
        self._vertex_map = vertex_map
        self._edge_map = edge_map
        self._vertical = vertical
        self._horizontal = horizontal
        self._boundary = boundary
        self._owner = {v: cell for cell, vmap in vertex_map.items() for v in vmap.values()}

    @property
    def columns(self) -> int:
        return self._columns

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def boundary(self) -> Dict[str, Tuple[str, ...]]:
        """The unfused stubs of the grid, per side, in boundary order."""
        return dict(self._boundary)

    def check_cell(self, column: int, row: int) -> None:
        if not (1 <= column <= self._columns and 1 <= row <= self._rows):
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"cell ({column},{row}) lies outside the {self._columns} x {self._rows} grid.")

    def kind(self, column: int, row: int) -> str:
        self.check_cell(column, row)
        return self._kinds[(column, row)]

    def vertical(self, i: int) -> Tuple[str, ...]:
        if not (1 <= i < self._columns):
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"there is no vertical cut {i} in a grid with {self._columns} columns.")
        return self._vertical[i]

    def horizontal(self, j: int) -> Tuple[str, ...]:
        if not (1 <= j < self._rows):
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"there is no horizontal cut {j} in a grid with {self._rows} rows.")
        return self._horizontal[j]

    def cell(self, column: int, row: int) -> CellView:
        self.check_cell(column, row)
        return CellView(column=column, row=row, kind=self._kinds[(column, row)],
                        vertices=dict(self._vertex_map[(column, row)]), edges=dict(self._edge_map[(column, row)]))

    def cell_vertices(self, column: int, row: int) -> FrozenSet[str]:
        self.check_cell(column, row)
        return frozenset(self._vertex_map[(column, row)].values())

    def cell_edges(self, column: int, row: int) -> FrozenSet[str]:
        self.check_cell(column, row)
        return frozenset(self._edge_map[(column, row)].values())

    def vertex(self, column: int, row: int, local: str) -> str:
        """The graph vertex of gadget vertex ``local`` in cell ``(column, row)``."""
        self.check_cell(column, row)
        try:
            return self._vertex_map[(column, row)][local]
        except KeyError:
            raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"cell ({column},{row}) has no vertex {local} (fused stubs have none).")

    def edge(self, column: int, row: int, local: str) -> str:
        self.check_cell(column, row)
        try:
            return self._edge_map[(column, row)][local]
        except KeyError:
            raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"cell ({column},{row}) has no edge {local}.")

    def locate(self, v: str) -> Cell:
        """The cell owning graph vertex ``v``."""
        try:
            return self._owner[v]
        except KeyError:
            raise UnknownVertexError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"vertex {v} belongs to no cell.")

    def columns_upto(self, i: int) -> FrozenSet[str]:
        """The vertices of the cells in columns ``1..i``."""
        return frozenset(v for (c, r), vmap in self._vertex_map.items() if c <= i for v in vmap.values())

    def rows_upto(self, j: int) -> FrozenSet[str]:
        return frozenset(v for (c, r), vmap in self._vertex_map.items() if r <= j for v in vmap.values())

    def show(self) -> None:
        print(hardpaths_log_header(obj_name=self.__class__.__name__) + f"{self._columns} x {self._rows} grid")
        for side in SIDES:
            print(hardpaths_log_header(obj_name=self.__class__.__name__) + f"{side:>6}: {len(self._boundary[side])} stubs")


def _stub(gadget: Gadget, port_vertex: str) -> Tuple[str, str, bool]:
    """The edge of a port stub, its other extremity, and whether the edge
    points into the port."""
    (e,) = gadget.graph.incident(port_vertex)
    return e, gadget.graph.other_end(e, port_vertex), gadget.graph.endpoints(e)[1] == port_vertex


GridSpecType = Union[GridSpec, Sequence[Sequence[CellSpecType]]]


def build_grid(spec: GridSpecType) -> Tuple[RotationGraph, CutRegistry]:
    """Stitch the gadgets of ``spec`` into a single rotation graph.

    Horizontally adjacent cells are joined by fusing the right stubs of the
    left cell with the left stubs of the right cell, in order; vertically
    adjacent cells by fusing the bottom stubs of the upper cell with the top
    stubs of the lower one. A pair of fused stubs becomes a single edge
    between the two neighbours of the stubs. Unfused stubs are renamed
    ``x1..`` (top), ``x'1..`` (bottom), ``y1..`` (left) and ``y'1..``
    (right).
    """
    if not isinstance(spec, GridSpec):
        spec = GridSpec(spec)
    columns, rows = spec.columns, spec.rows

    # boundary stubs
    boundary_name: Dict[Tuple[Cell, str], str] = {}
    boundary: Dict[str, Tuple[str, ...]] = {}
    for side in SIDES:
        if side in ('top', 'bottom'):
            cells = [(c, 1 if side == 'top' else rows) for c in range(1, columns + 1)]
        else:
            cells = [(1 if side == 'left' else columns, r) for r in range(1, rows + 1)]
        names = []
        for cell in cells:
            for v in spec.gadget(*cell).side(side):
                name = f"{BOUNDARY_PREFIXES[side]}{len(names) + 1}"
                boundary_name[(cell, v)] = name
                names.append(name)
        boundary[side] = tuple(names)

    # fusions
    fused_edge: Dict[Tuple[Cell, str], str] = {}
    fused_ends: Dict[str, Tuple[Tuple[Cell, str], Tuple[Cell, str]]] = {}
    vertical: Dict[int, Tuple[str, ...]] = {i: () for i in range(1, columns)}
    horizontal: Dict[int, Tuple[str, ...]] = {j: () for j in range(1, rows)}

    def fuse(first: Cell, first_side: str, second: Cell, second_side: str, label: str) -> Tuple[str, ...]:
        g1, g2 = spec.gadget(*first), spec.gadget(*second)
        p1, p2 = g1.side(first_side), g2.side(second_side)
        if len(p1) != len(p2):
            raise ValueError(hardpaths_err_header(obj_name='build_grid') + f"cells {first} and {second} do not match: {len(p1)} {first_side} stubs against {len(p2)} {second_side} stubs.")
        ids = []
        for k, (a, b) in enumerate(zip(p1, p2), start=1):
            ea, xa, into_a = _stub(g1, a)
            eb, xb, into_b = _stub(g2, b)
            if spec.directed and into_a == into_b:
                raise ValueError(hardpaths_err_header(obj_name='build_grid') + f"the arcs of stubs {a} of {first} and {b} of {second} cannot be fused: they point the same way.")
            fid = f"{label}{k}({first[0]},{first[1]})"
            fused_edge[(first, ea)] = fid
            fused_edge[(second, eb)] = fid
            ends = ((first, xa), (second, xb))
            fused_ends[fid] = ends if (not spec.directed or into_a) else (ends[1], ends[0])
            ids.append(fid)
        return tuple(ids)

    for r in range(1, rows + 1):
        for c in range(1, columns):
            vertical[c] += fuse((c, r), 'right', (c + 1, r), 'left', 'f')
    for c in range(1, columns + 1):
        for r in range(1, rows):
            horizontal[r] += fuse((c, r), 'bottom', (c, r + 1), 'top', 'e')

    fused_ports = {(cell, v) for cell in spec.cells() for side in SIDES for v in spec.gadget(*cell).side(side)
                   if (cell, v) not in boundary_name}

    # cell geometry
    width, height = 0.0, 0.0
    for cell in spec.cells():
        xs = [x for x, _ in spec.gadget(*cell).graph.positions.values()]
        ys = [y for _, y in spec.gadget(*cell).graph.positions.values()]
        if len(xs) > 0:
            width, height = max(width, max(xs) - min(xs)), max(height, max(ys) - min(ys))
    width, height = width + 4.0, height + 4.0

    vertex_map: Dict[Cell, Dict[str, str]] = {}
    edge_map: Dict[Cell, Dict[str, str]] = {}
    kinds: Dict[Cell, str] = {}

    builder = RotationGraphBuilder(directed=spec.directed)

    for cell in spec.cells():
        c, r = cell
        gadget = spec.gadget(c, r)
        kinds[cell] = gadget.kind
        positions = gadget.graph.positions
        x0 = min((x for x, _ in positions.values()), default=0.0)
        y0 = max((y for _, y in positions.values()), default=0.0)

        vmap = {}
        for v in gadget.graph.vertices:
            if (cell, v) in fused_ports:
                continue
            name = boundary_name.get((cell, v), cell_prefix(c, r) + v)
            position = positions.get(v)
            if position is not None:
                position = (position[0] - x0 + (c - 1) * width, position[1] - y0 - (r - 1) * height)
            builder.add_vertex(name, label=f"{v}^{c},{r}", position=position)
            vmap[v] = name
        vertex_map[cell] = vmap

    def global_vertex(end: Tuple[Cell, str]) -> str:
        return vertex_map[end[0]][end[1]]

    for cell in spec.cells():
        c, r = cell
        gadget = spec.gadget(c, r)
        emap = {}
        for e, (u, v) in gadget.graph.edges.items():
            if (cell, e) in fused_edge:
                fid = fused_edge[(cell, e)]
                if not builder.has_edge(fid):
                    tail, head = fused_ends[fid]
                    builder.add_edge(fid, global_vertex(tail), global_vertex(head))
                emap[e] = fid
            else:
                emap[e] = cell_prefix(c, r) + e
                builder.add_edge(emap[e], vertex_map[cell][u], vertex_map[cell][v])
        edge_map[cell] = emap

    noncrossing = []
    for cell in spec.cells():
        gadget = spec.gadget(*cell)
        for v, name in vertex_map[cell].items():
            builder.set_rotation(name, (edge_map[cell][e] for e in gadget.graph.rotation[v]))
            if gadget.graph.is_noncrossing(v):
                noncrossing.append(name)
    builder.set_noncrossing(noncrossing)

    registry = CutRegistry(columns=columns, rows=rows, kinds=kinds, vertex_map=vertex_map, edge_map=edge_map,
                           vertical=vertical, horizontal=horizontal, boundary=boundary)
    return builder.build(), registry


def cell(graph: RotationGraph, registry: CutRegistry, column: int, row: int) -> CellView:
    """The vertices and edges of cell ``(column, row)``, with their names
    inside the gadget."""
    view = registry.cell(column, row)
    graph.check_vertices(view.vertices.values(), obj_name='cell')
    return view


def as_gadget(graph: RotationGraph, registry: CutRegistry, kind: str = 'GRID', withheld: Iterable[str] = ()) -> Gadget:
    """View a built grid as a single gadget whose ports are its boundary
    stubs. ``withheld`` stubs stay in the graph as dead ends but are not
    ports."""
    withheld = frozenset(withheld)
    boundary = registry.boundary
    unknown = withheld.difference(v for side in SIDES for v in boundary[side])
    if len(unknown) > 0:
        raise UnknownVertexError(hardpaths_err_header(obj_name='as_gadget') + f"{sorted(unknown)} are not boundary stubs.")
    sides = {side: tuple(v for v in boundary[side] if v not in withheld) for side in SIDES}
    ports = PortMap({v: v for side in SIDES for v in sides[side]}, sides)
    return Gadget(graph, ports, kind)
