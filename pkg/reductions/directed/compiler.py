from typing import Tuple, Sequence

import networkx as nx

from .layout import DirectedLayout, make_directed_layout, S1, S2, T1, T2, PAIR_KIND
from .placement import place_fillers
from hardpaths.gadgets import Gadget, build_gadget
from hardpaths.graphs import RotationGraph, RotationGraphBuilder, DemandClass, Instance
from hardpaths.grids import CutRegistry, GridSpec, build_grid, as_gadget
from hardpaths.reductions.cnf import CnfFormula
from hardpaths.reductions.undirected import terminal_edge
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import InternalError


def compile_g1(formula: CnfFormula) -> Tuple[RotationGraph, DirectedLayout]:
    """The clause grid alone: ``2p`` rows and ``n`` columns of YES/NO.

    Row ``2i - 1`` has a YES in the columns of the clauses where variable
    ``i`` occurs positively, row ``2i`` where it occurs negatively.
    """
    layout = make_directed_layout(formula)
    graph, registry = build_grid(layout.g1_layout())
    return graph, layout._replace(registry=registry)


def g1_pair(layout: DirectedLayout, row: int, clause: int) -> Tuple[Gadget, CutRegistry]:
    """The composite cell holding clause-grid rows ``2 row - 1`` and
    ``2 row`` of column ``clause``.

    In the first grid row only the ``c`` stub is exposed on top; in the last
    grid row only the ``b'`` stub is exposed at the bottom. The withheld
    stubs stay as dead ends.
    """
    kinds = [[layout.g1_kind(2 * row - 1, clause)], [layout.g1_kind(2 * row, clause)]]
    graph, inner = build_grid(kinds)
    withheld = []
    if row == 1:
        withheld.append(inner.boundary['top'][0])
    if row == layout.p:
        withheld.append(inner.boundary['bottom'][1])
    return as_gadget(graph, inner, kind=PAIR_KIND, withheld=withheld), inner


def compile_full(formula: CnfFormula) -> Tuple[Instance, DirectedLayout]:
    """Encode ``formula`` as an acyclic arc-disjoint paths instance with two
    demand classes: ``2p`` paths from ``s1`` to ``s2`` (one per row) and
    ``2p + n`` paths from ``t1`` to ``t2`` (one per column).

    The clause grid is surrounded by the track locks; every other cell is
    a NO or an ON, chosen so that the port counts of adjacent cells agree.
    """
    layout = make_directed_layout(formula)
    p, n = layout.p, layout.n

    fixed = {cell: build_gadget(kind) for cell, kind in layout.special_cells().items()}
    pairs = {}
    for r in range(1, p + 1):
        for j in range(1, n + 1):
            gadget, inner = g1_pair(layout, r, j)
            fixed[(p + j, r)] = gadget
            pairs[(p + j, r)] = inner

    spec = GridSpec(place_fillers(layout.columns, layout.rows, fixed))
    graph, registry = build_grid(spec)
    boundary = registry.boundary

    builder = RotationGraphBuilder.from_graph(graph)
    positions = graph.positions
    xs = [positions[v][0] for v in boundary['top'] + boundary['bottom']]
    ys = [positions[v][1] for v in boundary['left'] + boundary['right']]
    left, right, top, bottom = min(xs) - 8.0, max(xs) + 8.0, max(ys) + 8.0, min(ys) - 8.0
    middle_x, middle_y = (left + right) / 2.0, (top + bottom) / 2.0

    builder.add_vertex(S1, label=S1, position=(left - 8.0, middle_y))
    builder.add_vertex(S2, label=S2, position=(right + 8.0, middle_y))
    builder.add_vertex(T1, label=T1, position=(middle_x, top + 8.0))
    builder.add_vertex(T2, label=T2, position=(middle_x, bottom - 8.0))
    for y in boundary['left']:
        builder.add_edge(terminal_edge(S1, y), S1, y)
    for y in boundary['right']:
        builder.add_edge(terminal_edge(y, S2), y, S2)
    for x in boundary['top']:
        builder.add_edge(terminal_edge(T1, x), T1, x)
    for x in boundary['bottom']:
        builder.add_edge(terminal_edge(x, T2), x, T2)
    graph = builder.build()

    if not nx.is_directed_acyclic_graph(graph.to_networkx()):
        raise InternalError(hardpaths_err_header(obj_name='compile_full') + "the compiled graph has a directed cycle.")

    demands = [DemandClass.of(S1, S2, count=layout.horizontal_demand, name='horizontal'),
               DemandClass.of(T1, T2, count=layout.vertical_demand, name='vertical')]
    metadata = {'reduction': 'directed', 'variant': 'full', 'clauses': n, 'variables': p,
                'columns': layout.columns, 'rows': layout.rows,
                'terminals': {'s1': S1, 's2': S2, 't1': T1, 't2': T2},
                'top': list(boundary['top']), 'bottom': list(boundary['bottom']),
                'formula': [list(clause) for clause in formula.clauses]}
    return Instance(graph, demands, metadata), layout._replace(registry=registry, pairs=pairs)


def g1_instance(graph: RotationGraph, layout: DirectedLayout, rows: Sequence[int]) -> Instance:
    """The clause grid with one path per column, from ``c`` on top to
    ``b'`` at the bottom, and one path per variable along the clause-grid
    row ``rows[i - 1]`` (``2i - 1`` or ``2i``)."""
    registry = layout.registry
    p, n = layout.p, layout.n
    if len(rows) != p or any(row not in (2 * i - 1, 2 * i) for i, row in enumerate(rows, start=1)):
        raise ValueError(hardpaths_err_header(obj_name='g1_instance') + f"expected one of the two rows of each variable, but {tuple(rows)} was given.")
    demands = [DemandClass.of(registry.vertex(j, 1, 'c'), registry.vertex(j, 2 * p, "b'"), name=f"P{j}") for j in range(1, n + 1)]
    demands += [DemandClass.of(registry.vertex(1, row, 'a'), registry.vertex(n, row, "a'"), name=f"Q{i}") for i, row in enumerate(rows, start=1)]
    return Instance(graph, demands, {'reduction': 'directed', 'variant': 'g1', 'rows': list(rows)})
