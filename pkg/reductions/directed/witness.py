from typing import NamedTuple, Dict, List, Tuple, Optional, Sequence

from .layout import Cell, DirectedLayout, S1, S2, T1, T2, PAIR_KIND
from .compiler import compile_full, compile_g1, g1_instance
from .transforms import identify_terminals, corollary_transform, WRAP_DEMAND
from hardpaths.gadgets import build_gadget, gadget_routing
from hardpaths.graphs import Instance, Path, Routing, validate_routing
from hardpaths.reductions.cnf import CnfFormula, Assignment
from hardpaths.reductions.undirected import terminal_edge
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import UnsatisfiedAssignmentError, InternalError


VARIANTS = ('full', 'identified', 'corollary')


class TrackPlan(NamedTuple):
    """The tracks of a directed witness, per cell.

    Tracks are 1-based positions in the port list of a side: a horizontal
    path enters a cell on ``horizontal[cell][0]`` of its left side and leaves
    on ``horizontal[cell][1]`` of its right side; similarly for the vertical
    path from top to bottom. ``switch_rows`` gives, per clause, the
    clause-grid row where its column path moves onto the ``b`` track.
    """
    horizontal:  Dict[Cell, Tuple[int, int]]
    vertical:    Dict[Cell, Tuple[int, int]]
    switch_rows: Dict[int, int]


def _exit_tracks(kind: str, h_in: int, v_in: int, value: bool, arities: Dict[str, int]) -> Tuple[int, int]:
    if kind == 'IF':
        return (2, 1) if value else (1, 2)
    if kind == 'LL':
        return 3 - v_in, 1
    if kind == 'TT':
        return 1, 3 - h_in
    if kind == 'VV':
        if (h_in, v_in) == (1, 1):
            raise InternalError(hardpaths_err_header(obj_name='track_plan') + "the tracks entering a VV cell cannot both be routed.")
        return 1, 1
    return (h_in if arities['right'] > 1 else 1), (v_in if arities['bottom'] > 1 else 1)


def _pair_letters(letter: str, g1_row: int, switch: int) -> Tuple[str, str]:
    # column paths of the clause grid run on ``c`` until the switch, then on ``b``
    if letter == 'c' and g1_row == switch:
        return 'c', "b'"
    return letter, letter + "'"


def track_plan(layout: DirectedLayout, assignment: Assignment) -> TrackPlan:
    """Thread one horizontal path through each row and one vertical path
    through each column of the full grid, row by row.

    Variable ``i`` true sends the path of row ``i`` on the lower track, and
    through clause-grid row ``2i``; IF and LL then use their ``1`` ports
    and TT its ``2`` ports. False mirrors all of this.
    """
    registry = layout.registry
    switch_rows = {}
    for j in range(1, layout.n + 1):
        row = layout.switch_row(j, assignment)
        if row is None:
            raise UnsatisfiedAssignmentError(hardpaths_err_header(obj_name='track_plan') + f"clause {j} is not satisfied.")
        switch_rows[j] = row

    horizontal, vertical = {}, {}
    v_track = {c: 1 for c in range(1, layout.columns + 1)}
    letters = {j: 'c' for j in range(1, layout.n + 1)}
    for r in range(1, layout.rows + 1):
        h_track = 1
        for c in range(1, layout.columns + 1):
            kind = registry.kind(c, r)
            h_in, v_in = h_track, v_track[c]
            if kind == PAIR_KIND:
                clause = c - layout.p
                for g1_row in (2 * r - 1, 2 * r):
                    letters[clause] = _pair_letters(letters[clause], g1_row, switch_rows[clause])[1][0]
                h_out = h_in
                v_out = 1 if (r == layout.p or letters[clause] == 'b') else 2
            else:
                arities = {side: len(ports) for side, ports in build_gadget(kind).ports.sides.items()}
                h_out, v_out = _exit_tracks(kind, h_in, v_in, assignment[r - 1] if kind == 'IF' else False, arities)
            horizontal[(c, r)] = (h_in, h_out)
            vertical[(c, r)] = (v_in, v_out)
            h_track, v_track[c] = h_out, v_out

    return TrackPlan(horizontal=horizontal, vertical=vertical, switch_rows=switch_rows)


def _join(edges: List[str], segment: Sequence[str]) -> None:
    # adjacent cells share their stitched arc
    if len(edges) > 0 and len(segment) > 0 and edges[-1] == segment[0]:
        segment = segment[1:]
    edges.extend(segment)


def _cell_routing(kind: str, pairs: Tuple[Tuple[str, str], ...], where: str) -> Dict[int, Tuple[str, ...]]:
    routing = gadget_routing(kind, pairs)
    if routing is None:
        raise InternalError(hardpaths_err_header(obj_name='witness_directed') + f"{kind} admits no routing of {pairs} in {where}.")
    return {path.demand: path.edges for path in routing}


def _g1_cell(kind: str, letter: str, g1_row: int, switch: int, horizontal: bool, where: str) -> Tuple[Tuple[str, ...], Tuple[str, ...], str]:
    """Route the column path (and the row path if ``horizontal``) through a
    YES/NO cell; returns the column segment, the row segment and the
    letter the column path leaves on."""
    vertical_pair = _pair_letters(letter, g1_row, switch)
    pairs = (vertical_pair, ('a', "a'")) if horizontal else (vertical_pair,)
    segments = _cell_routing(kind, pairs, where)
    return segments[0], segments.get(1, ()), vertical_pair[1][0]


def _grid_segments(layout: DirectedLayout, plan: TrackPlan) -> Tuple[Dict[Cell, Tuple[str, ...]], Dict[Cell, Tuple[str, ...]]]:
    registry = layout.registry
    rows_of, columns_of = {}, {}
    letters = {j: 'c' for j in range(1, layout.n + 1)}
    for r in range(1, layout.rows + 1):
        for c in range(1, layout.columns + 1):
            kind = registry.kind(c, r)
            h_in, h_out = plan.horizontal[(c, r)]
            v_in, v_out = plan.vertical[(c, r)]
            if kind == PAIR_KIND:
                clause = c - layout.p
                inner = layout.pairs[(c, r)]
                column_edges, row_edges = [], []
                for inner_row, g1_row in ((1, 2 * r - 1), (2, 2 * r)):
                    column_segment, row_segment, letters[clause] = _g1_cell(inner.kind(1, inner_row), letters[clause], g1_row, plan.switch_rows[clause],
                                                                             h_in == inner_row, f"clause-grid cell ({g1_row},{clause})")
                    _join(column_edges, [registry.edge(c, r, inner.edge(1, inner_row, e)) for e in column_segment])
                    row_edges += [registry.edge(c, r, inner.edge(1, inner_row, e)) for e in row_segment]
            else:
                sides = build_gadget(kind).ports.sides
                pairs = ((sides['left'][h_in - 1], sides['right'][h_out - 1]), (sides['top'][v_in - 1], sides['bottom'][v_out - 1]))
                segments = _cell_routing(kind, pairs, f"cell ({c},{r})")
                row_edges = [registry.edge(c, r, e) for e in segments[0]]
                column_edges = [registry.edge(c, r, e) for e in segments[1]]
            rows_of[(c, r)] = tuple(row_edges)
            columns_of[(c, r)] = tuple(column_edges)
    return rows_of, columns_of


def _column_edges(layout: DirectedLayout, columns_of: Dict[Cell, Tuple[str, ...]], c: int) -> List[str]:
    edges = []
    for r in range(1, layout.rows + 1):
        _join(edges, columns_of[(c, r)])
    return edges


def witness_directed(formula:    CnfFormula,
                     assignment: Sequence[bool],
                     variant:    str = 'full',
                     compiled:   Optional[Tuple[Instance, DirectedLayout]] = None,
                     verify:     bool = True) -> Routing:
    """A routing of the acyclic instance of ``formula`` built from a
    satisfying assignment.

    ``variant`` selects the instance: ``'full'`` (four terminals),
    ``'identified'`` (``t1`` merged into ``s2`` and ``t2`` into ``s1``) or
    ``'corollary'`` (one path through all the columns, joined by the wrap
    arcs). ``compiled`` is the output of ``compile_full`` when it is
    already at hand. With ``verify`` the routing is validated against the
    instance of the chosen variant.
    """
    if variant not in VARIANTS:
        raise ValueError(hardpaths_err_header(obj_name='witness_directed') + f"unknown variant {variant!r}; expected one of {VARIANTS}.")
    assignment = formula.check_assignment(assignment)
    if not formula.evaluate(assignment):
        raise UnsatisfiedAssignmentError(hardpaths_err_header(obj_name='witness_directed') + "the assignment does not satisfy the formula.")

    instance, layout = compiled if compiled is not None else compile_full(formula)
    registry = layout.registry
    boundary = registry.boundary
    plan = track_plan(layout, assignment)
    rows_of, columns_of = _grid_segments(layout, plan)

    routing = Routing()
    for r in range(1, layout.rows + 1):
        edges = [terminal_edge(S1, boundary['left'][r - 1])]
        for c in range(1, layout.columns + 1):
            _join(edges, rows_of[(c, r)])
        edges.append(terminal_edge(boundary['right'][r - 1], S2))
        routing.append(Path(demand=0, edges=tuple(edges), start=S1))

    if variant == 'corollary':
        instance = corollary_transform(instance)
        edges = []
        for c in range(layout.columns, 0, -1):
            if c < layout.columns:
                edges.append(terminal_edge(boundary['bottom'][c], boundary['top'][c - 1]))
            _join(edges, _column_edges(layout, columns_of, c))
        demand = [cls.name for cls in instance.demands].index(WRAP_DEMAND)
        routing.append(Path(demand=demand, edges=tuple(edges), start=boundary['top'][-1]))
    else:
        start = T1
        if variant == 'identified':
            instance = identify_terminals(instance)
            start = S2
        for c in range(1, layout.columns + 1):
            edges = [terminal_edge(T1, boundary['top'][c - 1])] + _column_edges(layout, columns_of, c) + [terminal_edge(boundary['bottom'][c - 1], T2)]
            routing.append(Path(demand=1, edges=tuple(edges), start=start))

    if verify:
        report = validate_routing(instance, routing)
        if not report.valid:
            raise InternalError(hardpaths_err_header(obj_name='witness_directed') + f"the witness does not validate: {report.kinds()}.")
    return routing


def witness_g1(formula:    CnfFormula,
               assignment: Sequence[bool],
               verify:     bool = True) -> Tuple[Instance, Routing]:
    """The explicit clause-grid path system of a satisfying assignment:
    variable ``i`` true puts its row path in row ``2i`` and lets the column
    paths switch tracks in row ``2i - 1``; false does the opposite."""
    assignment = formula.check_assignment(assignment)
    if not formula.evaluate(assignment):
        raise UnsatisfiedAssignmentError(hardpaths_err_header(obj_name='witness_g1') + "the assignment does not satisfy the formula.")

    graph, layout = compile_g1(formula)
    registry = layout.registry
    rows = [2 * i if value else 2 * i - 1 for i, value in enumerate(assignment, start=1)]
    instance = g1_instance(graph, layout, rows)

    row_edges = {row: [] for row in rows}
    routing = Routing()
    for j in range(1, layout.n + 1):
        switch = layout.switch_row(j, assignment)
        letter, edges = 'c', []
        for k in range(1, 2 * layout.p + 1):
            column_segment, row_segment, letter = _g1_cell(registry.kind(j, k), letter, k, switch, k in row_edges, f"clause-grid cell ({k},{j})")
            _join(edges, [registry.edge(j, k, e) for e in column_segment])
            if k in row_edges:
                _join(row_edges[k], [registry.edge(j, k, e) for e in row_segment])
        routing.append(Path(demand=j - 1, edges=tuple(edges), start=registry.vertex(j, 1, 'c')))
    for i, row in enumerate(rows):
        routing.append(Path(demand=layout.n + i, edges=tuple(row_edges[row]), start=registry.vertex(1, row, 'a')))

    if verify:
        report = validate_routing(instance, routing)
        if not report.valid:
            raise InternalError(hardpaths_err_header(obj_name='witness_g1') + f"the path system does not validate: {report.kinds()}.")
    return instance, routing
