from typing import NamedTuple, Dict, Tuple, List, Optional, Sequence

from .layout import ReductionLayout, X, X_PRIME, Y, Y_PRIME, w_vertex, w_prime_vertex
from .compiler import compile_undirected, terminal_edge, parallel_edge
from .templates import TemplateKey, Template, cell_template, exit_side
from hardpaths.graphs import Instance, Path, Routing, validate_routing
from hardpaths.reductions.cnf import CnfFormula, Assignment
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import UnsatisfiedAssignmentError, InternalError


Cell = Tuple[int, int]


class WitnessPlan(NamedTuple):
    """Which template every cell of the grid uses.

    ``keep_cells`` maps each column to the row where its vertical paths
    keep their side; ``chosen_rows`` maps each row carrying a single
    horizontal path to its variable.
    """
    keep_cells:  Dict[int, int]
    chosen_rows: Dict[int, int]
    keys:        Dict[Cell, TemplateKey]

    def shifts(self, column: int) -> int:
        return sum(1 for (c, _), key in self.keys.items() if c == column and key.behaviour == 'shift')


def _single_path_keys(layout: ReductionLayout, row: int, sides: Dict[Cell, str], behaviours: Dict[Cell, str]) -> List[TemplateKey]:
    """Templates along a row with one horizontal path, choosing at every
    cell the stubs through which the path enters and leaves so that
    consecutive cells agree."""
    registry = layout.registry
    n = layout.n

    def key(c: int, h_entry: int, h_exit: int) -> TemplateKey:
        return TemplateKey(registry.kind(c, row), 1, sides[(c, row)], behaviours[(c, row)], h_entry, h_exit)

    # reachable[c][stub] = stub used to enter cell c
    reachable: List[Dict[int, Optional[int]]] = [{1: None, 2: None}]
    for c in range(1, n + 1):
        following = {}
        for h_entry in reachable[-1].keys():
            for h_exit in (1, 2):
                if h_exit not in following and cell_template(key(c, h_entry, h_exit)) is not None:
                    following[h_exit] = h_entry
        if len(following) == 0:
            raise InternalError(hardpaths_err_header(obj_name='witness_undirected') + f"no single-path routing reaches cell ({c},{row}).")
        reachable.append(following)

    keys = []
    h_exit = min(reachable[-1].keys())
    for c in range(n, 0, -1):
        h_entry = reachable[c][h_exit]
        keys.append(key(c, h_entry, h_exit))
        h_exit = h_entry
    return list(reversed(keys))


def witness_plan(layout: ReductionLayout, assignment: Assignment) -> WitnessPlan:
    formula = layout.formula
    registry = layout.registry

    chosen_rows = {layout.chosen_row(i, assignment): i for i in range(1, layout.n_variables + 1)}
    keep_cells = {}
    for c in range(1, layout.n + 1):
        literal = formula.first_satisfied_literal(c - 1, assignment)
        keep_cells[c] = layout.literal_cell(c, literal)[1]

    sides: Dict[Cell, str] = {}
    behaviours: Dict[Cell, str] = {}
    for c in range(1, layout.n + 1):
        side = 'left'
        for r in range(1, layout.p + 1):
            sides[(c, r)] = side
            behaviours[(c, r)] = 'keep' if keep_cells[c] == r else 'shift'
            side = exit_side(side, behaviours[(c, r)])

    keys: Dict[Cell, TemplateKey] = {}
    for r in range(1, layout.p + 1):
        if r in chosen_rows:
            for c, key in enumerate(_single_path_keys(layout, r, sides, behaviours), start=1):
                keys[(c, r)] = key
        else:
            for c in range(1, layout.n + 1):
                keys[(c, r)] = TemplateKey(registry.kind(c, r), 2, sides[(c, r)], behaviours[(c, r)])

    return WitnessPlan(keep_cells=keep_cells, chosen_rows=chosen_rows, keys=keys)


def _append(edges: List[str], segment: Sequence[str]) -> None:
    # consecutive cells share the stitched edge
    if len(edges) > 0 and len(segment) > 0 and edges[-1] == segment[0]:
        segment = segment[1:]
    edges.extend(segment)


def witness_undirected(formula:    CnfFormula,
                       assignment: Sequence[bool],
                       compiled:   Optional[Tuple[Instance, ReductionLayout]] = None,
                       verify:     bool = True) -> Routing:
    """A routing of the compiled instance of ``formula`` built from a
    satisfying assignment.

    Every row carries two horizontal paths, except the row of each variable
    selected by the assignment, which carries one. In every column the
    vertical paths change side in each cell, except in the LIC of the first
    literal satisfying the clause, where they keep it.
    """
    assignment = formula.check_assignment(assignment)
    if not formula.evaluate(assignment):
        raise UnsatisfiedAssignmentError(hardpaths_err_header(obj_name='witness_undirected') + "the assignment does not satisfy the formula.")

    instance, layout = compiled if compiled is not None else compile_undirected(formula, relaxed=not formula.in_regime())
    registry = layout.registry
    plan = witness_plan(layout, assignment)

    templates: Dict[Cell, Template] = {}
    for cell, key in plan.keys.items():
        template = cell_template(key)
        if template is None:
            raise InternalError(hardpaths_err_header(obj_name='witness_undirected') + f"cell {cell} needs the missing template {key}.")
        templates[cell] = template

    def globalise(c: int, r: int, edges: Sequence[str]) -> Tuple[str, ...]:
        return tuple(registry.edge(c, r, e) for e in edges)

    routing = Routing()
    vertical, horizontal = 0, 1

    # horizontal paths, row by row; rows of a band enter through its anchors
    next_parallel = {i: 1 for i in range(1, layout.n_variables + 1)}
    for r in range(1, layout.p + 1):
        template = templates[(1, r)]
        band = layout.band_of(r)
        for start in sorted(template.horizontal.keys()):
            stub = start
            edges: List[str] = []
            for c in range(1, layout.n + 1):
                segment, exit_stub = templates[(c, r)].horizontal[stub]
                _append(edges, globalise(c, r, segment))
                stub = 't' + exit_stub[2:]
            y_stub = registry.vertex(1, r, start)
            y_prime_stub = registry.vertex(layout.n, r, exit_stub)
            if band is None:
                head = [terminal_edge(Y, y_stub)]
                tail = [terminal_edge(y_prime_stub, Y_PRIME)]
            else:
                k = next_parallel[band]
                next_parallel[band] += 1
                head = [parallel_edge(Y, w_vertex(band), k), terminal_edge(w_vertex(band), y_stub)]
                tail = [terminal_edge(y_prime_stub, w_prime_vertex(band)), parallel_edge(w_prime_vertex(band), Y_PRIME, k)]
            routing.append(Path(demand=horizontal, edges=tuple(head + edges + tail), start=Y))

    # vertical paths, column by column
    for c in range(1, layout.n + 1):
        for start in ('s1', 's2'):
            stub = start
            edges = []
            for r in range(1, layout.p + 1):
                segment, exit_stub = templates[(c, r)].vertical[stub]
                _append(edges, globalise(c, r, segment))
                stub = 's' + exit_stub[2:]
            head = [terminal_edge(X, registry.vertex(c, 1, start))]
            tail = [terminal_edge(registry.vertex(c, layout.p, exit_stub), X_PRIME)]
            routing.append(Path(demand=vertical, edges=tuple(head + edges + tail), start=X))

    if verify:
        report = validate_routing(instance, routing)
        if not report.valid:
            raise InternalError(hardpaths_err_header(obj_name='witness_undirected') + f"the witness violates {report.kinds()}.")
    return routing
