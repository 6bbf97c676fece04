from typing import Tuple, List, Dict

from .layout import ReductionLayout, make_layout, size_bound, X, X_PRIME, Y, Y_PRIME, w_vertex, w_prime_vertex
from hardpaths.graphs import RotationGraphBuilder, DemandClass, Instance, is_tight
from hardpaths.grids import GridSpec, build_grid
from hardpaths.reductions.cnf import CnfFormula
from hardpaths.reductions.report import Finding, StructureReport
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import InternalError


def terminal_edge(u: str, v: str) -> str:
    return f"{u}-{v}"


def parallel_edge(u: str, v: str, k: int) -> str:
    return f"{u}-{v}#{k}"


def compile_undirected(formula: CnfFormula, relaxed: bool = False) -> Tuple[Instance, ReductionLayout]:
    """Encode ``formula`` as a planar edge-disjoint paths instance with two
    demand classes.

    The grid has one column per clause; a cell is a LIC where a literal of
    the clause is encoded (the true-row of a positive variable, the
    false-row of a negated one) and an XCH elsewhere. The vertical paths
    join ``x`` to ``x'``, the horizontal ones ``y`` to ``y'``. Unless
    ``relaxed`` is set, the formula must have at least three clauses over at
    least three variables, with three literals per clause.
    """
    layout = make_layout(formula, relaxed=relaxed)
    n, p, n_variables = layout.n, layout.p, layout.n_variables

    lic_cells = layout.lic_cells()
    spec = GridSpec([['LIC' if (c, r) in lic_cells else 'XCH' for c in range(1, n + 1)] for r in range(1, p + 1)])
    graph, registry = build_grid(spec)
    boundary = registry.boundary

    builder = RotationGraphBuilder.from_graph(graph)
    positions = graph.positions
    xs = [positions[v][0] for v in boundary['top']]
    ys = [positions[v][1] for v in boundary['left']]
    left, right, top, bottom = min(xs) - 8.0, max(xs) + 8.0, max(ys) + 8.0, min(ys) - 8.0
    middle_x, middle_y = (left + right) / 2.0, (top + bottom) / 2.0

    builder.add_vertex(X, label=X, position=(middle_x, top))
    builder.add_vertex(X_PRIME, label=X_PRIME, position=(middle_x, bottom))
    builder.add_vertex(Y, label=Y, position=(left - 8.0, middle_y))
    builder.add_vertex(Y_PRIME, label=Y_PRIME, position=(right + 8.0, middle_y))

    # vertical terminals and parity edges
    top_stubs, bottom_stubs = boundary['top'], boundary['bottom']
    for k in range(0, n):
        s1, s2, s3, s4 = top_stubs[4 * k:4 * k + 4]
        builder.add_edge(terminal_edge(X, s1), X, s1)
        builder.add_edge(terminal_edge(X, s2), X, s2)
        builder.add_edge(terminal_edge(s3, s4), s3, s4)
        t1, t2, t3, t4 = bottom_stubs[4 * k:4 * k + 4]
        builder.add_edge(terminal_edge(t3, X_PRIME), t3, X_PRIME)
        builder.add_edge(terminal_edge(t4, X_PRIME), t4, X_PRIME)
        builder.add_edge(terminal_edge(t1, t2), t1, t2)

    # no-path anchors and horizontal terminals
    left_stubs, right_stubs = boundary['left'], boundary['right']
    anchored = set()
    for i in range(1, n_variables + 1):
        w, w_prime = w_vertex(i), w_prime_vertex(i)
        band = layout.w_stubs(i)
        band_y = sum(positions[left_stubs[j - 1]][1] for j in band) / len(band)
        builder.add_vertex(w, label=w, position=(left - 4.0, band_y))
        builder.add_vertex(w_prime, label=w_prime, position=(right + 4.0, band_y))
        for j in band:
            builder.add_edge(terminal_edge(w, left_stubs[j - 1]), w, left_stubs[j - 1])
            builder.add_edge(terminal_edge(right_stubs[j - 1], w_prime), right_stubs[j - 1], w_prime)
            anchored.add(j)
        for k in range(1, layout.multiplicity + 1):
            builder.add_edge(parallel_edge(Y, w, k), Y, w)
            builder.add_edge(parallel_edge(w_prime, Y_PRIME, k), w_prime, Y_PRIME)
    for j in range(1, 2 * p + 1):
        if j not in anchored:
            builder.add_edge(terminal_edge(Y, left_stubs[j - 1]), Y, left_stubs[j - 1])
            builder.add_edge(terminal_edge(right_stubs[j - 1], Y_PRIME), right_stubs[j - 1], Y_PRIME)

    graph = builder.build()
    if graph.n_vertices > size_bound(layout):
        raise InternalError(hardpaths_err_header(obj_name='compile_undirected') + f"the graph has {graph.n_vertices} vertices, above the bound {size_bound(layout)}.")

    demands = [DemandClass.of({X}, {X_PRIME}, count=layout.vertical_demand, name='vertical'),
               DemandClass.of({Y}, {Y_PRIME}, count=layout.horizontal_demand, name='horizontal')]
    metadata = {'reduction': 'undirected', 'clauses': n, 'variables': n_variables, 'q': layout.q, 'p': p, 'relaxed': relaxed,
                'formula': [list(clause) for clause in formula.clauses]}
    return Instance(graph, demands, metadata), layout._replace(registry=registry)


def odd_vertices(instance: Instance) -> List[str]:
    """The vertices of odd degree in the union of the graph and the demand
    graph."""
    degree: Dict[str, int] = {v: instance.graph.degree(v) for v in instance.graph.vertices}
    for cls in instance.demands:
        # each demand edge joins the (single) source to the (single) sink
        for v in tuple(cls.sources) + tuple(cls.sinks):
            degree[v] += cls.count
    return sorted(v for v, d in degree.items() if d % 2 == 1)


def validate_structure(instance: Instance, layout: ReductionLayout) -> StructureReport:
    """Check the counting facts of the planar reduction: the odd vertices
    are the no-path anchors, the terminal cuts are tight, every vertical cut
    holds exactly the horizontal paths and the no-paths, and one LIC
    encodes each literal."""
    violations = []
    notes = []
    registry = layout.registry

    for cls in instance.demands:
        if len(cls.sources) != 1 or len(cls.sinks) != 1:
            violations.append(Finding('terminals', f"demand class {cls.name!r} does not join two single terminals."))
    if len(violations) > 0:
        return StructureReport(violations=tuple(violations))

    expected = sorted([w_vertex(i) for i in range(1, layout.n_variables + 1)] + [w_prime_vertex(i) for i in range(1, layout.n_variables + 1)])
    odd = odd_vertices(instance)
    if odd != expected:
        violations.append(Finding('parity', f"odd vertices are {odd[:8]}{'...' if len(odd) > 8 else ''}, expected {expected}."))

    for terminal in (X, X_PRIME, Y, Y_PRIME):
        report = is_tight(instance, {terminal})
        if report.verdict is not True:
            violations.append(Finding('tightness', f"the cut around {terminal} has slack {report.slack}."))

    for i in range(1, layout.n):
        size = len(registry.vertical(i))
        if size != 2 * layout.p or size != layout.horizontal_demand + layout.n_variables:
            violations.append(Finding('vertical-cut', f"vertical cut {i} has {size} edges, expected {2 * layout.p} = {layout.horizontal_demand} horizontal paths + {layout.n_variables} no-paths."))
    notes.append(f"vertical cuts hold {2 * layout.p} edges for {layout.horizontal_demand} horizontal paths and {layout.n_variables} no-paths.")

    lic = sum(1 for c in range(1, registry.columns + 1) for r in range(1, registry.rows + 1) if registry.kind(c, r) == 'LIC')
    literals = len(layout.lic_cells())
    if lic != literals:
        violations.append(Finding('lic-count', f"{lic} LIC cells for {literals} literal occurrences."))

    if instance.graph.n_vertices > size_bound(layout):
        violations.append(Finding('size', f"{instance.graph.n_vertices} vertices exceed the bound {size_bound(layout)}."))

    return StructureReport(violations=tuple(violations), notes=tuple(notes))
