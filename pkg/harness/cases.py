"""The verification cases.

Every case builds the instances it is about, settles them by exhaustive
search and evaluates a predicate on the outcomes. Searches that run out of
nodes make the case inconclusive; they never make it pass.
"""

import random
import warnings
from enum import Enum
from functools import partial
from typing import NamedTuple, Callable, Dict, Tuple, FrozenSet, Optional, Iterable, Hashable

from hardpaths.editing import expand_instance
from hardpaths.gadgets import FIGURES, figure_routing, crossing_configuration
from hardpaths.gadgets import build_gadget, gadget_mirror, mirror_map, mirror_routing, gadget_reachability, gadget_routing
from hardpaths.graphs import DemandClass, Instance, Path, Routing, vertex_sequence
from hardpaths.graphs import validate_routing, detect_crossings, is_uncrossed, random_instance
from hardpaths.grids import GridSpec, CutRegistry, build_grid, standard_demand, resolve_stub, LEMMA_SPECS, DemandTerm
from hardpaths.reductions.cnf import CnfFormula, small_formulas
from hardpaths.reductions.directed import VARIANTS, compile_full, witness_directed, claim1_check, claim2_check, claim3_check
from hardpaths.solver import SearchPolicy, SolveStats, SolveResult, run_search, pairing_of, complement_reachable, is_graph_automorphism
from hardpaths.utils import hardpaths_err_header, hardpaths_wng_header
from hardpaths.utils import default_node_budget
from hardpaths.utils import BudgetExceededError, InternalError


# seconds granted to each integer program
PROGRAM_TIME_LIMIT = 600.0


class CaseStatus(Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    INCONCLUSIVE = 'INCONCLUSIVE'


class CaseResult(NamedTuple):
    case_id: str
    status:  CaseStatus
    detail:  str
    stats:   SolveStats


class CaseSearch(object):
    """Runs the searches of one case under a common node budget and sums
    up their statistics."""

    def __init__(self, node_budget: int):
        super(CaseSearch, self).__init__()
        self._node_budget = node_budget
        self._stats = SolveStats()

    @property
    def stats(self) -> SolveStats:
        return self._stats

    def policy(self, mode: str, engine: str = 'search', flow_check: str = 'path') -> SearchPolicy:
        time_limit = PROGRAM_TIME_LIMIT if engine == 'program' else None
        return SearchPolicy(mode=mode, node_budget=self._node_budget, flow_check=flow_check, engine=engine, time_limit=time_limit)

    def record(self, stats: SolveStats) -> None:
        self._stats = self._stats + stats

    def search(self,
               instance:   Instance,
               mode:       str,
               cuts:       Iterable[Iterable[str]] = (),
               projection: Optional[Callable[[Instance, Routing], Hashable]] = None,
               engine:     str = 'search',
               flow_check: str = 'path') -> SolveResult:
        result = run_search(instance, self.policy(mode, engine, flow_check), cuts=cuts, projection=projection)
        self.record(result.stats)
        if not result.conclusive:
            raise BudgetExceededError(hardpaths_err_header(obj_name='CaseSearch') + f"a search stopped after {result.stats.nodes} nodes and {result.stats.elapsed:.0f}s (budget {self._node_budget} nodes).")
        return result


CaseCheck = Callable[[CaseSearch], Tuple[bool, str]]


class LemmaCase(NamedTuple):
    case_id:     str
    description: str
    check:       CaseCheck


# -- HELPERS -- #

def _single(kind: str) -> Tuple:
    return build_grid([[kind]])


def _with_sinks(spec: str, sinks: Tuple[str, ...]) -> Tuple[DemandTerm, ...]:
    terms = LEMMA_SPECS[spec]
    return (terms[0]._replace(sinks=sinks),) + terms[1:]


def _stubs(registry: CutRegistry, names: Iterable[str]) -> FrozenSet[str]:
    return frozenset(resolve_stub(registry, name) for name in names)


def _figure_valid(figure_id: str) -> bool:
    """Validate a figure routing inside the one-cell grid of its gadget."""
    figure = FIGURES[figure_id]
    grid = _single(figure.kind)
    _, registry = grid
    routing = Routing(Path(demand=path.demand,
                           edges=tuple(registry.edge(1, 1, e) for e in path.edges),
                           start=registry.vertex(1, 1, path.start)) for path in figure_routing(figure_id))
    return validate_routing(standard_demand(grid, figure.spec), routing).valid


def _uncrossed_vertical_pairing(instance: Instance, routing: Routing) -> Hashable:
    if not is_uncrossed(instance.graph, routing):
        return None
    return pairing_of(instance, routing)[0]


def _path_ends(instance: Instance, routing: Routing) -> FrozenSet[str]:
    ends = set()
    for path in routing:
        vertices = vertex_sequence(instance.graph, path)
        ends.update((vertices[0], vertices[-1]))
    return frozenset(ends)


def _extra_path(heads: FrozenSet[str], tails: FrozenSet[str], instance: Instance, routing: Routing) -> bool:
    # one more path could only start and end at unused stubs
    ends = _path_ends(instance, routing)
    return complement_reachable(instance, routing, heads - ends, tails - ends)


def _reaches(heads: FrozenSet[str], tails: FrozenSet[str], instance: Instance, routing: Routing) -> bool:
    return complement_reachable(instance, routing, heads, tails)


_LOW_SINKS = ("x'1", "x'2")
_HIGH_SINKS = ("x'3", "x'4")


def _sink_sides(search: CaseSearch, kind: str, spec: str) -> Dict[Tuple[str, ...], bool]:
    """Whether the two vertical paths can end on the left pair or on the
    right pair of bottom stubs."""
    grid = _single(kind)
    return {sinks: search.search(standard_demand(grid, _with_sinks(spec, sinks)), 'decide').sat for sinks in (_LOW_SINKS, _HIGH_SINKS)}


def _sides_detail(outcomes: Dict[Tuple[str, ...], bool]) -> str:
    return ', '.join(f"{{{','.join(sinks)}}} {'SAT' if sat else 'UNSAT'}" for sinks, sat in outcomes.items())


# -- GADGET-SCALE CASES -- #

def check_xch22(search: CaseSearch) -> Tuple[bool, str]:
    grid = _single('XCH')
    _, registry = grid
    instance = standard_demand(grid, 'xch_22')
    result = search.search(instance, 'enumerate', projection=_uncrossed_vertical_pairing)
    found = {_uncrossed_vertical_pairing(instance, routing) for routing in result.witnesses} - {None}

    stub = partial(resolve_stub, registry)
    expected = {tuple(sorted(((stub('x1'), stub("x'3")), (stub('x2'), stub("x'4"))))),
                tuple(sorted(((stub('x3'), stub("x'1")), (stub('x4'), stub("x'2")))))}
    figure = _figure_valid('xch_shift')
    detail = f"{len(found)} vertical pairings in uncrossed solutions; figure routing {'valid' if figure else 'invalid'}"
    return found == expected and figure, detail


def check_xch12(search: CaseSearch) -> Tuple[bool, str]:
    outcomes = _sink_sides(search, 'XCH', 'xch_12')
    return outcomes == {_LOW_SINKS: False, _HIGH_SINKS: True}, _sides_detail(outcomes)


def check_lic22(search: CaseSearch) -> Tuple[bool, str]:
    outcomes = _sink_sides(search, 'LIC', 'lic_22')

    grid = _single('LIC')
    _, registry = grid
    heads = frozenset(registry.boundary['top'] + registry.boundary['left'])
    tails = frozenset(registry.boundary['bottom'] + registry.boundary['right'])
    projection = partial(_extra_path, heads, tails)
    instance = standard_demand(grid, _with_sinks('lic_22', _HIGH_SINKS))
    result = search.search(instance, 'enumerate', projection=projection)
    extra = {projection(instance, routing) for routing in result.witnesses}

    detail = _sides_detail(outcomes) + f"; extra path possible: {sorted(extra)}"
    return outcomes == {_LOW_SINKS: False, _HIGH_SINKS: True} and True not in extra, detail


def check_lic12(search: CaseSearch) -> Tuple[bool, str]:
    grid = _single('LIC')
    sides = {spec: search.search(standard_demand(grid, spec), 'decide').sat for spec in ('lic_12_left', 'lic_12_right')}
    figures = {figure_id: _figure_valid(figure_id) for figure_id in ('lic_keep_left', 'lic_keep_left_alt', 'lic_keep_right')}
    detail = ', '.join(f"{spec} {'SAT' if sat else 'UNSAT'}" for spec, sat in sides.items()) + f"; invalid figures: {sorted(k for k, ok in figures.items() if not ok)}"
    return all(sides.values()) and all(figures.values()), detail


TINY_FORMULAS = (
    CnfFormula.of(1, [(1,)]),
    CnfFormula.of(1, [(1,), (-1,)]),
    CnfFormula.of(2, [(1, -2), (2,)]),
)


def check_clause_grid(search: CaseSearch) -> Tuple[bool, str]:
    disagreements = []
    for formula in TINY_FORMULAS:
        assignment = next(formula.satisfying_assignments(), None)
        report = claim1_check(formula, assignment, policy=search.policy('decide'))
        search.record(SolveStats(nodes=report.nodes))
        if not report.agrees:
            disagreements.append(str(formula))
    return len(disagreements) == 0, f"{len(TINY_FORMULAS)} formulas, disagreements: {disagreements}"


def check_routers(search: CaseSearch) -> Tuple[bool, str]:
    locks = {kind: claim2_check(kind).holds for kind in ('IF', 'LL', 'TT')}
    reach = {kind: gadget_reachability(kind, 'c', "b'") for kind in ('YES', 'NO', 'ON')}
    detail = f"locks {locks}; c reaches b' in {sorted(k for k, ok in reach.items() if ok)}"
    return all(locks.values()) and reach == {'YES': True, 'NO': False, 'ON': False}, detail


_SWITCH_TRACKS = {
    'b':    (('a', "a'"), ('b', "b'")),
    'c':    (('a', "a'"), ('c', "c'")),
    'both': (('a', "a'"), ('b', "b'"), ('c', "c'")),
}


def check_switches(search: CaseSearch) -> Tuple[bool, str]:
    """Each switch lets the horizontal path through next to either vertical
    track; alone in the gadget, they also fit all three."""
    blocked = sorted(f"{kind}[{tracks}]" for kind in ('YES', 'NO', 'ON') for tracks, pairs in _SWITCH_TRACKS.items()
                     if gadget_routing(kind, pairs) is None)
    return len(blocked) == 0, f"blocked track combinations: {blocked}"


def check_vv(search: CaseSearch) -> Tuple[bool, str]:
    report = claim3_check()
    infeasible = sorted(pair for pair, ok in report.feasible.items() if not ok)
    return report.holds, f"infeasible track pairs {infeasible}"


def check_crossing_configurations(search: CaseSearch) -> Tuple[bool, str]:
    counts = {}
    for side in ('left', 'right'):
        graph, routing = crossing_configuration(side)
        counts[side] = len(detect_crossings(graph, routing))
    return counts == {'left': 0, 'right': 1}, f"crossings {counts}"


EXPANSION_SEED = 20
EXPANSION_SAMPLES = 100


def check_expansion(search: CaseSearch) -> Tuple[bool, str]:
    rng = random.Random(EXPANSION_SEED)
    mismatches, vacuous = [], []
    for k in range(0, EXPANSION_SAMPLES):
        instance = random_instance(rng, max_edges=rng.randint(8, 12), noncrossing=True, hub=True)
        # a 4-cycle cannot be crossed, so exempt classes have no expanded counterpart
        instance = instance.with_demands(cls._replace(crossing_exempt=False) for cls in instance.demands)
        graph = instance.graph
        if not any(graph.degree(v) == 4 for v in graph.noncrossing):
            vacuous.append(k)
            continue
        before = search.search(instance, 'decide').sat
        after = search.search(expand_instance(instance), 'decide').sat
        if before != after:
            mismatches.append(k)
    return len(mismatches) == 0 and len(vacuous) == 0, f"{EXPANSION_SAMPLES} random instances, mismatches at {mismatches}, without a non-crossing vertex at {vacuous}"


def check_mirror(search: CaseSearch) -> Tuple[bool, str]:
    automorphic = {kind: is_graph_automorphism(build_gadget(kind).graph, gadget_mirror(kind)) for kind in ('XCH', 'LIC')}

    gadget = build_gadget('LIC')
    vmap = mirror_map('LIC')
    instance = Instance(gadget.graph, [DemandClass.of(gadget.side('left'), gadget.side('right')),
                                       DemandClass.of(gadget.port('s1'), gadget.port("s'1")),
                                       DemandClass.of(gadget.port('s2'), gadget.port("s'2"))])
    mirrored = instance.with_demands(DemandClass.of([vmap[v] for v in cls.sources], [vmap[v] for v in cls.sinks], cls.count) for cls in instance.demands)

    routing = figure_routing('lic_keep_left')
    valid = validate_routing(instance, routing).valid and validate_routing(mirrored, mirror_routing(gadget, routing)).valid
    return all(automorphic.values()) and valid, f"automorphisms {automorphic}; mirrored routing {'valid' if valid else 'invalid'}"


# -- GRID-SCALE CASES -- #

def check_shift(search: CaseSearch) -> Tuple[bool, str]:
    grid = build_grid(GridSpec.uniform('LIC', 1, 3))
    _, registry = grid
    instance = standard_demand(grid, 'lic_shift')
    cuts = [registry.rows_upto(j) for j in range(1, registry.rows)]

    projection = partial(_reaches, _stubs(registry, ('y1', 'y2')), frozenset(registry.boundary['bottom']))
    result = search.search(instance, 'enumerate', cuts=cuts, projection=projection)
    reached = {projection(instance, routing) for routing in result.witnesses}
    return True not in reached, f"{len(result.witnesses)} distinct outcomes, reachable: {sorted(reached)}"


def _column_halves(grid: Tuple) -> Tuple[FrozenSet[str], FrozenSet[str]]:
    """The vertices left and right of the crossing vertices of a column of
    exchangers."""
    graph, registry = grid
    centre = graph.positions[registry.vertex(1, 1, 'a')][0]
    positions = {v: graph.positions.get(v) for v in graph.vertices}
    left = frozenset(v for v, position in positions.items() if position is not None and position[0] < centre)
    right = frozenset(v for v, position in positions.items() if position is not None and position[0] > centre)
    return left, right


def grid3_cuts(grid: Tuple) -> Tuple[FrozenSet[str], ...]:
    """Both halves of the column, and the cells above every boundary
    between two exchangers."""
    _, registry = grid
    return _column_halves(grid) + tuple(registry.rows_upto(j) for j in range(1, registry.rows))


def check_grid3(search: CaseSearch) -> Tuple[bool, str]:
    grid = build_grid(GridSpec.uniform('XCH', 1, 3))
    result = search.search(standard_demand(grid, 'xch_grid3'), 'decide', cuts=grid3_cuts(grid), engine='program', flow_check='step')
    return result.unsat, f"{result.status.value} in {result.stats.elapsed:.1f}s"


def check_directed(search: CaseSearch, max_variables: int = 2, max_clauses: int = 2) -> Tuple[bool, str]:
    """Every formula with up to ``max_variables`` variables and
    ``max_clauses`` clauses: the compiled instance is routable exactly when
    the formula is satisfiable, and the witnesses of all variants hold."""
    failures = []
    formulas = list(small_formulas(max_variables, max_clauses))
    for formula in formulas:
        instance, layout = compiled = compile_full(formula)
        result = search.search(instance, 'decide', cuts=layout.cuts(), engine='program', flow_check='step')
        if result.sat != formula.is_satisfiable():
            failures.append(str(formula))
            continue
        assignment = next(formula.satisfying_assignments(), None)
        if assignment is None:
            continue
        for variant in VARIANTS:
            try:
                witness_directed(formula, assignment, variant=variant, compiled=compiled)
            except InternalError:
                failures.append(f"{formula} [{variant}]")
    return len(failures) == 0, f"{len(formulas)} formulas, failures: {failures}"


CASES: Dict[str, LemmaCase] = {case.case_id: case for case in (
    LemmaCase('L3_xch22', "XCH with two vertical and two horizontal paths: the vertical paths shift by two stubs", check_xch22),
    LemmaCase('L4_xch12', "XCH with two vertical paths from the left and one horizontal path: they end on the right", check_xch12),
    LemmaCase('L5_lic22', "LIC with two vertical paths from the left and two horizontal paths: they end on the right, with no room for another path", check_lic22),
    LemmaCase('L6_lic12', "LIC with one horizontal path keeps the vertical paths on either side", check_lic12),
    LemmaCase('L7_shift', "column of three LIC with shifted horizontal paths: the top left stubs cannot reach the bottom", check_shift),
    LemmaCase('L8_grid3', "column of three XCH: five horizontal paths and two vertical paths do not fit", check_grid3),
    LemmaCase('C1_tiny', "clause grids route their paths exactly for satisfiable formulas", check_clause_grid),
    LemmaCase('C2_routers', "IF, LL and TT keep both paths on matching tracks; only YES lets c reach b'", check_routers),
    LemmaCase('C3_vv', "VV routes every pair of tracks but b2 with a1", check_vv),
    LemmaCase('C4_switches', "YES, NO and ON let the horizontal path through next to either vertical track", check_switches),
    LemmaCase('FIG2_crossing', "two paths through a vertex: touching on the left, crossing on the right", check_crossing_configurations),
    LemmaCase('EXPANSION_EQUIV', "splitting non-crossing vertices preserves routability", check_expansion),
    LemmaCase('MIRROR_sym', "the reflection of XCH and LIC maps solutions to solutions", check_mirror),
    LemmaCase('THM2_tiny', "the acyclic instances of tiny formulas are routable exactly when the formula is satisfiable", check_directed),
)}


def run_case(case_id: str, node_budget: Optional[int] = None) -> CaseResult:
    """Run one case; ``node_budget`` caps every search it issues (the
    default budget applies when omitted)."""
    try:
        case = CASES[case_id]
    except KeyError:
        raise ValueError(hardpaths_err_header(obj_name='run_case') + f"unknown case {case_id!r}; expected one of {sorted(CASES.keys())}.")

    node_budget = default_node_budget() if node_budget is None else node_budget
    if node_budget == 0:
        return CaseResult(case_id=case_id, status=CaseStatus.INCONCLUSIVE, detail="no search budget", stats=SolveStats())

    search = CaseSearch(node_budget)
    try:
        passed, detail = case.check(search)
    except BudgetExceededError as e:
        warnings.warn(hardpaths_wng_header(obj_name=case_id) + "the case is inconclusive: a search ran out of nodes.")
        return CaseResult(case_id=case_id, status=CaseStatus.INCONCLUSIVE, detail=str(e), stats=search.stats)
    except InternalError as e:
        return CaseResult(case_id=case_id, status=CaseStatus.FAIL, detail=str(e), stats=search.stats)

    return CaseResult(case_id=case_id, status=CaseStatus.PASS if passed else CaseStatus.FAIL, detail=detail, stats=search.stats)
