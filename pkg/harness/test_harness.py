import contextlib
import io
import json
import os
import random
import unittest
import warnings

from hardpaths.gadgets import TABLES, build_gadget
from hardpaths.grids import GridSpec, build_grid
from hardpaths.solver import SolveStats
from . import FAST_CASES, FULL_CASES, CASES, HarnessProfile, resolve_profilespec
from . import CaseStatus, CaseResult, HarnessSummary, OUT_OF_SCOPE_NOTE, run_case, run_all, CASES_BY_KIND, mutate_gadget, mutation_check
from .cases import CaseSearch, grid3_cuts, check_directed


SLOW = os.environ.get('HARDPATHS_SLOW', '') == '1'

CASE_BUDGET = 10 ** 6

MUTATION_SEED = 10


def summary_of(*statuses):
    return HarnessSummary(profile='custom', node_budget=1,
                          results=tuple(CaseResult(case_id=f"case{k}", status=status, detail='', stats=SolveStats(nodes=k)) for k, status in enumerate(statuses)))


class ProfileTest(unittest.TestCase):

    def test_resolution(self):
        fast = resolve_profilespec('fast')
        self.assertEqual(fast.cases, FAST_CASES)
        self.assertEqual(resolve_profilespec('FULL').cases, FULL_CASES)
        self.assertTrue(set(FAST_CASES) < set(FULL_CASES))
        self.assertEqual(set(FULL_CASES), set(CASES.keys()))

        custom = HarnessProfile(name='custom', cases=('C3_vv',), node_budget=0)
        self.assertEqual(resolve_profilespec(custom), custom)

        self.assertRaises(ValueError, lambda: resolve_profilespec('medium'))
        self.assertRaises(TypeError, lambda: resolve_profilespec(3))
        self.assertRaises(ValueError, lambda: resolve_profilespec(custom._replace(node_budget=-1)))

    def test_budget_from_environment(self):
        previous = os.environ.get('HARDPATHS_BUDGET')
        os.environ['HARDPATHS_BUDGET'] = '1e4'
        try:
            self.assertEqual(resolve_profilespec('fast').node_budget, 10 ** 4)
        finally:
            if previous is None:
                del os.environ['HARDPATHS_BUDGET']
            else:
                os.environ['HARDPATHS_BUDGET'] = previous


class RunCaseTest(unittest.TestCase):

    def test_zero_budget(self):
        for case_id in FULL_CASES:
            result = run_case(case_id, 0)
            self.assertEqual(result.status, CaseStatus.INCONCLUSIVE, msg=case_id)
            self.assertEqual(result.stats.nodes, 0)
        self.assertRaises(ValueError, lambda: run_case('L99', CASE_BUDGET))

    def test_gadget_cases(self):
        for case_id in ('L4_xch12', 'L6_lic12', 'C2_routers', 'C3_vv', 'C4_switches', 'FIG2_crossing', 'MIRROR_sym', 'EXPANSION_EQUIV'):
            result = run_case(case_id, CASE_BUDGET)
            self.assertEqual(result.status, CaseStatus.PASS, msg=f"{case_id}: {result.detail}")

        # the sink-side case searches twice
        self.assertGreater(run_case('L4_xch12', CASE_BUDGET).stats.nodes, 0)

    def test_grid3(self):
        grid = build_grid(GridSpec.uniform('XCH', 1, 3))
        _, registry = grid
        left, right, *rows = grid3_cuts(grid)
        self.assertEqual(len(rows), 2)
        self.assertTrue(set(registry.boundary['left']) <= left)
        self.assertTrue(set(registry.boundary['right']) <= right)
        self.assertEqual(left & right, frozenset())

        result = run_case('L8_grid3', CASE_BUDGET)
        self.assertEqual(result.status, CaseStatus.PASS, msg=result.detail)

    def test_directed_one_variable(self):
        passed, detail = check_directed(CaseSearch(CASE_BUDGET), max_variables=1)
        self.assertTrue(passed, msg=detail)
        self.assertTrue(detail.startswith("6 formulas"))

    @unittest.skipUnless(SLOW, "set HARDPATHS_SLOW=1 to run the enumeration cases")
    def test_enumeration_cases(self):
        for case_id in ('L3_xch22', 'L5_lic22', 'C1_tiny'):
            result = run_case(case_id)
            self.assertEqual(result.status, CaseStatus.PASS, msg=f"{case_id}: {result.detail}")

    @unittest.skipUnless(SLOW, "set HARDPATHS_SLOW=1 to run the grid-scale cases")
    def test_grid_cases(self):
        for case_id in ('L7_shift', 'THM2_tiny'):
            result = run_case(case_id)
            self.assertEqual(result.status, CaseStatus.PASS, msg=f"{case_id}: {result.detail}")


class SummaryTest(unittest.TestCase):

    def test_exit_status(self):
        self.assertEqual(summary_of().exit_status, 0)
        self.assertEqual(summary_of(CaseStatus.PASS, CaseStatus.PASS).exit_status, 0)
        self.assertEqual(summary_of(CaseStatus.PASS, CaseStatus.INCONCLUSIVE).exit_status, 3)
        self.assertEqual(summary_of(CaseStatus.INCONCLUSIVE, CaseStatus.FAIL).exit_status, 1)

    def test_reports(self):
        summary = summary_of(CaseStatus.PASS, CaseStatus.FAIL)
        document = json.loads(summary.to_json())
        self.assertEqual(document['format'], 'hardpaths/summary')
        self.assertEqual(document['version'], 1)
        self.assertEqual([case['status'] for case in document['cases']], ['PASS', 'FAIL'])
        self.assertEqual(document['cases'][1]['stats']['nodes'], 1)
        self.assertEqual(document['exit_status'], 1)

        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            summary.show()
        self.assertIn('case1', out.getvalue())
        self.assertIn(OUT_OF_SCOPE_NOTE, out.getvalue())


class RunAllTest(unittest.TestCase):

    def test_parallel_width(self):
        profile = HarnessProfile(name='trio', cases=('FIG2_crossing', 'C3_vv', 'L6_lic12'), node_budget=CASE_BUDGET)
        serial = run_all(profile)
        parallel = run_all(profile, workers=2)
        self.assertEqual([r.case_id for r in serial.results], list(profile.cases))
        self.assertEqual([(r.case_id, r.status, r.detail) for r in serial.results], [(r.case_id, r.status, r.detail) for r in parallel.results])
        self.assertEqual(serial.exit_status, 0)
        self.assertRaises(ValueError, lambda: run_all(profile, workers=0))

    def test_zero_budget(self):
        summary = run_all(resolve_profilespec('fast')._replace(node_budget=0))
        self.assertEqual(summary.exit_status, 3)

    @unittest.skipUnless(SLOW, "set HARDPATHS_SLOW=1 to run the fast profile")
    def test_fast_profile(self):
        self.assertEqual(run_all('fast', workers=2).exit_status, 0)


class MutationTest(unittest.TestCase):

    def test_mutate_gadget(self):
        n_edges = build_gadget('VV').graph.n_edges
        self.assertEqual(mutate_gadget('VV', 0).graph.n_edges, n_edges - 1)
        self.assertEqual(build_gadget('VV').graph.n_edges, n_edges)

    def test_switch_edge(self):
        # without p2 -> p5, c no longer reaches b' in YES
        index = TABLES['YES'].edges.index(('p2', 'p5'))
        broken = mutation_check('YES', [index], CASE_BUDGET)
        self.assertEqual(list(broken.keys()), [index])
        self.assertIn('C2_routers', broken[index])

        # the table is restored afterwards
        self.assertEqual(run_case('C2_routers', CASE_BUDGET).status, CaseStatus.PASS)

    def test_sampled_edges(self):
        # three random edges of every table; each removal must break a case
        rng = random.Random(MUTATION_SEED)
        samples = {kind: sorted(rng.sample(range(0, len(table.edges)), 3)) for kind, table in TABLES.items()}
        self.assertEqual(set(samples.keys()), set(CASES_BY_KIND.keys()))
        self.assertGreaterEqual(sum(len(indices) for indices in samples.values()), 20)

        for kind, indices in samples.items():
            broken = mutation_check(kind, indices, CASE_BUDGET, stop_at_first=True)
            for index in indices:
                self.assertGreater(len(broken[index]), 0, msg=f"{kind} without {TABLES[kind].edges[index]}")

        for case_id in ('C2_routers', 'C3_vv', 'C4_switches', 'MIRROR_sym'):
            self.assertEqual(run_case(case_id, CASE_BUDGET).status, CaseStatus.PASS, msg=case_id)

    def test_inconclusive_is_not_broken(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            self.assertEqual(mutation_check('VV', [7], 0), {7: []})


if __name__ == '__main__':
    unittest.main()
