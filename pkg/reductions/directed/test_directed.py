import os
import unittest

import networkx as nx

from hardpaths.editing import ArcInserter
from hardpaths.gadgets import build_gadget
from hardpaths.graphs import validate_routing
from hardpaths.reductions import CnfFormula, small_formulas
from hardpaths.reductions.directed import S1, S2, T1, T2, make_directed_layout, place_fillers
from hardpaths.reductions.directed import compile_g1, compile_full, identify_terminals, corollary_transform, wrap_arcs
from hardpaths.reductions.directed import claim5_check, check_identified, check_wrap_forcing, validate_directed
from hardpaths.reductions.directed import track_plan, witness_directed, witness_g1
from hardpaths.reductions.directed import claim1_check, claim2_check, claim3_check
from hardpaths.solver import SearchPolicy, solve, register_cuts
from hardpaths.utils import PlacementError, PreconditionError, UnsatisfiedAssignmentError


SLOW = os.environ.get('HARDPATHS_SLOW', '') == '1'

SINGLE = CnfFormula.of(1, [(1,)])
MIXED = CnfFormula.of(2, [(1, -2), (2,)])
ALL_POSITIVE = CnfFormula.of(3, [(1, 2, 3)] * 3)


def expected_filler(layout, column, row):
    """NO left of IF and LL and right of TT and VV, ON elsewhere."""
    p, n = layout.p, layout.n
    if column <= p:
        lock = row if row <= p else 2 * p + 1 - row
        return 'NO' if column < lock else 'ON'
    if column <= p + n:
        return 'ON'
    lock = n + p + (p + 1 - row if row <= p else row - p)
    return 'ON' if column < lock else 'NO'


class LayoutTest(unittest.TestCase):

    def test_arithmetic(self):
        layout = make_directed_layout(ALL_POSITIVE)
        self.assertEqual((layout.columns, layout.rows), (9, 6))
        self.assertEqual((layout.horizontal_demand, layout.vertical_demand), (6, 9))

        cells = layout.special_cells()
        self.assertEqual(len(cells), 12)
        self.assertEqual(cells[(1, 1)], 'IF')
        self.assertEqual(cells[(7, 3)], 'TT')
        self.assertEqual(cells[(1, 6)], 'LL')
        self.assertEqual(cells[(9, 6)], 'VV')
        self.assertTrue(layout.is_g1(4, 3))
        self.assertFalse(layout.is_g1(4, 4))
        self.assertEqual(layout.g1_position(5, 2), (5, 3, 1))

        self.assertRaises(ValueError, lambda: layout.g1_kind(7, 1))
        self.assertRaises(ValueError, lambda: make_directed_layout(CnfFormula.of(1, [])))

    def test_switch_row(self):
        layout = make_directed_layout(MIXED)
        self.assertEqual(layout.switch_row(1, (True, True)), 1)
        self.assertEqual(layout.switch_row(1, (False, False)), 4)
        self.assertEqual(layout.switch_row(2, (False, False)), None)


class CompileG1Test(unittest.TestCase):

    def test_cells(self):
        graph, layout = compile_g1(CnfFormula.of(2, [(1,), (-1, 2)]))
        registry = layout.registry
        self.assertEqual((registry.columns, registry.rows), (2, 4))
        self.assertEqual(registry.kind(1, 1), 'YES')
        self.assertEqual(registry.kind(2, 2), 'YES')
        self.assertEqual(registry.kind(2, 3), 'YES')
        # absent variables leave both of their rows on NO
        self.assertEqual([registry.kind(1, k) for k in (2, 3, 4)], ['NO'] * 3)
        self.assertEqual(registry.kind(2, 1), 'NO')
        self.assertTrue(nx.is_directed_acyclic_graph(graph.to_networkx()))


class PlacementTest(unittest.TestCase):

    def test_pattern(self):
        instance, layout = compile_full(ALL_POSITIVE)
        registry = layout.registry
        special = layout.special_cells()
        for c in range(1, layout.columns + 1):
            for r in range(1, layout.rows + 1):
                if (c, r) in special:
                    self.assertEqual(registry.kind(c, r), special[(c, r)])
                elif layout.is_g1(c, r):
                    self.assertEqual(registry.kind(c, r), 'G1')
                else:
                    self.assertEqual(registry.kind(c, r), expected_filler(layout, c, r), msg=(c, r))

    def test_smallest(self):
        _, layout = compile_full(SINGLE)
        registry = layout.registry
        kinds = [[registry.kind(c, r) for c in range(1, 4)] for r in (1, 2)]
        self.assertEqual(kinds, [['IF', 'G1', 'TT'], ['LL', 'ON', 'VV']])

    def test_errors(self):
        # nothing fits a boundary of single tracks on both sides
        self.assertRaises(PlacementError, lambda: place_fillers(2, 2, {}))
        # an IF alone leaves two tracks at the right end of its row
        self.assertRaises(PlacementError, lambda: place_fillers(2, 1, {(1, 1): build_gadget('IF')}))
        # a fixed cell that does not meet its neighbours
        self.assertRaises(PlacementError, lambda: place_fillers(1, 1, {(1, 1): build_gadget('NO')}))
        try:
            place_fillers(2, 1, {(1, 1): build_gadget('IF')})
        except PlacementError as error:
            self.assertIn('right boundary of row 1', str(error))


class CompileFullTest(unittest.TestCase):

    def test_structure(self):
        instance, layout = compile_full(ALL_POSITIVE)
        self.assertEqual([cls.count for cls in instance.demands], [6, 9])
        self.assertEqual([(tuple(cls.sources), tuple(cls.sinks)) for cls in instance.demands], [((S1,), (S2,)), ((T1,), (T2,))])
        self.assertTrue(nx.is_directed_acyclic_graph(instance.graph.to_networkx()))

        report = claim5_check(instance, layout)
        self.assertTrue(report.valid, msg=report.violations)
        self.assertEqual(len(instance.graph.out_edges(T1)), 9)
        self.assertEqual(len(instance.graph.in_edges(S2)), 6)

        cuts = layout.cuts()
        self.assertEqual(len(cuts), layout.columns - 1 + layout.rows - 1)
        self.assertTrue(all((S1 in U) != (T1 in U) for U in cuts))
        self.assertEqual(len(register_cuts(instance, cuts)), len(cuts))
        self.assertRaises(ValueError, lambda: make_directed_layout(SINGLE).cuts())

    def test_claim5_findings(self):
        instance, layout = compile_full(SINGLE)
        # an extra entry for the columns breaks the fan and the tightness of t1
        extra = ArcInserter([('t1-x1+', T1, layout.registry.boundary['top'][0])])(instance)
        report = claim5_check(extra, layout)
        self.assertEqual(report.checks(), ['fan', 'tightness'])

    def test_identify(self):
        instance, layout = compile_full(MIXED)
        identified = identify_terminals(instance)
        self.assertEqual(identified.graph.n_vertices, instance.graph.n_vertices - 2)
        self.assertEqual(identified.graph.n_edges, instance.graph.n_edges)
        self.assertEqual([(tuple(cls.sources), tuple(cls.sinks)) for cls in identified.demands], [((S1,), (S2,)), ((S2,), (S1,))])
        self.assertEqual(identified.metadata['variant'], 'identified')

        report = validate_directed(identified, layout)
        self.assertTrue(report.valid, msg=report.violations)
        self.assertTrue(check_identified(identified, layout).valid)

        # the transforms only apply to the four-terminal instance
        self.assertRaises(PreconditionError, lambda: identify_terminals(identified))
        self.assertRaises(PreconditionError, lambda: corollary_transform(identified))

    def test_corollary(self):
        instance, layout = compile_full(MIXED)
        transformed = corollary_transform(instance)
        arcs = wrap_arcs(instance)
        self.assertEqual(len(arcs), layout.columns - 1)
        self.assertFalse(transformed.graph.has_vertex(T1))
        self.assertFalse(transformed.graph.has_vertex(T2))
        self.assertEqual([cls.count for cls in transformed.demands], [layout.horizontal_demand, 1])
        self.assertEqual(transformed.metadata['wrap_arcs'], [e for e, _, _ in arcs])

        report = check_wrap_forcing(transformed, layout)
        self.assertTrue(report.valid, msg=report.violations)

        # a second way back to the left defeats the forcing
        top, bottom = instance.metadata['top'], instance.metadata['bottom']
        shortcut = ArcInserter([('shortcut', bottom[-1], top[0])])(transformed)
        self.assertIn('wrap-forcing', check_wrap_forcing(shortcut, layout).checks())
        self.assertRaises(PreconditionError, lambda: check_wrap_forcing(instance, layout))


class WitnessTest(unittest.TestCase):

    def check_occupancy(self, instance, layout, routing):
        registry = layout.registry
        for c in range(1, layout.columns + 1):
            for r in range(1, layout.rows + 1):
                edges = registry.cell_edges(c, r)
                touching = [path.demand for path in routing if len(edges.intersection(path.edges)) > 0]
                self.assertEqual(sorted(touching), [0, 1], msg=(c, r))

    def test_full(self):
        for formula, assignment in ((SINGLE, (True,)), (MIXED, (True, True)), (CnfFormula.of(2, [(-1, 2), (-2,)]), (False, False))):
            instance, layout = compile_full(formula)
            routing = witness_directed(formula, assignment, compiled=(instance, layout), verify=False)
            self.assertTrue(validate_routing(instance, routing).valid)
            self.assertEqual(len(routing), layout.horizontal_demand + layout.vertical_demand)
            self.check_occupancy(instance, layout, routing)

            # the row of each variable leaves its IF on the lower track when the variable is true
            plan = track_plan(layout, assignment)
            for i, value in enumerate(assignment, start=1):
                self.assertEqual(plan.horizontal[(i, i)][1], 2 if value else 1)
                self.assertEqual(plan.vertical[(i, i)][1], 1 if value else 2)

    def test_variants(self):
        compiled = compile_full(MIXED)
        for variant in ('identified', 'corollary'):
            routing = witness_directed(MIXED, (True, True), variant=variant, compiled=compiled)
            if variant == 'identified':
                transformed = identify_terminals(compiled[0])
                self.assertEqual(len(routing), 2 * 2 + 2 * 2 + 2)
            else:
                transformed = corollary_transform(compiled[0])
                self.assertEqual(len(routing), 2 * 2 + 1)
                # the single path takes every wrap arc
                self.assertTrue(set(transformed.metadata['wrap_arcs']) <= set(routing[-1].edges))
            self.assertTrue(validate_routing(transformed, routing).valid)

        self.assertRaises(ValueError, lambda: witness_directed(MIXED, (True, True), variant='planar'))

    def test_rejections(self):
        self.assertRaises(UnsatisfiedAssignmentError, lambda: witness_directed(SINGLE, (False,)))
        self.assertRaises(UnsatisfiedAssignmentError, lambda: witness_directed(MIXED, (False, False)))
        self.assertRaises(ValueError, lambda: witness_directed(MIXED, (True,)))
        self.assertRaises(UnsatisfiedAssignmentError, lambda: witness_g1(MIXED, (True, False)))

    def test_g1(self):
        instance, routing = witness_g1(MIXED, (True, True))
        self.assertTrue(validate_routing(instance, routing).valid)
        self.assertEqual(instance.metadata['rows'], [2, 4])
        self.assertEqual(len(routing), MIXED.n_clauses + MIXED.n_variables)


class ClaimTest(unittest.TestCase):

    def test_claim1(self):
        # satisfiable: one clause over two variables
        report = claim1_check(CnfFormula.of(2, [(1, 2)]))
        self.assertTrue(report.exists)
        self.assertTrue(report.agrees)
        self.assertIn((1, 4), report.choices)

        # unsatisfiable
        report = claim1_check(CnfFormula.of(1, [(1,), (-1,)]))
        self.assertFalse(report.exists)
        self.assertTrue(report.agrees)
        self.assertEqual(report.choices, ())

        # assignment-guided
        report = claim1_check(MIXED, assignment=(True, True))
        self.assertTrue(report.agrees)
        self.assertEqual(report.choices, ((2, 4),))
        self.assertIsNotNone(report.routing)

    def test_locks(self):
        for kind in ('IF', 'LL', 'TT'):
            report = claim2_check(kind)
            self.assertTrue(report.holds, msg=report.feasible)
        report = claim3_check()
        self.assertTrue(report.holds, msg=report.feasible)
        self.assertFalse(report.feasible[(1, 2)])
        self.assertRaises(ValueError, lambda: claim2_check('VV'))

    def test_one_variable_equisatisfiability(self):
        for formula in small_formulas(1, 2):
            instance, layout = compile_full(formula)
            result = solve(instance, SearchPolicy(mode='decide', engine='program'), cuts=layout.cuts())
            self.assertTrue(result.conclusive)
            self.assertEqual(result.sat, formula.is_satisfiable(), msg=str(formula))

    @unittest.skipUnless(SLOW, "set HARDPATHS_SLOW=1 to run the acceptance-scale checks")
    def test_tiny_equisatisfiability(self):
        for formula in small_formulas(2, 2):
            instance, layout = compile_full(formula)
            result = solve(instance, SearchPolicy(mode='decide', engine='program', flow_check='step'), cuts=layout.cuts())
            self.assertTrue(result.conclusive)
            self.assertEqual(result.sat, formula.is_satisfiable(), msg=str(formula))

        # the search agrees on the smallest formulas
        for formula in small_formulas(1, 2):
            instance, layout = compile_full(formula)
            result = solve(instance, SearchPolicy(mode='decide', flow_check='step'), cuts=layout.cuts())
            self.assertTrue(result.conclusive)
            self.assertEqual(result.sat, formula.is_satisfiable(), msg=str(formula))


if __name__ == '__main__':
    unittest.main()
