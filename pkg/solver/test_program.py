import random
import unittest
import warnings

from hardpaths.graphs import RotationGraphBuilder, DemandClass, Instance, grid_graph, grid_vertex, random_instance, validate_routing
from hardpaths.solver import SearchPolicy, SolveStatus, solve, resolve_policyspec, extract_routing, run_program


PROGRAM = SearchPolicy(mode='witness', engine='program')


def star(noncrossing: bool) -> Instance:
    builder = RotationGraphBuilder()
    builder.add_vertex('v', position=(0.0, 0.0))
    for name, position in (('e', (1.0, 0.0)), ('n', (0.0, 1.0)), ('w', (-1.0, 0.0)), ('s', (0.0, -1.0))):
        builder.add_vertex(name, position=position)
        builder.add_edge(f"v-{name}", 'v', name)
    if noncrossing:
        builder.set_noncrossing({'v'})
    return builder.build()


class ProgramPolicyTest(unittest.TestCase):

    def test_fields(self):
        self.assertEqual(resolve_policyspec({'engine': 'program', 'time_limit': 5}).engine, 'program')
        self.assertRaises(ValueError, lambda: resolve_policyspec({'engine': 'lp'}))
        self.assertRaises(ValueError, lambda: resolve_policyspec({'engine': 'program', 'mode': 'enumerate'}))
        self.assertRaises(ValueError, lambda: resolve_policyspec({'time_limit': 0}))


class ProgramTest(unittest.TestCase):

    def test_crossing_star(self):
        demands = [DemandClass.of('w', 'e'), DemandClass.of('s', 'n')]

        result = solve(Instance(star(False), demands), PROGRAM)
        self.assertEqual(result.status, SolveStatus.SAT)
        self.assertTrue(validate_routing(Instance(star(False), demands), result.witnesses[0]).valid)

        self.assertEqual(run_program(Instance(star(True), demands)).status, SolveStatus.UNSAT)
        self.assertTrue(solve(Instance(star(True), demands), PROGRAM._replace(mode='decide')).unsat)

        # an exempt class may cross
        exempt = [DemandClass.of('w', 'e'), DemandClass.of('s', 'n', crossing_exempt=True)]
        self.assertTrue(solve(Instance(star(True), exempt), PROGRAM).sat)

    def test_same_class_turns(self):
        # the flow may pair the four edges either way; the paths must turn
        instance = Instance(star(True), [DemandClass.of(('w', 's'), ('e', 'n'), count=2)])
        outcome = run_program(instance)
        self.assertEqual(outcome.status, SolveStatus.SAT)
        self.assertIsNotNone(outcome.routing)
        self.assertTrue(validate_routing(instance, outcome.routing).valid)

    def test_decide_and_cuts(self):
        corner, opposite = grid_vertex(0, 0), grid_vertex(2, 2)
        two = Instance(grid_graph(3, 3), [DemandClass.of(corner, opposite, count=2)])
        three = Instance(grid_graph(3, 3), [DemandClass.of(corner, opposite, count=3)])
        cuts = [{corner}, {grid_vertex(x, y) for x in range(0, 3) for y in range(0, 2)}]

        result = solve(two, PROGRAM._replace(mode='decide'), cuts=cuts)
        self.assertTrue(result.sat)
        self.assertEqual(result.witnesses, ())
        self.assertTrue(solve(three, PROGRAM, cuts=cuts).unsat)

        # no classes, no paths
        self.assertEqual(list(solve(Instance(grid_graph(2, 2), []), PROGRAM).witnesses[0]), [])

    def test_extract_routing(self):
        graph = star(False)
        instance = Instance(graph, [DemandClass.of('w', 'e'), DemandClass.of('s', 'n')])
        routing = extract_routing(instance, [[('v-w', 'w', 'v'), ('v-e', 'v', 'e')], [('v-s', 's', 'v'), ('v-n', 'v', 'n')]])
        self.assertEqual([path.edges for path in routing], [('v-w', 'v-e'), ('v-s', 'v-n')])
        self.assertEqual([path.start for path in routing], ['w', 's'])

        # a class without arcs cannot be routed
        self.assertIsNone(extract_routing(instance, [[('v-w', 'w', 'v'), ('v-e', 'v', 'e')], []]))

    def test_agrees_with_search(self):
        rng = random.Random(11)
        for trial in range(0, 60):
            instance = random_instance(rng, max_edges=rng.randint(8, 12), directed=(trial % 3 == 2))
            expected = solve(instance, 'decide')
            self.assertTrue(expected.conclusive)
            with warnings.catch_warnings():
                warnings.simplefilter('ignore')
                result = solve(instance, PROGRAM)
            self.assertEqual(result.status, expected.status)
            if result.sat:
                self.assertTrue(validate_routing(instance, result.witnesses[0]).valid)


if __name__ == '__main__':
    unittest.main()
