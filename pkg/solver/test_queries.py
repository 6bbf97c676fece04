import unittest

from hardpaths.graphs import RotationGraphBuilder, DemandClass, Instance, Routing, grid_graph, grid_vertex, path_from_vertices
from hardpaths.solver import SearchPolicy, solve, pairing_of, endpoint_pairings, complement_reachable, max_flow_certificate
from hardpaths.utils import UnknownVertexError, BudgetExceededError


def star(noncrossing: bool):
    builder = RotationGraphBuilder()
    builder.add_vertex('v', position=(0.0, 0.0))
    for name, position in (('e', (1.0, 0.0)), ('n', (0.0, 1.0)), ('w', (-1.0, 0.0)), ('s', (0.0, -1.0))):
        builder.add_vertex(name, position=position)
        builder.add_edge(f"v-{name}", 'v', name)
    if noncrossing:
        builder.set_noncrossing({'v'})
    return builder.build()


def pendant_square():
    builder = RotationGraphBuilder()
    for name, position in (('u0', (0.0, 0.0)), ('u1', (0.0, 1.0)), ('w0', (1.0, 0.0)), ('w1', (1.0, 1.0)),
                           ('a', (-1.0, 0.0)), ('b', (-1.0, 1.0)), ('c', (2.0, 0.0)), ('d', (2.0, 1.0))):
        builder.add_vertex(name, position=position)
    for u, v in (('a', 'u0'), ('b', 'u1'), ('u0', 'u1'), ('u0', 'w0'), ('u1', 'w1'), ('w0', 'w1'), ('w0', 'c'), ('w1', 'd')):
        builder.add_edge(f"{u}-{v}", u, v)
    return builder.build()


class PairingTest(unittest.TestCase):

    def test_pairing_of(self):
        instance = Instance(star(False), [DemandClass.of('w', 'e'), DemandClass.of('s', 'n')])
        routing = solve(instance, 'witness').witnesses[0]
        self.assertEqual(pairing_of(instance, routing), ((('w', 'e'),), (('s', 'n'),)))

        # orientation follows the demand class, not the path
        reversed_routing = Routing([path_from_vertices(instance.graph, 0, ('e', 'v', 'w')), path_from_vertices(instance.graph, 1, ('n', 'v', 's'))])
        self.assertEqual(pairing_of(instance, reversed_routing), ((('w', 'e'),), (('s', 'n'),)))

    def test_endpoint_pairings(self):

        # sub-case 1: every terminal is a leaf of a 4-cycle, so each is used
        # once and only the parallel pairing survives
        instance = Instance(pendant_square(), [DemandClass.of(('a', 'b'), ('c', 'd'), count=2)])
        self.assertEqual(endpoint_pairings(instance), {((('a', 'c'), ('b', 'd')),)})

        # on the bare 4-cycle terminals may be shared, e.g. both paths end at d
        graph = grid_graph(2, 2)
        a, b, c, d = grid_vertex(0, 0), grid_vertex(0, 1), grid_vertex(1, 0), grid_vertex(1, 1)
        pairings = endpoint_pairings(Instance(graph, [DemandClass.of((a, b), (c, d), count=2)]))
        self.assertIn((((a, c), (b, d)),), pairings)
        self.assertIn((((a, d), (b, d)),), pairings)
        self.assertNotIn((((a, d), (b, c)),), pairings)

        # sub-case 2: a non-crossing centre forbids the crossed pairing
        crossed = (('s', 'n'), ('w', 'e'))
        turned = (('s', 'e'), ('w', 'n'))
        demands = [DemandClass.of(('w', 's'), ('e', 'n'), count=2)]
        self.assertEqual(endpoint_pairings(Instance(star(False), demands)), {(crossed,), (turned,)})
        self.assertEqual(endpoint_pairings(Instance(star(True), demands)), {(turned,)})

        # sub-case 3: the policy mode is overridden
        self.assertEqual(endpoint_pairings(Instance(star(True), demands), policy='decide'), {(turned,)})

        # sub-case 4: no budget
        self.assertRaises(BudgetExceededError, lambda: endpoint_pairings(Instance(star(False), demands), policy=SearchPolicy(node_budget=1)))


class ComplementTest(unittest.TestCase):

    def test_complement_reachable(self):
        graph = star(False)
        instance = Instance(graph, [DemandClass.of('w', 'e'), DemandClass.of('s', 'n')])
        one = Routing([path_from_vertices(graph, 0, ('w', 'v', 'e'))])
        both = Routing([path_from_vertices(graph, 0, ('w', 'v', 'e')), path_from_vertices(graph, 1, ('s', 'v', 'n'))])

        self.assertTrue(complement_reachable(instance, one, {'s'}, {'n'}))
        self.assertFalse(complement_reachable(instance, one, {'w'}, {'n'}))
        self.assertFalse(complement_reachable(instance, both, {'s'}, {'n'}))
        self.assertTrue(complement_reachable(instance, both, {'s', 'n'}, {'n'}))
        self.assertRaises(UnknownVertexError, lambda: complement_reachable(instance, one, {'z'}, {'n'}))

    def test_max_flow_certificate(self):
        graph = grid_graph(3, 3)
        instance = Instance(graph, [DemandClass.of(grid_vertex(0, 0), grid_vertex(2, 2), count=3),
                                    DemandClass.of(grid_vertex(1, 0), grid_vertex(1, 2))])
        self.assertEqual(max_flow_certificate(instance, 0), 2)
        self.assertEqual(max_flow_certificate(instance, 1), 3)
        self.assertTrue(solve(instance, 'decide').unsat)
        self.assertRaises(ValueError, lambda: max_flow_certificate(instance, 2))
