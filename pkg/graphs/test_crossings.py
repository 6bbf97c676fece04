import random
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from hardpaths.graphs import RotationGraphBuilder, grid_graph, grid_vertex
from hardpaths.graphs import Path, Routing, path_from_vertices, reverse_path, vertex_sequence
from hardpaths.graphs import interleaved, detect_crossings, crossing_counts, total_crossings
from hardpaths.graphs import extremities, same_extremities, uncross, is_uncrossed, crossing_order
from hardpaths.utils import PreconditionError


_LATTICE = grid_graph(4, 4)


def lattice_path(demand, *points):
    return path_from_vertices(_LATTICE, demand, [grid_vertex(x, y) for x, y in points])


def random_trails(rng: random.Random, graph, n_paths: int, max_length: int) -> Routing:
    """Edge-disjoint, vertex-simple random walks."""
    used = set()
    routing = Routing()
    for k in range(0, n_paths):
        start = rng.choice(graph.vertices)
        visited = [start]
        edges = []
        for _ in range(0, max_length):
            here = visited[-1]
            options = [e for e in graph.incident(here) if (e not in used) and (graph.other_end(e, here) not in visited)]
            if len(options) == 0:
                break
            e = rng.choice(sorted(options))
            used.add(e)
            edges.append(e)
            visited.append(graph.other_end(e, here))
        if len(edges) > 0:
            routing.append(Path(demand=k % 2, edges=tuple(edges), start=start))
    return routing


class InterleavingTest(unittest.TestCase):

    def test_interleaved(self):

        index = {'e0': 0, 'e1': 1, 'e2': 2, 'e3': 3}
        # opposite pairs separate each other
        self.assertTrue(interleaved(index, 'e0', 'e2', 'e1', 'e3'))
        self.assertTrue(interleaved(index, 'e1', 'e3', 'e2', 'e0'))
        # neighbouring pairs do not
        self.assertFalse(interleaved(index, 'e0', 'e1', 'e2', 'e3'))
        self.assertFalse(interleaved(index, 'e3', 'e0', 'e1', 'e2'))


class DetectCrossingsTest(unittest.TestCase):

    def test_star(self):

        builder = RotationGraphBuilder()
        builder.add_vertex('v', position=(0.0, 0.0))
        for name, position in (('ne', (1.0, 1.0)), ('nw', (-1.0, 1.0)), ('sw', (-1.0, -1.0)), ('se', (1.0, -1.0))):
            builder.add_vertex(name, position=position)
            builder.add_edge(name, 'v', name)
        g = builder.build()

        # the paths turn back on the same side: they touch without crossing
        routing = Routing([Path(0, ('sw', 'nw'), 'sw'), Path(1, ('se', 'ne'), 'se')])
        self.assertEqual(detect_crossings(g, routing), [])

        # the paths go straight through
        routing = Routing([Path(0, ('sw', 'ne'), 'sw'), Path(1, ('nw', 'se'), 'nw')])
        crossings = detect_crossings(g, routing)
        self.assertEqual(len(crossings), 1)
        self.assertEqual(crossings[0].vertex, 'v')

        # a path ending at the vertex crosses nothing
        routing = Routing([Path(0, ('sw', 'ne'), 'sw'), Path(1, ('nw',), 'nw')])
        self.assertEqual(detect_crossings(g, routing), [])

    def test_disjoint_paths(self):
        routing = Routing([lattice_path(0, (0, 0), (1, 0), (2, 0)), lattice_path(1, (0, 3), (1, 3))])
        self.assertEqual(detect_crossings(_LATTICE, routing), [])

    def test_symmetry_and_reversal(self):

        p = lattice_path(0, (0, 1), (1, 1), (2, 1), (3, 1))
        q = lattice_path(1, (1, 0), (1, 1), (1, 2), (2, 2), (2, 1), (2, 0))
        n = total_crossings(_LATTICE, Routing([p, q]))
        self.assertEqual(n, 2)
        self.assertEqual(total_crossings(_LATTICE, Routing([q, p])), n)
        self.assertEqual(total_crossings(_LATTICE, Routing([reverse_path(_LATTICE, p), q])), n)
        self.assertEqual(total_crossings(_LATTICE, Routing([p, reverse_path(_LATTICE, q)])), n)


class UncrossTest(unittest.TestCase):

    def test_fixpoint(self):
        routing = Routing([lattice_path(0, (0, 0), (1, 0), (2, 0)), lattice_path(1, (0, 3), (1, 3))])
        self.assertEqual(uncross(_LATTICE, routing), routing)

    def test_double_crossing(self):

        p = lattice_path(0, (0, 1), (1, 1), (2, 1), (3, 1))
        q = lattice_path(1, (1, 0), (1, 1), (1, 2), (2, 2), (2, 1), (2, 0))
        routing = Routing([p, q])
        result = uncross(_LATTICE, routing)

        self.assertTrue(max(crossing_counts(_LATTICE, result).values(), default=0) <= 1)
        self.assertEqual(result.edge_multiset(), routing.edge_multiset())
        self.assertEqual(extremities(_LATTICE, result[0]), extremities(_LATTICE, p))
        self.assertEqual(extremities(_LATTICE, result[1]), extremities(_LATTICE, q))

    def test_same_extremities(self):

        # two paths between the same corners, crossing once in the middle
        p = lattice_path(0, (0, 0), (0, 1), (1, 1), (2, 1), (2, 2))
        q = lattice_path(0, (0, 0), (1, 0), (1, 1), (1, 2), (2, 2))
        routing = Routing([p, q])
        self.assertTrue(same_extremities(_LATTICE, p, q))
        self.assertEqual(total_crossings(_LATTICE, routing), 1)
        result = uncross(_LATTICE, routing)
        self.assertEqual(total_crossings(_LATTICE, result), 0)
        self.assertEqual(result.edge_multiset(), routing.edge_multiset())

    def test_directed_graphs_are_rejected(self):
        g = grid_graph(2, 2, directed=True)
        self.assertRaises(PreconditionError, lambda: uncross(g, Routing()))

    @settings(max_examples=1000, deadline=None)
    @given(st.randoms(use_true_random=False), st.integers(min_value=2, max_value=4))
    def test_uncross_invariants(self, rng, n_paths):

        routing = random_trails(rng, _LATTICE, n_paths, max_length=10)
        result = uncross(_LATTICE, routing)

        self.assertEqual(result.edge_multiset(), routing.edge_multiset())
        self.assertEqual([p.demand for p in result], [p.demand for p in routing])
        for before, after in zip(routing, result):
            self.assertEqual(extremities(_LATTICE, before), extremities(_LATTICE, after))
            # the result is made of trails
            self.assertEqual(len(set(after.edges)), len(after.edges))
            vertex_sequence(_LATTICE, after)

        counts = crossing_counts(_LATTICE, result)
        for (i, j), n in counts.items():
            self.assertTrue(n <= 1)
            if same_extremities(_LATTICE, result[i], result[j]):
                self.assertEqual(n, 0)
        self.assertTrue(is_uncrossed(_LATTICE, result))


class CrossingOrderTest(unittest.TestCase):

    def test_single_crossed_path(self):
        routing = Routing([lattice_path(0, (1, 0), (1, 1), (1, 2)), lattice_path(1, (0, 1), (1, 1), (2, 1))])
        order = crossing_order(_LATTICE, routing, 0, 1)
        self.assertEqual(order.sequences, {0: (1,)})
        self.assertTrue(order.consistent)

    def test_same_order(self):

        # two vertical paths crossing two horizontal ones
        routing = Routing([
            lattice_path(0, (1, 0), (1, 1), (1, 2), (1, 3)),
            lattice_path(0, (2, 0), (2, 1), (2, 2), (2, 3)),
            lattice_path(1, (0, 1), (1, 1), (2, 1), (3, 1)),
            lattice_path(1, (0, 2), (1, 2), (2, 2), (3, 2)),
        ])
        order = crossing_order(_LATTICE, routing, 0, 1)
        self.assertEqual(order.sequences, {0: (2, 3), 1: (2, 3)})
        self.assertTrue(order.consistent)

        # traversing one of the vertical paths upwards reverses its sequence
        routing[1] = reverse_path(_LATTICE, routing[1])
        self.assertFalse(crossing_order(_LATTICE, routing, 0, 1).consistent)

    def test_precondition(self):
        p = lattice_path(0, (0, 1), (1, 1), (2, 1), (3, 1))
        q = lattice_path(1, (1, 0), (1, 1), (1, 2), (2, 2), (2, 1), (2, 0))
        self.assertRaises(PreconditionError, lambda: crossing_order(_LATTICE, Routing([p, q]), 0, 1))
