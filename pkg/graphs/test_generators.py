import random
import unittest

from hardpaths.graphs import HUB, grid_graph, random_instance


class RandomInstanceTest(unittest.TestCase):

    def test_reproducible(self):
        first = random_instance(random.Random(7), max_edges=9)
        second = random_instance(random.Random(7), max_edges=9)
        self.assertEqual(first.graph, second.graph)
        self.assertEqual(first.demands, second.demands)
        self.assertEqual(first.graph.n_edges, 9)

    def test_hub(self):
        rng = random.Random(3)
        for trial in range(0, 50):
            instance = random_instance(rng, max_edges=rng.randint(4, 12), noncrossing=(trial % 2 == 0), hub=True)
            graph = instance.graph
            self.assertEqual(graph.degree(HUB), 4)
            self.assertTrue(graph.is_noncrossing(HUB))
            for cls in instance.demands:
                self.assertNotIn(HUB, cls.sources | cls.sinks)

    def test_lattice_noncrossing(self):
        graph = grid_graph(3, 3, noncrossing=True)
        self.assertEqual(graph.noncrossing, frozenset((HUB,)))


if __name__ == '__main__':
    unittest.main()
