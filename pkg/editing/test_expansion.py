import unittest

from hardpaths.graphs import RotationGraphBuilder, DemandClass, Instance, grid_graph, grid_vertex
from hardpaths.editing import expand_noncrossing, expand_instance, NonCrossingExpander
from hardpaths.utils import UnsupportedDegreeError, PreconditionError


class ExpansionTest(unittest.TestCase):

    def test_identity(self):
        g = grid_graph(3, 3)
        self.assertEqual(expand_noncrossing(g), g)

    def test_single_vertex(self):

        g = grid_graph(3, 3, noncrossing=True)
        centre = grid_vertex(1, 1)
        self.assertEqual(g.noncrossing, frozenset({centre}))

        h = expand_noncrossing(g)
        self.assertEqual(h.n_vertices, g.n_vertices + 3)
        self.assertEqual(h.n_edges, g.n_edges + 4)
        self.assertEqual(h.noncrossing, frozenset())
        self.assertFalse(h.has_vertex(centre))

        # the corner facing the k-th edge keeps it, and sees the cycle on its two sides
        for k, e in enumerate(g.rotation[centre]):
            corner = f"{centre}#{k}"
            self.assertTrue(corner in h.edges[e])
            self.assertEqual(h.degree(corner), 3)
            self.assertEqual(h.rotation[corner][0], e)

    def test_several_vertices(self):
        g = grid_graph(4, 4, noncrossing=True)
        h = expand_noncrossing(g)
        self.assertEqual(h.n_vertices, g.n_vertices + 3 * 4)
        self.assertEqual(h.n_edges, g.n_edges + 4 * 4)
        self.assertTrue(all(h.degree(v) <= 4 for v in h.vertices))

    def test_unsupported_degree(self):
        builder = RotationGraphBuilder()
        for v in ('a', 'b', 'c'):
            builder.add_vertex(v)
        builder.add_edge('ab', 'a', 'b')
        builder.add_edge('bc', 'b', 'c')
        builder.set_noncrossing({'b'})
        self.assertRaises(UnsupportedDegreeError, lambda: expand_noncrossing(builder.build()))

    def test_demand_endpoints(self):
        g = grid_graph(3, 3, noncrossing=True)
        instance = Instance(g, [DemandClass.of(grid_vertex(1, 1), grid_vertex(0, 0))])
        self.assertRaises(PreconditionError, lambda: expand_instance(instance))

        instance = Instance(g, [DemandClass.of(grid_vertex(0, 1), grid_vertex(2, 1))])
        expanded = expand_instance(instance)
        self.assertEqual(expanded.demands, instance.demands)
        self.assertEqual(expanded.graph, NonCrossingExpander()(instance).graph)
