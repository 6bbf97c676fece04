import unittest

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from hardpaths.gadgets import build_gadget, FIGURES, figure_routing
from hardpaths.graphs import Path, Routing, delta, validate_routing
from hardpaths.grids import GridSpec, build_grid, cell, as_gadget, resolve_cellspec, standard_demand, DemandTerm
from hardpaths.utils import UnknownVertexError


class BuildGridTest(unittest.TestCase):

    def test_single_cell(self):
        gadget = build_gadget('XCH')
        graph, registry = build_grid([['XCH']])

        self.assertEqual(graph.n_vertices, gadget.graph.n_vertices)
        self.assertEqual(graph.n_edges, gadget.graph.n_edges)
        self.assertEqual(len(graph.noncrossing), len(gadget.graph.noncrossing))
        self.assertEqual(registry.boundary['top'], ('x1', 'x2', 'x3', 'x4'))
        self.assertEqual(registry.boundary['bottom'], ("x'1", "x'2", "x'3", "x'4"))
        self.assertEqual(registry.boundary['left'], ('y1', 'y2'))
        self.assertEqual(registry.boundary['right'], ("y'1", "y'2"))
        self.assertEqual(registry.vertex(1, 1, "t'2"), "y'2")

        # the cell is the whole graph
        view = cell(graph, registry, 1, 1)
        self.assertEqual(set(view.vertices.values()), set(graph.vertices))
        self.assertEqual(set(view.edges.values()), set(graph.edges.keys()))
        self.assertRaises(ValueError, lambda: cell(graph, registry, 2, 1))

    def test_cut_sizes(self):
        graph, registry = build_grid(GridSpec.uniform('XCH', 2, 3))
        self.assertEqual(len(registry.vertical(1)), 6)
        self.assertEqual(len(registry.horizontal(1)), 8)
        self.assertEqual(len(registry.horizontal(2)), 8)
        self.assertRaises(ValueError, lambda: registry.vertical(2))
        self.assertRaises(ValueError, lambda: registry.horizontal(3))
        self.assertRaises(ValueError, lambda: registry.vertical(0))

    def test_degree_audit(self):
        graph, registry = build_grid(GridSpec.uniform('LIC', 3, 3))
        stubs = {v for side in registry.boundary.values() for v in side}
        for v in graph.vertices:
            self.assertEqual(graph.degree(v), 1 if v in stubs else 4, msg=v)
        self.assertEqual(sum(graph.degree(v) for v in graph.vertices), 2 * graph.n_edges)

        # stitching preserves the non-crossing vertices of every cell
        self.assertEqual(len(graph.noncrossing), 9 * len(build_gadget('LIC').graph.noncrossing))

    def test_cells_are_disjoint(self):
        graph, registry = build_grid([['XCH', 'LIC']])
        self.assertEqual(registry.cell_vertices(1, 1) & registry.cell_vertices(2, 1), frozenset())
        self.assertNotEqual(registry.vertex(1, 1, 'a'), registry.vertex(2, 1, 'a'))
        self.assertEqual(registry.locate(registry.vertex(2, 1, 'a')), (2, 1))
        self.assertEqual(registry.kind(2, 1), 'LIC')

        # the two cells share exactly the stitched edges
        self.assertEqual(registry.cell_edges(1, 1) & registry.cell_edges(2, 1), frozenset(registry.vertical(1)))

        # stubs on a stitched side have no vertex
        self.assertRaises(UnknownVertexError, lambda: registry.vertex(1, 1, "t'1"))
        self.assertEqual(registry.edge(1, 1, "u4-t'1"), registry.edge(2, 1, 'u1-t1'))

    def test_cuts_are_deltas(self):
        graph, registry = build_grid(GridSpec.uniform('XCH', 3, 2))
        for i in (1, 2):
            self.assertEqual(delta(graph, registry.columns_upto(i)).edges, frozenset(registry.vertical(i)))
        self.assertEqual(delta(graph, registry.rows_upto(1)).edges, frozenset(registry.horizontal(1)))

    @settings(max_examples=10, deadline=None)
    @given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=3))
    def test_cut_sizes_property(self, columns, rows):
        graph, registry = build_grid(GridSpec.uniform('XCH', columns, rows))
        for i in range(1, columns):
            self.assertEqual(len(registry.vertical(i)), 2 * rows)
        for j in range(1, rows):
            self.assertEqual(len(registry.horizontal(j)), 4 * columns)
        self.assertEqual(graph.n_vertices, 16 * columns * rows + 8 * columns + 4 * rows)

    def test_directed_grids(self):

        # sub-case 1: switches stack into an acyclic grid
        graph, registry = build_grid([['NO', 'YES'], ['YES', 'NO']])
        self.assertTrue(graph.directed)
        self.assertTrue(nx.is_directed_acyclic_graph(graph.to_networkx()))
        for i in (1,):
            cut = delta(graph, registry.columns_upto(i))
            self.assertEqual(len(cut.incoming), 0)

        # sub-case 2: one track against two
        self.assertRaises(ValueError, lambda: build_grid([['NO', 'ON']]))

        # sub-case 3: a composite cell
        pair_graph, pair_registry = build_grid([['YES'], ['NO']])
        pair = as_gadget(pair_graph, pair_registry, kind='PAIR', withheld=('x1',))
        self.assertEqual(pair.side('top'), ('x2',))
        self.assertEqual(pair.side('left'), ('y1', 'y2'))
        self.assertEqual(pair.audit(), [])
        graph, registry = build_grid([['ON', pair]])
        self.assertEqual(registry.kind(2, 1), 'PAIR')
        self.assertRaises(UnknownVertexError, lambda: as_gadget(pair_graph, pair_registry, withheld=('z1',)))

    def test_invalid_layouts(self):
        self.assertRaises(ValueError, lambda: GridSpec([]))
        self.assertRaises(ValueError, lambda: GridSpec([['XCH', 'XCH'], ['XCH']]))
        self.assertRaises(ValueError, lambda: GridSpec([['XCH', 'YES']]))
        self.assertRaises(ValueError, lambda: GridSpec([['XCH', 'FOO']]))
        self.assertRaises(TypeError, lambda: resolve_cellspec(3))


class StandardDemandTest(unittest.TestCase):

    def test_lemma_specs(self):

        # sub-case 1: five horizontal paths and two vertical ones on three XCH
        graph, registry = build_grid(GridSpec.uniform('XCH', 1, 3))
        instance = standard_demand((graph, registry), 'xch_grid3')
        self.assertEqual([cls.count for cls in instance.demands], [5, 1, 1])
        self.assertEqual(instance.demands[0].sources, frozenset(registry.boundary['left']))
        self.assertEqual(instance.demands[1].sources, frozenset({'x1'}))
        self.assertEqual(instance.demands[2].sinks, frozenset({"x'2"}))

        # sub-case 2: two and two paths on a single XCH
        grid = build_grid([['XCH']])
        instance = standard_demand(grid, 'xch_22')
        self.assertEqual([cls.count for cls in instance.demands], [2, 2])
        self.assertEqual(instance.demands[0].sources, frozenset({'x1', 'x2', 'x3', 'x4'}))

        # sub-case 3: nothing asked
        self.assertEqual(len(standard_demand(grid, []).demands), 0)

    def test_unresolved_names(self):
        grid = build_grid([['XCH']])
        self.assertRaises(ValueError, lambda: standard_demand(grid, 'lemma99'))
        self.assertRaises(UnknownVertexError, lambda: standard_demand(grid, [DemandTerm('Z', "S'")]))
        self.assertRaises(UnknownVertexError, lambda: standard_demand(grid, [DemandTerm(('x9',), "S'")]))
        self.assertRaises(UnknownVertexError, lambda: standard_demand(grid, [DemandTerm(('q1',), "S'")]))

    def test_figures_answer_their_specs(self):
        for figure_id, figure in FIGURES.items():
            grid = build_grid([[figure.kind]])
            graph, registry = grid
            routing = Routing(Path(demand=path.demand,
                                   edges=tuple(registry.edge(1, 1, e) for e in path.edges),
                                   start=registry.vertex(1, 1, path.start)) for path in figure_routing(figure_id))
            self.assertTrue(validate_routing(standard_demand(grid, figure.spec), routing).valid, msg=figure_id)
