import json
import os
import random
import tempfile
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from hardpaths.gadgets import build_gadget, figure_routing
from hardpaths.graphs import DemandClass, Instance, random_instance
from hardpaths.grids import build_grid
from hardpaths.reductions.cnf import CnfFormula, random_3cnf
from hardpaths.reductions.directed import compile_full
from hardpaths.solver import SearchPolicy, solve
from hardpaths.utils import DimacsParseError
from .dimacs import parse_dimacs, format_dimacs
from .documents import instance_to_document, instance_from_document, routing_to_document, routing_from_document
from .documents import result_to_document, result_from_document, write_document, read_document, document_kind
from .dot import PALETTE, registry_clusters, layout_clusters, export_dot


def through_json(document):
    return json.loads(json.dumps(document))


class DimacsTest(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(parse_dimacs("p cnf 1 1\n1 0"), CnfFormula.of(1, [(1,)]))
        self.assertEqual(parse_dimacs("p cnf 2 2\n1 -2 0\n-1 2 0"), CnfFormula.of(2, [(1, -2), (-1, 2)]))

        # comments, clauses spread over lines, and the end marker
        text = "c a comment\np cnf 3 2\n1 -2\n3 0 -1 0\n%\n0\n"
        self.assertEqual(parse_dimacs(text), CnfFormula.of(3, [(1, -2, 3), (-1,)]))

    def test_errors(self):
        self.assertRaises(DimacsParseError, lambda: parse_dimacs("p cnf 2 2\n1 -2 0"))
        self.assertRaises(DimacsParseError, lambda: parse_dimacs("p cnf 1 1\n0"))
        self.assertRaises(DimacsParseError, lambda: parse_dimacs("p cnf 1 1\n2 0"))
        self.assertRaises(DimacsParseError, lambda: parse_dimacs("1 0"))
        self.assertRaises(DimacsParseError, lambda: parse_dimacs("p cnf 2 1\n1 2"))
        self.assertRaises(DimacsParseError, lambda: parse_dimacs("p cnf 2 1\n1 x 0"))
        self.assertRaises(DimacsParseError, lambda: parse_dimacs("p dnf 2 1\n1 0"))
        self.assertRaises(DimacsParseError, lambda: parse_dimacs("p cnf 1 1\np cnf 1 1\n1 0"))
        self.assertRaises(ValueError, lambda: parse_dimacs(""))

    @given(seed=st.integers(min_value=0, max_value=10 ** 6), n_clauses=st.integers(min_value=1, max_value=8))
    @settings(max_examples=25, deadline=None)
    def test_format_is_read_back(self, seed, n_clauses):
        formula = random_3cnf(n_clauses, 4, random.Random(seed))
        self.assertEqual(parse_dimacs(format_dimacs(formula)), formula)


class DocumentTest(unittest.TestCase):

    def assertSameInstance(self, first, second):
        self.assertEqual(first.graph, second.graph)
        self.assertEqual(dict(first.graph.positions), dict(second.graph.positions))
        self.assertEqual(first.demands, second.demands)
        self.assertEqual(first.metadata, second.metadata)

    def test_gadget_instance(self):
        gadget = build_gadget('LIC')
        instance = Instance(gadget.graph, [DemandClass.of(gadget.side('top'), gadget.side('bottom'), count=2, name='vertical'),
                                           DemandClass.of(gadget.side('left'), gadget.side('right'), crossing_exempt=True)])
        document = through_json(instance_to_document(instance))
        self.assertEqual(document_kind(document), 'instance')
        self.assertSameInstance(instance_from_document(document), instance)

    def test_compiled_instance(self):
        instance, layout = compile_full(CnfFormula.of(1, [(1,)]))
        document = through_json(instance_to_document(instance, layout.registry))
        self.assertEqual(document['layout']['columns'], layout.columns)
        self.assertEqual(len(document['layout']['cells']), layout.columns * layout.rows)
        self.assertSameInstance(instance_from_document(document), instance)

    @given(seed=st.integers(min_value=0, max_value=10 ** 6), directed=st.booleans())
    @settings(max_examples=30, deadline=None)
    def test_random_instances(self, seed, directed):
        instance = random_instance(random.Random(seed), directed=directed)
        self.assertSameInstance(instance_from_document(through_json(instance_to_document(instance))), instance)

    def test_routings_and_results(self):
        routing = figure_routing('xch_shift')
        self.assertEqual(routing_from_document(through_json(routing_to_document(routing))), routing)

        gadget = build_gadget('XCH')
        instance = Instance(gadget.graph, [DemandClass.of(gadget.side('top'), gadget.side('bottom'), count=2)])
        result = solve(instance, SearchPolicy(mode='witness'))
        read = result_from_document(through_json(result_to_document(result)))
        self.assertEqual(read.status, result.status)
        self.assertEqual(read.stats, result.stats)
        self.assertEqual(list(read.witnesses), list(result.witnesses))

    def test_headers(self):
        document = routing_to_document(figure_routing('xch_shift'))
        self.assertRaises(ValueError, lambda: instance_from_document(document))
        self.assertRaises(ValueError, lambda: routing_from_document(dict(document, version=2)))
        self.assertRaises(ValueError, lambda: document_kind({'format': 'other/instance'}))

    def test_files(self):
        routing = figure_routing('lic_keep_right')
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'routing.json')
            write_document(path, routing_to_document(routing))
            write_document(path, routing_to_document(routing))
            self.assertEqual(os.listdir(directory), ['routing.json'])
            self.assertEqual(routing_from_document(read_document(path)), routing)

            broken = os.path.join(directory, 'broken.json')
            with open(broken, 'w') as fp:
                fp.write('{')
            self.assertRaises(ValueError, lambda: read_document(broken))


class DotTest(unittest.TestCase):

    def test_gadget(self):
        text = export_dot(build_gadget('XCH'))
        self.assertTrue(text.startswith('graph "G" {'))
        self.assertEqual(text.count('style=bold'), 4)
        self.assertEqual(text.count('shape=box'), 12)
        self.assertEqual(text, export_dot(build_gadget('XCH')))

        directed = export_dot(build_gadget('VV'))
        self.assertTrue(directed.startswith('digraph'))
        self.assertIn(' -> ', directed)
        self.assertNotIn('style=bold', directed)

    def test_routing_overlay(self):
        text = export_dot(build_gadget('XCH'), routing=figure_routing('xch_shift'))
        used = {colour for colour in PALETTE if f"color={colour}" in text}
        self.assertEqual(used, {PALETTE[0], PALETTE[1]})

    def test_clusters(self):
        graph, registry = build_grid([['XCH', 'LIC']])
        text = export_dot(Instance(graph), clusters=registry_clusters(registry))
        self.assertIn('subgraph cluster_1_1 {', text)
        self.assertIn('subgraph cluster_2_1 {', text)
        # every vertex is written once
        nodes = [line.strip() for line in text.splitlines() if line.strip().startswith('"') and ' -- ' not in line]
        self.assertEqual(len(nodes), graph.n_vertices)


if __name__ == '__main__':
    unittest.main()
