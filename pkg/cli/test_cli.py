import contextlib
import io
import json
import os
import tempfile
import unittest

from hardpaths.gadgets import build_gadget
from hardpaths.graphs import DemandClass, Instance, validate_routing
from hardpaths.reductions import CnfFormula
from hardpaths.serialization import format_dimacs, instance_to_document, instance_from_document, routing_from_document
from hardpaths.serialization import result_from_document, read_document, write_document
from hardpaths.solver import SolveStatus
from .main import read_assignment, cli_main


SINGLE = CnfFormula.of(1, [(1,)])
MIXED = CnfFormula.of(2, [(1, -2), (2,)])
REGIME = CnfFormula.of(3, [(1, 2, 3), (-1, 2, -3), (1, -2, 3)])


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self._directory = tempfile.TemporaryDirectory()
        self.directory = self._directory.name

    def tearDown(self):
        self._directory.cleanup()

    def path(self, name):
        return os.path.join(self.directory, name)

    def write_formula(self, name, formula):
        path = self.path(name)
        with open(path, 'w') as fp:
            fp.write(format_dimacs(formula))
        return path

    def run_main(self, *argv):
        """The exit status and the standard output of one invocation."""
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            status = cli_main(list(argv))
        return status, out.getvalue()


class AssignmentTest(unittest.TestCase):

    def test_inline(self):
        self.assertEqual(read_assignment('1,-2', MIXED), (True, False))
        self.assertEqual(read_assignment('-1 2 0', MIXED), (False, True))
        self.assertRaises(ValueError, lambda: read_assignment('1', MIXED))
        self.assertRaises(ValueError, lambda: read_assignment('1,x', MIXED))


class CompileTest(CliTestCase):

    def test_undirected(self):
        cnf = self.write_formula('single.cnf', SINGLE)
        output = self.path('single.json')
        self.assertEqual(self.run_main('compile-undirected', cnf, '--relaxed', '-o', output)[0], 0)
        document = read_document(output)
        self.assertEqual(document['format'], 'hardpaths/instance')
        self.assertEqual(document['metadata']['q'], 18)
        self.assertEqual(document['layout']['rows'], 38)

        # outside the three-literal regime without --relaxed
        self.assertEqual(self.run_main('compile-undirected', cnf, '-o', self.path('refused.json'))[0], 2)
        self.assertFalse(os.path.exists(self.path('refused.json')))

    def test_directed(self):
        cnf = self.write_formula('mixed.cnf', MIXED)
        for flags in ((), ('--identify-terminals',), ('--corollary',)):
            status, out = self.run_main('compile-directed', cnf, *flags)
            self.assertEqual(status, 0)
            instance = instance_from_document(json.loads(out))
            self.assertTrue(instance.graph.directed)
        self.assertEqual(self.run_main('compile-directed', cnf, '--identify-terminals', '--corollary')[0], 2)

    def test_input_errors(self):
        self.assertEqual(self.run_main('compile-directed', self.path('missing.cnf'))[0], 2)
        broken = self.path('broken.cnf')
        with open(broken, 'w') as fp:
            fp.write("p cnf 2 2\n1 -2 0\n")
        self.assertEqual(self.run_main('compile-directed', broken)[0], 2)
        self.assertEqual(self.run_main('no-such-command')[0], 2)
        self.assertEqual(self.run_main()[0], 2)


class WitnessTest(CliTestCase):

    def test_directed(self):
        cnf = self.write_formula('mixed.cnf', MIXED)
        instance_path, routing_path = self.path('mixed.json'), self.path('routing.json')
        self.assertEqual(self.run_main('compile-directed', cnf, '-o', instance_path)[0], 0)
        self.assertEqual(self.run_main('witness', cnf, '1,2', '--directed', '-o', routing_path)[0], 0)
        instance = instance_from_document(read_document(instance_path))
        routing = routing_from_document(read_document(routing_path))
        self.assertTrue(validate_routing(instance, routing).valid)

        # the assignment (False, False) leaves the second clause unsatisfied
        self.assertEqual(self.run_main('witness', cnf, '-1 -2 0', '--directed')[0], 2)

    def test_undirected_from_file(self):
        cnf = self.write_formula('single.cnf', SINGLE)
        assignment = self.path('assignment.txt')
        with open(assignment, 'w') as fp:
            fp.write("1 0\n")
        instance_path, routing_path = self.path('single.json'), self.path('routing.json')
        self.assertEqual(self.run_main('compile-undirected', cnf, '--relaxed', '-o', instance_path)[0], 0)
        self.assertEqual(self.run_main('witness', cnf, assignment, '-o', routing_path)[0], 0)
        instance = instance_from_document(read_document(instance_path))
        routing = routing_from_document(read_document(routing_path))
        self.assertTrue(validate_routing(instance, routing).valid)


class SolveTest(CliTestCase):

    def setUp(self):
        super(SolveTest, self).setUp()
        gadget = build_gadget('XCH')
        instance = Instance(gadget.graph, [DemandClass.of(gadget.side('top'), gadget.side('bottom'), count=2)])
        self.instance_path = self.path('xch.json')
        write_document(self.instance_path, instance_to_document(instance))

    def test_conclusive(self):
        output = self.path('result.json')
        self.assertEqual(self.run_main('solve', self.instance_path, '--budget', '1e6', '-o', output)[0], 0)
        result = result_from_document(read_document(output))
        self.assertEqual(result.status, SolveStatus.SAT)
        self.assertEqual(len(result.witnesses), 1)

    def test_budget_exceeded(self):
        status, out = self.run_main('solve', self.instance_path, '--budget', '1')
        self.assertEqual(status, 3)
        self.assertEqual(json.loads(out)['status'], 'BUDGET_EXCEEDED')

    def test_program_engine(self):
        output = self.path('result.json')
        self.assertEqual(self.run_main('solve', self.instance_path, '--engine', 'program', '--time-limit', '60', '-o', output)[0], 0)
        result = result_from_document(read_document(output))
        self.assertEqual(result.status, SolveStatus.SAT)
        self.assertEqual(len(result.witnesses), 1)
        self.assertEqual(self.run_main('solve', self.instance_path, '--engine', 'program', '--mode', 'enumerate')[0], 2)

    def test_bad_arguments(self):
        self.assertEqual(self.run_main('solve', self.instance_path, '--budget', 'many')[0], 2)
        self.assertEqual(self.run_main('solve', self.instance_path, '--mode', 'guess')[0], 2)
        self.assertEqual(self.run_main('solve', self.instance_path, '--workers', '0')[0], 2)


class VerifyTest(CliTestCase):

    def test_case(self):
        summary = self.path('summary.json')
        status, out = self.run_main('verify', '--case', 'C3_vv', '--budget', '1e6', '--json', summary)
        self.assertEqual(status, 0)
        self.assertIn('C3_vv', out)
        with open(summary, 'r') as fp:
            document = json.load(fp)
        self.assertEqual(document['exit_status'], 0)
        self.assertEqual([case['status'] for case in document['cases']], ['PASS'])

    def test_no_budget(self):
        self.assertEqual(self.run_main('verify', '--all', '--budget', '0')[0], 3)
        self.assertEqual(self.run_main('verify', '--case', 'L3_xch22', '--budget', '0')[0], 3)

    def test_usage(self):
        self.assertEqual(self.run_main('verify', '--case', 'L99')[0], 2)
        self.assertEqual(self.run_main('verify')[0], 2)
        self.assertEqual(self.run_main('verify', '--all', '--profile', 'slow')[0], 2)


class ExportDotTest(CliTestCase):

    def test_gadget(self):
        status, out = self.run_main('export-dot', '--gadget', 'xch')
        self.assertEqual(status, 0)
        self.assertEqual(out.count('shape=box'), 12)
        self.assertEqual(self.run_main('export-dot', '--gadget', 'ABC')[0], 2)
        self.assertEqual(self.run_main('export-dot', '--gadget', 'XCH', '--clusters')[0], 2)
        self.assertEqual(self.run_main('export-dot')[0], 2)

    def test_instance_with_clusters(self):
        cnf = self.write_formula('mixed.cnf', MIXED)
        instance_path, routing_path, dot_path = self.path('mixed.json'), self.path('routing.json'), self.path('mixed.dot')
        self.run_main('compile-directed', cnf, '-o', instance_path)
        self.run_main('witness', cnf, '1,2', '--directed', '-o', routing_path)
        self.assertEqual(self.run_main('export-dot', instance_path, '--routing', routing_path, '--clusters', '-o', dot_path)[0], 0)
        with open(dot_path, 'r') as fp:
            text = fp.read()
        self.assertTrue(text.startswith('digraph'))
        # six columns and four rows of cells
        self.assertEqual(text.count('subgraph cluster_'), 24)
        self.assertIn('color=', text)


class StatsTest(CliTestCase):

    def test_undirected_formula(self):
        status, out = self.run_main('stats', self.write_formula('regime.cnf', REGIME))
        self.assertEqual(status, 0)
        self.assertIn('q = 74, p = 450', out)
        self.assertIn('3 columns x 450 rows', out)

    def test_directed_formula(self):
        status, out = self.run_main('stats', self.write_formula('mixed.cnf', MIXED), '--directed')
        self.assertEqual(status, 0)
        self.assertIn('6 columns x 4 rows', out)

    def test_instance(self):
        cnf = self.write_formula('mixed.cnf', MIXED)
        instance_path = self.path('mixed.json')
        self.run_main('compile-directed', cnf, '-o', instance_path)
        status, out = self.run_main('stats', instance_path)
        self.assertEqual(status, 0)
        self.assertIn('directed graph', out)
        self.assertIn('total demand', out)


if __name__ == '__main__':
    unittest.main()
