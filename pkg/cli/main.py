"""The ``hardpaths`` command line.

Every subcommand returns an exit status: 0 when the requested work passed
(or the search was conclusive), 1 when a harness case failed, 2 on usage
and input errors, 3 when a search ran out of nodes.
"""

import argparse
import json
import os
import re
import sys
from typing import Optional, Sequence

from hardpaths.gadgets import build_gadget, resolve_kind
from hardpaths.graphs import Instance
from hardpaths.harness import HarnessSummary, resolve_profilespec, run_all, run_case
from hardpaths.reductions import CnfFormula, Assignment, assignment_from_literals
from hardpaths.reductions.directed import compile_full, identify_terminals, corollary_transform, make_directed_layout, witness_directed
from hardpaths.reductions.undirected import compile_undirected, make_layout, size_bound, witness_undirected
from hardpaths.serialization import parse_dimacs, instance_to_document, instance_from_document, routing_to_document, routing_from_document
from hardpaths.serialization import result_to_document, write_text, read_document, document_kind
from hardpaths.serialization import layout_clusters, export_dot
from hardpaths.solver import MODES, ENGINES, SearchPolicy, SolveStatus, solve, max_flow_certificate
from hardpaths.utils import hardpaths_log_header, hardpaths_err_header
from hardpaths.utils import default_node_budget, parse_budget


USAGE_ERROR = 2
INCONCLUSIVE = 3


# -- INPUTS -- #

def read_formula(path: str) -> CnfFormula:
    with open(path, 'r') as fp:
        return parse_dimacs(fp.read())


def read_assignment(argument: str, formula: CnfFormula) -> Assignment:
    """An assignment given in a file or inline, as signed variables
    separated by commas or whitespace; a trailing ``0`` is dropped."""
    if os.path.isfile(argument):
        with open(argument, 'r') as fp:
            argument = fp.read()
    tokens = [token for token in re.split(r'[\s,]+', argument) if token != '']
    try:
        literals = [int(token) for token in tokens]
    except ValueError:
        raise ValueError(hardpaths_err_header(obj_name='read_assignment') + f"cannot read an assignment from {argument!r}.")
    if len(literals) > 0 and literals[-1] == 0:
        literals = literals[:-1]
    return assignment_from_literals(literals, formula.n_variables)


def directed_variant(args: argparse.Namespace) -> str:
    if args.identify_terminals:
        return 'identified'
    if args.corollary:
        return 'corollary'
    return 'full'


def emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        write_text(output, text)


def emit_document(document: dict, output: Optional[str]) -> None:
    emit(json.dumps(document, indent=1) + '\n', output)


# -- SUBCOMMANDS -- #

def cmd_compile_undirected(args: argparse.Namespace) -> int:
    formula = read_formula(args.cnf)
    instance, layout = compile_undirected(formula, relaxed=args.relaxed)
    emit_document(instance_to_document(instance, layout.registry), args.output)
    return 0


def cmd_compile_directed(args: argparse.Namespace) -> int:
    formula = read_formula(args.cnf)
    instance, layout = compile_full(formula)
    variant = directed_variant(args)
    if variant == 'identified':
        instance = identify_terminals(instance)
    elif variant == 'corollary':
        instance = corollary_transform(instance)
    emit_document(instance_to_document(instance, layout.registry), args.output)
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    formula = read_formula(args.cnf)
    assignment = read_assignment(args.assignment, formula)
    if args.directed:
        routing = witness_directed(formula, assignment, variant=directed_variant(args))
    else:
        routing = witness_undirected(formula, assignment)
    emit_document(routing_to_document(routing), args.output)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    instance = instance_from_document(read_document(args.instance))
    budget = default_node_budget() if args.budget is None else parse_budget(args.budget)
    policy = SearchPolicy(mode=args.mode, node_budget=budget, workers=args.workers, engine=args.engine, time_limit=args.time_limit)
    result = solve(instance, policy)
    emit_document(result_to_document(result), args.output)
    print(hardpaths_log_header(obj_name='solve') + f"{result.status.value} after {result.stats.nodes} nodes ({result.stats.elapsed:.2f}s).", file=sys.stderr)
    return INCONCLUSIVE if result.status == SolveStatus.BUDGET_EXCEEDED else 0


def cmd_verify(args: argparse.Namespace) -> int:
    budget = None if args.budget is None else parse_budget(args.budget)
    if args.case is not None:
        budget = default_node_budget() if budget is None else budget
        summary = HarnessSummary(profile=args.case, node_budget=budget, results=(run_case(args.case, budget),))
    else:
        profile = resolve_profilespec(args.profile)
        if budget is not None:
            profile = profile._replace(node_budget=budget)
        summary = run_all(profile, workers=args.workers)
    summary.show()
    if args.json is not None:
        write_text(args.json, summary.to_json() + '\n')
    return summary.exit_status


def cmd_export_dot(args: argparse.Namespace) -> int:
    clusters = None
    if args.gadget is not None:
        target = build_gadget(resolve_kind(args.gadget))
        if args.clusters:
            raise ValueError(hardpaths_err_header(obj_name='export-dot') + "a single gadget has no cells to cluster.")
    else:
        document = read_document(args.instance)
        target = instance_from_document(document)
        if args.clusters:
            if 'layout' not in document:
                raise ValueError(hardpaths_err_header(obj_name='export-dot') + f"{args.instance} records no grid layout.")
            clusters = layout_clusters(document['layout'])
    routing = None if args.routing is None else routing_from_document(read_document(args.routing))
    emit(export_dot(target, routing=routing, clusters=clusters), args.output)
    return 0


def _show_instance(instance: Instance, header: str) -> None:
    graph = instance.graph
    print(header + f"{'directed' if graph.directed else 'undirected'} graph: {graph.n_vertices} vertices, {graph.n_edges} edges, {len(graph.noncrossing)} non-crossing vertices")
    for k, cls in enumerate(instance.demands):
        name = cls.name if cls.name != '' else f"class {k}"
        print(header + f"demand {name}: {cls.count} paths, {len(cls.sources)} sources, {len(cls.sinks)} sinks, at most {max_flow_certificate(instance, k)} disjoint{' (crossing exempt)' if cls.crossing_exempt else ''}")
    print(header + f"total demand: {instance.total_demand}")


def cmd_stats(args: argparse.Namespace) -> int:
    header = hardpaths_log_header(obj_name='stats')

    if args.input.endswith('.json'):
        document = read_document(args.input)
        if document_kind(document) != 'instance':
            raise ValueError(hardpaths_err_header(obj_name='stats') + f"{args.input} is a {document_kind(document)} document, not an instance.")
        _show_instance(instance_from_document(document), header)
        return 0

    formula = read_formula(args.input)
    print(header + f"{formula.n_clauses} clauses over {formula.n_variables} variables")
    if args.directed:
        layout = make_directed_layout(formula)
        print(header + f"acyclic grid: {layout.columns} columns x {layout.rows} rows ({layout.columns * layout.rows} cells)")
    else:
        layout = make_layout(formula, relaxed=args.relaxed)
        print(header + f"q = {layout.q}, p = {layout.p}")
        print(header + f"planar grid: {layout.n} columns x {layout.p} rows ({layout.n * layout.p} cells)")
        print(header + f"at most {size_bound(layout)} vertices")
    return 0


# -- PARSER -- #

def _add_variant_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--identify-terminals', action='store_true', help="merge t1 into s2 and t2 into s1")
    group.add_argument('--corollary', action='store_true', help="join the columns into one path with the wrap arcs")


def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(prog='hardpaths', description="Compile, solve and verify the edge-disjoint paths reductions from 3-SAT.")
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    p = subparsers.add_parser('compile-undirected', help="compile a DIMACS formula into a planar instance")
    p.add_argument('cnf')
    p.add_argument('--relaxed', action='store_true', help="accept formulas outside the three-literal regime")
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_compile_undirected)

    p = subparsers.add_parser('compile-directed', help="compile a DIMACS formula into an acyclic instance")
    p.add_argument('cnf')
    _add_variant_flags(p)
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_compile_directed)

    p = subparsers.add_parser('witness', help="route a compiled formula from a satisfying assignment")
    p.add_argument('cnf')
    p.add_argument('assignment', help="a file or an inline list of signed variables, e.g. '1,-2,3'")
    p.add_argument('--directed', action='store_true')
    _add_variant_flags(p)
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_witness)

    p = subparsers.add_parser('solve', help="run the exhaustive search on an instance document")
    p.add_argument('instance')
    p.add_argument('--budget', help="node budget, e.g. 1e6")
    p.add_argument('--mode', choices=MODES, default='witness')
    p.add_argument('--engine', choices=ENGINES, default='search')
    p.add_argument('--time-limit', type=float, help="seconds granted to the program engine")
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_solve)

    p = subparsers.add_parser('verify', help="run the gadget and grid checks")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--case')
    group.add_argument('--all', action='store_true')
    p.add_argument('--profile', choices=('fast', 'full'), default='fast')
    p.add_argument('--budget', help="node budget of every search, e.g. 1e6")
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--json', help="also write the summary to this file")
    p.set_defaults(func=cmd_verify)

    p = subparsers.add_parser('export-dot', help="draw an instance or a gadget in DOT")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('instance', nargs='?')
    group.add_argument('--gadget')
    p.add_argument('--routing')
    p.add_argument('--clusters', action='store_true', help="group the vertices of every grid cell")
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_export_dot)

    p = subparsers.add_parser('stats', help="report the sizes of a reduction or of an instance document")
    p.add_argument('input', help="a DIMACS formula, or an instance document (.json)")
    p.add_argument('--directed', action='store_true')
    p.add_argument('--relaxed', action='store_true')
    p.set_defaults(func=cmd_stats)

    return parser


def cli_main(argv: Optional[Sequence[str]] = None) -> int:

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE_ERROR if e.code not in (0, None) else 0

    try:
        return args.func(args)
    except (ValueError, KeyError) as e:
        print(str(e) if isinstance(e, ValueError) else hardpaths_err_header(obj_name=args.command) + f"missing field {e}.", file=sys.stderr)
        return USAGE_ERROR
    except OSError as e:
        print(hardpaths_err_header(obj_name=args.command) + str(e), file=sys.stderr)
        return USAGE_ERROR
