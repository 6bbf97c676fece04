"""The ``hardpaths`` command line: compile formulas into instances, route
them from assignments, run the exhaustive search, run the verification
harness, draw instances in DOT and report their sizes.

"""

from .main import USAGE_ERROR, INCONCLUSIVE, read_formula, read_assignment, build_parser, cli_main
