"""Exhaustive edge-disjoint paths oracle.

``solve`` decides, exhibits or enumerates the routings of an ``Instance``
under a ``SearchPolicy``; non-crossing vertices and crossing-exempt demand
classes are honoured natively. With ``engine="program"`` the same questions
are put to an integer program first. On top of it, ``endpoint_pairings``,
``complement_reachable`` and ``max_flow_certificate`` answer the questions
asked by the gadget lemmas.

"""

from .policy import SearchPolicy, PolicySpecType, resolve_policyspec, MODES, FLOW_CHECKS, ENGINES
from .result import SolveStatus, SolveStats, SolveResult
from .pruning import RegisteredCut, CutPruner, register_cuts, residual_max_flow
from .symmetry import Automorphism, is_graph_automorphism, preserves_demands, map_path, map_routing
from .program import ProgramOutcome, FlowProgram, create_solver, extract_routing, run_program
from .search import solve, run_search
from .queries import Pairing, pairing_of, endpoint_pairings, complement_reachable, max_flow_certificate
