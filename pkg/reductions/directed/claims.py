"""Mechanical checks of the clause grid and of the track locks.

``claim1_check`` decides by exhaustive search whether the clause grid of a
formula admits its path system, and compares the answer with the
brute-force satisfiability of the formula. ``claim2_check`` and
``claim3_check`` enumerate the port pairs of the isolated track locks.
"""

import itertools
from typing import NamedTuple, Dict, Tuple, Optional, Sequence

from .compiler import compile_g1, g1_instance
from .witness import witness_g1
from hardpaths.gadgets import gadget_routing
from hardpaths.graphs import Routing
from hardpaths.reductions.cnf import CnfFormula
from hardpaths.solver import PolicySpecType, resolve_policyspec, solve
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import BudgetExceededError


class Claim1Report(NamedTuple):
    """``exists`` tells whether some choice of one row per variable lets
    all the column and row paths through (``choices`` lists the working
    ones, as clause-grid rows). ``routing`` is the explicit system built
    from an assignment, when one was given."""
    exists:      bool
    satisfiable: bool
    choices:     Tuple[Tuple[int, ...], ...]
    nodes:       int
    routing:     Optional[Routing] = None

    @property
    def agrees(self) -> bool:
        return self.exists == self.satisfiable


def claim1_check(formula:    CnfFormula,
                 assignment: Optional[Sequence[bool]] = None,
                 policy:     PolicySpecType = 'decide') -> Claim1Report:
    """Search the path systems of the clause grid of ``formula``, one row
    choice at a time.

    All ``2^p`` choices are tried, so keep formulas tiny. Raises
    ``BudgetExceededError`` if a search runs out of nodes. With an
    ``assignment``, the path system it induces is also built and
    validated.
    """
    policy = resolve_policyspec(policy)._replace(mode='decide')
    graph, layout = compile_g1(formula)

    choices, nodes = [], 0
    for values in itertools.product((True, False), repeat=layout.p):
        rows = tuple(2 * i if value else 2 * i - 1 for i, value in enumerate(values, start=1))
        result = solve(g1_instance(graph, layout, rows), policy)
        nodes += result.stats.nodes
        if not result.conclusive:
            raise BudgetExceededError(hardpaths_err_header(obj_name='claim1_check') + f"the search with rows {rows} did not terminate within {policy.node_budget} nodes.")
        if result.sat:
            choices.append(rows)

    routing = None
    if assignment is not None:
        _, routing = witness_g1(formula, assignment)

    return Claim1Report(exists=len(choices) > 0, satisfiable=formula.is_satisfiable(),
                        choices=tuple(choices), nodes=nodes, routing=routing)


class LockReport(NamedTuple):
    """Which of the four track combinations an isolated track lock can
    route, keyed by ``(i, j)``."""
    kind:     str
    feasible: Dict[Tuple[int, int], bool]
    holds:    bool


# (vertical pair, horizontal pair) of each lock, for tracks i and j
_LOCK_PAIRS = {
    'IF': lambda i, j: (('a', f"a{i}"), ('b', f"b{j}")),
    'LL': lambda i, j: (('a', f"a{i}"), (f"b{j}", 'b')),
    'TT': lambda i, j: (('a', f"a{i}"), (f"b{j}", 'b')),
}


def claim2_check(kind: str) -> LockReport:
    """IF, LL and TT route ``a`` with ``a_i`` and ``b`` with ``b_j`` at the
    same time only when ``i = j``."""
    if kind not in _LOCK_PAIRS:
        raise ValueError(hardpaths_err_header(obj_name='claim2_check') + f"{kind} is not one of the locks {tuple(_LOCK_PAIRS)}.")
    feasible = {(i, j): gadget_routing(kind, _LOCK_PAIRS[kind](i, j)) is not None for i in (1, 2) for j in (1, 2)}
    holds = all(value == (i == j) for (i, j), value in feasible.items())
    return LockReport(kind=kind, feasible=feasible, holds=holds)


def claim3_check() -> LockReport:
    """VV cannot route ``b2`` to ``b`` and ``a1`` to ``a`` together; the
    three other combinations go through."""
    feasible = {(i, j): gadget_routing('VV', ((f"b{j}", 'b'), (f"a{i}", 'a'))) is not None for i in (1, 2) for j in (1, 2)}
    holds = all(value == ((i, j) != (1, 2)) for (i, j), value in feasible.items())
    return LockReport(kind='VV', feasible=feasible, holds=holds)
