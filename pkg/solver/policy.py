from enum import Enum
from typing import NamedTuple, Dict, Any, Union, Optional

from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import default_node_budget


MODES = ('decide', 'witness', 'enumerate')
FLOW_CHECKS = ('off', 'path', 'step')
ENGINES = ('search', 'program')


class SearchPolicy(NamedTuple):
    """How ``solve`` explores the search tree.

    ``mode`` selects whether the search stops at the first solution
    (``decide``, ``witness``) or collects them all (``enumerate``);
    ``decide`` does not return the solution it found. ``node_budget`` caps
    the number of search-tree nodes. ``pruning`` enables the registered-cut
    test, ``flow_check`` the per-class max-flow test (after each completed
    path or after each extension). ``canonicalization`` deduplicates
    solutions that differ only in the order of same-class paths.
    ``workers`` > 1 splits the first level of the search tree across
    processes. ``symmetry`` enables the mirror reduction where it applies,
    and ``verify`` validates every emitted solution.

    ``engine`` is ``search`` for the depth-first search or ``program`` for
    the integer program of ``hardpaths.solver.program``, which only decides
    and exhibits; it stops after ``time_limit`` seconds when one is given
    and falls back on the search when its solution does not decompose into
    a valid routing.
    """
    mode:             str = 'witness'
    node_budget:      int = 10 ** 8
    pruning:          bool = True
    canonicalization: bool = True
    flow_check:       str = 'path'
    workers:          int = 1
    symmetry:         bool = False
    verify:           bool = False
    engine:           str = 'search'
    time_limit:       Optional[float] = None


def check_policy(policy: SearchPolicy) -> SearchPolicy:

    if policy.mode not in MODES:
        raise ValueError(hardpaths_err_header(obj_name='SearchPolicy') + f"unknown mode {policy.mode!r}; expected one of {MODES}.")
    if not (isinstance(policy.node_budget, int) and policy.node_budget > 0):
        raise ValueError(hardpaths_err_header(obj_name='SearchPolicy') + f"the node budget must be a positive integer, but {policy.node_budget!r} was given.")
    if policy.flow_check not in FLOW_CHECKS:
        raise ValueError(hardpaths_err_header(obj_name='SearchPolicy') + f"unknown flow check {policy.flow_check!r}; expected one of {FLOW_CHECKS}.")
    if not (isinstance(policy.workers, int) and policy.workers >= 1):
        raise ValueError(hardpaths_err_header(obj_name='SearchPolicy') + f"the number of workers must be a positive integer, but {policy.workers!r} was given.")
    if policy.engine not in ENGINES:
        raise ValueError(hardpaths_err_header(obj_name='SearchPolicy') + f"unknown engine {policy.engine!r}; expected one of {ENGINES}.")
    if policy.engine == 'program' and policy.mode == 'enumerate':
        raise ValueError(hardpaths_err_header(obj_name='SearchPolicy') + "the program engine does not enumerate.")
    if policy.time_limit is not None and not (isinstance(policy.time_limit, (int, float)) and policy.time_limit > 0):
        raise ValueError(hardpaths_err_header(obj_name='SearchPolicy') + f"the time limit must be a positive number of seconds, but {policy.time_limit!r} was given.")

    return policy


PolicySpecType = Union[SearchPolicy, Dict[str, Any], str]


def resolve_searchpolicy_policyspec(policyspec: SearchPolicy) -> SearchPolicy:
    return policyspec


def resolve_dict_policyspec(policyspec: Dict[str, Any]) -> SearchPolicy:

    unknown_keys = set(policyspec.keys()).difference(SearchPolicy._fields)
    if len(unknown_keys) != 0:
        raise ValueError(hardpaths_err_header(obj_name='resolve_policyspec') + f"SearchPolicy dictionary specification does not support the following keys: {unknown_keys}.")

    fields = {'node_budget': default_node_budget()}
    fields.update(policyspec)
    return SearchPolicy(**fields)


def resolve_str_policyspec(policyspec: str) -> SearchPolicy:
    """Map a mode name to the default policy for that mode."""
    return SearchPolicy(mode=policyspec.lower(), node_budget=default_node_budget())


PolicySpecSolvers = Enum('PolicySpecSolvers',
                         [
                             ('SEARCHPOLICY', resolve_searchpolicy_policyspec),
                             ('DICT',         resolve_dict_policyspec),
                             ('STR',          resolve_str_policyspec),
                         ])


def resolve_policyspec(policyspec: PolicySpecType) -> SearchPolicy:
    """Canonicalise a search policy specification.

    A ``SearchPolicy`` is returned as it is; a dictionary overrides the
    fields of the default policy; a string names a mode. Missing budgets
    default to the ``HARDPATHS_BUDGET`` environment variable, or to
    :math:`10^8` nodes.
    """

    # I apply a strategy pattern to retrieve the correct solver method based on the specification type
    policyspec_class = policyspec.__class__.__name__.upper()
    try:
        solver = getattr(PolicySpecSolvers, policyspec_class)
    except AttributeError:
        raise TypeError(hardpaths_err_header(obj_name='resolve_policyspec') + f"unsupported SearchPolicy specification type: {policyspec_class}.")

    return check_policy(solver(policyspec))
