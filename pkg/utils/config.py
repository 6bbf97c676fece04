import os

from .messages import hardpaths_err_header


DEFAULT_NODE_BUDGET = 10 ** 8
BUDGET_ENVIRONMENT_VARIABLE = 'HARDPATHS_BUDGET'


def parse_budget(value: str) -> int:
    """Parse a node budget given as an integer or in float notation (e.g.,
    ``1e6``)."""
    try:
        budget = int(float(value))
    except (TypeError, ValueError):
        raise ValueError(hardpaths_err_header(obj_name='parse_budget') + f"cannot interpret {value!r} as a node budget.")
    if budget < 0:
        raise ValueError(hardpaths_err_header(obj_name='parse_budget') + f"node budgets must be non-negative, but {budget} was given.")
    return budget


def default_node_budget() -> int:
    """The node budget in force when no explicit one is given.

    The environment variable ``HARDPATHS_BUDGET`` takes precedence over the
    built-in default.
    """
    value = os.environ.get(BUDGET_ENVIRONMENT_VARIABLE)
    if value is None or value.strip() == "":
        return DEFAULT_NODE_BUDGET
    return parse_budget(value)
