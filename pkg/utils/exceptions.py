"""Exception types raised by HardPaths.

All input-related errors derive from ``ValueError`` so that callers can
catch them as such; broken internal invariants derive from
``RuntimeError``.
"""


class UnknownVertexError(ValueError):
    """A vertex, edge or port identifier does not exist."""


class MalformedRoutingError(ValueError):
    """A path is not a walk in the graph it claims to live in."""


class PreconditionError(ValueError):
    """An operation was called on an input that violates its precondition."""


class UnsupportedDegreeError(ValueError):
    """A non-crossing vertex whose degree is not four cannot be expanded."""


class PlacementError(ValueError):
    """The boundary arities of a directed grid cannot be matched."""


class RegimeError(ValueError):
    """A formula lies outside the regime the strict compiler accepts."""


class UnsatisfiedAssignmentError(ValueError):
    """A witness was requested for an assignment that falsifies the formula."""


class DimacsParseError(ValueError):
    """The DIMACS CNF input is malformed."""


class BudgetExceededError(ValueError):
    """A search ran out of nodes before it could return a definite answer."""


class InternalError(RuntimeError):
    """An internal invariant does not hold."""
