from .aliases import UnknownType, UNKNOWN
from .messages import hardpaths_log_header, hardpaths_wng_header, hardpaths_err_header
from .config import DEFAULT_NODE_BUDGET, default_node_budget, parse_budget
from .exceptions import UnknownVertexError, MalformedRoutingError, PreconditionError
from .exceptions import UnsupportedDegreeError, PlacementError, RegimeError
from .exceptions import UnsatisfiedAssignmentError, DimacsParseError
from .exceptions import BudgetExceededError, InternalError
