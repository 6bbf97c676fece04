from functools import lru_cache
from typing import Tuple, Optional

from .gadget import build_gadget, register_gadget_cache, resolve_kind
from hardpaths.graphs import DemandClass, Instance, Routing
from hardpaths.solver import SearchPolicy, solve
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import PreconditionError, BudgetExceededError


# (source port, sink port) for each path
PortPairs = Tuple[Tuple[str, str], ...]

_GADGET_POLICY = SearchPolicy(mode='witness', node_budget=10 ** 6, verify=True)


def port_instance(kind: str, pairs: PortPairs) -> Instance:
    gadget = build_gadget(kind)
    demands = [DemandClass.of(gadget.port(a), gadget.port(b), name=f"{a}->{b}") for a, b in pairs]
    return Instance(gadget.graph, demands)


@lru_cache(maxsize=None)
def _gadget_routing(kind: str, pairs: PortPairs) -> Optional[Routing]:
    result = solve(port_instance(kind, pairs), _GADGET_POLICY)
    if not result.conclusive:
        raise BudgetExceededError(hardpaths_err_header(obj_name='gadget_routing') + f"the search on {kind} did not terminate within {_GADGET_POLICY.node_budget} nodes.")
    return result.witnesses[0] if result.sat else None


register_gadget_cache(_gadget_routing)


def gadget_routing(kind: str, pairs: PortPairs) -> Optional[Routing]:
    """An arc-disjoint (edge-disjoint) routing of one path per port pair in
    the isolated gadget, or ``None`` if there is none; results are
    memoised."""
    routing = _gadget_routing(resolve_kind(kind), tuple((a, b) for a, b in pairs))
    return Routing(routing) if routing is not None else None


def gadget_reachability(kind: str, from_port: str, to_port: str) -> bool:
    """Whether a directed path joins two ports of a directed gadget."""
    kind = resolve_kind(kind)
    gadget = build_gadget(kind)
    if not gadget.directed:
        raise PreconditionError(hardpaths_err_header(obj_name='gadget_reachability') + f"{kind} is not a directed gadget.")
    gadget.port(from_port)
    gadget.port(to_port)
    return gadget_routing(kind, ((from_port, to_port),)) is not None
