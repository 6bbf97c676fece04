import networkx as nx
from typing import Tuple, Set, Iterable, Optional

from .policy import PolicySpecType, resolve_policyspec
from .pruning import residual_max_flow
from .search import run_search
from .symmetry import Automorphism
from hardpaths.graphs import Instance, Routing, vertex_sequence
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import BudgetExceededError


# per demand class, the sorted (source, sink) pairs of its paths
Pairing = Tuple[Tuple[Tuple[str, str], ...], ...]


def pairing_of(instance: Instance, routing: Routing) -> Pairing:
    """The endpoint pairs realised by ``routing``, class by class."""
    pairs = [[] for _ in instance.demands]
    for path in routing:
        vertices = vertex_sequence(instance.graph, path)
        cls = instance.demands[path.demand]
        s, t = vertices[0], vertices[-1]
        if (s not in cls.sources) or (t not in cls.sinks):
            s, t = t, s
        pairs[path.demand].append((s, t))
    return tuple(tuple(sorted(p)) for p in pairs)


def endpoint_pairings(instance: Instance,
                      policy:   PolicySpecType = 'enumerate',
                      cuts:     Iterable[Iterable[str]] = (),
                      symmetry: Optional[Automorphism] = None) -> Set[Pairing]:
    """The set of distinct endpoint pairings over all the solutions of
    ``instance``.

    The search runs in enumeration mode, keeping a single routing per
    pairing. Raises ``BudgetExceededError`` if the enumeration cannot be
    completed within the node budget.
    """
    policy = resolve_policyspec(policy)._replace(mode='enumerate')
    result = run_search(instance, policy, cuts=cuts, symmetry=symmetry, projection=pairing_of)
    if not result.conclusive:
        raise BudgetExceededError(hardpaths_err_header(obj_name='endpoint_pairings') + f"enumeration stopped after {result.stats.nodes} nodes.")
    return set(pairing_of(instance, routing) for routing in result.witnesses)


def complement_reachable(instance: Instance, routing: Routing, sources: Iterable[str], targets: Iterable[str]) -> bool:
    """Whether some vertex of ``targets`` can be reached from some vertex of
    ``sources`` in the graph deprived of the edges of ``routing``.

    Edge directions are ignored.
    """
    graph = instance.graph
    sources = graph.check_vertices(sources, obj_name='complement_reachable')
    targets = graph.check_vertices(targets, obj_name='complement_reachable')
    if len(sources & targets) > 0:
        return True

    used = set(routing.edge_multiset().keys())
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from((u, v) for e, (u, v) in graph.edges.items() if e not in used)

    reached = set()
    for s in sources:
        if s not in reached:
            reached |= nx.node_connected_component(g, s)
    return len(reached & targets) > 0


def max_flow_certificate(instance: Instance, demand: int) -> int:
    """The maximum number of edge-disjoint paths joining the sources and the
    sinks of demand class ``demand``, ignoring every other class and the
    crossing constraints: an upper bound on what any routing can achieve."""
    if not (0 <= demand < len(instance.demands)):
        raise ValueError(hardpaths_err_header(obj_name='max_flow_certificate') + f"demand class {demand} does not exist.")
    cls = instance.demands[demand]
    offers = {s: len(instance.graph.out_edges(s)) for s in cls.sources}
    return residual_max_flow(instance.graph, set(), offers, cls.sinks)
