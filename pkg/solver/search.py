"""Exhaustive search for edge-disjoint (arc-disjoint) path systems.

Demand classes are routed in declaration order, one path at a time; a path
starts at a source of its class and is extended edge by edge (smallest
identifier first) until it stops at a sink. Paths are vertex-simple.

A partial routing is abandoned when

* a path of a non-exempt class would cross, at a non-crossing vertex, an
  earlier path of any non-exempt class (its own class included);
* a registered cut has fewer unused edges than paths still bound to go
  across it;
* the open path can no longer reach a sink of its class;
* (optionally) the unused edges cannot carry the remaining paths of some
  class, as certified by a maximum flow.
"""

import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple, List, Tuple, Dict, Optional, Callable, Hashable, Iterable

from .policy import SearchPolicy, PolicySpecType, resolve_policyspec
from .result import SolveStatus, SolveStats, SolveResult
from .pruning import CutPruner, register_cuts, residual_max_flow
from .program import run_program
from .symmetry import Automorphism, is_graph_automorphism, preserves_demands, map_routing
from hardpaths.graphs import Instance, Path, Routing, validate_routing, interleaved
from hardpaths.utils import hardpaths_err_header, hardpaths_wng_header
from hardpaths.utils import InternalError


Projection = Callable[[Instance, Routing], Hashable]


class _BudgetExceeded(Exception):
    pass


class _Stop(Exception):
    pass


class Move(NamedTuple):
    kind:   str  # 'start', 'step' or 'stop'
    demand: int = -1
    vertex: str = ''
    edge:   str = ''


class _Search(object):

    def __init__(self,
                 instance:   Instance,
                 policy:     SearchPolicy,
                 pruner:     Optional[CutPruner],
                 symmetry:   Optional[Automorphism],
                 projection: Optional[Projection]):

        self._instance = instance
        self._graph = instance.graph
        self._demands = instance.demands
        self._policy = policy
        self._pruner = pruner if (pruner is not None and policy.pruning and len(pruner) > 0) else None
        self._symmetry = symmetry
        self._projection = projection

        self._sorted_sources = [sorted(cls.sources) for cls in self._demands]
        self._out_edges = {v: tuple(sorted(self._graph.out_edges(v))) for v in self._graph.vertices}

        # search state
        self._used = set()
        self._unstarted = [cls.count for cls in self._demands]
        self._completed: List[Path] = []
        self._completed_traces: List[Tuple[List[str], set]] = []
        self._first_edges: List[List[str]] = [[] for _ in self._demands]
        self._passages: Dict[str, List[Tuple[int, str, str]]] = {}
        self._open_class: Optional[int] = None
        self._open_start = ''
        self._open_edges: List[str] = []
        self._open_vertices: List[str] = []
        self._visited = set()

        # statistics
        self._nodes = 0
        self._cut_prunes = 0
        self._flow_prunes = 0
        self._crossing_prunes = 0
        self._dead_ends = 0

        # outcome
        self._found: Dict[Hashable, Routing] = {}
        self._order: List[Hashable] = []

    # -- STATISTICS AND OUTCOME -- #

    def stats(self, elapsed: float = 0.0) -> SolveStats:
        return SolveStats(nodes=self._nodes,
                          cut_prunes=self._cut_prunes,
                          flow_prunes=self._flow_prunes,
                          crossing_prunes=self._crossing_prunes,
                          dead_ends=self._dead_ends,
                          elapsed=elapsed)

    def solutions(self) -> List[Routing]:
        return [self._found[key] for key in self._order]

    # -- MOVES -- #

    @property
    def _path_number(self) -> int:
        """Number of paths started so far (the open one included)."""
        return len(self._completed) + (1 if self._open_class is not None else 0)

    def _next_class(self) -> Optional[int]:
        for k, n in enumerate(self._unstarted):
            if n > 0:
                return k
        return None

    def complete(self) -> bool:
        return (self._open_class is None) and (self._next_class() is None)

    def moves(self) -> List[Move]:

        if self._open_class is not None:
            k = self._open_class
            head = self._open_vertices[-1]
            moves = []
            if head in self._demands[k].sinks:
                moves.append(Move('stop'))
            for e in self._out_edges[head]:
                if (e not in self._used) and (self._graph.other_end(e, head) not in self._visited):
                    moves.append(Move('step', edge=e))
            return moves

        k = self._next_class()
        if k is None:
            return []
        bound = self._first_edges[k][-1] if (self._policy.canonicalization and len(self._first_edges[k]) > 0) else None
        candidates = []
        for s in self._sorted_sources[k]:
            for e in self._out_edges[s]:
                if (e in self._used) or ((bound is not None) and (e <= bound)):
                    continue
                candidates.append((e, s))
        return [Move('start', demand=k, vertex=s, edge=e) for e, s in sorted(candidates)]

    def _take(self, e: str) -> None:
        self._used.add(e)
        if self._pruner is not None:
            self._pruner.use(e)

    def _give_back(self, e: str) -> None:
        self._used.discard(e)
        if self._pruner is not None:
            self._pruner.release(e)

    def _crosses(self, vertex: str, e_in: str, e_out: str) -> bool:
        index = self._graph.rotation_index(vertex)
        for _, f_in, f_out in self._passages.get(vertex, ()):
            if interleaved(index, e_in, e_out, f_in, f_out):
                return True
        return False

    def apply(self, move: Move) -> bool:
        """Apply ``move``; return ``False`` (leaving the state untouched)
        if the resulting partial routing is pruned."""

        if move.kind == 'start':
            k, s, e = move.demand, move.vertex, move.edge
            v = self._graph.other_end(e, s)
            self._open_class = k
            self._open_start = s
            self._open_edges = [e]
            self._open_vertices = [s, v]
            self._visited = {s, v}
            self._unstarted[k] -= 1
            self._first_edges[k].append(e)
            self._take(e)
            if not (self._symmetry_allows(k) and self._prune_after_extension()):
                self.revert(move)
                return False
            return True

        elif move.kind == 'step':
            e = move.edge
            k = self._open_class
            u = self._open_vertices[-1]
            e_in = self._open_edges[-1]
            tracked = self._graph.is_noncrossing(u) and (not self._demands[k].crossing_exempt)
            if tracked and self._crosses(u, e_in, e):
                self._crossing_prunes += 1
                return False
            v = self._graph.other_end(e, u)
            if tracked:
                self._passages.setdefault(u, []).append((self._path_number, e_in, e))
            self._open_edges.append(e)
            self._open_vertices.append(v)
            self._visited.add(v)
            self._take(e)
            if not self._prune_after_extension():
                self.revert(move)
                return False
            return True

        elif move.kind == 'stop':
            k = self._open_class
            self._completed.append(Path(demand=k, edges=tuple(self._open_edges), start=self._open_start))
            self._completed_traces.append((self._open_vertices, self._visited))
            self._open_class = None
            if self._policy.flow_check != 'off' and not self._flow_feasible():
                self.revert(move)
                return False
            return True

        raise InternalError(hardpaths_err_header(obj_name='solve') + f"unknown move {move.kind}.")

    def revert(self, move: Move) -> None:

        if move.kind == 'start':
            k = move.demand
            self._give_back(move.edge)
            self._first_edges[k].pop()
            self._unstarted[k] += 1
            self._open_class = None
            self._open_start = ''
            self._open_edges = []
            self._open_vertices = []
            self._visited = set()

        elif move.kind == 'step':
            e = self._open_edges.pop()
            v = self._open_vertices.pop()
            self._visited.discard(v)
            self._give_back(e)
            u = self._open_vertices[-1]
            passages = self._passages.get(u)
            if passages and passages[-1][0] == self._path_number and passages[-1][2] == e:
                passages.pop()

        elif move.kind == 'stop':
            path = self._completed.pop()
            self._open_class = path.demand
            self._open_start = path.start
            self._open_edges = list(path.edges)
            self._open_vertices, self._visited = self._completed_traces.pop()

    # -- PRUNING -- #

    def _symmetry_allows(self, k: int) -> bool:
        """Keep one routing of each mirror pair: the one whose class-0 paths
        have the smaller first edge."""
        if (self._symmetry is None) or (k != 0) or (self._unstarted[0] > 0):
            return True
        firsts = self._first_edges[0]
        return min(firsts) <= min(self._symmetry.edges[e] for e in firsts)

    def _prune_after_extension(self) -> bool:

        k = self._open_class
        if (self._pruner is not None) and not self._pruner.feasible(self._unstarted, k, self._open_vertices[-1]):
            self._cut_prunes += 1
            return False

        if not self._head_reaches_sink():
            self._dead_ends += 1
            return False

        if self._policy.flow_check == 'step' and not self._flow_feasible():
            return False

        return True

    def _head_reaches_sink(self) -> bool:
        k = self._open_class
        head = self._open_vertices[-1]
        sinks = self._demands[k].sinks
        if head in sinks:
            return True
        frontier = [head]
        seen = set(self._visited)
        while len(frontier) > 0:
            u = frontier.pop()
            for e in self._out_edges[u]:
                if e in self._used:
                    continue
                w = self._graph.other_end(e, u)
                if w in seen:
                    continue
                if w in sinks:
                    return True
                seen.add(w)
                frontier.append(w)
        return False

    def _flow_feasible(self) -> bool:
        for k, cls in enumerate(self._demands):
            offers: Dict[str, int] = {}
            if self._unstarted[k] > 0:
                for s in cls.sources:
                    offers[s] = self._unstarted[k]
            if self._open_class == k:
                head = self._open_vertices[-1]
                offers[head] = offers.get(head, 0) + 1
            required = self._unstarted[k] + (1 if self._open_class == k else 0)
            if required == 0:
                continue
            if residual_max_flow(self._graph, self._used, offers, cls.sinks) < required:
                self._flow_prunes += 1
                return False
        return True

    def root_feasible(self) -> bool:
        if (self._pruner is not None) and not self._pruner.feasible(self._unstarted, None, None):
            self._cut_prunes += 1
            return False
        if self._policy.flow_check != 'off' and not self._flow_feasible():
            return False
        return True

    # -- EXPLORATION -- #

    def _record(self) -> None:

        routing = Routing(self._completed)
        if self._policy.verify:
            report = validate_routing(self._instance, routing)
            if not report.valid:
                raise InternalError(hardpaths_err_header(obj_name='solve') + f"the search produced an invalid routing: {report.kinds()}.")

        if self._projection is not None:
            key = self._projection(self._instance, routing)
        elif self._policy.canonicalization:
            key = routing.key()
        else:
            key = len(self._order)

        if key not in self._found:
            self._found[key] = routing.canonical() if self._policy.canonicalization else routing
            self._order.append(key)

        if self._policy.mode != 'enumerate':
            raise _Stop()

    def explore(self, first: Optional[Move] = None) -> None:
        """Depth-first exploration, below ``first`` if given.

        Raises ``_BudgetExceeded`` when the node budget is spent; returns
        normally on exhaustion or (outside enumeration) at the first
        solution.
        """
        budget = self._policy.node_budget
        try:
            if first is not None:
                self._nodes += 1
                if self._nodes > budget:
                    raise _BudgetExceeded()
                if not self.apply(first):
                    return

            if self.complete():
                self._record()
                return

            stack = [iter(self.moves())]
            applied: List[Optional[Move]] = [None]
            while len(stack) > 0:
                if applied[-1] is not None:
                    self.revert(applied[-1])
                    applied[-1] = None
                move = next(stack[-1], None)
                if move is None:
                    stack.pop()
                    applied.pop()
                    continue
                self._nodes += 1
                if self._nodes > budget:
                    raise _BudgetExceeded()
                if not self.apply(move):
                    continue
                applied[-1] = move
                if self.complete():
                    self._record()
                    continue
                stack.append(iter(self.moves()))
                applied.append(None)

        except _Stop:
            pass


class BranchOutcome(NamedTuple):
    solutions: List[Routing]
    stats:     SolveStats
    exceeded:  bool


def _explore_branch(instance: Instance, policy: SearchPolicy, cuts: Tuple, symmetry: Optional[Automorphism], projection: Optional[Projection], move: Move) -> BranchOutcome:
    pruner = register_cuts(instance, cuts) if len(cuts) > 0 else None
    search = _Search(instance, policy, pruner, symmetry, projection)
    exceeded = False
    try:
        search.explore(first=move)
    except _BudgetExceeded:
        exceeded = True
    return BranchOutcome(solutions=search.solutions(), stats=search.stats(), exceeded=exceeded)


def _checked_symmetry(instance: Instance, policy: SearchPolicy, symmetry: Optional[Automorphism]) -> Optional[Automorphism]:
    if not policy.symmetry:
        return None
    if symmetry is None:
        warnings.warn(hardpaths_wng_header(obj_name='solve') + "symmetry reduction requested, but no automorphism was given; searching without it.")
        return None
    if not (is_graph_automorphism(instance.graph, symmetry) and preserves_demands(instance, symmetry)):
        warnings.warn(hardpaths_wng_header(obj_name='solve') + "the given map is not an automorphism of the instance; searching without it.")
        return None
    if len(instance.demands) == 0:
        return None
    return symmetry


def _close_under(instance: Instance, symmetry: Automorphism, solutions: List[Routing], policy: SearchPolicy, projection: Optional[Projection]) -> List[Routing]:
    """Add the mirror images of ``solutions``."""
    found: Dict[Hashable, Routing] = {}
    for routing in solutions:
        for candidate in (routing, map_routing(symmetry, routing)):
            candidate = candidate.canonical()
            key = projection(instance, candidate) if projection is not None else candidate.key()
            found.setdefault(key, candidate)
    return [found[key] for key in sorted(found.keys(), key=repr)]


def _run_program(instance: Instance, policy: SearchPolicy, cuts: Iterable[Iterable[str]], symmetry: Optional[Automorphism], projection: Optional[Projection]) -> SolveResult:

    if policy.mode == 'enumerate' or projection is not None:
        raise ValueError(hardpaths_err_header(obj_name='run_search') + "the program engine only decides and exhibits single routings.")

    cuts = tuple(frozenset(U) for U in cuts)
    outcome = run_program(instance, cuts=cuts, time_limit=policy.time_limit)
    stats = SolveStats(elapsed=outcome.elapsed)
    if outcome.status != SolveStatus.SAT:
        return SolveResult(status=outcome.status, witnesses=(), stats=stats)

    if outcome.routing is None:
        warnings.warn(hardpaths_wng_header(obj_name='run_search') + "the program solution does not decompose into a valid routing; falling back on the search.")
        return run_search(instance, policy._replace(engine='search'), cuts=cuts, symmetry=symmetry, projection=projection)

    witnesses = () if policy.mode == 'decide' else (outcome.routing,)
    return SolveResult(status=SolveStatus.SAT, witnesses=witnesses, stats=stats)


def run_search(instance:   Instance,
               policy:     SearchPolicy,
               cuts:       Iterable[Iterable[str]] = (),
               symmetry:   Optional[Automorphism] = None,
               projection: Optional[Projection] = None) -> SolveResult:
    """``solve`` with an optional ``projection``: in enumeration mode, only
    one routing is kept for each distinct value of ``projection``."""

    if policy.engine == 'program':
        return _run_program(instance, policy, cuts, symmetry, projection)

    start_time = time.perf_counter()
    cuts = tuple(frozenset(U) for U in cuts)
    symmetry = _checked_symmetry(instance, policy, symmetry)

    pruner = register_cuts(instance, cuts) if len(cuts) > 0 else None
    root = _Search(instance, policy, pruner, symmetry, projection)

    if not root.root_feasible():
        return SolveResult(status=SolveStatus.UNSAT, witnesses=(), stats=root.stats(time.perf_counter() - start_time))

    if root.complete() or policy.workers == 1:
        exceeded = False
        try:
            root.explore()
        except _BudgetExceeded:
            exceeded = True
        solutions, stats = root.solutions(), root.stats()

    else:
        # the first level of the search tree is split across processes; the
        # outcomes are merged in move order, so that statuses, statistics
        # and witnesses coincide with the single-process search
        first_moves = root.moves()
        with ProcessPoolExecutor(max_workers=policy.workers) as executor:
            futures = [executor.submit(_explore_branch, instance, policy, cuts, symmetry, projection, move) for move in first_moves]
            outcomes = [future.result() for future in futures]
        solutions, stats, exceeded = [], root.stats(), False
        seen = set()
        for outcome in outcomes:
            stats = stats + outcome.stats
            for routing in outcome.solutions:
                key = projection(instance, routing) if projection is not None else (routing.key() if policy.canonicalization else len(seen))
                if key not in seen:
                    seen.add(key)
                    solutions.append(routing)
            if outcome.exceeded or stats.nodes > policy.node_budget:
                exceeded = True
                break
            if policy.mode != 'enumerate' and len(solutions) > 0:
                break

    elapsed = time.perf_counter() - start_time
    stats = stats._replace(elapsed=elapsed)

    if exceeded:
        return SolveResult(status=SolveStatus.BUDGET_EXCEEDED, witnesses=(), stats=stats)
    if len(solutions) == 0:
        return SolveResult(status=SolveStatus.UNSAT, witnesses=(), stats=stats)

    if symmetry is not None and policy.mode == 'enumerate':
        solutions = _close_under(instance, symmetry, solutions, policy, projection)
    elif policy.canonicalization and policy.mode == 'enumerate':
        solutions = sorted(solutions, key=lambda routing: routing.key())

    witnesses = () if policy.mode == 'decide' else tuple(solutions if policy.mode == 'enumerate' else solutions[:1])
    return SolveResult(status=SolveStatus.SAT, witnesses=witnesses, stats=stats)


def solve(instance: Instance,
          policy:   PolicySpecType = 'witness',
          cuts:     Iterable[Iterable[str]] = (),
          symmetry: Optional[Automorphism] = None) -> SolveResult:
    """Decide, exhibit or enumerate the routings of ``instance``.

    ``policy`` is anything ``resolve_policyspec`` accepts. ``cuts`` are
    vertex sets whose cuts are registered for capacity pruning (see
    ``register_cuts``). ``symmetry`` is an automorphism of the instance,
    used when ``policy.symmetry`` is on; it is checked before use.

    In ``enumerate`` mode the witnesses are all the solutions, in canonical
    form and sorted when canonicalization is on. ``UNSAT`` is only returned
    after exhausting the search space; running out of nodes yields
    ``BUDGET_EXCEEDED`` and no witnesses.
    """
    return run_search(instance, resolve_policyspec(policy), cuts=cuts, symmetry=symmetry)
