"""Integer-programming engine.

The instance is written as a unit-capacity multicommodity flow: one binary
variable per class, edge and direction, flow conservation per class with
free source outflows and sink inflows, and one capacity row per edge. At a
non-crossing vertex of degree four that is not a terminal of either class,
two non-exempt classes may not take opposite edge pairs.

The model admits every valid routing, so an infeasible program settles the
instance. A feasible one is turned back into paths (``extract_routing``)
and only counts once the paths pass ``validate_routing``.
"""

import time
from typing import NamedTuple, Dict, Tuple, List, Optional, Iterable, FrozenSet

from ortools.linear_solver import pywraplp

from .result import SolveStatus
from hardpaths.graphs import Instance, Path, Routing, validate_routing, interleaved
from hardpaths.graphs import delta, crossing_demand
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import UNKNOWN


BACKENDS = ('SAT', 'SCIP', 'CBC')

Arc = Tuple[str, str, str]  # (edge, tail, head)


class ProgramOutcome(NamedTuple):
    status:  SolveStatus
    routing: Optional[Routing]
    elapsed: float


def create_solver(backends: Iterable[str] = BACKENDS) -> pywraplp.Solver:
    """The first mixed-integer backend of ``backends`` that ortools offers."""
    for backend in backends:
        solver = pywraplp.Solver.CreateSolver(backend)
        if solver is not None:
            return solver
    raise RuntimeError(hardpaths_err_header(obj_name='create_solver') + f"none of the integer backends {tuple(backends)} is available.")


class FlowProgram(object):

    def __init__(self,
                 instance:   Instance,
                 cuts:       Iterable[FrozenSet[str]] = (),
                 time_limit: Optional[float] = None):

        super(FlowProgram, self).__init__()

        self._instance = instance
        self._graph = instance.graph
        self._solver = create_solver()
        if time_limit is not None:
            self._solver.SetTimeLimit(int(time_limit * 1000))

        self._arcs: Dict[Tuple[int, Arc], pywraplp.Variable] = {}
        self._usage: Dict[Tuple[int, str], List[pywraplp.Variable]] = {}
        self._build_flows()
        self._build_capacities()
        self._build_crossings()
        for U in cuts:
            self._build_cut(U)

    # -- MODEL -- #

    def arcs_of(self, e: str) -> Tuple[Arc, ...]:
        u, v = self._graph.edges[e]
        if self._graph.directed:
            return ((e, u, v),)
        return ((e, u, v), (e, v, u))

    def _build_flows(self) -> None:

        solver = self._solver
        for k, cls in enumerate(self._instance.demands):

            out_arcs = {v: [] for v in self._graph.vertices}
            in_arcs = {v: [] for v in self._graph.vertices}
            for e in self._graph.edges:
                self._usage[k, e] = []
                for arc in self.arcs_of(e):
                    x = solver.BoolVar(f"x[{k}][{arc[1]}->{arc[2]}][{e}]")
                    self._arcs[k, arc] = x
                    self._usage[k, e].append(x)
                    out_arcs[arc[1]].append(x)
                    in_arcs[arc[2]].append(x)

            emitted = {s: solver.IntVar(0, cls.count, f"o[{k}][{s}]") for s in sorted(cls.sources)}
            absorbed = {t: solver.IntVar(0, cls.count, f"i[{k}][{t}]") for t in sorted(cls.sinks)}
            solver.Add(solver.Sum(list(emitted.values())) == cls.count)
            solver.Add(solver.Sum(list(absorbed.values())) == cls.count)

            for v in self._graph.vertices:
                balance = solver.Sum(out_arcs[v]) - solver.Sum(in_arcs[v])
                if v in emitted:
                    balance = balance - emitted[v]
                if v in absorbed:
                    balance = balance + absorbed[v]
                solver.Add(balance == 0)

    def _build_capacities(self) -> None:
        for e in self._graph.edges:
            self._solver.Add(self._solver.Sum([x for k in range(len(self._instance.demands)) for x in self._usage[k, e]]) <= 1)

    def _build_crossings(self) -> None:

        demands = self._instance.demands
        guarded = [k for k, cls in enumerate(demands) if not cls.crossing_exempt]
        for v in sorted(self._graph.noncrossing):
            rotation = self._graph.incident(v)
            if len(rotation) != 4 or len(set(rotation)) != 4:
                continue
            first, second = (rotation[0], rotation[2]), (rotation[1], rotation[3])
            for k in guarded:
                for l in guarded:
                    if k == l:
                        continue
                    if v in (demands[k].sources | demands[k].sinks | demands[l].sources | demands[l].sinks):
                        continue
                    use = self._usage[k, first[0]] + self._usage[k, first[1]] + self._usage[l, second[0]] + self._usage[l, second[1]]
                    self._solver.Add(self._solver.Sum(use) <= 3)

    def _build_cut(self, U: FrozenSet[str]) -> None:
        """Every path that must leave ``U`` spends at least one edge of its
        cut."""
        directed = self._graph.directed
        cut = delta(self._graph, U)
        required = [crossing_demand(cls, U, directed) for cls in self._instance.demands]
        required = sum(n for n in required if n is not UNKNOWN)
        if required == 0:
            return
        spent = []
        for k in range(len(self._instance.demands)):
            for e in cut.edges:
                for arc in self.arcs_of(e):
                    if (not directed) or (e in cut.outgoing):
                        spent.append(self._arcs[k, arc])
        self._solver.Add(self._solver.Sum(spent) >= required)

    # -- SOLUTION -- #

    def run(self) -> ProgramOutcome:

        start_time = time.perf_counter()
        status = self._solver.Solve()
        elapsed = time.perf_counter() - start_time

        if status == pywraplp.Solver.INFEASIBLE:
            return ProgramOutcome(status=SolveStatus.UNSAT, routing=None, elapsed=elapsed)
        if status not in (pywraplp.Solver.OPTIMAL, pywraplp.Solver.FEASIBLE):
            return ProgramOutcome(status=SolveStatus.BUDGET_EXCEEDED, routing=None, elapsed=elapsed)

        chosen = {key: round(x.solution_value()) for key, x in self._arcs.items()}
        routing = extract_routing(self._instance, [[arc for (k, arc), value in sorted(chosen.items()) if k == cls and value == 1]
                                                   for cls in range(len(self._instance.demands))])
        return ProgramOutcome(status=SolveStatus.SAT, routing=routing, elapsed=time.perf_counter() - start_time)


def _next_arc(instance: Instance, passages: Dict[str, List[Tuple[str, str]]], head: str, entry: Optional[str], candidates: List[Arc]) -> Arc:
    """Among the unused arcs leaving ``head``, prefer one whose passage
    crosses nothing, then one adjacent to ``entry`` in the rotation."""
    graph = instance.graph
    if entry is None or head not in graph.noncrossing:
        return candidates[0]
    index = graph.rotation_index(head)
    degree = graph.degree(head)

    def rank(arc: Arc) -> Tuple[int, int]:
        crossing = any(interleaved(index, entry, arc[0], f_in, f_out) for f_in, f_out in passages.get(head, ()))
        gap = (index[arc[0]] - index[entry]) % degree
        return (int(crossing), int(gap not in (1, degree - 1)))

    return min(candidates, key=rank)


def extract_routing(instance: Instance, arcs: List[List[Arc]]) -> Optional[Routing]:
    """Decompose the arcs chosen for each class into source-to-sink paths.

    Paths are walked greedily and stop at the first sink that still
    absorbs one; a walk that comes back to one of its vertices drops the
    loop. Arcs left over form cycles and are discarded. ``None`` when no
    walk can be completed.
    """
    graph = instance.graph
    passages: Dict[str, List[Tuple[str, str]]] = {}
    routing = Routing()

    for k, cls in enumerate(instance.demands):

        leaving: Dict[str, List[Arc]] = {}
        for arc in arcs[k]:
            leaving.setdefault(arc[1], []).append(arc)
        net = {v: len(leaving.get(v, ())) for v in graph.vertices}
        for _, _, head in arcs[k]:
            net[head] -= 1
        starts = [v for v in sorted(cls.sources) for _ in range(max(net[v], 0))]
        absorbing = {v: max(-net[v], 0) for v in cls.sinks}

        # a vertex that is both a source and a sink may end one path and start the next
        extra = cls.count - len(starts)
        for v in sorted(cls.sources):
            while extra > 0 and len(leaving.get(v, ())) > 0 and net[v] >= 0 and v in cls.sinks and absorbing.get(v, 0) == 0:
                starts.append(v)
                absorbing[v] = absorbing.get(v, 0) + 1
                extra -= 1
        if len(starts) != cls.count:
            return None

        for s in starts:
            vertices, edges, entries = [s], [], [None]
            while True:
                head = vertices[-1]
                if len(edges) > 0 and absorbing.get(head, 0) > 0:
                    absorbing[head] -= 1
                    break
                candidates = leaving.get(head, [])
                if len(candidates) == 0:
                    return None
                arc = _next_arc(instance, passages, head, entries[-1], candidates)
                candidates.remove(arc)
                if arc[2] in vertices:
                    cut_at = vertices.index(arc[2])
                    del vertices[cut_at + 1:]
                    del edges[cut_at:]
                    del entries[cut_at + 1:]
                    continue
                vertices.append(arc[2])
                edges.append(arc[0])
                entries.append(arc[0])

            for i in range(1, len(vertices) - 1):
                passages.setdefault(vertices[i], []).append((edges[i - 1], edges[i]))
            routing.append(Path(demand=k, edges=tuple(edges), start=s))

    if not validate_routing(instance, routing).valid:
        return None
    return routing


def run_program(instance: Instance, cuts: Iterable[FrozenSet[str]] = (), time_limit: Optional[float] = None) -> ProgramOutcome:
    return FlowProgram(instance, cuts=cuts, time_limit=time_limit).run()
