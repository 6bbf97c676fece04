from collections import Counter
from typing import NamedTuple, Tuple, List

from .instance import Instance, Routing
from .instance import vertex_sequence
from .crossings import detect_crossings
from hardpaths.utils import hardpaths_log_header
from hardpaths.utils import MalformedRoutingError


class Violation(NamedTuple):
    kind:   str
    paths:  Tuple[int, ...]
    detail: str


class ValidationReport(NamedTuple):
    violations: Tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return len(self.violations) == 0

    def kinds(self) -> List[str]:
        return sorted(set(v.kind for v in self.violations))

    def __bool__(self) -> bool:
        return self.valid

    def show(self) -> None:
        if self.valid:
            print(hardpaths_log_header() + "routing is valid.")
        for v in self.violations:
            print(hardpaths_log_header() + f"{v.kind} {list(v.paths)}: {v.detail}")


def validate_routing(instance: Instance, routing: Routing) -> ValidationReport:
    """Collect every way in which ``routing`` fails to solve ``instance``.

    The checks are: each path is a walk on distinct edges, joins a source
    to a sink of its demand class, and no edge is used twice; each class
    receives exactly its count of paths; paths of non-exempt classes do not
    cross at non-crossing vertices.
    """
    graph = instance.graph
    violations = []
    well_formed = []

    for i, path in enumerate(routing):

        if not (0 <= path.demand < len(instance.demands)):
            violations.append(Violation('unknown-demand', (i,), f"demand class {path.demand} does not exist."))
            continue

        if len(path.edges) == 0:
            violations.append(Violation('empty-path', (i,), "a path must use at least one edge."))
            continue

        try:
            vertices = vertex_sequence(graph, path)
        except MalformedRoutingError as e:
            violations.append(Violation('non-consecutive', (i,), str(e)))
            continue

        repeated = sorted(e for e, n in Counter(path.edges).items() if n > 1)
        if len(repeated) > 0:
            violations.append(Violation('repeated-edge', (i,), f"edges {repeated} appear more than once."))

        cls = instance.demands[path.demand]
        s, t = vertices[0], vertices[-1]
        forward = (s in cls.sources) and (t in cls.sinks)
        backward = (not graph.directed) and (t in cls.sources) and (s in cls.sinks)
        if not (forward or backward):
            violations.append(Violation('wrong-endpoints', (i,), f"path joins {s} and {t}, which do not match its demand class."))

        well_formed.append(i)

    counts = Counter(path.demand for path in routing)
    for k, cls in enumerate(instance.demands):
        if counts[k] != cls.count:
            violations.append(Violation('wrong-count', tuple(routing.of_demand(k)), f"class {k} requests {cls.count} paths, but {counts[k]} are assigned."))

    owners = {}
    for i in well_formed:
        for e in set(routing[i].edges):
            owners.setdefault(e, []).append(i)
    for e, paths in owners.items():
        if len(paths) > 1:
            violations.append(Violation('shared-edge', tuple(paths), f"edge {e} is used by more than one path."))

    subrouting = Routing(routing[i] for i in well_formed)
    for c in detect_crossings(graph, subrouting, vertices=graph.noncrossing):
        i, j = well_formed[c.path_a], well_formed[c.path_b]
        if instance.demands[routing[i].demand].crossing_exempt or instance.demands[routing[j].demand].crossing_exempt:
            continue
        violations.append(Violation('crossing', (i, j), f"paths cross at non-crossing vertex {c.vertex}."))

    return ValidationReport(violations=tuple(violations))
