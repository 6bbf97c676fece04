"""Crossings between paths at a vertex, and their removal.

Two edge-disjoint paths cross at a vertex ``v`` when the two edges one of
them uses at ``v`` separate, in the rotation at ``v``, the two edges the
other one uses there.
"""

from collections import Counter
from typing import NamedTuple, Tuple, List, Dict, Optional, Iterable, FrozenSet

from .rotationgraph import RotationGraph
from .instance import Path, Routing, vertex_sequence, reverse_path
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import PreconditionError, InternalError


# -- PREDICATES -- #

def interleaved(index: Dict[str, int], e1: str, e2: str, f1: str, f2: str) -> bool:
    """Decide whether the chord ``{f1, f2}`` separates the chord
    ``{e1, e2}`` in a cyclic order.

    ``index`` maps each edge incident to the vertex to its position in the
    rotation (see ``RotationGraph.rotation_index``).
    """
    lo, hi = sorted((index[e1], index[e2]))
    inside = (lo < index[f1] < hi) + (lo < index[f2] < hi)
    return inside == 1


class Passage(NamedTuple):
    """A path going through ``vertex`` on edges ``edges[position - 1]`` and
    ``edges[position]``."""
    vertex:   str
    position: int
    e_in:     str
    e_out:    str


def passages(graph: RotationGraph, path: Path) -> List[Passage]:
    """The interior vertices of ``path``, one entry per visit.

    A path terminating at a vertex only uses one of its edges there, so it
    never crosses anything at its extremities.
    """
    vertices = vertex_sequence(graph, path)
    return [Passage(vertex=vertices[k], position=k, e_in=path.edges[k - 1], e_out=path.edges[k]) for k in range(1, len(path.edges))]


# -- DETECTION -- #

class Crossing(NamedTuple):
    path_a:     int
    path_b:     int
    vertex:     str
    position_a: int
    position_b: int


def _crossings_between(graph: RotationGraph, pa: List[Passage], pb: List[Passage], i: int, j: int, vertices: Optional[FrozenSet[str]]) -> List[Crossing]:

    by_vertex: Dict[str, List[Passage]] = {}
    for q in pb:
        by_vertex.setdefault(q.vertex, []).append(q)

    found = []
    for p in pa:
        if (vertices is not None) and (p.vertex not in vertices):
            continue
        for q in by_vertex.get(p.vertex, ()):
            index = graph.rotation_index(p.vertex)
            if interleaved(index, p.e_in, p.e_out, q.e_in, q.e_out):
                found.append(Crossing(path_a=i, path_b=j, vertex=p.vertex, position_a=p.position, position_b=q.position))
    return found


def detect_crossings(graph: RotationGraph, routing: Routing, vertices: Optional[Iterable[str]] = None) -> List[Crossing]:
    """Every crossing between two distinct paths of ``routing``.

    Crossings are listed by pair of path indices (``path_a < path_b``),
    then by position along ``path_a``. Passing ``vertices`` restricts the
    search to those vertices.
    """
    vertices = None if vertices is None else frozenset(vertices)
    all_passages = [passages(graph, path) for path in routing]

    crossings = []
    for i in range(0, len(routing)):
        for j in range(i + 1, len(routing)):
            crossings.extend(_crossings_between(graph, all_passages[i], all_passages[j], i, j, vertices))
    return crossings


def crossing_counts(graph: RotationGraph, routing: Routing) -> Counter:
    """The number of crossings of each pair ``(i, j)`` with ``i < j``."""
    return Counter((c.path_a, c.path_b) for c in detect_crossings(graph, routing))


def total_crossings(graph: RotationGraph, routing: Routing) -> int:
    return len(detect_crossings(graph, routing))


def extremities(graph: RotationGraph, path: Path) -> Tuple[str, str]:
    vertices = vertex_sequence(graph, path)
    return vertices[0], vertices[-1]


def same_extremities(graph: RotationGraph, p: Path, q: Path) -> bool:
    return sorted(extremities(graph, p)) == sorted(extremities(graph, q))


# -- UNCROSSING -- #

def _offending_pair(graph: RotationGraph, routing: Routing) -> Optional[Tuple[int, int]]:
    """The lexicographically smallest pair of paths that crosses too often."""
    counts = crossing_counts(graph, routing)
    for (i, j) in sorted(counts.keys()):
        if counts[(i, j)] > 1:
            return i, j
        if same_extremities(graph, routing[i], routing[j]):
            return i, j
    return None


def _exchange(graph: RotationGraph, p: Path, q: Path) -> Tuple[Path, Path]:
    """Swap segments of ``p`` and ``q`` between their first two crossings
    along ``p``; if they share their extremities, swap tails at the first
    crossing instead."""

    if same_extremities(graph, p, q):
        reoriented = extremities(graph, p)[0] != extremities(graph, q)[0]
        if reoriented:
            q = reverse_path(graph, q)
        c = min(_crossings_between(graph, passages(graph, p), passages(graph, q), 0, 1, None), key=lambda c: c.position_a)
        a, b = c.position_a, c.position_b
        new_p = Path(demand=p.demand, edges=p.edges[:a] + q.edges[b:], start=p.start)
        new_q = Path(demand=q.demand, edges=q.edges[:b] + p.edges[a:], start=q.start)
        if reoriented:
            new_q = reverse_path(graph, new_q)
        return new_p, new_q

    first, second = sorted(_crossings_between(graph, passages(graph, p), passages(graph, q), 0, 1, None), key=lambda c: c.position_a)[:2]
    a1, b1 = first.position_a, first.position_b
    a2, b2 = second.position_a, second.position_b

    if b1 < b2:
        new_p = p.edges[:a1] + q.edges[b1:b2] + p.edges[a2:]
        new_q = q.edges[:b1] + p.edges[a1:a2] + q.edges[b2:]
    else:
        new_p = p.edges[:a1] + tuple(reversed(q.edges[b2:b1])) + p.edges[a2:]
        new_q = q.edges[:b2] + tuple(reversed(p.edges[a1:a2])) + q.edges[b1:]

    return Path(demand=p.demand, edges=new_p, start=p.start), Path(demand=q.demand, edges=new_q, start=q.start)


def uncross(graph: RotationGraph, routing: Routing) -> Routing:
    """Exchange path segments until each pair of paths crosses at most
    once, and paths with the same extremities do not cross at all.

    Every exchange keeps the multiset of used edges, the extremities and
    the demand class of every path, and strictly decreases the total
    number of crossings.
    """
    if graph.directed:
        raise PreconditionError(hardpaths_err_header(obj_name='uncross') + "segment exchanges reverse edges, so they are only defined on undirected graphs.")

    routing = Routing(routing)
    total = total_crossings(graph, routing)

    while True:
        pair = _offending_pair(graph, routing)
        if pair is None:
            return routing

        i, j = pair
        routing[i], routing[j] = _exchange(graph, routing[i], routing[j])

        new_total = total_crossings(graph, routing)
        if new_total >= total:
            raise InternalError(hardpaths_err_header(obj_name='uncross') + f"exchanging segments of paths {i} and {j} did not decrease the number of crossings ({total} -> {new_total}).")
        total = new_total


def is_uncrossed(graph: RotationGraph, routing: Routing) -> bool:
    return _offending_pair(graph, routing) is None


# -- ORDER OF CROSSINGS -- #

class CrossingOrder(NamedTuple):
    sequences:  Dict[int, Tuple[int, ...]]
    consistent: bool


def crossing_order(graph: RotationGraph, routing: Routing, class_a: int, class_b: int) -> CrossingOrder:
    """For each path of class ``class_a``, the paths of class ``class_b``
    it crosses, in traversal order."""

    if not is_uncrossed(graph, routing):
        raise PreconditionError(hardpaths_err_header(obj_name='crossing_order') + "the routing has a pair of paths crossing more than once; uncross it first.")

    crossings = detect_crossings(graph, routing)
    sequences = {}
    for i in routing.of_demand(class_a):
        seen = []
        for c in crossings:
            if c.path_a == i and routing[c.path_b].demand == class_b:
                seen.append((c.position_a, c.path_b))
            elif c.path_b == i and routing[c.path_a].demand == class_b:
                seen.append((c.position_b, c.path_a))
        sequences[i] = tuple(j for _, j in sorted(seen))

    consistent = len(set(sequences.values())) <= 1
    return CrossingOrder(sequences=sequences, consistent=consistent)
