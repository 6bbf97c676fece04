"""Small graphs and instances for tests and the exhaustive cross-checks."""

import random
from typing import Optional, List

from .rotationgraph import RotationGraph, RotationGraphBuilder
from .instance import DemandClass, Instance


def grid_vertex(x: int, y: int) -> str:
    return f"v{x}.{y}"


def grid_graph(columns: int, rows: int, directed: bool = False, noncrossing: bool = False) -> RotationGraph:
    """A ``columns`` x ``rows`` lattice with geometric rotations.

    Edges are named ``<u>-<v>``; arcs point right and up. If
    ``noncrossing`` is set, every degree-4 vertex is non-crossing.
    """
    builder = RotationGraphBuilder(directed=directed)
    for y in range(0, rows):
        for x in range(0, columns):
            builder.add_vertex(grid_vertex(x, y), position=(float(x), float(y)))
    for y in range(0, rows):
        for x in range(0, columns):
            u = grid_vertex(x, y)
            if x + 1 < columns:
                v = grid_vertex(x + 1, y)
                builder.add_edge(f"{u}-{v}", u, v)
            if y + 1 < rows:
                v = grid_vertex(x, y + 1)
                builder.add_edge(f"{u}-{v}", u, v)
    if noncrossing:
        builder.set_noncrossing(v for v in builder.vertices if len(builder.incident(v)) == 4)
    return builder.build()


HUB = grid_vertex(1, 1)


def random_instance(rng: random.Random,
                    max_edges:   int = 10,
                    directed:    bool = False,
                    noncrossing: Optional[bool] = None,
                    n_classes:   Optional[int] = None,
                    hub:         bool = False) -> Instance:
    """A random instance on a 3 x 3 lattice thinned to ``max_edges`` edges.

    Degree-4 vertices are made non-crossing with probability one half
    (or always/never when ``noncrossing`` is given). Demand classes join
    random vertex sets and request one or two paths each.

    With ``hub``, the centre ``HUB`` keeps its four edges, is non-crossing
    and is never a demand endpoint.
    """
    lattice = grid_graph(3, 3)
    edges: List[str] = list(lattice.edges.keys())
    if hub:
        spokes = set(lattice.incident(HUB))
        others = [e for e in edges if e not in spokes]
        kept = spokes | set(rng.sample(others, min(max(max_edges - len(spokes), 0), len(others))))
    else:
        kept = set(rng.sample(edges, min(max_edges, len(edges))))

    builder = RotationGraphBuilder(directed=directed)
    for v in lattice.vertices:
        builder.add_vertex(v, position=lattice.positions[v])
    for e in edges:
        if e not in kept:
            continue
        u, v = lattice.edges[e]
        if directed and rng.random() < 0.5:
            u, v = v, u
        builder.add_edge(e, u, v)

    make_noncrossing = (rng.random() < 0.5) if noncrossing is None else noncrossing
    if make_noncrossing:
        builder.set_noncrossing(v for v in lattice.vertices if len(builder.incident(v)) == 4)
    elif hub:
        builder.set_noncrossing({HUB})

    graph = builder.build()
    vertices = [v for v in graph.vertices if not (hub and v == HUB)]
    n_classes = rng.randint(1, 3) if n_classes is None else n_classes

    demands = []
    for k in range(0, n_classes):
        sources = rng.sample(vertices, rng.randint(1, 2))
        sinks = rng.sample([v for v in vertices if v not in sources], rng.randint(1, 2))
        demands.append(DemandClass.of(sources, sinks, count=rng.randint(1, 2), crossing_exempt=(rng.random() < 0.2), name=f"c{k}"))

    return Instance(graph, demands)
