"""Automorphisms of routing instances."""

from typing import NamedTuple, Mapping

from hardpaths.graphs import Instance, Path, Routing, RotationGraph


class Automorphism(NamedTuple):
    """A bijection on vertices together with the induced bijection on edge
    identifiers."""
    vertices: Mapping[str, str]
    edges:    Mapping[str, str]


def _is_cyclic_reversal(mapped, target) -> bool:
    if len(mapped) != len(target):
        return False
    if len(mapped) == 0:
        return True
    reversed_target = tuple(reversed(target))
    k = reversed_target.index(mapped[0]) if mapped[0] in reversed_target else -1
    if k < 0:
        return False
    return tuple(mapped) == reversed_target[k:] + reversed_target[:k]


def is_graph_automorphism(graph: RotationGraph, automorphism: Automorphism) -> bool:
    """Decide whether ``automorphism`` maps ``graph`` onto itself.

    Both maps must be bijections on the vertex and edge sets, edges are mapped onto edges
    with the mapped extremities, the rotation of the image of a vertex is
    the reversed image of its rotation (a reflection), and the
    non-crossing set is preserved.
    """
    vmap, emap = automorphism.vertices, automorphism.edges
    if set(vmap.keys()) != set(graph.vertices) or set(vmap.values()) != set(graph.vertices):
        return False
    if set(emap.keys()) != set(graph.edges.keys()) or set(emap.values()) != set(graph.edges.keys()):
        return False

    for e, (u, v) in graph.edges.items():
        image = graph.edges[emap[e]]
        if graph.directed:
            if (image.u, image.v) != (vmap[u], vmap[v]):
                return False
        elif {image.u, image.v} != {vmap[u], vmap[v]}:
            return False

    for v in graph.vertices:
        mapped = tuple(emap[e] for e in graph.rotation[v])
        if not _is_cyclic_reversal(mapped, graph.rotation[vmap[v]]):
            return False
        if graph.is_noncrossing(v) != graph.is_noncrossing(vmap[v]):
            return False

    return True


def preserves_demands(instance: Instance, automorphism: Automorphism) -> bool:
    """Every demand class must be mapped onto itself, and no vertex may be
    both a source and a sink of one class."""
    vmap = automorphism.vertices
    for cls in instance.demands:
        if frozenset(vmap[v] for v in cls.sources) != cls.sources:
            return False
        if frozenset(vmap[v] for v in cls.sinks) != cls.sinks:
            return False
        if len(cls.sources & cls.sinks) > 0:
            return False
    return True


def map_path(automorphism: Automorphism, path: Path) -> Path:
    return Path(demand=path.demand, edges=tuple(automorphism.edges[e] for e in path.edges), start=automorphism.vertices[path.start])


def map_routing(automorphism: Automorphism, routing: Routing) -> Routing:
    return Routing(map_path(automorphism, path) for path in routing)
