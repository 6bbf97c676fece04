from typing import Dict

from .gadget import Gadget, build_gadget, resolve_kind
from hardpaths.graphs import Routing
from hardpaths.solver import Automorphism, map_routing
from hardpaths.utils import hardpaths_err_header


_MIRROR_PAIRS = (
    ('s1', 's4'), ('s2', 's3'), ("s'1", "s'4"), ("s'2", "s'3"), ('t1', "t'1"), ('t2', "t'2"),
    ('u1', 'u4'), ('u2', 'u3'), ('u5', 'u6'), ('u7', 'u8'), ('u9', 'u12'), ('u10', 'u11'), ('b', 'c'),
    ('a', 'a'), ('d', 'd'),
)


def mirror_map(kind: str) -> Dict[str, str]:
    """The left-right reflection of XCH and LIC, as a vertex bijection."""
    kind = resolve_kind(kind)
    if kind not in ('XCH', 'LIC'):
        raise ValueError(hardpaths_err_header(obj_name='mirror_map') + f"only XCH and LIC are mirror-symmetric, not {kind}.")
    mapping = {}
    for u, v in _MIRROR_PAIRS:
        mapping[u] = v
        mapping[v] = u
    return mapping


def gadget_mirror(kind: str) -> Automorphism:
    """The reflection of ``kind``, extended to its edges."""
    vmap = mirror_map(kind)
    graph = build_gadget(kind).graph
    by_extremities = {frozenset(uv): e for e, uv in graph.edges.items()}
    emap = {e: by_extremities[frozenset((vmap[u], vmap[v]))] for e, (u, v) in graph.edges.items()}
    return Automorphism(vertices=vmap, edges=emap)


def mirror_routing(gadget: Gadget, routing: Routing) -> Routing:
    """The reflection of ``routing``; each path starts at the image of its
    start."""
    return map_routing(gadget_mirror(gadget.kind), routing)
