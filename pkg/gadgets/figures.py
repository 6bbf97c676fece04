"""Hand-drawn routings over the gadgets.

Each figure routing lists its paths as vertex sequences together with the
index of the demand class they serve; ``spec`` names the demand
specification (see ``hardpaths.grids.LEMMA_SPECS``) the routing answers.
"""

from typing import NamedTuple, Tuple, Dict

from .gadget import build_gadget
from hardpaths.graphs import RotationGraph, RotationGraphBuilder, Path, Routing, path_from_vertices
from hardpaths.utils import hardpaths_err_header


class FigureRouting(NamedTuple):
    kind:  str
    spec:  str
    paths: Tuple[Tuple[int, Tuple[str, ...]], ...]


FIGURES: Dict[str, FigureRouting] = {
    # the two vertical paths leave on the opposite side
    'xch_shift': FigureRouting(kind='XCH', spec='xch_22', paths=(
        (0, ('s1', 'u1', 'u2', 'u5', 'b', 'd', 'u11', "s'3")),
        (0, ('s2', 'u2', 'a', 'c', 'u8', 'u11', 'u12', "s'4")),
        (1, ('t1', 'u1', 'u5', 'u7', 'b', 'a', 'u3', 'u4', "t'1")),
        (1, ('t2', 'u9', 'u10', 'd', 'c', 'u6', 'u8', 'u12', "t'2")),
    )),
    # a single horizontal path lets the vertical paths stay on their side
    'lic_keep_left': FigureRouting(kind='LIC', spec='lic_12_left', paths=(
        (0, ('t1', 'u1', 'u5', 'b', 'a', 'u3', 'u4', "t'1")),
        (1, ('s1', 'u1', 'u2', 'u5', 'u7', 'u9', "s'1")),
        (2, ('s2', 'u2', 'a', 'c', 'd', 'u10', "s'2")),
    )),
    'lic_keep_left_alt': FigureRouting(kind='LIC', spec='lic_12_left', paths=(
        (0, ('t1', 'u1', 'u5', 'b', 'd', 'u11', 'u12', "t'2")),
        (1, ('s1', 'u1', 'u2', 'u5', 'u7', 'u9', "s'1")),
        (2, ('s2', 'u2', 'a', 'c', 'd', 'u10', "s'2")),
    )),
    'lic_keep_right': FigureRouting(kind='LIC', spec='lic_12_right', paths=(
        (0, ('t1', 'u1', 'u2', 'a', 'c', 'u6', 'u4', "t'1")),
        (1, ('s3', 'u3', 'a', 'b', 'd', 'u11', "s'3")),
        (2, ('s4', 'u4', 'u3', 'u6', 'u8', 'u12', "s'4")),
    )),
}


def figure_routing(figure_id: str) -> Routing:
    """The routing drawn in figure ``figure_id``, over ``build_gadget``."""
    try:
        figure = FIGURES[figure_id]
    except KeyError:
        raise ValueError(hardpaths_err_header(obj_name='figure_routing') + f"unknown figure {figure_id!r}; expected one of {sorted(FIGURES.keys())}.")
    graph = build_gadget(figure.kind).graph
    return Routing(path_from_vertices(graph, demand, vertices) for demand, vertices in figure.paths)


# -- CROSSING CONFIGURATIONS -- #

# two paths through a vertex with four neighbours on the diagonals
_CONFIGURATIONS = {
    'left': {
        'centre': (8, 17),
        'paths': (((10, 15), (10, 19)), ((6, 15), (6, 19))),
    },
    'right': {
        'centre': (15, 17),
        'paths': (((13, 15), (17, 19)), ((13, 19), (17, 15))),
    },
}


def _point(xy: Tuple[int, int]) -> str:
    return f"p({xy[0]},{xy[1]})"


def crossing_configuration(side: str) -> Tuple[RotationGraph, Routing]:
    """One of the two elementary configurations of two paths sharing a
    vertex: on the ``left`` they touch without crossing, on the ``right``
    they cross."""
    try:
        configuration = _CONFIGURATIONS[side]
    except KeyError:
        raise ValueError(hardpaths_err_header(obj_name='crossing_configuration') + f"unknown configuration {side!r}; expected 'left' or 'right'.")

    centre = _point(configuration['centre'])
    builder = RotationGraphBuilder()
    builder.add_vertex(centre, label=str(configuration['centre']), position=tuple(float(c) for c in configuration['centre']))
    for ends in configuration['paths']:
        for xy in ends:
            builder.add_vertex(_point(xy), label=str(xy), position=tuple(float(c) for c in xy))
            builder.add_edge(f"{centre}-{_point(xy)}", centre, _point(xy))
    graph = builder.build()

    routing = Routing(path_from_vertices(graph, k, (_point(first), centre, _point(second))) for k, (first, second) in enumerate(configuration['paths']))
    return graph, routing
