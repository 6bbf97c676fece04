"""Rotation graphs, routing instances and the operations defined on them.

A ``RotationGraph`` is a loopless multigraph whose vertices carry a cyclic
order of their incident edges; on top of it this namespace defines demand
classes and instances, routings, cuts and tight cuts, crossings between
paths and the validation of candidate solutions.

"""

from .rotationgraph import Edge, Position, RotationGraph, RotationGraphBuilder, counterclockwise_order
from .instance import DemandClass, Instance, Path, Routing, vertex_sequence, reverse_path, path_from_vertices
from .cuts import Cut, delta, crossing_demand, TightnessReport, is_tight
from .crossings import interleaved, Passage, passages, Crossing, detect_crossings, crossing_counts, total_crossings
from .crossings import extremities, same_extremities, uncross, is_uncrossed, CrossingOrder, crossing_order
from .validation import Violation, ValidationReport, validate_routing
from .generators import grid_vertex, grid_graph, random_instance, HUB
