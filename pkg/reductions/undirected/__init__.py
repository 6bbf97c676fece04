"""The planar reduction from 3-SAT to edge-disjoint paths with two demand
classes.

``compile_undirected`` lays out one column of XCH/LIC cells per clause and
attaches the terminals and the no-path anchors; ``validate_structure``
checks its counting facts and ``witness_undirected`` routes the instance
from a satisfying assignment.

"""

from .layout import X, X_PRIME, Y, Y_PRIME, w_vertex, w_prime_vertex, ReductionLayout, make_layout, size_bound
from .compiler import terminal_edge, parallel_edge, compile_undirected, odd_vertices, validate_structure
from .templates import ENTRY_SIDES, BEHAVIOURS, TemplateKey, Template, exit_side, template_instance, cell_template, template_keys, template_cache_build
from .witness import WitnessPlan, witness_plan, witness_undirected
