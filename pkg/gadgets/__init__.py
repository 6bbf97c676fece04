"""The gadget graphs of the two reductions.

Two undirected gadgets (XCH, LIC) carry the planar reduction; seven
directed ones (YES, NO, ON, IF, LL, TT, VV) carry the acyclic reduction.
Every gadget is a rotation graph whose boundary consists of degree-one
port stubs, grouped by side.

"""

from .tables import GadgetTable, TABLES, UNDIRECTED_KINDS, DIRECTED_KINDS
from .gadget import SIDES, GADGET_KINDS, PortMap, Gadget, edge_id, gadget_from_table, resolve_kind
from .gadget import build_gadget, register_gadget_cache, mutated_table
from .figures import FigureRouting, FIGURES, figure_routing, crossing_configuration
from .mirror import mirror_map, gadget_mirror, mirror_routing
from .reachability import PortPairs, port_instance, gadget_routing, gadget_reachability
