"""Grids of gadgets.

A ``GridSpec`` arranges gadgets in rows and columns; ``build_grid``
stitches them into one rotation graph and returns the ``CutRegistry`` that
addresses its cells, its vertical and horizontal cuts and its boundary
stubs. ``standard_demand`` turns demand specifications written over the
boundary into instances.

"""

from .gridspec import CellSpecType, resolve_cellspec, GridSpec
from .builder import BOUNDARY_PREFIXES, CellView, CutRegistry, GridSpecType, cell_prefix, build_grid, cell, as_gadget
from .demands import DemandTerm, LEMMA_SPECS, resolve_stub, resolve_group, standard_demand
