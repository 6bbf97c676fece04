"""The reduction from satisfiability to arc-disjoint paths in acyclic
digraphs.

``compile_g1`` builds the clause grid of YES/NO cells and ``compile_full``
surrounds it with the track locks and the NO/ON fillers and attaches the
four terminals. ``identify_terminals`` and ``corollary_transform`` derive
the two-terminal and the one-path variants. The structural checks, the
claim checks on the clause grid and on the isolated locks, and the witness
built from a satisfying assignment complete the namespace.

"""

from .layout import Cell, S1, S2, T1, T2, PAIR_KIND, SPECIAL_KINDS, DirectedLayout, make_directed_layout
from .placement import FILLER_KINDS, arity, place_fillers
from .compiler import compile_g1, g1_pair, compile_full, g1_instance
from .transforms import WRAP_DEMAND, identify_terminals, wrap_arcs, corollary_transform
from .checks import claim5_check, check_identified, check_wrap_forcing, validate_directed
from .witness import VARIANTS, TrackPlan, track_plan, witness_directed, witness_g1
from .claims import Claim1Report, claim1_check, LockReport, claim2_check, claim3_check
