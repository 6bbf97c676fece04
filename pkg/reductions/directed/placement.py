"""Fill the cells of a directed grid that no rule fixes.

Paths cross a directed gadget on one track (a single port per side) or on
two tracks (two ports per side). Walking the grid row by row, the arity of
the bottom side of each cell must equal the arity of the top side of the
cell below it, and similarly from left to right. The grid boundary has
arity one everywhere, as the terminals attach one arc per row and per
column.
"""

from typing import Dict, Mapping, Sequence, List, Tuple, Union

from hardpaths.gadgets import SIDES, Gadget, build_gadget
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import PlacementError


FILLER_KINDS = ('NO', 'ON')


def arity(gadget: Gadget) -> Dict[str, int]:
    return {side: len(gadget.ports.sides[side]) for side in SIDES}


def place_fillers(columns:        int,
                  rows:           int,
                  fixed:          Mapping[Tuple[int, int], Gadget],
                  fillers:        Sequence[str] = FILLER_KINDS,
                  boundary_arity: int = 1) -> List[List[Union[str, Gadget]]]:
    """Complete ``fixed`` into a ``rows`` x ``columns`` layout.

    Each free cell takes the first kind in ``fillers`` whose top and left
    arities match its neighbours. A fixed cell that does not match, a free
    cell that no filler matches, or a grid side that does not end with
    ``boundary_arity`` raises a ``PlacementError`` naming the boundary.
    """
    candidates = [(kind, arity(build_gadget(kind))) for kind in fillers]

    layout: List[List[Union[str, Gadget]]] = [[None] * columns for _ in range(0, rows)]
    above = {c: boundary_arity for c in range(1, columns + 1)}
    for r in range(1, rows + 1):
        left = boundary_arity
        for c in range(1, columns + 1):
            top = above[c]
            if (c, r) in fixed:
                gadget = fixed[(c, r)]
                arities = arity(gadget)
                if arities['top'] != top:
                    raise PlacementError(hardpaths_err_header(obj_name='place_fillers') + f"the top boundary of cell ({c},{r}) carries {top} track(s), but {gadget.kind} has {arities['top']} port(s) there.")
                if arities['left'] != left:
                    raise PlacementError(hardpaths_err_header(obj_name='place_fillers') + f"the left boundary of cell ({c},{r}) carries {left} track(s), but {gadget.kind} has {arities['left']} port(s) there.")
                layout[r - 1][c - 1] = gadget
            else:
                matching = [(kind, arities) for kind, arities in candidates if arities['top'] == top and arities['left'] == left]
                if len(matching) == 0:
                    raise PlacementError(hardpaths_err_header(obj_name='place_fillers') + f"no filler among {tuple(fillers)} has {top} top and {left} left port(s), as cell ({c},{r}) requires.")
                kind, arities = matching[0]
                layout[r - 1][c - 1] = kind
            above[c] = arities['bottom']
            left = arities['right']
        if left != boundary_arity:
            raise PlacementError(hardpaths_err_header(obj_name='place_fillers') + f"the right boundary of row {r} carries {left} track(s) instead of {boundary_arity}.")

    for c in range(1, columns + 1):
        if above[c] != boundary_arity:
            raise PlacementError(hardpaths_err_header(obj_name='place_fillers') + f"the bottom boundary of column {c} carries {above[c]} track(s) instead of {boundary_arity}.")

    return layout
