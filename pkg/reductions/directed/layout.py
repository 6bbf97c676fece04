from __future__ import annotations

from typing import NamedTuple, Optional, Dict, Tuple, List, FrozenSet

from hardpaths.grids import CutRegistry
from hardpaths.reductions.cnf import CnfFormula, Assignment
from hardpaths.utils import hardpaths_err_header


Cell = Tuple[int, int]

S1, S2, T1, T2 = 's1', 's2', 't1', 't2'

# kind reported by the registry for the cells holding two rows of the clause grid
PAIR_KIND = 'G1'

SPECIAL_KINDS = ('IF', 'TT', 'LL', 'VV')


class DirectedLayout(NamedTuple):
    """The arithmetic of the acyclic reduction of a formula with ``n``
    clauses over ``p`` variables.

    The grid has ``2p + n`` columns and ``2p`` rows. Its columns ``p + 1``
    to ``p + n`` and rows ``1`` to ``p`` hold the clause grid, whose rows
    ``2i - 1`` and ``2i`` (positive and negative occurrences of variable
    ``i``) share grid row ``i``. The track locks IF, TT, LL and VV sit on
    four diagonals around it.
    """
    formula:  CnfFormula
    registry: Optional[CutRegistry] = None
    # registries of the two-cell composites of the clause grid, by grid cell
    pairs:    Optional[Dict[Cell, CutRegistry]] = None

    @property
    def n(self) -> int:
        return self.formula.n_clauses

    @property
    def p(self) -> int:
        return self.formula.n_variables

    @property
    def columns(self) -> int:
        return 2 * self.p + self.n

    @property
    def rows(self) -> int:
        return 2 * self.p

    @property
    def horizontal_demand(self) -> int:
        return 2 * self.p

    @property
    def vertical_demand(self) -> int:
        return 2 * self.p + self.n

    def cuts(self) -> Tuple[FrozenSet[str], ...]:
        """Vertex sets for cut pruning on the compiled instance: the cells
        of columns ``1..i`` with ``s1``, which the row paths leave through
        the ``i``-th vertical cut, and the cells of rows ``1..j`` with
        ``t1``, which the column paths leave through the ``j``-th
        horizontal cut."""
        if self.registry is None:
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + "the layout has not been compiled yet.")
        columns = tuple(self.registry.columns_upto(i) | {S1} for i in range(1, self.columns))
        rows = tuple(self.registry.rows_upto(j) | {T1} for j in range(1, self.rows))
        return columns + rows

    def g1_kind(self, g1_row: int, clause: int) -> str:
        """YES where the literal of row ``g1_row`` occurs in clause
        ``clause`` (1-based), NO elsewhere."""
        if not (1 <= g1_row <= 2 * self.p and 1 <= clause <= self.n):
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"there is no cell ({g1_row},{clause}) in the clause grid.")
        variable = (g1_row + 1) // 2
        return 'YES' if self.formula.occurs(variable, clause - 1, positive=(g1_row % 2 == 1)) else 'NO'

    def g1_layout(self) -> List[List[str]]:
        return [[self.g1_kind(k, j) for j in range(1, self.n + 1)] for k in range(1, 2 * self.p + 1)]

    def g1_position(self, g1_row: int, clause: int) -> Tuple[int, int, int]:
        """The grid cell holding clause-grid cell ``(g1_row, clause)``, and
        the row (1 or 2) it occupies inside the composite."""
        return self.p + clause, (g1_row + 1) // 2, 1 if g1_row % 2 == 1 else 2

    def is_g1(self, column: int, row: int) -> bool:
        return self.p < column <= self.p + self.n and 1 <= row <= self.p

    def special_cells(self) -> Dict[Cell, str]:
        cells = {}
        for i in range(1, self.p + 1):
            cells[(i, i)] = 'IF'
            cells[(self.n + self.p + i, self.p + 1 - i)] = 'TT'
            cells[(i, 2 * self.p + 1 - i)] = 'LL'
            cells[(self.n + self.p + i, self.p + i)] = 'VV'
        return cells

    def switch_row(self, clause: int, assignment: Assignment) -> Optional[int]:
        """The clause-grid row where the path of column ``clause`` moves
        from the ``c`` track to the ``b`` track: the row of the first
        literal of the clause satisfied by ``assignment``."""
        literal = self.formula.first_satisfied_literal(clause - 1, assignment)
        if literal is None:
            return None
        return 2 * abs(literal) - 1 if literal > 0 else 2 * abs(literal)


def make_directed_layout(formula: CnfFormula) -> DirectedLayout:
    if formula.n_clauses == 0 or formula.n_variables == 0:
        raise ValueError(hardpaths_err_header(obj_name='make_directed_layout') + "the formula needs at least one clause and one variable.")
    return DirectedLayout(formula=formula)
