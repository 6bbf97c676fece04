from __future__ import annotations

from typing import NamedTuple, Optional, Tuple, FrozenSet

from hardpaths.grids import CutRegistry
from hardpaths.reductions.cnf import CnfFormula, Assignment
from hardpaths.utils import hardpaths_err_header


X, X_PRIME, Y, Y_PRIME = 'x', "x'", 'y', "y'"


def w_vertex(i: int) -> str:
    return f"w{i}"


def w_prime_vertex(i: int) -> str:
    return f"w'{i}"


class ReductionLayout(NamedTuple):
    """The arithmetic of the planar reduction of a formula.

    The grid has one column per clause and ``p = 2 p' (q + 1)`` rows, where
    ``q = 4 (p' + 3) n + 2`` is the height of the buffers. Variable ``i``
    owns a true-row and a false-row; the rows between them, bounds
    included, form its band, whose left and right stubs are attached to
    ``w_i`` and ``w'_i``.
    """
    formula:  CnfFormula
    q:        int
    p:        int
    relaxed:  bool = False
    registry: Optional[CutRegistry] = None

    @property
    def n(self) -> int:
        return self.formula.n_clauses

    @property
    def n_variables(self) -> int:
        return self.formula.n_variables

    def check_variable(self, i: int) -> None:
        if not (1 <= i <= self.n_variables):
            raise ValueError(hardpaths_err_header(obj_name='ReductionLayout') + f"there is no variable {i}.")

    def true_row(self, i: int) -> int:
        self.check_variable(i)
        return 1 + 2 * (i - 1) * (1 + self.q)

    def false_row(self, i: int) -> int:
        self.check_variable(i)
        return self.q + 2 + 2 * (i - 1) * (1 + self.q)

    def chosen_row(self, i: int, assignment: Assignment) -> int:
        """The row where variable ``i`` lets a single horizontal path
        through."""
        return self.true_row(i) if assignment[i - 1] else self.false_row(i)

    def band(self, i: int) -> Tuple[int, int]:
        return self.true_row(i), self.false_row(i)

    def band_of(self, row: int) -> Optional[int]:
        """The variable whose band contains ``row``, if any."""
        for i in range(1, self.n_variables + 1):
            top, bottom = self.band(i)
            if top <= row <= bottom:
                return i
        return None

    def w_stubs(self, i: int) -> Tuple[int, ...]:
        """Indices ``j`` of the stubs ``y_j`` (and ``y'_j``) joined to
        ``w_i`` (and ``w'_i``)."""
        first = 4 * (i - 1) * (self.q + 1) + 1
        return tuple(range(first, first + 2 * self.q + 4))

    @property
    def multiplicity(self) -> int:
        """The number of parallel edges between ``y`` and each ``w_i``."""
        return 2 * self.q + 3

    def literal_cell(self, column: int, literal: int) -> Tuple[int, int]:
        """The cell of the grid where ``literal`` of clause ``column`` is
        encoded."""
        i = abs(literal)
        return column, self.true_row(i) if literal > 0 else self.false_row(i)

    def lic_cells(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(self.literal_cell(j, literal) for j, clause in enumerate(self.formula.clauses, start=1) for literal in clause)

    def is_lic(self, column: int, row: int) -> bool:
        return (column, row) in self.lic_cells()

    @property
    def horizontal_demand(self) -> int:
        return 2 * self.p - self.n_variables

    @property
    def vertical_demand(self) -> int:
        return 2 * self.n

    def size_bound(self) -> int:
        return size_bound(self)


def make_layout(formula: CnfFormula, relaxed: bool = False) -> ReductionLayout:
    if not relaxed:
        formula.check_regime()
    if formula.n_clauses == 0 or formula.n_variables == 0:
        raise ValueError(hardpaths_err_header(obj_name='make_layout') + "the formula needs at least one clause and one variable.")
    q = 4 * (formula.n_variables + 3) * formula.n_clauses + 2
    p = 2 * formula.n_variables * (q + 1)
    return ReductionLayout(formula=formula, q=q, p=p, relaxed=relaxed)


def size_bound(layout: ReductionLayout) -> int:
    """An upper bound on the number of vertices of the compiled graph."""
    return 30 * layout.n * layout.p + 4 * layout.n_variables + 4
