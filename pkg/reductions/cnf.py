from __future__ import annotations

import itertools
import random
from typing import NamedTuple, Tuple, Iterator, Optional, Iterable, Sequence

from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import RegimeError


# value of variable i at index i - 1
Assignment = Tuple[bool, ...]


class CnfFormula(NamedTuple):
    """A formula in conjunctive normal form over variables ``1..n_variables``.

    Literals are non-zero integers, negative for negated variables, as in
    the DIMACS format.
    """
    n_variables: int
    clauses:     Tuple[Tuple[int, ...], ...]

    @staticmethod
    def of(n_variables: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
        formula = CnfFormula(n_variables=n_variables, clauses=tuple(tuple(clause) for clause in clauses))
        for clause in formula.clauses:
            for literal in clause:
                if literal == 0 or abs(literal) > n_variables:
                    raise ValueError(hardpaths_err_header(obj_name='CnfFormula') + f"literal {literal} does not refer to one of the {n_variables} variables.")
        return formula

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)

    def check_regime(self) -> None:
        """Require at least three clauses over at least three variables, each
        clause made of exactly three literals."""
        if self.n_clauses < 3 or self.n_variables < 3:
            raise RegimeError(hardpaths_err_header(obj_name='CnfFormula') + f"the formula has {self.n_clauses} clauses over {self.n_variables} variables; at least 3 of each are required (use the relaxed mode for smaller formulas).")
        sizes = sorted(set(len(clause) for clause in self.clauses))
        if sizes != [3]:
            raise RegimeError(hardpaths_err_header(obj_name='CnfFormula') + f"every clause must have exactly 3 literals, but clause sizes {sizes} occur.")

    def in_regime(self) -> bool:
        try:
            self.check_regime()
        except RegimeError:
            return False
        return True

    def check_assignment(self, assignment: Sequence[bool]) -> Assignment:
        assignment = tuple(bool(value) for value in assignment)
        if len(assignment) != self.n_variables:
            raise ValueError(hardpaths_err_header(obj_name='CnfFormula') + f"the assignment gives {len(assignment)} values for {self.n_variables} variables.")
        return assignment

    def literal_value(self, literal: int, assignment: Assignment) -> bool:
        value = assignment[abs(literal) - 1]
        return value if literal > 0 else not value

    def evaluate(self, assignment: Sequence[bool]) -> bool:
        assignment = self.check_assignment(assignment)
        return all(any(self.literal_value(literal, assignment) for literal in clause) for clause in self.clauses)

    def first_satisfied_literal(self, clause: int, assignment: Sequence[bool]) -> Optional[int]:
        """The literal of clause ``clause`` (0-based) with the smallest
        variable among those the assignment makes true, or ``None``."""
        assignment = self.check_assignment(assignment)
        satisfied = [literal for literal in self.clauses[clause] if self.literal_value(literal, assignment)]
        return min(satisfied, key=abs) if len(satisfied) > 0 else None

    def satisfying_assignments(self) -> Iterator[Assignment]:
        """All satisfying assignments, by exhaustive enumeration."""
        for assignment in itertools.product((False, True), repeat=self.n_variables):
            if self.evaluate(assignment):
                yield assignment

    def is_satisfiable(self) -> bool:
        return next(self.satisfying_assignments(), None) is not None

    def occurs(self, variable: int, clause: int, positive: bool) -> bool:
        return (variable if positive else -variable) in self.clauses[clause]

    def __str__(self) -> str:
        def literal(l: int) -> str:
            return f"X{l}" if l > 0 else f"~X{-l}"
        return ' & '.join('(' + ' | '.join(literal(l) for l in clause) + ')' for clause in self.clauses)


def assignment_from_literals(literals: Iterable[int], n_variables: int) -> Assignment:
    """Read an assignment given as signed variables, e.g. ``[1, -2, 3]``.

    Every variable must appear exactly once.
    """
    values = {}
    for literal in literals:
        if literal == 0 or abs(literal) > n_variables:
            raise ValueError(hardpaths_err_header(obj_name='assignment_from_literals') + f"literal {literal} does not refer to one of the {n_variables} variables.")
        if abs(literal) in values:
            raise ValueError(hardpaths_err_header(obj_name='assignment_from_literals') + f"variable {abs(literal)} is assigned twice.")
        values[abs(literal)] = literal > 0
    missing = sorted(set(range(1, n_variables + 1)).difference(values.keys()))
    if len(missing) > 0:
        raise ValueError(hardpaths_err_header(obj_name='assignment_from_literals') + f"variables {missing} have no value.")
    return tuple(values[i] for i in range(1, n_variables + 1))


def random_3cnf(n_clauses: int, n_variables: int, rng: random.Random) -> CnfFormula:
    """A random formula whose clauses each hold three distinct variables."""
    if n_variables < 3:
        raise ValueError(hardpaths_err_header(obj_name='random_3cnf') + f"three distinct variables per clause need at least 3 variables, not {n_variables}.")
    clauses = []
    for _ in range(0, n_clauses):
        variables = rng.sample(range(1, n_variables + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in sorted(variables)))
    return CnfFormula.of(n_variables, clauses)


def small_formulas(max_variables: int, max_clauses: int) -> Iterator[CnfFormula]:
    """Every formula over ``1..max_variables`` variables with ``1..max_clauses``
    distinct clauses, each a non-empty set of literals (tautologies included).

    Clauses and formulas come in a fixed order: by variable count, then by
    clause count.
    """
    for n_variables in range(1, max_variables + 1):
        literals = [l for v in range(1, n_variables + 1) for l in (v, -v)]
        clauses = [tuple(sorted(subset, key=lambda l: (abs(l), l < 0)))
                   for size in range(1, len(literals) + 1) for subset in itertools.combinations(literals, size)]
        for n_clauses in range(1, max_clauses + 1):
            for chosen in itertools.combinations(clauses, n_clauses):
                yield CnfFormula.of(n_variables, chosen)
