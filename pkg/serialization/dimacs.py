from typing import List

from hardpaths.reductions.cnf import CnfFormula
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import DimacsParseError


def _error(line_number: int, message: str) -> DimacsParseError:
    return DimacsParseError(hardpaths_err_header(obj_name='parse_dimacs') + f"line {line_number}: {message}")


def parse_dimacs(text: str) -> CnfFormula:
    """Read a formula in DIMACS CNF.

    ``c`` lines are comments; the ``p cnf <variables> <clauses>`` header
    must precede the clauses, which are sequences of non-zero literals
    terminated by ``0`` and may span several lines. A ``%`` line ends the
    input.
    """
    n_variables, n_clauses = None, None
    clauses: List[List[int]] = []
    current: List[int] = []

    line_number = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line == '' or line.startswith('c'):
            continue
        if line.startswith('%'):
            break
        if line.startswith('p'):
            if n_variables is not None:
                raise _error(line_number, "second problem line.")
            parts = line.split()
            if len(parts) != 4 or parts[1] != 'cnf':
                raise _error(line_number, f"malformed problem line {line!r}; expected 'p cnf <variables> <clauses>'.")
            try:
                n_variables, n_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise _error(line_number, f"malformed problem line {line!r}.")
            if n_variables < 0 or n_clauses < 0:
                raise _error(line_number, "negative counts in the problem line.")
            continue

        if n_variables is None:
            raise _error(line_number, "clause before the problem line.")
        for token in line.split():
            try:
                literal = int(token)
            except ValueError:
                raise _error(line_number, f"{token!r} is not a literal.")
            if literal == 0:
                if len(current) == 0:
                    raise _error(line_number, "empty clause.")
                clauses.append(current)
                current = []
            elif abs(literal) > n_variables:
                raise _error(line_number, f"variable {abs(literal)} is out of range (the formula has {n_variables} variables).")
            else:
                current.append(literal)

    if n_variables is None:
        raise _error(line_number, "missing problem line.")
    if len(current) > 0:
        raise _error(line_number, "the last clause is not terminated by 0.")
    if len(clauses) != n_clauses:
        raise _error(line_number, f"the problem line announces {n_clauses} clauses, but {len(clauses)} were given.")

    return CnfFormula.of(n_variables, clauses)


def format_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.n_variables} {formula.n_clauses}"]
    lines += [' '.join(str(literal) for literal in clause) + ' 0' for clause in formula.clauses]
    return '\n'.join(lines) + '\n'
