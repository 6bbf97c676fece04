"""Reductions from 3-SAT to edge-disjoint paths.

``undirected`` compiles a formula into a planar undirected instance with
two demand classes; ``directed`` compiles it into a directed acyclic
instance with two demand classes and derives the single-class and
two-terminal variants from it.

"""

from .cnf import Assignment, CnfFormula, assignment_from_literals, random_3cnf, small_formulas
from .report import Finding, StructureReport
