"""Mechanical verification of the gadget and grid properties the
reductions rely on.

Each ``LemmaCase`` builds small instances, settles them by exhaustive
search and checks the expected outcome; ``run_case`` runs one of them and
``run_all`` a whole ``HarnessProfile``. ``mutation_check`` removes gadget
edges one at a time and reports the cases each removal breaks.

"""

from .profiles import FAST_CASES, FULL_CASES, HarnessProfile, ProfileSpecType, resolve_profilespec
from .cases import CaseStatus, CaseResult, CaseSearch, LemmaCase, CASES, run_case
from .runner import OUT_OF_SCOPE_NOTE, HarnessSummary, run_all, CASES_BY_KIND, mutate_gadget, mutation_check
