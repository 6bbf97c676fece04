import json
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple, Tuple, Dict, List, Iterable, Optional

from .cases import CaseStatus, CaseResult, run_case
from .profiles import ProfileSpecType, resolve_profilespec
from hardpaths.gadgets import Gadget, build_gadget, mutated_table, resolve_kind
from hardpaths.utils import hardpaths_log_header, hardpaths_err_header, hardpaths_wng_header


OUT_OF_SCOPE_NOTE = ("not checked: the statements quantified over grids of every size (no no-path across two rows of XCH "
                     "cells with four crossings each, and the correctness of the assembled undirected reduction) have no "
                     "finite case.")


class HarnessSummary(NamedTuple):
    profile:     str
    node_budget: int
    results:     Tuple[CaseResult, ...]

    def count(self, status: CaseStatus) -> int:
        return sum(1 for result in self.results if result.status == status)

    @property
    def exit_status(self) -> int:
        """0 if every case passed, 1 if one failed, 3 if none failed but
        one was inconclusive."""
        if self.count(CaseStatus.FAIL) > 0:
            return 1
        if self.count(CaseStatus.INCONCLUSIVE) > 0:
            return 3
        return 0

    def to_json(self) -> str:
        document = {
            'format':      'hardpaths/summary',
            'version':     1,
            'profile':     self.profile,
            'node_budget': self.node_budget,
            'cases':       [{'id':     result.case_id,
                             'status': result.status.value,
                             'detail': result.detail,
                             'stats':  result.stats._asdict()} for result in self.results],
            'not_checked': OUT_OF_SCOPE_NOTE,
            'exit_status': self.exit_status,
        }
        return json.dumps(document, indent=2, sort_keys=True)

    def show(self) -> None:
        header = hardpaths_log_header(obj_name='harness')
        print(header + f"profile {self.profile}, node budget {self.node_budget}")
        width = max((len(result.case_id) for result in self.results), default=0)
        for result in self.results:
            print(header + f"{result.case_id:<{width}}  {result.status.value:<12}  {result.stats.nodes:>12} nodes  {result.stats.elapsed:8.2f}s  {result.detail}")
        print(header + ', '.join(f"{self.count(status)} {status.value.lower()}" for status in CaseStatus))
        print(header + OUT_OF_SCOPE_NOTE)


def run_all(profile: ProfileSpecType = 'fast', workers: int = 1) -> HarnessSummary:
    """Run every case of ``profile``.

    With ``workers`` > 1 the cases run in separate processes; results are
    reported in profile order either way.
    """
    profile = resolve_profilespec(profile)
    if not (isinstance(workers, int) and workers >= 1):
        raise ValueError(hardpaths_err_header(obj_name='run_all') + f"the number of workers must be a positive integer, but {workers!r} was given.")

    if workers == 1:
        results = [run_case(case_id, profile.node_budget) for case_id in profile.cases]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(run_case, case_id, profile.node_budget) for case_id in profile.cases]
            results = [future.result() for future in futures]

    return HarnessSummary(profile=profile.name, node_budget=profile.node_budget, results=tuple(results))


# -- MUTATION SENSITIVITY -- #

# the cases whose outcome depends on each gadget table, cheapest first
CASES_BY_KIND: Dict[str, Tuple[str, ...]] = {
    'XCH': ('MIRROR_sym', 'L4_xch12', 'L3_xch22'),
    'LIC': ('MIRROR_sym', 'L6_lic12', 'L5_lic22'),
    'YES': ('C4_switches', 'C2_routers', 'C1_tiny'),
    'NO':  ('C4_switches', 'C2_routers', 'C1_tiny'),
    'ON':  ('C4_switches', 'C2_routers'),
    'IF':  ('C2_routers',),
    'LL':  ('C2_routers',),
    'TT':  ('C2_routers',),
    'VV':  ('C3_vv',),
}


def mutate_gadget(kind: str, edge_index: int) -> Gadget:
    """The gadget ``kind`` with edge ``edge_index`` of its table removed."""
    with mutated_table(kind, edge_index):
        return build_gadget(kind)


def mutation_check(kind:          str,
                   edge_indices:  Iterable[int],
                   node_budget:   Optional[int] = None,
                   stop_at_first: bool = False) -> Dict[int, List[str]]:
    """For each removed table edge, the cases that fail without it.

    An inconclusive case does not count as broken. With ``stop_at_first``,
    the cases of a mutation stop running once one of them fails. The
    mutation is process-wide, so the cases run one after the other.
    """
    kind = resolve_kind(kind)
    broken = {}
    for edge_index in edge_indices:
        with mutated_table(kind, edge_index):
            broken[edge_index] = []
            for case_id in CASES_BY_KIND[kind]:
                try:
                    status = run_case(case_id, node_budget).status
                except (ValueError, KeyError):
                    # the figures and the mirror map refer to the removed edge
                    status = CaseStatus.FAIL
                if status == CaseStatus.INCONCLUSIVE:
                    warnings.warn(hardpaths_wng_header(obj_name='mutation_check') + f"{case_id} is inconclusive without edge {edge_index} of {kind}.")
                if status == CaseStatus.FAIL:
                    broken[edge_index].append(case_id)
                    if stop_at_first:
                        break
    return broken
