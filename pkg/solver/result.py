from enum import Enum
from typing import NamedTuple, Tuple

from hardpaths.graphs import Routing
from hardpaths.utils import hardpaths_log_header


class SolveStatus(Enum):
    SAT = 'SAT'
    UNSAT = 'UNSAT'
    BUDGET_EXCEEDED = 'BUDGET_EXCEEDED'


class SolveStats(NamedTuple):
    nodes:           int = 0
    cut_prunes:      int = 0
    flow_prunes:     int = 0
    crossing_prunes: int = 0
    dead_ends:       int = 0
    elapsed:         float = 0.0

    def __add__(self, other: 'SolveStats') -> 'SolveStats':
        return SolveStats(*(a + b for a, b in zip(self, other)))


class SolveResult(NamedTuple):
    """The outcome of a search.

    ``witnesses`` is empty unless ``status`` is ``SAT`` and the search was
    not run in ``decide`` mode. ``UNSAT`` is only reported when the search
    space has been exhausted.
    """
    status:    SolveStatus
    witnesses: Tuple[Routing, ...]
    stats:     SolveStats

    @property
    def sat(self) -> bool:
        return self.status == SolveStatus.SAT

    @property
    def unsat(self) -> bool:
        return self.status == SolveStatus.UNSAT

    @property
    def conclusive(self) -> bool:
        return self.status != SolveStatus.BUDGET_EXCEEDED

    def show(self) -> None:
        print(hardpaths_log_header(obj_name='SolveResult') + f"{self.status.value} ({len(self.witnesses)} witnesses)")
        for field, value in self.stats._asdict().items():
            value = f"{value:.3f}s" if field == 'elapsed' else f"{value}"
            print(hardpaths_log_header(obj_name='SolveResult') + f"{field:>16}: {value}")
