from typing import NamedTuple, Tuple, List

from hardpaths.utils import hardpaths_log_header


class Finding(NamedTuple):
    check:  str
    detail: str


class StructureReport(NamedTuple):
    """The outcome of a structural check of a compiled instance.

    ``violations`` is empty when every check passes; ``notes`` carries
    diagnostics that are not failures (e.g., the slack of each cut).
    """
    violations: Tuple[Finding, ...]
    notes:      Tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return len(self.violations) == 0

    def checks(self) -> List[str]:
        return sorted(set(finding.check for finding in self.violations))

    def __bool__(self) -> bool:
        return self.valid

    def show(self) -> None:
        if self.valid:
            print(hardpaths_log_header(obj_name='StructureReport') + "all structural checks passed.")
        for finding in self.violations:
            print(hardpaths_log_header(obj_name='StructureReport') + f"{finding.check}: {finding.detail}")
        for note in self.notes:
            print(hardpaths_log_header(obj_name='StructureReport') + note)
