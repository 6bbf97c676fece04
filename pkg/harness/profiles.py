from enum import Enum
from typing import NamedTuple, Tuple, Union

from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import default_node_budget


FAST_CASES = ('L3_xch22', 'L4_xch12', 'L5_lic22', 'L6_lic12',
              'C1_tiny', 'C2_routers', 'C3_vv', 'C4_switches',
              'FIG2_crossing', 'EXPANSION_EQUIV', 'MIRROR_sym')
FULL_CASES = FAST_CASES + ('L7_shift', 'L8_grid3', 'THM2_tiny')


class HarnessProfile(NamedTuple):
    """Which cases to run, and the node budget of every search they issue.

    A budget of zero turns every case inconclusive without searching.
    """
    name:        str
    cases:       Tuple[str, ...]
    node_budget: int


ProfileSpecType = Union[HarnessProfile, str]


def resolve_harnessprofile_profilespec(profilespec: HarnessProfile) -> HarnessProfile:
    return profilespec


def resolve_str_profilespec(profilespec: str) -> HarnessProfile:

    name = profilespec.lower()
    if name == 'fast':
        cases = FAST_CASES
    elif name == 'full':
        cases = FULL_CASES
    else:
        raise ValueError(hardpaths_err_header(obj_name='resolve_profilespec') + f"unknown harness profile {profilespec!r}; expected 'fast' or 'full'.")

    return HarnessProfile(name=name, cases=cases, node_budget=default_node_budget())


ProfileSpecSolvers = Enum('ProfileSpecSolvers',
                          [
                              ('HARNESSPROFILE', resolve_harnessprofile_profilespec),
                              ('STR',            resolve_str_profilespec),
                          ])


def resolve_profilespec(profilespec: ProfileSpecType) -> HarnessProfile:
    """Canonicalise a harness profile specification: a ``HarnessProfile``
    is returned as it is, ``'fast'`` and ``'full'`` name the built-in
    profiles."""

    profilespec_class = profilespec.__class__.__name__.upper()
    try:
        solver = getattr(ProfileSpecSolvers, profilespec_class)
    except AttributeError:
        raise TypeError(hardpaths_err_header(obj_name='resolve_profilespec') + f"unsupported HarnessProfile specification type: {profilespec_class}.")

    profile = solver(profilespec)
    if not (isinstance(profile.node_budget, int) and profile.node_budget >= 0):
        raise ValueError(hardpaths_err_header(obj_name='resolve_profilespec') + f"the node budget must be a non-negative integer, but {profile.node_budget!r} was given.")
    return profile
