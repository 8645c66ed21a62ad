import itertools
import logging
from collections.abc import Iterable
from fractions import Fraction
from typing import TYPE_CHECKING

from errors import CoalitionLimitError
from numerics import LpBuilder, dot
from problem import Allocation, Problem, ProblemKind, UtilityProfile, utility_profile
from .verification_config import MAX_COALITION_AGENTS

if TYPE_CHECKING:
    from solver import CompetitiveDivision

logger = logging.getLogger(__name__)


def envy_witness(p: Problem, z: Allocation) -> tuple[int, int] | None:
    """Returns the first (envious, envied) pair, or None."""
    for i in range(p.n):
        own = dot(p.utilities[i], z.z[i])
        for j in range(p.n):
            if j != i and dot(p.utilities[i], z.z[j]) > own:
                return i, j
    return None


def check_no_envy(p: Problem, z: Allocation) -> bool:
    return envy_witness(p, z) is None


def fair_share_violation(p: Problem, z: Allocation) -> int | None:
    profile = utility_profile(p, z)
    for i in range(p.n):
        if profile[i] < sum(p.utilities[i], Fraction(0)) / p.n:
            return i
    return None


def check_fair_share(p: Problem, z: Allocation) -> bool:
    return fair_share_violation(p, z) is None


def _coalition_blocks(
    p: Problem, profile: UtilityProfile, coalition: tuple[int, ...], strict_for_all: bool
) -> bool:
    builder = LpBuilder()
    share = Fraction(len(coalition), p.n)
    y = {}
    for i in coalition:
        for a, var in zip(range(p.m), builder.add_variables(p.m)):
            y[i, a] = var
    for a in range(p.m):
        builder.add_constraint({y[i, a]: 1 for i in coalition}, "=", share)

    if strict_for_all:
        # Maximize the smallest gain over the members
        gain = builder.add_variables(1, free=True)[0]
        for i in coalition:
            coefficients = {y[i, a]: p.u(i, a) for a in range(p.m)}
            coefficients[gain] = -1
            builder.add_constraint(coefficients, ">=", profile[i])
        builder.maximize({gain: 1})
    else:
        gains = builder.add_variables(len(coalition))
        for i, g in zip(coalition, gains):
            coefficients = {y[i, a]: p.u(i, a) for a in range(p.m)}
            coefficients[g] = -1
            builder.add_constraint(coefficients, ">=", profile[i])
        builder.maximize({g: 1 for g in gains})

    result = builder.solve()
    return result.optimal and result.value > 0


def blocking_coalition(
    p: Problem, z: Allocation, strict_for_all: bool = True
) -> tuple[int, ...] | None:
    """
    Finds a coalition that can do better on its own with its proportional share of every item.

    Coalitions are tried by increasing size, then lexicographically.

    Args:
        p (Problem): The problem.
        z (Allocation): The allocation under test.
        strict_for_all (bool, optional): If True, every member must strictly gain
            (weak core); otherwise everyone weakly gains and someone strictly gains
            (standard core). Defaults to True.

    Returns:
        tuple[int, ...] | None: Agent indices of the first blocking coalition.
    """
    if p.n > MAX_COALITION_AGENTS:
        raise CoalitionLimitError(
            f"Coalition checks are limited to {MAX_COALITION_AGENTS} agents, got {p.n}"
        )
    profile = utility_profile(p, z)
    for size in range(1, p.n):
        for coalition in itertools.combinations(range(p.n), size):
            if _coalition_blocks(p, profile, coalition, strict_for_all):
                logger.debug(f"coalition {coalition} blocks (strict={strict_for_all})")
                return coalition
    return None


def weak_core_blocking(p: Problem, z: Allocation) -> tuple[int, ...] | None:
    return blocking_coalition(p, z, strict_for_all=True)


def check_weak_core(p: Problem, z: Allocation) -> bool:
    return weak_core_blocking(p, z) is None


def standard_core_blocking(p: Problem, z: Allocation) -> tuple[int, ...] | None:
    return blocking_coalition(p, z, strict_for_all=False)


def check_solidarity(
    divisions: Iterable["CompetitiveDivision"], kind: ProblemKind
) -> bool:
    """
    All profiles move together: uniformly >= 0 for positive problems, uniformly
    <= 0 for negative ones, and either way for null problems.
    """
    profiles = [d.profile for d in divisions]
    above = all(x >= 0 for profile in profiles for x in profile)
    below = all(x <= 0 for profile in profiles for x in profile)
    match kind:
        case ProblemKind.POSITIVE:
            return above
        case ProblemKind.NEGATIVE:
            return below
        case _:
            return above or below
