import logging
import math
from collections.abc import Sequence
from fractions import Fraction

from errors import NonNegativeComponentError, NotNegativeError
from problem import (
    Problem,
    ProblemKind,
    UtilityProfile,
    face_dimension,
    pareto_frontier,
    welfare_optimum,
)
from .base_solver import BaseSolver
from .division import CompetitiveDivision

logger = logging.getLogger(__name__)


def _critical_weights(profile: UtilityProfile) -> list[Fraction]:
    if any(x >= 0 for x in profile):
        raise NonNegativeComponentError(f"Profile must be strictly negative: {list(profile)}")
    return [1 / abs(x) for x in profile]


def criticality_check(p: Problem, profile: UtilityProfile) -> bool:
    """
    Tests whether every feasible profile lies below the hyperplane Σ U'_i/|U_i| = -n.

    Args:
        p (Problem): The problem.
        profile (UtilityProfile): A strictly negative feasible profile.

    Returns:
        bool: True iff the profile is a critical point of Π|U_i|.
    """
    weights = _critical_weights(profile)
    return welfare_optimum(p, weights).value == -p.n


def has_maximal_face(p: Problem, profile: UtilityProfile) -> bool:
    return face_dimension(p, _critical_weights(profile)) == p.n - 1


def nash_maximal(divisions: Sequence[CompetitiveDivision]) -> CompetitiveDivision:
    """The division with the largest product of absolute utilities."""
    return max(divisions, key=lambda d: math.prod(abs(x) for x in d.profile))


def frontier_nash_maximum(p: Problem) -> UtilityProfile:
    """
    Maximizes U_1·U_2 over the negative part of a two-agent efficient frontier.

    Each frontier edge A + t(B - A) is clipped to the negative quadrant; the
    product is a quadratic in t, so its maximum sits at a clip end or at the
    stationary point.

    Args:
        p (Problem): A two-agent negative problem.

    Returns:
        UtilityProfile: A frontier profile of largest product.

    Raises:
        NonPlottableError: If the problem does not have exactly two agents.
    """
    vertices = pareto_frontier(p)
    best: UtilityProfile | None = None
    for start, end in zip(vertices, vertices[1:] or vertices):
        step = (end[0] - start[0], end[1] - start[1])
        low, high = Fraction(0), Fraction(1)
        for k in range(2):
            # start_k + t·step_k <= 0
            if step[k] > 0:
                high = min(high, -start[k] / step[k])
            elif step[k] < 0:
                low = max(low, -start[k] / step[k])
            elif start[k] > 0:
                low, high = Fraction(1), Fraction(0)
        if low > high:
            continue
        ts = [low, high]
        curvature = step[0] * step[1]
        if curvature != 0:
            stationary = -(start[0] * step[1] + start[1] * step[0]) / (2 * curvature)
            if low < stationary < high:
                ts.append(stationary)
        for t in ts:
            point = (start[0] + t * step[0], start[1] + t * step[1])
            if best is None or point[0] * point[1] > best[0] * best[1]:
                best = point
    if best is None:
        raise RuntimeError(f"No frontier point with both utilities nonpositive: {vertices}")
    return best


class NegativeSolver(BaseSolver):
    kind = ProblemKind.NEGATIVE
    mismatch_error = NotNegativeError

    def solve(self) -> list[CompetitiveDivision]:
        by_profile: dict[UtilityProfile, list[CompetitiveDivision]] = {}
        for division in self.enumerate_candidates(range(self.problem.n)):
            if any(x >= 0 for x in division.profile):
                continue
            group = by_profile.get(division.profile)
            if group is not None:
                known = any(d.allocation == division.allocation for d in group)
                if not known and self.admissible(division):
                    group.append(division)
                continue
            if self.admissible(division) and criticality_check(self.problem, division.profile):
                by_profile[division.profile] = [division]

        if not by_profile:
            raise RuntimeError("No critical point found for a negative problem")
        self.allocation_count = sum(len(group) for group in by_profile.values())
        divisions = sorted(
            (min(group, key=lambda d: d.allocation.key()) for group in by_profile.values()),
            key=CompetitiveDivision.sort_key,
        )
        for division in divisions:
            if not has_maximal_face(self.problem, division.profile):
                logger.warning(
                    f"critical profile {list(division.profile)} is not on a face of maximal dimension"
                )
        if self.problem.n == 2:
            target = frontier_nash_maximum(self.problem)
            if math.prod(nash_maximal(divisions).profile) != math.prod(target):
                logger.warning(f"no critical profile reaches the frontier Nash maximum {list(target)}")
        logger.info(
            f"found {len(divisions)} critical profiles ({self.allocation_count} vertex allocations)"
        )
        return divisions


def solve_negative(p: Problem) -> list[CompetitiveDivision]:
    return NegativeSolver(p).solve()
