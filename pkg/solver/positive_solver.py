import logging
from fractions import Fraction

from errors import NotPositiveError
from problem import Problem, ProblemKind, UtilityProfile, partition, welfare_optimum
from .base_solver import BaseSolver
from .division import CompetitiveDivision

logger = logging.getLogger(__name__)


def hyperplane_value(p: Problem, profile: UtilityProfile) -> Fraction:
    """
    Largest value of Σ_{N+} U'_i/U_i over feasible profiles keeping N- at zero utility.

    Args:
        p (Problem): The problem.
        profile (UtilityProfile): A profile strictly positive on N+.

    Returns:
        Fraction: The welfare LP optimum.
    """
    parts = partition(p)
    weights = [Fraction(1) / profile[i] if i in parts.n_plus else Fraction(0) for i in range(p.n)]
    return welfare_optimum(p, weights, zero_floor=sorted(parts.n_minus)).value


def certify_nash_optimum(p: Problem, profile: UtilityProfile) -> bool:
    parts = partition(p)
    if any(profile[i] <= 0 for i in parts.n_plus) or any(profile[j] != 0 for j in parts.n_minus):
        return False
    return hyperplane_value(p, profile) == len(parts.n_plus)


class PositiveSolver(BaseSolver):
    kind = ProblemKind.POSITIVE
    mismatch_error = NotPositiveError

    def solve(self) -> list[CompetitiveDivision]:
        agents = sorted(self.parts.n_plus)
        certified: list[CompetitiveDivision] = []
        seen = set()
        for division in self.enumerate_candidates(agents):
            if division.allocation in seen:
                continue
            seen.add(division.allocation)
            if self.admissible(division) and certify_nash_optimum(self.problem, division.profile):
                certified.append(division)

        if not certified:
            raise RuntimeError("No consumption forest produced a certified Nash optimum")
        profiles = {d.profile for d in certified}
        if len(profiles) > 1:
            raise RuntimeError(f"Certified candidates disagree on the optimum: {profiles}")
        self.allocation_count = len(certified)
        best = min(certified, key=lambda d: d.allocation.key())
        logger.info(f"Nash optimum {list(best.profile)} from {len(certified)} certified forests")
        return [best]


def solve_positive(p: Problem) -> CompetitiveDivision:
    return PositiveSolver(p).solve()[0]


def nash_optimum(p: Problem) -> UtilityProfile:
    return solve_positive(p).profile
