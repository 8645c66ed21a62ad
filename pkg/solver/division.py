from dataclasses import dataclass
from fractions import Fraction

from problem import Allocation, UtilityProfile


@dataclass(frozen=True)
class CompetitiveDivision:
    allocation: Allocation
    prices: tuple[Fraction, ...]
    budget: int
    profile: UtilityProfile

    def sort_key(self) -> tuple:
        return self.profile, self.allocation.key()


@dataclass(frozen=True)
class SeparatingWeights:
    """
    Strictly positive weights on N+ (lam) and nonnegative weights on N- (mu)
    under which no feasible profile has positive weighted welfare.
    """

    lam: dict[int, Fraction]
    mu: dict[int, Fraction]
