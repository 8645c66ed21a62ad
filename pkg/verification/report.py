import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from errors import PriceSignError, ProblemError
from problem import Allocation, Problem, efficiency_check, partition, utility_profile
from .demand import check_price_signs, consumption_violation, demand_violation
from .fairness import envy_witness, fair_share_violation, weak_core_blocking
from type_defs import CheckName
from .verification_config import CHECK_NAMES

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    checks: dict[CheckName, bool] = field(default_factory=lambda: {name: True for name in CHECK_NAMES})
    details: dict[CheckName, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def fail(self, check: CheckName, detail: str) -> None:
        self.checks[check] = False
        self.details.setdefault(check, detail)


def verify_division(
    p: Problem, z: Allocation, prices: Sequence[Fraction], beta: int
) -> VerificationReport:
    """
    Runs every competitive-division and fairness check on (z, p, beta).

    Args:
        p (Problem): The problem.
        z (Allocation): The allocation.
        prices (Sequence[Fraction]): One price per item.
        beta (int): The common budget, -1, 0 or 1.

    Returns:
        VerificationReport: Per-check booleans and a witness for each failure.
    """
    if z.shape != (p.n, p.m):
        raise ProblemError(f"Allocation shape {z.shape} does not match problem {(p.n, p.m)}")
    if beta not in (-1, 0, 1):
        raise ProblemError(f"Budget must be -1, 0 or 1, got {beta}")

    report = VerificationReport()
    parts = partition(p)
    profile = utility_profile(p, z)

    try:
        check_price_signs(p, prices, parts)
        for i in range(p.n):
            violation = demand_violation(p, i, z.bundle(i), prices, beta, parts)
            if violation is not None:
                report.fail(*violation)
    except PriceSignError as e:
        report.fail("priceSigns", str(e))
        report.fail("demand", "demand is undefined at prices with the wrong signs")

    if (witness := consumption_violation(p, z)) is not None:
        report.fail("consumption", witness)
    if not efficiency_check(p, z):
        report.fail("efficiency", "a Pareto-improving allocation exists")
    if (pair := envy_witness(p, z)) is not None:
        report.fail("noEnvy", f"agent {p.agents[pair[0]]} envies agent {p.agents[pair[1]]}")
    if (agent := fair_share_violation(p, z)) is not None:
        report.fail("fairShare", f"agent {p.agents[agent]} is below the equal-split utility")
    if (coalition := weak_core_blocking(p, z)) is not None:
        report.fail("weakCore", f"coalition {[p.agents[i] for i in coalition]} blocks")

    if (beta > 0 and any(x < 0 for x in profile)) or (
        beta < 0 and any(x > 0 for x in profile)
    ) or (beta == 0 and any(x != 0 for x in profile)):
        report.fail("solidarity", f"profile {list(profile)} does not match budget {beta}")

    logger.info(f"verification {'passed' if report.passed else 'failed'}: {report.checks}")
    return report
