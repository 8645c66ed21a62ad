import logging
from dataclasses import dataclass
from fractions import Fraction

from errors import DegenerateAgentError
from numerics import LpBuilder
from problem import (
    Allocation,
    Problem,
    UtilityProfile,
    allocation_from_primal,
    allocation_variables,
    utility_profile,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BaselineResult:
    fair_share: UtilityProfile
    u_max: UtilityProfile
    egalitarian: UtilityProfile


def fair_share(p: Problem) -> UtilityProfile:
    """Utilities of the equal split, u_i·e^A / n."""
    return tuple(sum(p.utilities[i], Fraction(0)) / p.n for i in range(p.n))


def max_utilities(p: Problem) -> UtilityProfile:
    """Largest feasible utility of each agent: every good, none of the bads."""
    return tuple(
        sum((max(x, Fraction(0)) for x in p.utilities[i]), Fraction(0)) for i in range(p.n)
    )


def _normalized_gain_program(
    p: Problem, fs: UtilityProfile, spread: list[Fraction], floor: Fraction | None
) -> tuple[LpBuilder, dict[tuple[int, int], int], int | None]:
    builder = LpBuilder()
    z = allocation_variables(builder, p)
    t = builder.add_variables(1, free=True)[0] if floor is None else None
    for i in range(p.n):
        coefficients = {z[i, a]: p.u(i, a) for a in range(p.m)}
        if t is not None:
            coefficients[t] = -spread[i]
            builder.add_constraint(coefficients, ">=", fs[i])
        else:
            builder.add_constraint(coefficients, ">=", fs[i] + spread[i] * floor)
    return builder, z, t


def egalitarian_allocation(p: Problem) -> Allocation:
    """
    Efficient allocation maximizing the smallest normalized gain (U_i - FS_i)/(uMax_i - FS_i).

    A first LP finds the best common gain t*; a second one keeps every gain at
    least t* and maximizes total utility, which makes the outcome efficient.

    Args:
        p (Problem): The problem.

    Raises:
        DegenerateAgentError: Some agent has uMax_i = FS_i.

    Returns:
        Allocation: The egalitarian allocation.
    """
    fs, top = fair_share(p), max_utilities(p)
    spread = [top[i] - fs[i] for i in range(p.n)]
    degenerate = [p.agents[i] for i in range(p.n) if spread[i] == 0]
    if degenerate:
        raise DegenerateAgentError(
            f"Maximal utility equals fair share for {degenerate}; normalized gains are undefined"
        )

    builder, _, t = _normalized_gain_program(p, fs, spread, None)
    builder.maximize({t: 1})
    best = builder.solve()
    gain = best.primal[t]
    logger.debug(f"egalitarian common gain t* = {gain}")

    builder, z, _ = _normalized_gain_program(p, fs, spread, gain)
    builder.maximize({z[i, a]: p.u(i, a) for i in range(p.n) for a in range(p.m)})
    result = builder.solve()
    return allocation_from_primal(p, z, result.primal)


def egalitarian(p: Problem) -> UtilityProfile:
    return utility_profile(p, egalitarian_allocation(p))


def baseline_result(p: Problem) -> BaselineResult:
    return BaselineResult(fair_share(p), max_utilities(p), egalitarian(p))
