import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction

import networkx as nx

from errors import NonPlottableError
from numerics import LpBuilder, LpResult
from .classification import allocation_from_primal, allocation_variables
from .problem import Allocation, Problem, UtilityProfile, utility_profile

logger = logging.getLogger(__name__)


def welfare_optimum(
    p: Problem,
    weights: Sequence[Fraction],
    zero_floor: Iterable[int] = (),
) -> LpResult:
    """
    Maximizes the weighted utilitarian welfare Σ w_i u_i·z_i over feasible allocations.

    Args:
        p (Problem): The problem.
        weights (Sequence[Fraction]): One weight per agent; zero weights are allowed.
        zero_floor (Iterable[int], optional): Agents constrained to u_j·z_j >= 0.
            Defaults to none.

    Returns:
        LpResult: The LP result; primal entries are indexed agent-major.
    """
    builder = LpBuilder()
    z = allocation_variables(builder, p)
    for j in zero_floor:
        builder.add_constraint({z[j, a]: p.u(j, a) for a in range(p.m)}, ">=", 0)
    builder.maximize(
        {z[i, a]: Fraction(weights[i]) * p.u(i, a) for i in range(p.n) for a in range(p.m)}
    )
    return builder.solve()


def pareto_improvement(p: Problem, z: Allocation) -> Allocation | None:
    """
    Looks for an allocation that weakly improves everyone and strictly improves someone.

    Args:
        p (Problem): The problem.
        z (Allocation): The allocation under test.

    Returns:
        Allocation | None: A dominating allocation, or None if z is efficient.
    """
    current = utility_profile(p, z)
    builder = LpBuilder()
    y = allocation_variables(builder, p)
    slack = builder.add_variables(p.n)
    for i in range(p.n):
        coefficients = {y[i, a]: p.u(i, a) for a in range(p.m)}
        coefficients[slack[i]] = -1
        builder.add_constraint(coefficients, ">=", current[i])
    builder.maximize({s: 1 for s in slack})
    result = builder.solve()
    if result.value == 0:
        return None
    return allocation_from_primal(p, y, result.primal)


def efficiency_check(p: Problem, z: Allocation) -> bool:
    return pareto_improvement(p, z) is None


def face_dimension(p: Problem, weights: Sequence[Fraction]) -> int:
    """
    Dimension of the face of the feasible utility set maximizing Σ w_i U_i.

    Agents are linked when they tie for the weighted maximum on an item they
    value at nonzero utility; every connected component of that graph adds
    its size minus one to the dimension.

    Args:
        p (Problem): The problem.
        weights (Sequence[Fraction]): Strictly positive weights.

    Returns:
        int: A number between 0 and n - 1.
    """
    ties = nx.Graph()
    ties.add_nodes_from(range(p.n))
    for a in range(p.m):
        scores = [Fraction(weights[i]) * p.u(i, a) for i in range(p.n)]
        best = max(scores)
        tied = [i for i in range(p.n) if scores[i] == best and p.u(i, a) != 0]
        ties.add_edges_from(zip(tied, tied[1:]))
    return p.n - nx.number_connected_components(ties)


def pareto_frontier(p: Problem) -> list[UtilityProfile]:
    """
    Vertices of the efficient frontier of a two-agent problem, ordered by decreasing U_1.

    Args:
        p (Problem): A problem with exactly two agents.

    Returns:
        list[UtilityProfile]: Frontier vertices.
    """
    if p.n != 2:
        raise NonPlottableError(f"Frontier plots need exactly 2 agents, got {p.n}")

    # w1/w2 at which both agents score an item equally
    breakpoints = sorted(
        {
            p.u(1, a) / p.u(0, a)
            for a in range(p.m)
            if p.u(0, a) != 0 and p.u(1, a) != 0 and (p.u(0, a) > 0) == (p.u(1, a) > 0)
        },
        reverse=True,
    )
    if breakpoints:
        ratios = [2 * breakpoints[0]]
        ratios += [(hi + lo) / 2 for hi, lo in zip(breakpoints, breakpoints[1:])]
        ratios.append(breakpoints[-1] / 2)
    else:
        ratios = [Fraction(1)]

    vertices: list[UtilityProfile] = []
    for ratio in ratios:
        rows = [[Fraction(0)] * p.m for _ in range(2)]
        for a in range(p.m):
            winner = 0 if ratio * p.u(0, a) > p.u(1, a) else 1
            rows[winner][a] = Fraction(1)
        profile = utility_profile(p, Allocation(rows))
        if not vertices or vertices[-1] != profile:
            vertices.append(profile)
    logger.debug(f"frontier vertices: {vertices}")
    return vertices
