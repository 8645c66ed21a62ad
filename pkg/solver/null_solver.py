import logging
from fractions import Fraction

from errors import NotNullError
from numerics import LpBuilder
from problem import Allocation, Classification, Problem, ProblemKind, partition, welfare_optimum
from .base_solver import BaseSolver
from .division import CompetitiveDivision, SeparatingWeights

logger = logging.getLogger(__name__)


def _interior_weights(p: Problem) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
    """
    Maximizes the smallest weight on N+ among all separating weight vectors.

    A weight vector separates when Σ_a max_i w_i u_ia <= 0, written with one
    free variable y_a per item bounding every w_i u_ia from above.
    """
    parts = partition(p)
    n_plus, n_minus = sorted(parts.n_plus), sorted(parts.n_minus)
    builder = LpBuilder()
    lam = dict(zip(n_plus, builder.add_variables(len(n_plus))))
    mu = dict(zip(n_minus, builder.add_variables(len(n_minus))))
    y = builder.add_variables(p.m, free=True)
    floor = builder.add_variables(1, free=True)[0]
    for a in range(p.m):
        for i, var in {**lam, **mu}.items():
            builder.add_constraint({y[a]: 1, var: -p.u(i, a)}, ">=", 0)
    builder.add_constraint({y[a]: 1 for a in range(p.m)}, "<=", 0)
    builder.add_constraint({var: 1 for var in lam.values()}, "=", 1)
    for var in lam.values():
        builder.add_constraint({var: 1, floor: -1}, ">=", 0)
    builder.maximize({floor: 1})
    result = builder.solve()
    if not result.optimal or result.value <= 0:
        raise NotNullError("No strictly positive separating weights exist")
    return (
        {i: result.primal[var] for i, var in lam.items()},
        {j: result.primal[var] for j, var in mu.items()},
    )


def separating_weights(p: Problem, classification: Classification) -> SeparatingWeights:
    """
    Weights λ > 0 on N+ (and μ >= 0 on N-) with Σ λ_i U_i + Σ μ_j U_j <= 0 on every feasible profile.

    They come from the classifier duals when those are strictly positive on N+,
    otherwise from an LP pushing the smallest weight up. The result is scaled so
    that the smallest λ_i is 1.

    Args:
        p (Problem): A null problem.
        classification (Classification): Its classification.

    Returns:
        SeparatingWeights: The normalized weights.
    """
    parts = classification.partitions
    if not parts.n_plus:
        return SeparatingWeights({}, {j: Fraction(0) for j in parts.n_minus})
    duals = classification.weights
    lam = {i: duals[i] for i in sorted(parts.n_plus)}
    mu = {j: duals[j] for j in sorted(parts.n_minus)}
    if any(v == 0 for v in lam.values()):
        logger.warning(f"classifier duals vanish on N+ ({lam}); solving for interior weights")
        lam, mu = _interior_weights(p)
    low = min(lam.values())
    return SeparatingWeights(
        {i: v / low for i, v in lam.items()}, {j: v / low for j, v in mu.items()}
    )


def separation_value(p: Problem, weights: SeparatingWeights) -> Fraction:
    """Welfare optimum with weights λ on N+, zero on N-, and N- held at zero utility."""
    extended = [weights.lam.get(i, Fraction(0)) for i in range(p.n)]
    return welfare_optimum(p, extended, zero_floor=sorted(weights.mu)).value


class NullSolver(BaseSolver):
    kind = ProblemKind.NULL
    mismatch_error = NotNullError

    def solve(self) -> list[CompetitiveDivision]:
        p = self.problem
        weights = separating_weights(p, self.classification)
        prices = [Fraction(0)] * p.m
        for a in sorted(self.parts.a_plus | self.parts.a_minus):
            prices[a] = max(lam * p.u(i, a) for i, lam in weights.lam.items())

        # Edges where the agent attains the weighted maximum, plus free zero-utility items
        edges = [
            (i, a)
            for i in range(p.n)
            for a in range(p.m)
            if (a in self.parts.a_zero and p.u(i, a) == 0)
            or (i in weights.lam and a not in self.parts.a_zero and weights.lam[i] * p.u(i, a) == prices[a])
        ]
        allocation = self._lexicographic_zero_profile(edges)
        self.allocation_count = 1
        division = CompetitiveDivision(
            allocation=allocation,
            prices=tuple(prices),
            budget=0,
            profile=tuple(Fraction(0) for _ in range(p.n)),
        )
        logger.info(f"null division with weights {weights.lam} and prices {prices}")
        return [division]

    def _lexicographic_zero_profile(self, edges: list[tuple[int, int]]) -> Allocation:
        """
        Smallest zero-profile allocation on the given edges in row-major order.

        Minimizes each share in turn, fixing the optimum before moving on.
        """
        p = self.problem
        fixed: dict[tuple[int, int], Fraction] = {}
        for edge in edges:
            builder = LpBuilder()
            z = dict(zip(edges, builder.add_variables(len(edges))))
            for a in range(p.m):
                builder.add_constraint({z[e]: 1 for e in edges if e[1] == a}, "=", 1)
            for i in range(p.n):
                builder.add_constraint({z[e]: p.u(i, e[1]) for e in edges if e[0] == i}, "=", 0)
            for e, value in fixed.items():
                builder.add_constraint({z[e]: 1}, "=", value)
            builder.maximize({z[edge]: -1})
            result = builder.solve()
            if not result.optimal:
                raise RuntimeError(f"No zero-profile allocation on the tight edges {edges}")
            fixed[edge] = result.primal[z[edge]]

        rows = [[Fraction(0)] * p.m for _ in range(p.n)]
        for (i, a), share in fixed.items():
            rows[i][a] = share
        return Allocation(rows)


def solve_null(p: Problem) -> CompetitiveDivision:
    return NullSolver(p).solve()[0]
