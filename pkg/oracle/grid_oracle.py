import logging
from dataclasses import dataclass
from itertools import combinations
from collections.abc import Iterator, Sequence

import numpy as np
from scipy.cluster.hierarchy import fclusterdata
from scipy.optimize import linprog, minimize, minimize_scalar

from errors import NotNegativeError
from problem import Problem, ProblemKind, UtilityProfile, classify
from .oracle_config import (
    BOUND_CHUNK,
    BOUND_RESOLUTION,
    CLUSTER_DISTANCE,
    DEFAULT_RESOLUTION,
    DEFAULT_TOLERANCE,
    POLISH_MAXITER,
    POLISH_XATOL,
    PRUNE_MARGIN,
)

logger = logging.getLogger(__name__)

ApproximateProfile = tuple[float, ...]


@dataclass(frozen=True)
class GridSpec:
    resolution: int = DEFAULT_RESOLUTION
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        if self.resolution < 2:
            raise ValueError(f"Grid resolution must be at least 2, got {self.resolution}")
        if self.tolerance <= 0:
            raise ValueError(f"Tolerance must be positive, got {self.tolerance}")


def simplex_grid(n: int, resolution: int) -> Iterator[tuple[int, ...]]:
    """Compositions of resolution into n positive parts (stars and bars)."""
    for cuts in combinations(range(1, resolution), n - 1):
        bounds = (0, *cuts, resolution)
        yield tuple(hi - lo for lo, hi in zip(bounds, bounds[1:]))


def bound_directions(n: int, resolution: int = BOUND_RESOLUTION) -> np.ndarray:
    """Weight directions with max-norm 1: a coarse positive grid plus every -e_i."""
    positive = np.array(list(simplex_grid(n, resolution)), dtype=float)
    positive /= positive.max(axis=1, keepdims=True)
    return np.vstack([positive, -np.eye(n)])


class MembershipOracle:
    """Float-valued distance from welfare-weight candidates to the feasible utility set."""

    def __init__(self, p: Problem):
        self.n, self.m = p.n, p.m
        self.u = np.array([[float(x) for x in row] for row in p.rows()])

        # Variables: z (agent-major) followed by one L1 slack per agent
        size = self.n * self.m
        self.cost = np.concatenate([np.zeros(size), np.ones(self.n)])
        gains = np.zeros((self.n, size))
        for i in range(self.n):
            gains[i, i * self.m : (i + 1) * self.m] = self.u[i]
        slack = -np.eye(self.n)
        self.a_ub = np.block([[gains, slack], [-gains, slack]])
        self.a_eq = np.hstack([np.tile(np.eye(self.m), self.n), np.zeros((self.m, self.n))])
        self.b_eq = np.ones(self.m)

    def welfare(self, w: np.ndarray) -> float:
        return float((w[:, None] * self.u).max(axis=0).sum())

    def welfare_many(self, weights: np.ndarray) -> np.ndarray:
        return (weights[:, :, None] * self.u[None, :, :]).max(axis=1).sum(axis=1)

    def candidate(self, w: np.ndarray) -> np.ndarray | None:
        """U_i = W(w)/(n w_i), or None when it would not be strictly negative."""
        total = self.welfare(w)
        if total >= 0:
            return None
        return total / (self.n * w)

    def candidates(self, weights: np.ndarray) -> np.ndarray:
        """Row-wise candidate for each weight row; rows without one are NaN."""
        totals = self.welfare_many(weights)
        profiles = totals[:, None] / (self.n * weights)
        profiles[totals >= 0] = np.nan
        return profiles

    def residual(self, profile: np.ndarray) -> float:
        """L1 distance from profile to the feasible utility set."""
        result = linprog(
            self.cost,
            A_ub=self.a_ub,
            b_ub=np.concatenate([profile, -profile]),
            A_eq=self.a_eq,
            b_eq=self.b_eq,
            bounds=(0, None),
            method="highs",
        )
        return float(result.fun)

    def residual_bounds(self, profiles: np.ndarray, directions: np.ndarray) -> np.ndarray:
        """
        Lower bounds on the L1 residual of each profile row, without solving an LP.

        Every feasible V satisfies k·V <= W(k) for any direction k, so
        (k·U - W(k)) / max_i |k_i| never exceeds the distance from U.

        Args:
            profiles (np.ndarray): One profile per row.
            directions (np.ndarray): One direction per row, none of them zero.

        Returns:
            np.ndarray: The best bound per profile.
        """
        support = self.welfare_many(directions)
        scale = np.abs(directions).max(axis=1)
        bounds = np.empty(len(profiles))
        for start in range(0, len(profiles), BOUND_CHUNK):
            block = profiles[start : start + BOUND_CHUNK]
            bounds[start : start + BOUND_CHUNK] = ((block @ directions.T - support) / scale).max(axis=1)
        return bounds

    def weight_residual(self, w: np.ndarray) -> float:
        if (w <= 0).any():
            return np.inf
        profile = self.candidate(w)
        return np.inf if profile is None else self.residual(profile)


def _polish(oracle: MembershipOracle, w: np.ndarray, step: float) -> np.ndarray:
    """Refines a grid-local minimum of the residual in continuous weight space."""
    if oracle.n == 1:
        return w
    if oracle.n == 2:
        lo, hi = max(w[0] - step, step / 100), min(w[0] + step, 1 - step / 100)
        result = minimize_scalar(
            lambda x: oracle.weight_residual(np.array([x, 1 - x])),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": POLISH_XATOL},
        )
        return np.array([result.x, 1 - result.x])

    def objective(x: np.ndarray) -> float:
        return oracle.weight_residual(np.append(x, 1 - x.sum()))

    start = w[:-1]
    simplex = np.vstack([start] + [start + step * e for e in np.eye(oracle.n - 1) / 2])
    result = minimize(
        objective,
        start,
        method="Nelder-Mead",
        options={
            "initial_simplex": simplex,
            "xatol": POLISH_XATOL,
            "fatol": POLISH_XATOL,
            "maxiter": POLISH_MAXITER,
        },
    )
    return np.append(result.x, 1 - result.x.sum())


def cluster_profiles(points: Sequence[Sequence[float]]) -> list[ApproximateProfile]:
    """Merges profiles within CLUSTER_DISTANCE (max-norm) and returns sorted cluster means."""
    if not points:
        return []
    data = np.array(points, dtype=float)
    if len(data) == 1:
        return [tuple(float(x) for x in data[0])]
    labels = fclusterdata(data, t=CLUSTER_DISTANCE, criterion="distance", metric="chebyshev", method="single")
    means = [data[labels == label].mean(axis=0) for label in np.unique(labels)]
    return sorted(tuple(float(x) for x in mean) for mean in means)


def grid_critical_points(p: Problem, spec: GridSpec = GridSpec()) -> list[ApproximateProfile]:
    """
    Approximates every critical profile of a negative problem by a search over welfare weights.

    At each grid weight w the candidate U_i = W(w)/(n w_i) lies on the supporting
    hyperplane with normal w; it is a critical point exactly when it is feasible.
    Grid weights whose cheap residual bound already exceeds PRUNE_MARGIN times
    the profile change across one grid step cannot sit next to a critical
    weight, so the LP runs only on the rest. Grid-local minima of the distance
    to the feasible set are polished and the ones within tolerance are clustered.

    Args:
        p (Problem): A negative problem.
        spec (GridSpec, optional): Resolution and tolerance. Defaults to GridSpec().

    Raises:
        NotNegativeError: The problem is not negative.

    Returns:
        list[ApproximateProfile]: Sorted cluster representatives.
    """
    kind = classify(p).kind
    if kind is not ProblemKind.NEGATIVE:
        raise NotNegativeError(f"The grid oracle needs a negative problem, got {kind.value}")
    oracle = MembershipOracle(p)
    r = spec.resolution

    grid = list(simplex_grid(p.n, r))
    position = {k: index for index, k in enumerate(grid)}
    profiles = oracle.candidates(np.array(grid, dtype=float) / r)
    valid = ~np.isnan(profiles).any(axis=1)
    bounds = np.full(len(grid), np.inf)
    if valid.any():
        bounds[valid] = oracle.residual_bounds(profiles[valid], bound_directions(p.n))

    def neighbours(k: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        for i in range(p.n):
            for j in range(p.n):
                if i != j and k[j] > 1:
                    moved = list(k)
                    moved[i] += 1
                    moved[j] -= 1
                    yield tuple(moved)

    spread = np.zeros(len(grid))
    for index in np.flatnonzero(valid):
        steps = [
            np.abs(profiles[position[q]] - profiles[index]).sum()
            for q in neighbours(grid[index])
            if valid[position[q]]
        ]
        spread[index] = max(steps, default=0.0)

    residuals = np.full(len(grid), np.inf)
    evaluated = np.flatnonzero(bounds <= PRUNE_MARGIN * spread + spec.tolerance)
    for index in evaluated:
        residuals[index] = oracle.residual(profiles[index])
    logger.debug(f"residual LP on {len(evaluated)} of {len(grid)} grid weights")

    minima = [
        k
        for index, k in enumerate(grid)
        if np.isfinite(residuals[index])
        and all(residuals[index] <= residuals[position[q]] for q in neighbours(k))
    ]
    logger.debug(f"{len(minima)} grid-local minima out of {len(grid)} grid weights")

    accepted: list[np.ndarray] = []
    for k in minima:
        w = _polish(oracle, np.array(k, dtype=float) / r, 1 / r)
        value = oracle.weight_residual(w)
        if value <= spec.tolerance:
            accepted.append(oracle.candidate(w))
    clusters = cluster_profiles(accepted)
    logger.info(f"grid oracle found {len(clusters)} critical points at resolution {r}")
    return clusters


def match_profiles(
    clusters: Sequence[ApproximateProfile],
    exact: Sequence[UtilityProfile],
    tolerance: float,
) -> bool:
    """True iff clusters and exact profiles pair up one-to-one within tolerance (max-norm)."""
    if len(clusters) != len(exact):
        return False
    unused = list(clusters)
    for profile in exact:
        target = np.array([float(x) for x in profile])
        hit = next(
            (c for c in unused if np.max(np.abs(np.array(c) - target)) <= tolerance), None
        )
        if hit is None:
            return False
        unused.remove(hit)
    return True
