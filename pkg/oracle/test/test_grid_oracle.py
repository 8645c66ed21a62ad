from fractions import Fraction

import numpy as np
import pytest

from errors import NotNegativeError
from problem import Problem, ProblemKind, classify
from solver import solve_negative
from oracle import (
    GridSpec,
    MembershipOracle,
    bound_directions,
    cluster_profiles,
    grid_critical_points,
    match_profiles,
    random_problem,
    simplex_grid,
)


def test_grid_spec_rejects_bad_values():
    with pytest.raises(ValueError):
        GridSpec(resolution=1)
    with pytest.raises(ValueError):
        GridSpec(tolerance=0.0)


def test_simplex_grid_has_positive_parts():
    points = list(simplex_grid(3, 4))
    assert sorted(points) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert list(simplex_grid(2, 3)) == [(1, 2), (2, 1)]


def test_membership_oracle_candidate_and_residual(example2):
    oracle = MembershipOracle(example2)
    w = np.array([0.5, 0.5])
    assert oracle.welfare(w) == pytest.approx(-0.5)
    assert oracle.candidate(w) == pytest.approx([-0.5, -0.5])
    assert oracle.residual(np.array([-0.5, -0.5])) == pytest.approx(0.0, abs=1e-9)
    # (0, 0) would need the bad item to vanish
    assert oracle.residual(np.array([0.0, 0.0])) > 0.5


def test_candidate_is_none_when_welfare_is_not_negative(example2):
    oracle = MembershipOracle(example2)
    assert oracle.candidate(np.array([0.9, 0.1])) is None
    assert oracle.weight_residual(np.array([0.9, 0.1])) == np.inf


def test_bound_directions_have_unit_max_norm():
    directions = bound_directions(3, 40)
    assert directions.shape == (741 + 3, 3)
    assert np.abs(directions).max(axis=1) == pytest.approx(1.0)
    assert (directions[-3:] == -np.eye(3)).all()


def test_candidates_match_single_weights(family):
    oracle = MembershipOracle(family(-1))
    weights = np.array([[0.5, 0.5], [0.3, 0.7], [0.95, 0.05]])
    profiles = oracle.candidates(weights)
    for w, row in zip(weights, profiles):
        single = oracle.candidate(w)
        if single is None:
            assert np.isnan(row).all()
        else:
            assert row == pytest.approx(single)


def test_residual_bounds_at_known_profiles(example2):
    oracle = MembershipOracle(example2)
    bounds = oracle.residual_bounds(np.array([[-0.5, -0.5], [0.0, 0.0]]), bound_directions(2))
    assert bounds[0] <= 1e-12
    assert bounds[1] >= 1.0 - 1e-12


@pytest.mark.parametrize("c", [0, -1, -3])
def test_residual_bounds_never_exceed_residuals(family, c):
    oracle = MembershipOracle(family(c))
    weights = np.array(list(simplex_grid(2, 25)), dtype=float) / 25
    profiles = oracle.candidates(weights)
    profiles = profiles[~np.isnan(profiles).any(axis=1)]
    bounds = oracle.residual_bounds(profiles, bound_directions(2))
    for profile, bound in zip(profiles, bounds):
        assert bound <= oracle.residual(profile) + 1e-9


def test_three_agent_bounds_never_exceed_residuals():
    p = Problem.from_rows([[-3, -8, -7, -6], [-1, -7, -2, -9], [-9, -7, -7, -9]])
    oracle = MembershipOracle(p)
    weights = np.array(list(simplex_grid(3, 12)), dtype=float) / 12
    profiles = oracle.candidates(weights)
    bounds = oracle.residual_bounds(profiles, bound_directions(3))
    for profile, bound in zip(profiles, bounds):
        assert bound <= oracle.residual(profile) + 1e-9


def test_example2_has_one_critical_point(example2):
    clusters = grid_critical_points(example2, GridSpec(resolution=100))
    assert len(clusters) == 1
    assert clusters[0] == pytest.approx((-0.5, -0.5), abs=1e-3)


def test_single_bad_has_one_critical_point():
    clusters = grid_critical_points(Problem.from_rows([[-1], [-1]]))
    assert len(clusters) == 1
    assert clusters[0] == pytest.approx((-0.5, -0.5), abs=1e-3)


def test_oracle_needs_a_negative_problem(example1):
    with pytest.raises(NotNegativeError):
        grid_critical_points(example1)


def test_oracle_agrees_with_exact_solver(family):
    p = family(-1)
    clusters = grid_critical_points(p)
    exact = [d.profile for d in solve_negative(p)]
    assert len(clusters) == 4
    assert match_profiles(clusters, exact, 1e-3)


def test_cluster_profiles_merges_close_points():
    points = [(-1.0, -2.0), (-1.00001, -2.00001), (-2.0, -1.0)]
    clusters = cluster_profiles(points)
    assert len(clusters) == 2
    assert clusters[0] == pytest.approx((-2.0, -1.0))
    assert clusters[1] == pytest.approx((-1.000005, -2.000005))
    assert cluster_profiles([]) == []


def test_match_profiles():
    exact = [(Fraction(-1), Fraction(-2)), (Fraction(-2), Fraction(-1))]
    assert match_profiles([(-2.0001, -1.0), (-1.0, -2.0)], exact, 1e-3)
    assert not match_profiles([(-1.0, -2.0)], exact, 1e-3)
    assert not match_profiles([(-1.0, -2.0), (-1.0, -2.0)], exact, 1e-3)
    assert not match_profiles([(-1.0, -2.0), (-2.1, -1.0)], exact, 1e-3)


@pytest.mark.slow
@pytest.mark.parametrize("c", [1, 0, -1, -2, -3])
def test_sweep_counts_agree_with_fine_grid(family, c):
    p = family(c)
    clusters = grid_critical_points(p, GridSpec(resolution=400))
    assert match_profiles(clusters, [d.profile for d in solve_negative(p)], 1e-6)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(50))
def test_random_two_agent_problems_agree(seed):
    p = random_problem(2, 4, seed, 0.7)
    if classify(p).kind is not ProblemKind.NEGATIVE:
        pytest.skip("not a negative problem")
    clusters = grid_critical_points(p)
    assert match_profiles(clusters, [d.profile for d in solve_negative(p)], 1e-6)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(50))
def test_random_small_problems_agree(seed):
    n = 2 + seed % 2
    m = 3 + (seed // 2) % 2
    p = next(
        q
        for q in (random_problem(n, m, 3000 + 100 * seed + k, 0.7) for k in range(100))
        if classify(q).kind is ProblemKind.NEGATIVE
    )
    clusters = grid_critical_points(p)
    assert match_profiles(clusters, [d.profile for d in solve_negative(p)], 1e-6)
