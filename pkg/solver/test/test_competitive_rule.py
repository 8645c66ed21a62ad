from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fileio import load_problem
from oracle import perturb_problem, random_problem
from problem import Problem, ProblemKind, normalize_ilb, welfare_optimum
from solver import solve_cr
from verification import check_solidarity, verify_division


@pytest.mark.parametrize(
    "c, kind, count",
    [
        (4, ProblemKind.POSITIVE, 1),
        (3, ProblemKind.POSITIVE, 1),
        (2, ProblemKind.NULL, 1),
        (1, ProblemKind.NEGATIVE, 1),
        (0, ProblemKind.NEGATIVE, 3),
        (-1, ProblemKind.NEGATIVE, 4),
        (-2, ProblemKind.NEGATIVE, 2),
        (-3, ProblemKind.NEGATIVE, 1),
    ],
)
def test_dispatch_over_the_sweep_family(family, c, kind, count):
    outcome = solve_cr(family(c))
    assert outcome.kind is kind
    assert len(outcome.divisions) == count
    assert outcome.allocation_count >= count
    assert len(outcome.maximal_face) == count


def test_divisions_are_sorted_by_profile(family):
    profiles = [d.profile for d in solve_cr(family(-1)).divisions]
    assert profiles == sorted(profiles)


def assert_competitive(p, outcome):
    for division in outcome.divisions:
        report = verify_division(p, division.allocation, division.prices, division.budget)
        assert report.passed, report.details
    assert check_solidarity(outcome.divisions, outcome.kind)
    match outcome.kind:
        case ProblemKind.POSITIVE:
            (division,) = outcome.divisions
            parts = outcome.classification.partitions
            weights = [
                1 / division.profile[i] if i in parts.n_plus else Fraction(0) for i in range(p.n)
            ]
            optimum = welfare_optimum(p, weights, zero_floor=sorted(parts.n_minus)).value
            assert optimum == len(parts.n_plus)
        case ProblemKind.NEGATIVE:
            for division in outcome.divisions:
                assert all(x < 0 for x in division.profile)
                weights = [1 / abs(x) for x in division.profile]
                assert welfare_optimum(p, weights).value == -p.n
        case ProblemKind.NULL:
            (division,) = outcome.divisions
            assert all(x == 0 for x in division.profile)
            for i in range(p.n):
                assert sum(q * s for q, s in zip(division.prices, division.allocation.bundle(i))) == 0


def random_instance(seed: int):
    n = 2 + seed % 2
    m = 2 + (seed // 2) % 2
    return perturb_problem(random_problem(n, m, seed, 0.5), seed)


async def test_three_agent_instance_has_many_divisions(fixture_path):
    p = await load_problem(fixture_path("three_agent_multiplicity.json"))
    outcome = solve_cr(p)
    assert outcome.kind is ProblemKind.NEGATIVE
    assert len(outcome.divisions) >= 5
    assert len({d.profile for d in outcome.divisions}) == len(outcome.divisions)
    assert_competitive(p, outcome)


@pytest.mark.parametrize("seed", range(20))
def test_random_problems_are_solved_competitively(seed):
    p = random_instance(seed)
    assert_competitive(p, solve_cr(p))


@pytest.mark.parametrize("seed", range(20))
def test_lost_bids_do_not_matter(seed):
    p = random_instance(seed)
    before, after = solve_cr(p), solve_cr(normalize_ilb(p))
    assert [d.profile for d in before.divisions] == [d.profile for d in after.divisions]
    assert before.kind is after.kind
    if before.kind is ProblemKind.POSITIVE:
        assert [d.allocation for d in before.divisions] == [d.allocation for d in after.divisions]


@pytest.mark.parametrize("seed", range(12))
def test_agent_permutation_permutes_the_profiles(seed):
    p = random_instance(seed)
    profiles = [d.profile for d in solve_cr(p).divisions]
    for order in permutations(range(p.n)):
        permuted = solve_cr(p.permuted(order))
        expected = sorted(tuple(profile[i] for i in order) for profile in profiles)
        assert [d.profile for d in permuted.divisions] == expected


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_random_property_suite(seed):
    n = 2 + seed % 3
    m = 2 + seed % 4
    p = perturb_problem(random_problem(n, m, 1000 + seed, 0.5), seed)
    outcome = solve_cr(p)
    assert_competitive(p, outcome)
    assert [d.profile for d in solve_cr(normalize_ilb(p)).divisions] == [
        d.profile for d in outcome.divisions
    ]


@st.composite
def small_problems(draw):
    n = draw(st.integers(2, 3))
    m = draw(st.integers(1, 3))
    rows = [[draw(st.integers(-5, 5)) for _ in range(m)] for _ in range(n)]
    assume(all(any(row[a] != 0 for row in rows) for a in range(m)))
    return perturb_problem(Problem.from_rows(rows), draw(st.integers(0, 10_000)))


@settings(max_examples=40, deadline=None)
@given(small_problems())
def test_solver_output_passes_every_check(p):
    outcome = solve_cr(p)
    assert_competitive(p, outcome)
    normalized = solve_cr(normalize_ilb(p))
    assert [d.profile for d in normalized.divisions] == [d.profile for d in outcome.divisions]
    assert normalized.kind is outcome.kind
