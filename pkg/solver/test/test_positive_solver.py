from fractions import Fraction

import pytest

from errors import NotPositiveError
from problem import Allocation, Problem
from solver import PositiveSolver, certify_nash_optimum, nash_optimum, solve_positive
from verification import verify_division


def test_example1_picks_the_midpoint(example1):
    division = solve_positive(example1)
    assert division.profile == (1, Fraction(1, 4))
    assert division.allocation == Allocation([["3/4", 1], ["1/4", 0]])
    assert division.prices == (4, -2)
    assert division.budget == 1


def test_single_owner_problem_uses_ratio_prices(good_and_chore):
    division = solve_positive(good_and_chore)
    assert division.allocation == Allocation([[1, 1], [0, 0]])
    assert division.profile == (8, 0)
    assert division.prices == (Fraction(3, 4), Fraction(1, 4))


def test_agents_who_dislike_a_good_get_nothing(shared_good):
    division = solve_positive(shared_good)
    assert division.profile == (Fraction(1, 2), Fraction(1, 2), 0)
    assert division.prices == (2,)


@pytest.mark.parametrize(
    "c, profile, prices",
    [
        (4, (1, 1), (-1, -1, 4)),
        (3, (Fraction(1, 2), Fraction(1, 2)), (-2, -2, 6)),
    ],
)
def test_family_positive_members(family, c, profile, prices):
    division = solve_positive(family(c))
    assert division.profile == profile
    assert division.prices == prices
    assert division.allocation == Allocation([[1, 0, "1/2"], [0, 1, "1/2"]])


def test_nash_optimum_is_certified(example1):
    optimum = nash_optimum(example1)
    assert certify_nash_optimum(example1, optimum)
    assert not certify_nash_optimum(example1, (Fraction(2, 5), Fraction(2, 5)))


def test_solver_output_passes_every_check(example1):
    division = solve_positive(example1)
    report = verify_division(example1, division.allocation, division.prices, division.budget)
    assert report.passed, report.details


def test_rejects_negative_problems(example2):
    with pytest.raises(NotPositiveError):
        PositiveSolver(example2)


def test_enumeration_caps():
    with pytest.raises(ValueError, match="limited"):
        PositiveSolver(Problem.from_rows([[1] * 9]))
