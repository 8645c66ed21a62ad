from fractions import Fraction

import pytest

from errors import NotNullError
from problem import Allocation, Problem, classify
from solver import NullSolver, separating_weights, separation_value, solve_null
from verification import verify_division


def test_family_c2(family):
    p = family(2)
    division = solve_null(p)
    assert division.profile == (0, 0)
    assert division.budget == 0
    assert division.allocation == Allocation([[1, 0, "1/2"], [0, 1, "1/2"]])
    assert division.prices == (-1, -1, 2)


def test_separating_weights_are_normalized(family):
    p = family(2)
    weights = separating_weights(p, classify(p))
    assert weights.lam == {0: 1, 1: 1}
    assert separation_value(p, weights) == 0


def test_antisymmetric_items_take_the_lexicographically_smallest_allocation():
    division = solve_null(Problem.from_rows([[1, -1], [1, -1]]))
    assert division.allocation == Allocation([[0, 0], [1, 1]])
    assert division.prices == (1, -1)


def test_neutral_item_goes_to_the_indifferent_agent():
    division = solve_null(Problem.from_rows([[0], [-1]]))
    assert division.allocation == Allocation([[1], [0]])
    assert division.prices == (Fraction(0),)


def test_null_division_passes_every_check(family):
    p = family(2)
    division = solve_null(p)
    report = verify_division(p, division.allocation, division.prices, division.budget)
    assert report.passed, report.details


def test_rejects_positive_problems(example1):
    with pytest.raises(NotNullError):
        NullSolver(example1)
