from fractions import Fraction
from itertools import product

import pytest

from errors import PriceSignError
from oracle import perturb_problem, random_problem
from problem import Allocation, Problem
from solver import solve_cr
from verification import check_demand, check_price_signs, consumption_violation, demand_violation

F = Fraction


def test_competitive_bundles_are_demands(example1):
    assert check_demand(example1, 0, (F(3, 4), 1), (4, -2), 1)
    assert check_demand(example1, 1, (F(1, 4), 0), (4, -2), 1)


def test_overspending_is_not_a_demand(example1):
    kind, reason = demand_violation(example1, 1, (F(1, 2), 0), (4, -2), 1)
    assert kind == "demand"
    assert "spends" in reason


def test_unbounded_demand_when_goods_beat_bads(example1):
    # Good ratio 4/1 exceeds bad ratio 2/2
    kind, reason = demand_violation(example1, 0, (1, 0), (1, -2), 1)
    assert kind == "demand"
    assert "unbounded" in reason


def test_paying_for_nothing_fails_wealth_minimization(good_and_chore):
    kind, _ = demand_violation(good_and_chore, 1, (F(2, 3), 0), (F(3, 2), F(1, 2)), 1)
    assert kind == "wealthMin"


def test_negative_budget_agents_without_goods_buy_the_mildest_bad():
    p = Problem.from_rows([[-1, -3], [-2, -1]])
    assert check_demand(p, 0, (1, F(1, 3)), (F(-1, 2), F(-3, 2)), -1)
    kind, _ = demand_violation(p, 1, (0, 1), (F(-1, 2), F(-3, 2)), -1)
    assert kind == "demand"


def test_price_signs(example1):
    check_price_signs(example1, (4, -2))
    with pytest.raises(PriceSignError):
        check_price_signs(example1, (4, 2))
    with pytest.raises(PriceSignError):
        check_price_signs(example1, (4,))


def test_consumption_of_unwanted_goods(good_and_chore):
    assert consumption_violation(good_and_chore, Allocation([[1, 1], [0, 0]])) is None
    assert "consumes good" in consumption_violation(good_and_chore, Allocation([["1/3", 1], ["2/3", 0]]))


GRID = [F(k, 4) for k in range(9)]


def grid_witness(p, agent, bundle, prices, beta):
    """A grid bundle in the budget set that beats the bundle, or matches it for strictly less money."""
    utility = sum(p.u(agent, a) * x for a, x in enumerate(bundle))
    cost = sum(q * x for q, x in zip(prices, bundle))
    for candidate in product(GRID, repeat=p.m):
        spent = sum(q * x for q, x in zip(prices, candidate))
        if spent > beta:
            continue
        value = sum(p.u(agent, a) * x for a, x in enumerate(candidate))
        if value > utility or (value == utility and spent < cost):
            return candidate
    return None


@pytest.mark.parametrize("seed", range(20))
def test_solver_demands_survive_grid_search(seed):
    p = perturb_problem(random_problem(2, 3, seed, 0.5), seed)
    for division in solve_cr(p).divisions:
        for i in range(p.n):
            bundle = division.allocation.bundle(i)
            assert check_demand(p, i, bundle, division.prices, division.budget)
            assert grid_witness(p, i, bundle, division.prices, division.budget) is None


@pytest.mark.parametrize(
    "agent, bundle",
    [
        (1, (F(0), F(0))),
        (1, (F(1, 8), F(0))),
        (0, (F(1, 2), F(1))),
        (1, (F(1, 4), F(1, 4))),
    ],
)
def test_grid_improvements_are_rejected(example1, agent, bundle):
    assert grid_witness(example1, agent, bundle, (4, -2), 1) is not None
    assert not check_demand(example1, agent, bundle, (4, -2), 1)
