import logging
from collections.abc import Sequence
from fractions import Fraction

from errors import PriceSignError
from numerics import dot
from problem import Allocation, Partitions, Problem, partition

logger = logging.getLogger(__name__)

Violation = tuple[str, str]


def check_price_signs(
    p: Problem, prices: Sequence[Fraction], parts: Partitions | None = None
) -> None:
    """
    Raises PriceSignError unless p_a > 0 on goods, p_b < 0 on bads and p = 0 on neutral items.

    Args:
        p (Problem): The problem.
        prices (Sequence[Fraction]): One price per item.
        parts (Partitions | None, optional): Precomputed partitions. Defaults to None.
    """
    if len(prices) != p.m:
        raise PriceSignError(f"Expected {p.m} prices, got {len(prices)}")
    parts = parts or partition(p)
    wrong = [
        p.items[a]
        for a in range(p.m)
        if (a in parts.a_plus and not prices[a] > 0)
        or (a in parts.a_minus and not prices[a] < 0)
        or (a in parts.a_zero and prices[a] != 0)
    ]
    if wrong:
        raise PriceSignError(f"Prices with the wrong sign on items {wrong}: {list(prices)}")


def demand_violation(
    p: Problem,
    agent: int,
    bundle: Sequence[Fraction],
    prices: Sequence[Fraction],
    beta: int,
    parts: Partitions | None = None,
) -> Violation | None:
    """
    Tests whether a bundle is a competitive demand: utility-maximal in the budget
    set {p·y <= beta} and cheapest among such maximizers.

    Agents with no positive entry (N-) are handled apart: with beta >= 0 they must
    get zero utility at zero cost; with beta = -1 they buy only bads (and neutral
    items they value at zero), spend exactly -1, and buy the bads that hurt them
    least per unit of price. Other agents must spend exactly beta, buy goods with
    the best utility/price ratio and bads with the smallest |u|/|p| ratio, the two
    ratios agreeing when they buy both, and the best good ratio may not exceed the
    best bad ratio (otherwise demand is unbounded).

    Args:
        p (Problem): The problem.
        agent (int): Agent index.
        bundle (Sequence[Fraction]): Quantity of each item.
        prices (Sequence[Fraction]): Item prices, sign pattern already valid.
        beta (int): Common budget, -1, 0 or 1.
        parts (Partitions | None, optional): Precomputed partitions. Defaults to None.

    Returns:
        Violation | None: ("demand" | "wealthMin", reason) or None when the bundle is a demand.
    """
    parts = parts or partition(p)
    check_price_signs(p, prices, parts)
    u = p.utilities[agent]
    spent = dot(prices, bundle)
    utility = dot(u, bundle)
    eaten = {a for a in range(p.m) if bundle[a] > 0}

    wasted = [p.items[a] for a in eaten & parts.a_zero if u[a] != 0]
    if wasted:
        return "demand", f"agent {p.agents[agent]} takes disliked free items: {wasted}"

    if agent in parts.n_minus:
        if beta >= 0:
            if utility != 0:
                return "demand", f"agent {p.agents[agent]} has utility {utility}, zero is available"
            if spent > beta:
                return "demand", f"agent {p.agents[agent]} overspends: {spent} > {beta}"
            if spent != 0:
                return "wealthMin", f"agent {p.agents[agent]} pays {spent} for a zero-utility bundle"
            return None
        goods = [p.items[a] for a in eaten & parts.a_plus]
        if goods:
            return "demand", f"agent {p.agents[agent]} buys goods without positive utility: {goods}"
        if spent != beta:
            return "demand", f"agent {p.agents[agent]} spends {spent}, budget is {beta}"
        return _bad_ratio_violation(p, agent, eaten, prices, parts)

    if spent != beta:
        return "demand", f"agent {p.agents[agent]} spends {spent}, budget is {beta}"

    good_ratios = {a: u[a] / prices[a] for a in parts.a_plus}
    best_good = max(good_ratios.values(), default=None)
    bad_ratios = {b: abs(u[b]) / abs(prices[b]) for b in parts.a_minus}
    best_bad = min(bad_ratios.values(), default=None)
    if best_good is not None and best_bad is not None and best_good > best_bad:
        return "demand", (
            f"agent {p.agents[agent]} faces unbounded demand: good ratio {best_good} > bad ratio {best_bad}"
        )

    poor = [p.items[a] for a in eaten & parts.a_plus if good_ratios[a] != best_good]
    if poor:
        return "demand", f"agent {p.agents[agent]} buys goods below the best ratio {best_good}: {poor}"
    violation = _bad_ratio_violation(p, agent, eaten, prices, parts)
    if violation is not None:
        return violation
    if eaten & parts.a_plus and eaten & parts.a_minus and best_good != best_bad:
        return "demand", (
            f"agent {p.agents[agent]} buys goods and bads at different ratios {best_good} != {best_bad}"
        )
    return None


def _bad_ratio_violation(
    p: Problem,
    agent: int,
    eaten: set[int],
    prices: Sequence[Fraction],
    parts: Partitions,
) -> Violation | None:
    u = p.utilities[agent]
    bad_ratios = {b: abs(u[b]) / abs(prices[b]) for b in parts.a_minus}
    if not bad_ratios:
        return None
    best = min(bad_ratios.values())
    costly = [p.items[b] for b in eaten & parts.a_minus if bad_ratios[b] != best]
    if costly:
        return "demand", f"agent {p.agents[agent]} buys bads above the best ratio {best}: {costly}"
    return None


def check_demand(
    p: Problem,
    agent: int,
    bundle: Sequence[Fraction],
    prices: Sequence[Fraction],
    beta: int,
) -> bool:
    violation = demand_violation(p, agent, bundle, prices, beta)
    if violation is not None:
        logger.debug(f"demand check failed: {violation[1]}")
    return violation is None


def consumption_violation(p: Problem, z: Allocation) -> str | None:
    """Goods may only be consumed by agents who value them positively."""
    parts = partition(p)
    for i in range(p.n):
        for a in parts.a_plus:
            if z.z[i, a] > 0 and p.u(i, a) <= 0:
                return f"agent {p.agents[i]} consumes good {p.items[a]} with utility {p.u(i, a)}"
    return None
