import logging
from abc import ABC, abstractmethod
from collections.abc import Iterator, Sequence
from fractions import Fraction
from itertools import combinations

import networkx as nx

from numerics import solve_exact
from problem import (
    Allocation,
    Classification,
    Problem,
    ProblemKind,
    classify,
    normalize_ilb,
    utility_profile,
)
from verification import demand_violation
from .division import CompetitiveDivision
from .solver_config import MAX_AGENTS, MAX_ITEMS, SLOW_ENUMERATION_SIZE

logger = logging.getLogger(__name__)


class BaseSolver(ABC):
    kind: ProblemKind
    mismatch_error: type[ValueError]

    def __init__(self, problem: Problem, classification: Classification | None = None):
        """
        Common state for the three competitive solvers.

        Args:
            problem (Problem): The problem to divide.
            classification (Classification | None, optional): A classification
                already computed for this problem. Defaults to None (classify here).
        """
        if problem.n > MAX_AGENTS or problem.m > MAX_ITEMS:
            raise ValueError(
                f"Enumeration is limited to {MAX_AGENTS} agents and {MAX_ITEMS} items, got {problem.n}x{problem.m}"
            )
        if problem.n * problem.m >= SLOW_ENUMERATION_SIZE:
            logger.warning(f"forest enumeration over {problem.n}x{problem.m} may take minutes")
        self.problem = problem
        self.normalized = normalize_ilb(problem)
        self.classification = classification or classify(problem)
        self.parts = self.classification.partitions
        if self.classification.kind is not self.kind:
            raise self.mismatch_error(
                f"{type(self).__name__} needs a {self.kind.value} problem, got {self.classification.kind.value}"
            )
        self.allocation_count = 0

    @abstractmethod
    def solve(self) -> list[CompetitiveDivision]:
        """
        Computes the competitive divisions of the problem.

        Returns:
            list[CompetitiveDivision]: Divisions sorted by profile.
        """
        pass

    def neutral_owner(self, item: int) -> int:
        """Lowest-index agent with zero utility for a neutral item."""
        return next(i for i in range(self.problem.n) if self.problem.u(i, item) == 0)

    def admissible(self, division: CompetitiveDivision) -> bool:
        for i in range(self.problem.n):
            violation = demand_violation(
                self.problem,
                i,
                division.allocation.bundle(i),
                division.prices,
                division.budget,
                self.parts,
            )
            if violation is not None:
                logger.debug(f"discarding candidate: {violation[1]}")
                return False
        return True

    def enumerate_candidates(self, agents: Sequence[int]) -> Iterator[CompetitiveDivision]:
        """
        Walks every consumption forest over the given agents and the non-neutral items.

        Items are placed in index order; each gets a nonempty set of consumers
        drawn from distinct components so the graph stays a forest. Shared items
        fix the welfare-weight ratios inside a component, and a forest is pruned
        as soon as some member of a component would outbid the consumers of an
        item already placed there.

        Args:
            agents (Sequence[int]): Agents who must spend the budget.

        Yields:
            CompetitiveDivision: The division pinned down by every forest whose
                shares exist with z >= 0; the forest is the support of its allocation.
        """
        u = self.normalized.utilities
        items = sorted(self.parts.a_plus | self.parts.a_minus)
        eligible = {
            a: [i for i in agents if a in self.parts.a_minus or u[i, a] > 0] for a in items
        }

        def extend(
            k: int,
            consumers: dict[int, tuple[int, ...]],
            component: dict[int, int],
            relative: dict[int, Fraction],
        ) -> Iterator[CompetitiveDivision]:
            if k == len(items):
                candidate = self._close(agents, items, consumers, relative)
                if candidate is not None:
                    yield candidate
                return
            a = items[k]
            for size in range(1, len(eligible[a]) + 1):
                for chosen in combinations(eligible[a], size):
                    if len({component[i] for i in chosen}) < size:
                        continue
                    merged, scaled = dict(component), dict(relative)
                    anchor = chosen[0]
                    for j in chosen[1:]:
                        factor = scaled[anchor] * u[anchor, a] / (u[j, a] * scaled[j])
                        absorbed = merged[j]
                        for member in agents:
                            if merged[member] == absorbed:
                                scaled[member] *= factor
                                merged[member] = merged[anchor]
                    placed = {**consumers, a: chosen}
                    if self._locally_tight(agents, placed, merged, scaled, merged[anchor]):
                        yield from extend(k + 1, placed, merged, scaled)

        yield from extend(
            0, {}, {i: i for i in agents}, {i: Fraction(1) for i in agents}
        )

    def _locally_tight(
        self,
        agents: Sequence[int],
        consumers: dict[int, tuple[int, ...]],
        component: dict[int, int],
        relative: dict[int, Fraction],
        label: int,
    ) -> bool:
        u = self.normalized.utilities
        members = [i for i in agents if component[i] == label]
        for a, chosen in consumers.items():
            if component[chosen[0]] != label:
                continue
            price = relative[chosen[0]] * u[chosen[0], a]
            if any(relative[i] * u[i, a] > price for i in members):
                return False
        return True

    def _close(
        self,
        agents: Sequence[int],
        items: Sequence[int],
        consumers: dict[int, tuple[int, ...]],
        relative: dict[int, Fraction],
    ) -> CompetitiveDivision | None:
        u = self.normalized.utilities
        beta = self.kind.budget
        graph = nx.Graph()
        graph.add_nodes_from(("agent", i) for i in agents)
        for a, chosen in consumers.items():
            graph.add_edges_from((("agent", i), ("item", a)) for i in chosen)
        if any(graph.degree(("agent", i)) == 0 for i in agents):
            return None

        # Pin each component's scale with its budget identity Σ p_a = beta·|agents|
        weights: dict[int, Fraction] = {}
        for nodes in nx.connected_components(graph):
            members = sorted(i for role, i in nodes if role == "agent")
            total = sum(
                (relative[consumers[a][0]] * u[consumers[a][0], a] for role, a in nodes if role == "item"),
                Fraction(0),
            )
            if total == 0 or (total > 0) != (beta > 0):
                return None
            scale = beta * len(members) / total
            for i in members:
                weights[i] = relative[i] * scale

        prices = [Fraction(0)] * self.problem.m
        for a in items:
            prices[a] = max(weights[i] * u[i, a] for i in agents)
        for a, chosen in consumers.items():
            if any(weights[i] * u[i, a] != prices[a] for i in chosen):
                return None

        edges = [(i, a) for a in items for i in consumers[a]]
        rows = [[Fraction(1) if e[1] == a else Fraction(0) for e in edges] for a in items]
        rows += [[prices[e[1]] if e[0] == i else Fraction(0) for e in edges] for i in agents]
        rhs = [Fraction(1)] * len(items) + [Fraction(beta)] * len(agents)
        shares = solve_exact(rows, rhs)
        if shares is None or any(x < 0 for x in shares):
            return None

        z = [[Fraction(0)] * self.problem.m for _ in range(self.problem.n)]
        for (i, a), share in zip(edges, shares):
            z[i][a] = share
        for a in sorted(self.parts.a_zero):
            z[self.neutral_owner(a)][a] = Fraction(1)
        allocation = Allocation(z)
        return CompetitiveDivision(
            allocation=allocation,
            prices=tuple(prices),
            budget=beta,
            profile=utility_profile(self.problem, allocation),
        )
