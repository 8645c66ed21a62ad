import logging
import string
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from errors import ProblemError
from numerics import dot, rat_matrix

logger = logging.getLogger(__name__)

UtilityProfile = tuple[Fraction, ...]


def default_item_names(count: int) -> tuple[str, ...]:
    if count <= len(string.ascii_lowercase):
        return tuple(string.ascii_lowercase[:count])
    return tuple(f"item{k + 1}" for k in range(count))


def default_agent_names(count: int) -> tuple[str, ...]:
    return tuple(str(k + 1) for k in range(count))


def _as_matrix(values: np.ndarray | Sequence[Sequence]) -> np.ndarray:
    try:
        return rat_matrix([list(row) for row in values])
    except ValueError as e:
        raise ProblemError(f"Invalid utility matrix: {e}") from e


@dataclass(frozen=True, eq=False)
class Problem:
    """
    A mixed-manna division problem: agents, items and an additive utility matrix.

    utilities[i, a] is agent i's utility for the whole unit of item a.
    """

    agents: tuple[str, ...]
    items: tuple[str, ...]
    utilities: np.ndarray

    def __post_init__(self) -> None:
        u = _as_matrix(self.utilities)
        object.__setattr__(self, "agents", tuple(self.agents))
        object.__setattr__(self, "items", tuple(self.items))
        if not self.agents or not self.items:
            raise ProblemError("A problem needs at least one agent and one item")
        if u.shape != (len(self.agents), len(self.items)):
            raise ProblemError(
                f"Utility matrix has shape {u.shape}, expected {(len(self.agents), len(self.items))}"
            )
        for kind, names in (("agent", self.agents), ("item", self.items)):
            if len(set(names)) != len(names):
                raise ProblemError(f"Duplicate {kind} names: {list(names)}")
        null_columns = [
            self.items[a] for a in range(u.shape[1]) if all(x == 0 for x in u[:, a])
        ]
        if null_columns:
            raise ProblemError(f"Null columns (nobody cares about these items): {null_columns}")
        u.flags.writeable = False
        object.__setattr__(self, "utilities", u)

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int | str | Fraction]],
        agents: Sequence[str] | None = None,
        items: Sequence[str] | None = None,
    ) -> "Problem":
        n_items = len(rows[0]) if rows else 0
        return cls(
            agents=tuple(agents) if agents is not None else default_agent_names(len(rows)),
            items=tuple(items) if items is not None else default_item_names(n_items),
            utilities=rows,
        )

    @property
    def n(self) -> int:
        return len(self.agents)

    @property
    def m(self) -> int:
        return len(self.items)

    def u(self, agent: int, item: int) -> Fraction:
        return self.utilities[agent, item]

    def rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self.utilities]

    def with_utilities(self, rows: Sequence[Sequence[Fraction]]) -> "Problem":
        return Problem(self.agents, self.items, rows)

    def permuted(self, agent_order: Sequence[int]) -> "Problem":
        return Problem(
            tuple(self.agents[i] for i in agent_order),
            self.items,
            [list(self.utilities[i]) for i in agent_order],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Problem):
            return NotImplemented
        return (
            self.agents == other.agents
            and self.items == other.items
            and self.rows() == other.rows()
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class Partitions:
    n_plus: frozenset[int]
    n_minus: frozenset[int]
    a_plus: frozenset[int]
    a_minus: frozenset[int]
    a_zero: frozenset[int]


def partition(p: Problem) -> Partitions:
    """
    Splits agents by whether they like some item and items by the sign of their best entry.

    Args:
        p (Problem): The problem.

    Returns:
        Partitions: N+, N-, A+, A-, A0 as sets of indices.
    """
    u = p.utilities
    n_plus = frozenset(i for i in range(p.n) if any(x > 0 for x in u[i]))
    a_plus = frozenset(a for a in range(p.m) if any(x > 0 for x in u[:, a]))
    a_minus = frozenset(a for a in range(p.m) if all(x < 0 for x in u[:, a]))
    return Partitions(
        n_plus=n_plus,
        n_minus=frozenset(range(p.n)) - n_plus,
        a_plus=a_plus,
        a_minus=a_minus,
        a_zero=frozenset(range(p.m)) - a_plus - a_minus,
    )


def normalize_ilb(p: Problem) -> Problem:
    """Zeroes the negative entries of every column that is a good for somebody."""
    parts = partition(p)
    rows = p.rows()
    changed = 0
    for a in parts.a_plus:
        for i in range(p.n):
            if rows[i][a] < 0:
                rows[i][a] = Fraction(0)
                changed += 1
    logger.debug(f"lost-bid normalization zeroed {changed} entries")
    return p.with_utilities(rows)


def without_null_columns(
    items: Sequence[str], rows: Sequence[Sequence[Fraction]]
) -> tuple[tuple[str, ...], list[list[Fraction]]]:
    """
    Drops items that every agent values at zero.

    Args:
        items (Sequence[str]): Item names.
        rows (Sequence[Sequence[Fraction]]): Utility rows.

    Returns:
        tuple[tuple[str, ...], list[list[Fraction]]]: The remaining names and rows.
    """
    keep = [a for a in range(len(items)) if any(row[a] != 0 for row in rows)]
    dropped = [items[a] for a in range(len(items)) if a not in keep]
    if dropped:
        logger.warning(f"dropping null columns: {dropped}")
    return tuple(items[a] for a in keep), [[row[a] for a in keep] for row in rows]


@dataclass(frozen=True, eq=False)
class Allocation:
    """A feasible allocation: nonnegative shares with every item fully distributed."""

    z: np.ndarray

    def __post_init__(self) -> None:
        z = _as_matrix(self.z)
        if z.size and any(x < 0 for x in z.flat):
            raise ProblemError("Allocation has negative shares")
        bad = [a for a in range(z.shape[1]) if sum(z[:, a], Fraction(0)) != 1]
        if bad:
            raise ProblemError(f"Column sums differ from 1 for items {bad}")
        z.flags.writeable = False
        object.__setattr__(self, "z", z)

    @classmethod
    def equal_split(cls, n: int, m: int) -> "Allocation":
        return cls([[Fraction(1, n)] * m for _ in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.z.shape

    def bundle(self, agent: int) -> tuple[Fraction, ...]:
        return tuple(self.z[agent])

    def rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self.z]

    def key(self) -> tuple[Fraction, ...]:
        """Row-major entries, used for lexicographic ordering."""
        return tuple(self.z.flat)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Allocation):
            return NotImplemented
        return self.shape == other.shape and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.shape, self.key()))


def utility_profile(p: Problem, z: Allocation) -> UtilityProfile:
    if z.shape != (p.n, p.m):
        raise ProblemError(f"Allocation shape {z.shape} does not match problem {(p.n, p.m)}")
    return tuple(dot(p.utilities[i], z.z[i]) for i in range(p.n))
