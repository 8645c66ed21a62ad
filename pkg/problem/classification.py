import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from numerics import LpBuilder
from .problem import Allocation, Partitions, Problem, partition

logger = logging.getLogger(__name__)


class ProblemKind(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NULL = "null"

    @property
    def budget(self) -> int:
        return {"positive": 1, "negative": -1, "null": 0}[self.value]


@dataclass(frozen=True)
class Classification:
    """
    Outcome of the classifier LP.

    witness is an allocation attaining the LP optimum (Positive and Null).
    weights are the nonnegative dual multipliers of the per-agent rows, one per
    agent; they certify negativity and seed the null-case separating weights.
    When the LP is infeasible they come from its Farkas certificate and the
    weighted welfare optimum under them is negative.
    """

    kind: ProblemKind
    lp_value: Fraction | None
    witness: Allocation | None
    weights: tuple[Fraction, ...] | None
    partitions: Partitions


def allocation_variables(builder: LpBuilder, p: Problem) -> dict[tuple[int, int], int]:
    """
    Adds one nonnegative variable per (agent, item) and the unit-supply rows.

    Args:
        builder (LpBuilder): The program under construction.
        p (Problem): The problem whose allocations are being modelled.

    Returns:
        dict[tuple[int, int], int]: (agent, item) -> variable index.
    """
    indices = builder.add_variables(p.n * p.m)
    z = {(i, a): indices[i * p.m + a] for i in range(p.n) for a in range(p.m)}
    for a in range(p.m):
        builder.add_constraint({z[i, a]: 1 for i in range(p.n)}, "=", 1)
    return z


def allocation_from_primal(
    p: Problem, z: dict[tuple[int, int], int], primal: tuple[Fraction, ...]
) -> Allocation:
    return Allocation([[primal[z[i, a]] for a in range(p.m)] for i in range(p.n)])


def classify(p: Problem) -> Classification:
    """
    Decides whether the problem is positive, negative or null.

    Maximizes t subject to u_i·z_i >= t on N+ and u_j·z_j >= 0 on N-. With N+
    empty the objective is vacuous and only feasibility is tested.

    Args:
        p (Problem): The problem.

    Returns:
        Classification: Kind, LP value, witness allocation and dual weights.
    """
    parts = partition(p)
    builder = LpBuilder()
    z = allocation_variables(builder, p)
    t = builder.add_variables(1, free=True)[0] if parts.n_plus else None

    agent_rows: list[int] = []
    for i in range(p.n):
        coefficients = {z[i, a]: p.u(i, a) for a in range(p.m)}
        if t is not None and i in parts.n_plus:
            coefficients[t] = -1
        agent_rows.append(builder.add_constraint(coefficients, ">=", 0))
    if t is not None:
        builder.maximize({t: 1})

    result = builder.solve()
    if not result.optimal:
        logger.info(f"classifier LP is {result.status.value}: problem is negative")
        # mu = -y on the agent rows; sum_a max_i mu_i u_ia <= y·b < 0
        weights = (
            tuple(-result.certificate[row] for row in agent_rows) if result.certificate else None
        )
        return Classification(ProblemKind.NEGATIVE, None, None, weights, parts)

    value = result.value
    weights = tuple(-result.dual[row] for row in agent_rows)
    if value > 0:
        kind = ProblemKind.POSITIVE
    elif value == 0:
        kind = ProblemKind.NULL
    else:
        kind = ProblemKind.NEGATIVE
    witness = None if kind is ProblemKind.NEGATIVE else allocation_from_primal(p, z, result.primal)
    logger.info(f"classified problem as {kind.value} (LP value {value})")
    return Classification(kind, value, witness, weights, parts)
