import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from errors import LpInputError
from type_defs import Sense

logger = logging.getLogger(__name__)

_FLIPPED: dict[Sense, Sense] = {"<=": ">=", ">=": "<=", "=": "="}


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """
    maximize objective·x subject to matrix[i]·x (sense[i]) rhs[i].

    lower_bounds holds 0 for x_j >= 0 and None for a free variable.
    """

    objective: tuple[Fraction, ...]
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    senses: tuple[Sense, ...]
    lower_bounds: tuple[Fraction | None, ...]

    def __post_init__(self) -> None:
        n_vars = len(self.objective)
        if len(self.matrix) != len(self.rhs) or len(self.rhs) != len(self.senses):
            raise LpInputError(
                f"Row counts disagree: matrix={len(self.matrix)} rhs={len(self.rhs)} senses={len(self.senses)}"
            )
        bad_rows = [i for i, row in enumerate(self.matrix) if len(row) != n_vars]
        if bad_rows:
            raise LpInputError(f"Rows with wrong width (expected {n_vars}): {bad_rows}")
        if len(self.lower_bounds) != n_vars:
            raise LpInputError(
                f"Expected {n_vars} lower bounds, got {len(self.lower_bounds)}"
            )
        if any(bound is not None and bound != 0 for bound in self.lower_bounds):
            raise LpInputError("Lower bounds must be 0 or None (free)")
        unknown = [s for s in self.senses if s not in _FLIPPED]
        if unknown:
            raise LpInputError(f"Unknown constraint senses: {unknown}")


@dataclass(frozen=True)
class LpResult:
    status: LpStatus
    value: Fraction | None = None
    primal: tuple[Fraction, ...] = ()
    dual: tuple[Fraction, ...] = ()
    certificate: tuple[Fraction, ...] = ()

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


class LpBuilder:
    def __init__(self) -> None:
        """
        Incrementally assembles a LinearProgram from variable blocks and sparse rows.
        """
        self._free: list[bool] = []
        self._objective: dict[int, Fraction] = {}
        self._rows: list[dict[int, Fraction]] = []
        self._senses: list[Sense] = []
        self._rhs: list[Fraction] = []

    def add_variables(self, count: int, free: bool = False) -> list[int]:
        start = len(self._free)
        self._free.extend([free] * count)
        return list(range(start, start + count))

    def add_constraint(
        self,
        coefficients: Mapping[int, Fraction | int],
        sense: Sense,
        rhs: Fraction | int,
    ) -> int:
        """
        Adds one row and returns its index (the index of its dual value).

        Args:
            coefficients (Mapping[int, Fraction | int]): Variable index -> coefficient.
            sense (Sense): One of "<=", "=", ">=".
            rhs (Fraction | int): Right-hand side.

        Returns:
            int: Row index.
        """
        self._rows.append({j: Fraction(c) for j, c in coefficients.items() if c != 0})
        self._senses.append(sense)
        self._rhs.append(Fraction(rhs))
        return len(self._rows) - 1

    def maximize(self, coefficients: Mapping[int, Fraction | int]) -> None:
        self._objective = {j: Fraction(c) for j, c in coefficients.items()}

    def build(self) -> LinearProgram:
        n_vars = len(self._free)
        zero = Fraction(0)
        return LinearProgram(
            objective=tuple(self._objective.get(j, zero) for j in range(n_vars)),
            matrix=tuple(
                tuple(row.get(j, zero) for j in range(n_vars)) for row in self._rows
            ),
            rhs=tuple(self._rhs),
            senses=tuple(self._senses),
            lower_bounds=tuple(None if free else zero for free in self._free),
        )

    def solve(self) -> LpResult:
        return lp_solve(self.build())


class _Tableau:
    def __init__(self, rows: np.ndarray, basis: list[int]):
        self.rows = rows
        self.basis = basis
        self.reduced: np.ndarray = np.empty(rows.shape[1], dtype=object)

    def price_out(self, cost: Sequence[Fraction]) -> None:
        """Recomputes reduced costs c_j - c_B·B^-1 A_j; the last entry holds minus the objective."""
        reduced = np.array(list(cost) + [Fraction(0)], dtype=object)
        for i, column in enumerate(self.basis):
            if cost[column] != 0:
                reduced = reduced - cost[column] * self.rows[i]
        self.reduced = reduced

    def pivot(self, row: int, column: int) -> None:
        T = self.rows
        T[row] = T[row] / T[row, column]
        for k in range(T.shape[0]):
            if k != row and T[k, column] != 0:
                T[k] = T[k] - T[k, column] * T[row]
        if self.reduced[column] != 0:
            self.reduced = self.reduced - self.reduced[column] * T[row]
        self.basis[row] = column

    def iterate(self, allowed: Sequence[bool]) -> bool:
        """
        Runs primal simplex with Bland's rule until optimal.

        Args:
            allowed (Sequence[bool]): Columns that may enter the basis.

        Returns:
            bool: False if the program is unbounded along an entering column.
        """
        T = self.rows
        n_cols = T.shape[1] - 1
        while True:
            entering = next(
                (j for j in range(n_cols) if allowed[j] and self.reduced[j] > 0), None
            )
            if entering is None:
                return True
            candidates = [i for i in range(T.shape[0]) if T[i, entering] > 0]
            if not candidates:
                return False
            ratios = {i: T[i, -1] / T[i, entering] for i in candidates}
            best = min(ratios.values())
            leaving = min(
                (i for i in candidates if ratios[i] == best), key=lambda i: self.basis[i]
            )
            self.pivot(leaving, entering)


def lp_solve(lp: LinearProgram) -> LpResult:
    """
    Solves a linear program exactly with a two-phase tableau simplex.

    Pivoting follows Bland's rule, so the result is deterministic and cycling
    cannot occur. Dual values are read from the reduced costs of each row's
    initial basic column and follow the usual sign convention for a
    maximization: y_i >= 0 on "<=" rows, y_i <= 0 on ">=" rows, free on "=" rows.

    An infeasible program carries a Farkas certificate read from the phase-one
    reduced costs, with the same sign convention: y·A_j >= 0 for every
    nonnegative variable, y·A_j = 0 for every free one, and y·b < 0.

    Args:
        lp (LinearProgram): The program to solve.

    Returns:
        LpResult: Status, optimal value, primal and dual solutions, or the
            infeasibility certificate.
    """
    zero = Fraction(0)
    one = Fraction(1)

    # Split free variables into a difference of two nonnegative columns
    columns: list[tuple[int, int]] = []
    for j, bound in enumerate(lp.lower_bounds):
        columns.append((j, 1))
        if bound is None:
            columns.append((j, -1))
    n_struct = len(columns)
    n_rows = len(lp.rhs)

    # Make every right-hand side nonnegative
    flips: list[int] = []
    senses: list[Sense] = []
    for i in range(n_rows):
        if lp.rhs[i] < 0:
            flips.append(-1)
            senses.append(_FLIPPED[lp.senses[i]])
        else:
            flips.append(1)
            senses.append(lp.senses[i])

    n_aux = sum(2 if s == ">=" else 1 for s in senses)
    n_cols = n_struct + n_aux
    T = np.empty((n_rows, n_cols + 1), dtype=object)
    T.fill(zero)
    for i in range(n_rows):
        for k, (j, sign) in enumerate(columns):
            T[i, k] = flips[i] * sign * Fraction(lp.matrix[i][j])
        T[i, -1] = flips[i] * Fraction(lp.rhs[i])

    artificial: set[int] = set()
    identity_column: list[int] = []
    next_column = n_struct
    for i, sense in enumerate(senses):
        if sense == ">=":
            T[i, next_column] = -one
            next_column += 1
        T[i, next_column] = one
        if sense != "<=":
            artificial.add(next_column)
        identity_column.append(next_column)
        next_column += 1

    tableau = _Tableau(T, list(identity_column))

    if artificial:
        tableau.price_out([-one if k in artificial else zero for k in range(n_cols)])
        tableau.iterate([True] * n_cols)
        if -tableau.reduced[-1] < 0:
            logger.debug(f"infeasible program, phase one value {-tableau.reduced[-1]}")
            phase_one_cost = [-one if column in artificial else zero for column in identity_column]
            certificate = tuple(
                flips[i] * (phase_one_cost[i] - tableau.reduced[identity_column[i]])
                for i in range(n_rows)
            )
            return LpResult(LpStatus.INFEASIBLE, certificate=certificate)
        for row, column in enumerate(list(tableau.basis)):
            if column not in artificial:
                continue
            replacement = next(
                (j for j in range(n_cols) if j not in artificial and T[row, j] != 0),
                None,
            )
            # A row with no replacement is redundant; its artificial stays basic at zero
            if replacement is not None:
                tableau.pivot(row, replacement)

    cost = [zero] * n_cols
    for k, (j, sign) in enumerate(columns):
        cost[k] = sign * Fraction(lp.objective[j])
    tableau.price_out(cost)
    if not tableau.iterate([k not in artificial for k in range(n_cols)]):
        return LpResult(LpStatus.UNBOUNDED)

    values = [zero] * n_cols
    for row, column in enumerate(tableau.basis):
        values[column] = T[row, -1]
    primal = [zero] * len(lp.objective)
    for k, (j, sign) in enumerate(columns):
        primal[j] += sign * values[k]

    dual = tuple(-flips[i] * tableau.reduced[identity_column[i]] for i in range(n_rows))
    value = sum((Fraction(c) * x for c, x in zip(lp.objective, primal)), zero)
    return LpResult(LpStatus.OPTIMAL, value, tuple(primal), dual)
