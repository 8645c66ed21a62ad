from collections.abc import Sequence
from fractions import Fraction

import numpy as np


def solve_exact(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> tuple[Fraction, ...] | None:
    """
    Solves matrix·x = rhs by Gauss-Jordan elimination over the rationals.

    The system may have more rows than columns (redundant equations are fine).

    Args:
        matrix (Sequence[Sequence[Fraction]]): Coefficient rows.
        rhs (Sequence[Fraction]): Right-hand side, one entry per row.

    Returns:
        tuple[Fraction, ...] | None: The unique solution, or None when the
        system is inconsistent or its solution is not unique.
    """
    n_rows = len(rhs)
    n_cols = len(matrix[0]) if n_rows else 0
    A = np.empty((n_rows, n_cols + 1), dtype=object)
    for i in range(n_rows):
        for j in range(n_cols):
            A[i, j] = Fraction(matrix[i][j])
        A[i, -1] = Fraction(rhs[i])

    pivot_row = 0
    for col in range(n_cols):
        found = next((i for i in range(pivot_row, n_rows) if A[i, col] != 0), None)
        if found is None:
            return None
        if found != pivot_row:
            A[[pivot_row, found]] = A[[found, pivot_row]]
        A[pivot_row] = A[pivot_row] / A[pivot_row, col]
        for i in range(n_rows):
            if i != pivot_row and A[i, col] != 0:
                A[i] = A[i] - A[i, col] * A[pivot_row]
        pivot_row += 1

    if any(A[i, -1] != 0 for i in range(pivot_row, n_rows)):
        return None
    return tuple(A[i, -1] for i in range(n_cols))
