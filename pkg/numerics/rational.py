import re
from collections.abc import Iterable, Sequence
from fractions import Fraction

import numpy as np

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def to_rat(value: int | str | Fraction) -> Fraction:
    """
    Converts an integer, a Fraction or a "p/q" string to an exact rational.

    Floats are rejected: they cannot be carried exactly through the solvers.

    Args:
        value (int | str | Fraction): The value to convert.

    Returns:
        Fraction: The normalized rational.
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if match is None:
            raise ValueError(f"Not a rational: {value!r}")
        numerator, denominator = match.groups()
        if denominator is not None and int(denominator) == 0:
            raise ValueError(f"Zero denominator: {value!r}")
        return Fraction(int(numerator), int(denominator or 1))
    raise ValueError(f"Not a rational: {value!r}")


def format_rat(value: Fraction | int) -> int | str:
    """Integers stay integers, everything else becomes a "p/q" string."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def rat_vector(values: Iterable[int | str | Fraction]) -> np.ndarray:
    return np.array([to_rat(v) for v in values] or [], dtype=object)


def rat_matrix(rows: Sequence[Sequence[int | str | Fraction]]) -> np.ndarray:
    """
    Builds a 2-d object array of Fractions.

    Args:
        rows (Sequence[Sequence[int | str | Fraction]]): Row-major entries.

    Returns:
        np.ndarray: An array of shape (len(rows), len(rows[0])) with dtype object.
    """
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise ValueError(f"Ragged matrix, row lengths: {sorted(widths)}")
    width = widths.pop() if widths else 0
    matrix = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            matrix[i, j] = to_rat(entry)
    return matrix


def dot(left: Iterable[Fraction], right: Iterable[Fraction]) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(left, right)), Fraction(0))
