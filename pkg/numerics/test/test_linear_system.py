from fractions import Fraction

from numerics import solve_exact


def test_unique_solution():
    assert solve_exact([[2, 1], [1, 3]], [3, 5]) == (Fraction(4, 5), Fraction(7, 5))


def test_overdetermined_consistent_system():
    assert solve_exact([[1, 0], [0, 1], [1, 1]], [1, 2, 3]) == (1, 2)


def test_inconsistent_system():
    assert solve_exact([[1, 0], [0, 1], [1, 1]], [1, 2, 4]) is None


def test_singular_system():
    assert solve_exact([[1, 1], [2, 2]], [1, 2]) is None
