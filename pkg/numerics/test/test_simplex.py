from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import LpInputError
from numerics import LinearProgram, LpBuilder, LpStatus, lp_solve


def program(objective, matrix, rhs, senses, free=()):
    return LinearProgram(
        objective=tuple(Fraction(c) for c in objective),
        matrix=tuple(tuple(Fraction(x) for x in row) for row in matrix),
        rhs=tuple(Fraction(b) for b in rhs),
        senses=tuple(senses),
        lower_bounds=tuple(None if j in free else Fraction(0) for j in range(len(objective))),
    )


def test_one_variable_box():
    result = lp_solve(program([1], [[1]], [1], ["<="]))
    assert result.status is LpStatus.OPTIMAL
    assert result.value == 1
    assert result.dual == (1,)


def test_symmetric_face_is_resolved_deterministically():
    lp = program([1, 1], [[1, 1]], [1], ["<="])
    first, second = lp_solve(lp), lp_solve(lp)
    assert first.value == 1
    assert first.primal == second.primal
    assert sum(first.primal) == 1


def test_equality_and_inequality_duals():
    result = lp_solve(program([1, 2], [[1, 1], [0, 1]], [4, 1], ["=", "<="]))
    assert result.value == 5
    assert result.primal == (3, 1)
    assert result.dual == (1, 1)


def test_greater_equal_rows_have_nonpositive_duals():
    result = lp_solve(program([-1], [[1]], [2], [">="]))
    assert result.value == -2
    assert result.dual == (-1,)


def test_free_variable_can_go_negative():
    result = lp_solve(program([1], [[1]], [-3], ["<="], free={0}))
    assert result.value == -3
    assert result.primal == (-3,)


def test_infeasible_program():
    result = lp_solve(program([1], [[1], [1]], [2, 1], [">=", "<="]))
    assert result.status is LpStatus.INFEASIBLE
    assert not result.optimal
    assert result.certificate == (-1, 1)
    assert_farkas(program([1], [[1], [1]], [2, 1], [">=", "<="]), result.certificate)


def test_unbounded_program():
    assert lp_solve(program([1], [[1]], [1], [">="])).status is LpStatus.UNBOUNDED


def test_redundant_equalities_keep_duals_consistent():
    result = lp_solve(program([1, 1], [[1, 1], [2, 2]], [1, 2], ["=", "="]))
    assert result.value == 1
    assert result.dual[0] + 2 * result.dual[1] == 1


@pytest.mark.parametrize(
    "kwargs",
    [
        {"matrix": ((Fraction(1),),), "rhs": (), "senses": ()},
        {"matrix": ((Fraction(1), Fraction(2)),), "rhs": (Fraction(1),), "senses": ("<=",)},
        {"matrix": ((Fraction(1),),), "rhs": (Fraction(1),), "senses": ("<",)},
    ],
)
def test_malformed_programs_are_rejected(kwargs):
    with pytest.raises(LpInputError):
        LinearProgram(objective=(Fraction(1),), lower_bounds=(Fraction(0),), **kwargs)


def test_builder_returns_row_indices_for_duals():
    builder = LpBuilder()
    x, y = builder.add_variables(2)
    first = builder.add_constraint({x: 1}, "<=", 2)
    second = builder.add_constraint({y: 1}, "<=", 3)
    builder.maximize({x: 1, y: 2})
    result = builder.solve()
    assert (first, second) == (0, 1)
    assert result.value == 8
    assert result.dual == (1, 2)


small = st.integers(min_value=-3, max_value=3)


@st.composite
def bounded_programs(draw):
    n_vars = draw(st.integers(1, 3))
    n_rows = draw(st.integers(1, 3))
    matrix = [[draw(small) for _ in range(n_vars)] for _ in range(n_rows)]
    rhs = [draw(st.integers(0, 5)) for _ in range(n_rows)]
    # Box rows keep every program bounded; x = 0 keeps it feasible
    matrix += [[1 if k == j else 0 for k in range(n_vars)] for j in range(n_vars)]
    rhs += [4] * n_vars
    objective = [draw(small) for _ in range(n_vars)]
    return program(objective, matrix, rhs, ["<="] * len(rhs))


@settings(max_examples=60, deadline=None)
@given(bounded_programs())
def test_strong_duality_and_complementary_slackness(lp):
    result = lp_solve(lp)
    assert result.optimal
    x, y = result.primal, result.dual
    rows = range(len(lp.rhs))
    columns = range(len(lp.objective))
    assert all(v >= 0 for v in x)
    assert all(v >= 0 for v in y)
    assert result.value == sum(lp.rhs[i] * y[i] for i in rows)
    for i in rows:
        activity = sum(lp.matrix[i][j] * x[j] for j in columns)
        assert activity <= lp.rhs[i]
        assert y[i] * (lp.rhs[i] - activity) == 0
    for j in columns:
        reduced = sum(y[i] * lp.matrix[i][j] for i in rows) - lp.objective[j]
        assert reduced >= 0
        assert x[j] * reduced == 0


@settings(max_examples=40, deadline=None)
@given(bounded_programs(), st.randoms(use_true_random=False))
def test_row_permutation_keeps_the_optimum(lp, rnd):
    order = list(range(len(lp.rhs)))
    rnd.shuffle(order)
    permuted = LinearProgram(
        objective=lp.objective,
        matrix=tuple(lp.matrix[i] for i in order),
        rhs=tuple(lp.rhs[i] for i in order),
        senses=tuple(lp.senses[i] for i in order),
        lower_bounds=lp.lower_bounds,
    )
    assert lp_solve(permuted).value == lp_solve(lp).value


def assert_farkas(lp, y):
    rows = range(len(lp.rhs))
    for i in rows:
        if lp.senses[i] == "<=":
            assert y[i] >= 0
        elif lp.senses[i] == ">=":
            assert y[i] <= 0
    for j, bound in enumerate(lp.lower_bounds):
        column = sum(y[i] * lp.matrix[i][j] for i in rows)
        if bound is None:
            assert column == 0
        else:
            assert column >= 0
    assert sum(y[i] * lp.rhs[i] for i in rows) < 0


def test_free_variable_certificate_balances_its_column():
    lp = program([0, 0], [[1, 1], [1, 1]], [1, -1], ["=", "="], free={0})
    result = lp_solve(lp)
    assert result.status is LpStatus.INFEASIBLE
    assert_farkas(lp, result.certificate)


@st.composite
def mixed_programs(draw):
    n_vars = draw(st.integers(1, 3))
    n_rows = draw(st.integers(1, 4))
    matrix = [[draw(small) for _ in range(n_vars)] for _ in range(n_rows)]
    rhs = [draw(small) for _ in range(n_rows)]
    senses = [draw(st.sampled_from(["<=", "=", ">="])) for _ in range(n_rows)]
    free = {j for j in range(n_vars) if draw(st.booleans())}
    return program([0] * n_vars, matrix, rhs, senses, free=free)


@settings(max_examples=80, deadline=None)
@given(mixed_programs())
def test_infeasible_programs_carry_a_certificate(lp):
    result = lp_solve(lp)
    if result.status is LpStatus.INFEASIBLE:
        assert_farkas(lp, result.certificate)
    else:
        assert result.certificate == ()
