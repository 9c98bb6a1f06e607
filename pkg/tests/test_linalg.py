from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from bcinterp.linalg import SingularMatrixError, determinant, residual_is_zero, solve_square

entries = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)


systems = st.integers(1, 6).flatmap(lambda n: st.tuples(square(n), st.lists(entries, min_size=n, max_size=n)))


def to_sympy(m):
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in row] for row in m])


@given(systems)
def test_solve_matches_sympy(system):
    m, b = system
    det = to_sympy(m).det()
    assert determinant(m) == F(int(det.p), int(det.q))
    if det == 0:
        with pytest.raises(SingularMatrixError):
            solve_square(m, b)
        return
    x = solve_square(m, b)
    assert residual_is_zero(m, x, b)
    ref = to_sympy(m).LUsolve(to_sympy([b]).T)
    assert x == [F(int(v.p), int(v.q)) for v in ref]


def test_multiple_rhs():
    m = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    cols = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    inv = solve_square(m, cols, multiple=True)
    for j, col in enumerate(inv):
        assert residual_is_zero(m, col, cols[j])
    assert determinant(m) == 18


def test_needs_pivoting():
    assert solve_square([[0, 1], [1, 0]], [3, 4]) == [4, 3]


def test_singular_and_shape_errors():
    with pytest.raises(SingularMatrixError):
        solve_square([[1, 2], [2, 4]], [1, 1])
    with pytest.raises(ValueError):
        solve_square([[1, 2]], [1])
    assert solve_square([], []) == []
