"""
Exact solution of square rational linear systems.

Rows are scaled to integers, then reduced by fraction-free (Bareiss)
elimination.  Every intermediate quantity is an integer; the only
division is the exact one prescribed by Sylvester's identity, and the
solution is recovered as adjugate/determinant.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import gmpy2

__all__ = ["SingularMatrixError", "solve_square", "residual_is_zero", "determinant"]


class SingularMatrixError(ArithmeticError):
    def __init__(self, column: int):
        super().__init__(f"singular matrix: no nonzero pivot in column {column}")
        self.column = column


def _integer_rows(matrix, rhs_cols):
    rows = []
    for i, row in enumerate(matrix):
        full = [Fraction(x) for x in row] + [Fraction(col[i]) for col in rhs_cols]
        scale = math.lcm(*(x.denominator for x in full))
        rows.append([gmpy2.mpz(x.numerator * (scale // x.denominator)) for x in full])
    return rows


def _bareiss(rows: list[list[int]], n: int) -> list[list[int]]:
    """In-place forward elimination on an n x (n + k) integer matrix."""
    prev = 1
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda i: abs(rows[i][k]))
        if rows[pivot_row][k] == 0:
            raise SingularMatrixError(k)
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
        rk = rows[k]
        pk = rk[k]
        width = len(rk)
        for i in range(k + 1, n):
            ri = rows[i]
            a = ri[k]
            if a == 0:
                # ri[j] * pk is still divisible by prev
                for j in range(k + 1, width):
                    ri[j] = ri[j] * pk // prev
            else:
                for j in range(k + 1, width):
                    ri[j] = (ri[j] * pk - a * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return rows


def solve_square(matrix: Sequence[Sequence], rhs: Sequence | Sequence[Sequence],
                 multiple: bool = False):
    """
    Solve ``matrix @ x = rhs`` exactly.

    With ``multiple=True``, ``rhs`` is a list of right-hand-side columns and
    a list of solution vectors is returned.

    >>> solve_square([[1, 2], [3, 5]], [1, 0])
    [Fraction(-5, 1), Fraction(3, 1)]
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    cols = list(rhs) if multiple else [rhs]
    if any(len(c) != n for c in cols):
        raise ValueError("right-hand side has the wrong length")
    if n == 0:
        return [[] for _ in cols] if multiple else []
    rows = _bareiss(_integer_rows(matrix, cols), n)
    det = rows[n - 1][n - 1]
    zero = gmpy2.mpz(0)
    sols = []
    for c in range(len(cols)):
        col = n + c
        # y = det * x is integral (Cramer); back substitution stays in Z
        y = [zero] * n
        for i in range(n - 1, -1, -1):
            ri = rows[i]
            acc = det * ri[col]
            for j in range(i + 1, n):
                if ri[j]:
                    acc -= ri[j] * y[j]
            y[i] = acc // ri[i]
        sols.append([Fraction(int(v), int(det)) for v in y])
    return sols if multiple else sols[0]


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant (0 for singular input)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scales = []
    rows = []
    for row in matrix:
        fr = [Fraction(x) for x in row]
        s = math.lcm(*(x.denominator for x in fr))
        scales.append(s)
        rows.append([x.numerator * (s // x.denominator) for x in fr])
    # track row swaps for the sign
    sign = 1
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return Fraction(sign * rows[n - 1][n - 1], math.prod(scales))


def residual_is_zero(matrix, x, rhs) -> bool:
    return all(sum((Fraction(a) * b for a, b in zip(row, x)), Fraction(0)) == Fraction(r)
               for row, r in zip(matrix, rhs))
