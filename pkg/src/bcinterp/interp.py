"""
Symmetric and nonsymmetric interpolation Laurent polynomials.

``build_G(alpha, p)`` is the Laurent polynomial of degree <= |alpha| that is
1 at the node of alpha and 0 at the nodes of every other beta with
|beta| <= |alpha|.  ``build_R(lam, p)`` is its W_n-invariant counterpart,
pinned at the partition nodes of weight <= |lam|.

Both are computed by one exact square solve per (n, degree, parameters):
all G_alpha with |alpha| = d share the evaluation matrix of the monomials
x^beta (|beta| <= d) at the nodes, with different right-hand sides.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import weyl
from .laurent import LaurentPoly, as_fraction, restrict, sym_monomial
from .linalg import SingularMatrixError, solve_square
from .points import (DegenerateParameters, InterpParams, Verdict, enumerate_ball,
                     enumerate_ball_dominant, node_general, node_partition)

__all__ = [
    "InterpProblem", "build_G", "build_R", "g_table", "r_table",
    "qpoch", "closed_G1", "closed_R1", "product_G", "product_R",
    "check_restriction", "check_shift", "check_sym_expansion", "leading_coeff",
    "kronecker_failures", "expand_in_G", "nonsymmetric_matrix", "symmetric_matrix",
]


@dataclass(frozen=True)
class InterpProblem:
    """A square interpolation system: basis polynomials against nodes."""
    basis: tuple[LaurentPoly, ...]
    nodes: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.basis) != len(self.nodes):
            raise ValueError(f"{len(self.basis)} basis functions but {len(self.nodes)} nodes")

    def matrix(self) -> list[list[Fraction]]:
        return [[f.eval(z) for f in self.basis] for z in self.nodes]

    def solve(self, rhs: Sequence | None = None, *, all_units: bool = False):
        """
        Coefficient vectors for the given right-hand side, or for every unit
        vector when ``all_units`` is set (column k interpolates delta_k).
        """
        m = self.matrix()
        try:
            if all_units:
                size = len(self.basis)
                units = [[int(i == k) for i in range(size)] for k in range(size)]
                return solve_square(m, units, multiple=True)
            return solve_square(m, rhs)
        except SingularMatrixError as exc:
            raise DegenerateParameters(
                f"interpolation matrix is singular (vanishing pivot in column {exc.column})") from exc

    def combine(self, coeffs: Sequence[Fraction]) -> LaurentPoly:
        n = self.basis[0].n
        out: dict[tuple, Fraction] = {}
        for c, f in zip(coeffs, self.basis):
            if c:
                for a, v in f.items():
                    out[a] = out.get(a, 0) + c * v
        return LaurentPoly(n, out)


def nonsymmetric_problem(n: int, d: int, p: InterpParams) -> InterpProblem:
    pts = enumerate_ball(n, d)
    return InterpProblem(tuple(LaurentPoly.monomial(b) for b in pts),
                         tuple(node_general(b, p) for b in pts))


def symmetric_problem(n: int, d: int, p: InterpParams) -> InterpProblem:
    parts = enumerate_ball_dominant(n, d)
    return InterpProblem(tuple(sym_monomial(m) for m in parts),
                         tuple(node_partition(m, p) for m in parts))


def nonsymmetric_matrix(n: int, d: int, p: InterpParams) -> list[list[Fraction]]:
    return nonsymmetric_problem(n, d, p).matrix()


def symmetric_matrix(n: int, d: int, p: InterpParams) -> list[list[Fraction]]:
    return symmetric_problem(n, d, p).matrix()


@lru_cache(maxsize=256)
def g_table(n: int, d: int, p: InterpParams) -> dict[tuple, LaurentPoly]:
    """G_alpha for every alpha with |alpha| = d."""
    _check_n(n, p)
    if d == 0:
        return {(0,) * n: LaurentPoly.constant(n, 1)}
    problem = nonsymmetric_problem(n, d, p)
    pts = enumerate_ball(n, d)
    top = [k for k, b in enumerate(pts) if weyl.weight(b) == d]
    m = problem.matrix()
    units = [[int(i == k) for i in range(len(pts))] for k in top]
    try:
        sols = solve_square(m, units, multiple=True)
    except SingularMatrixError as exc:
        raise DegenerateParameters(
            f"nonsymmetric system n={n}, d={d} is singular at column {exc.column}") from exc
    return {pts[k]: problem.combine(x) for k, x in zip(top, sols)}


@lru_cache(maxsize=256)
def r_table(n: int, d: int, p: InterpParams) -> dict[tuple, LaurentPoly]:
    """R_lam for every partition lam with |lam| = d."""
    _check_n(n, p)
    problem = symmetric_problem(n, d, p)
    parts = enumerate_ball_dominant(n, d)
    top = [k for k, m in enumerate(parts) if sum(m) == d]
    units = [[int(i == k) for i in range(len(parts))] for k in top]
    try:
        sols = solve_square(problem.matrix(), units, multiple=True)
    except SingularMatrixError as exc:
        raise DegenerateParameters(
            f"symmetric system n={n}, d={d} is singular at column {exc.column}") from exc
    return {parts[k]: problem.combine(x) for k, x in zip(top, sols)}


def _check_n(n: int, p: InterpParams) -> None:
    if n != p.n:
        raise weyl.ArityError(f"{n} variables but {p.n} parameters")


def build_G(alpha: Sequence[int], p: InterpParams) -> LaurentPoly:
    alpha = tuple(alpha)
    return g_table(len(alpha), weyl.weight(alpha), p)[alpha]


def build_R(lam: Sequence[int], p: InterpParams) -> LaurentPoly:
    lam = tuple(lam)
    if not weyl.is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return r_table(len(lam), sum(lam), p)[lam]


def kronecker_failures(f: LaurentPoly, target, p: InterpParams, *, symmetric: bool) -> list[tuple]:
    """Nodes of weight <= |target| where f misses the Kronecker delta."""
    target = tuple(target)
    d = weyl.weight(target)
    if symmetric:
        pts, node = enumerate_ball_dominant(p.n, d), node_partition
    else:
        pts, node = enumerate_ball(p.n, d), node_general
    return [b for b in pts if f.eval(node(b, p)) != (1 if b == target else 0)]


def expand_in_G(f: LaurentPoly, p: InterpParams) -> dict[tuple, Fraction]:
    """
    Coefficients of ``f`` in the basis {G_beta : |beta| <= deg f}.

    At the node of beta only G_beta itself and the G_gamma with
    |gamma| < |beta| can be nonzero, so the system is solved weight by
    weight.
    """
    if f.is_zero():
        return {}
    d = int(f.degree)
    out: dict[tuple, Fraction] = {}
    lower: list[tuple[tuple, LaurentPoly]] = []
    for k in range(d + 1):
        layer = [b for b in enumerate_ball(p.n, k) if weyl.weight(b) == k]
        new = []
        for beta in layer:
            z = node_general(beta, p)
            c = f.eval(z) - sum((cg * g.eval(z) for _, g, cg in lower), Fraction(0))
            if c:
                out[beta] = c
            new.append((beta, build_G(beta, p), c))
        lower.extend(x for x in new if x[2])
    return out


def leading_coeff(f: LaurentPoly, alpha: Sequence[int]) -> Fraction:
    """Coefficient of x^alpha (for a symmetric f, also the coefficient of m_alpha)."""
    return f.coeff(tuple(alpha))


# -- one-variable closed forms -----------------------------------------------

def qpoch(a, q, k: int):
    """(a; q)_k for k >= 0; works for scalars and LaurentPoly ``a``."""
    if k < 0:
        raise ValueError("q-shifted factorial defined for k >= 0 only")
    out = 1
    for i in range(k):
        out = (1 - a * q ** i) * out
    return out


def _x(e: int) -> LaurentPoly:
    return LaurentPoly.monomial((e,))


def _nonzero(value: Fraction, what: str) -> Fraction:
    if value == 0:
        raise DegenerateParameters(f"vanishing denominator factor {what}")
    return value


def closed_G1(m: int, q, s) -> LaurentPoly:
    """One-variable G_m(x; q, s) from the q-shifted factorial formulas."""
    q, s = as_fraction(q), as_fraction(s)
    if m >= 0:
        num = qpoch(_x(1) * (q * s), q, m) * qpoch(_x(-1) * s, q, m)
        den = qpoch(q ** (1 + m) * s * s, q, m) * qpoch(q ** (-m), q, m)
    else:
        k = -m
        num = _x(1) * (q ** k * s) * qpoch(_x(1) * (q * s), q, k - 1) * qpoch(_x(-1) * s, q, k + 1)
        den = qpoch(q ** k * s * s, q, k + 1) * qpoch(q ** (1 - k), q, k - 1)
    num = num if isinstance(num, LaurentPoly) else LaurentPoly.constant(1, num)
    return num / _nonzero(Fraction(den), f"in G_{m}")


def closed_R1(m: int, q, s) -> LaurentPoly:
    """One-variable R_m(x; q, s)."""
    if m < 0:
        raise ValueError("R_m is indexed by m >= 0")
    q, s = as_fraction(q), as_fraction(s)
    num = qpoch(_x(1) * s, q, m) * qpoch(_x(-1) * s, q, m)
    num = num if isinstance(num, LaurentPoly) else LaurentPoly.constant(1, num)
    den = qpoch(q ** m * s * s, q, m) * qpoch(q ** (-m), q, m)
    return num / _nonzero(Fraction(den), f"in R_{m}")


def product_G(alpha: Sequence[int], q, s) -> LaurentPoly:
    """prod_i G_{alpha_i}(x_i; q, s), the G_alpha for tau = (s, ..., s)."""
    n = len(alpha)
    out = LaurentPoly.constant(n, 1)
    for i, a in enumerate(alpha):
        out = out * closed_G1(a, q, s).embed(n, [i + 1])
    return out


def product_R(lam: Sequence[int], q, s) -> LaurentPoly:
    """Sum over distinct rearrangements mu of lam of prod_i R_{mu_i}(x_i; q, s)."""
    n = len(lam)
    out = LaurentPoly.zero(n)
    for mu in sorted(set(itertools.permutations(lam))):
        term = LaurentPoly.constant(n, 1)
        for i, a in enumerate(mu):
            term = term * closed_R1(a, q, s).embed(n, [i + 1])
        out = out + term
    return out


# -- identity checks ---------------------------------------------------------

def check_restriction(lam: Sequence[int], p: InterpParams) -> Verdict:
    """R_lam((x', tau_n); q, tau) == R_lam(x'; q, tau') for lam_n = 0."""
    lam = tuple(lam)
    if p.n < 2 or lam[-1] != 0:
        raise ValueError("restriction identity needs n > 1 and lam_n = 0")
    lhs = restrict(build_R(lam, p), p.n, p.tau[-1])
    rhs = build_R(lam[:-1], p.drop_last())
    return Verdict("restriction", lhs == rhs, {"lam": lam})


def check_shift(lam: Sequence[int], p: InterpParams) -> Verdict:
    """R_lam(x; q, tau) == R_{lam-1}(x; q, q tau) prod_i (x_i-tau_n)(x_i^-1-tau_n)/(...)."""
    lam = tuple(lam)
    if lam[-1] <= 0:
        raise ValueError("shift identity needs lam_n > 0")
    n, tn = p.n, p.tau[-1]
    node = node_partition(lam, p)
    rhs = build_R(tuple(a - 1 for a in lam), p.shifted())
    for i in range(1, n + 1):
        xi = LaurentPoly.variable(n, i)
        xinv = LaurentPoly.monomial(tuple(-1 if k == i - 1 else 0 for k in range(n)))
        den = _nonzero((node[i - 1] - tn) * (1 / node[i - 1] - tn), f"at coordinate {i}")
        rhs = rhs * ((xi - tn) * (xinv - tn)) / den
    return Verdict("shift", build_R(lam, p) == rhs, {"lam": lam})


def check_sym_expansion(lam: Sequence[int], p: InterpParams) -> Verdict:
    """R_lam == sum of G_beta over the W_n-orbit of lam."""
    lam = tuple(lam)
    total = LaurentPoly.zero(len(lam))
    for beta in weyl.orbit(lam):
        total = total + build_G(beta, p)
    return Verdict("sym-expansion", total == build_R(lam, p), {"lam": lam})
