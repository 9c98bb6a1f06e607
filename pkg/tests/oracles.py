"""
Independent reference implementations used only by the tests.

Nothing here imports bcinterp.  The group is enumerated from its
definition, roots are counted directly, interpolation problems are solved
with sympy's rational linear algebra, and Hecke operators are applied
through their rational-function definitions with explicit cancellation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy as sp


# -- hyperoctahedral group from the definition ---------------------------------

def signed_perms(n):
    """All (signs, perm) with (w a)_j = signs[j] * a[perm^{-1}(j)]; perm is a forward map."""
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield signs, perm


def act(w, a):
    signs, perm = w
    out = [0] * len(a)
    for i, p in enumerate(perm):
        out[p] = signs[p] * a[i]
    return tuple(out)


def positive_roots(n):
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(tuple(e))
        for j in range(i + 1, n):
            for sign in (1, -1):
                e = [0] * n
                e[i], e[j] = 1, sign
                out.append(tuple(e))
    return out


def is_positive(beta):
    return next(b for b in beta if b) > 0


def length(w, n):
    return sum(1 for r in positive_roots(n) if not is_positive(act(w, r)))


def min_length_to(alpha):
    """Shortest length of any w with w(alpha^+) = alpha, plus all such w."""
    n = len(alpha)
    lam = tuple(sorted((abs(a) for a in alpha), reverse=True))
    hits = [w for w in signed_perms(n) if act(w, lam) == tuple(alpha)]
    best = min(length(w, n) for w in hits)
    return best, [w for w in hits if length(w, n) == best]


def one_line(w):
    """1-based images of positions 1..n under the permutation part."""
    return tuple(p + 1 for p in w[1])


# -- nodes -----------------------------------------------------------------------

def node(alpha, q, tau):
    """Node of alpha computed from the shortest w, independent of any sort key."""
    _, ws = min_length_to(alpha)
    assert len(ws) == 1, "minimal element must be unique"
    signs, perm = ws[0]
    n = len(alpha)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(q ** a * (tau[inv[j]] if a >= 0 else 1 / tau[inv[j]]) for j, a in enumerate(alpha))


def ball(n, d):
    return [a for a in itertools.product(range(-d, d + 1), repeat=n) if sum(map(abs, a)) <= d]


# -- interpolation by sympy --------------------------------------------------------

def xs(n):
    return sp.symbols(f"x1:{n + 1}")


def interpolate_G(alpha, q, tau):
    """Solve the defining conditions with sympy; returns {exponent: Fraction}."""
    n = len(alpha)
    d = sum(map(abs, alpha))
    basis = ball(n, d)
    nodes = [node(b, sp.Rational(q), [sp.Rational(t) for t in tau]) for b in basis]
    M = sp.Matrix([[sp.prod([z ** e for z, e in zip(pt, ex)]) for ex in basis] for pt in nodes])
    rhs = sp.Matrix([1 if b == tuple(alpha) else 0 for b in basis])
    sol = M.LUsolve(rhs)
    return {ex: Fraction(int(c.p), int(c.q)) for ex, c in zip(basis, sol) if c != 0}


def to_sympy(terms, n):
    x = xs(n)
    return sum((sp.Rational(c.numerator, c.denominator) * sp.prod([v ** e for v, e in zip(x, ex)])
                for ex, c in terms.items()), sp.Integer(0))


def from_sympy(expr, n):
    """Laurent expression to {exponent: Fraction}."""
    x = xs(n)
    expr = sp.expand(expr)
    big = 40
    shifted = sp.expand(expr * sp.prod([v ** big for v in x]))
    poly = sp.Poly(shifted, *x)
    out = {}
    for mon, c in poly.terms():
        if c != 0:
            out[tuple(m - big for m in mon)] = Fraction(int(c.p), int(c.q))
    return out


# -- Hecke operators from their rational definitions ------------------------------

def hecke_T(j, terms, n, t, s):
    x = xs(n)
    f = to_sympy(terms, n)
    t, s = sp.Rational(t), sp.Rational(s)
    if j < n:
        a, b = x[j - 1], x[j]
        sf = f.subs({a: b, b: a}, simultaneous=True)
        g = t * f + (a - t * b) / (a - b) * (sf - f)
    else:
        v = x[-1]
        sf = f.subs(v, 1 / v)
        g = -f + (1 - s / v) * (1 - 1 / (s * v)) / (1 - v ** -2) * (sf - f)
    return from_sympy(sp.cancel(sp.together(g)), n)


# -- q-Pochhammer -----------------------------------------------------------------

def qpoch_value(a, q, k):
    out = Fraction(1)
    for i in range(k):
        out *= 1 - a * q ** i
    return out


def one_variable_G_value(m, q, s, x):
    """Closed one-variable G_m(x) as a number."""
    if m >= 0:
        num = qpoch_value(q * s * x, q, m) * qpoch_value(s / x, q, m)
        den = qpoch_value(q ** (1 + m) * s * s, q, m) * qpoch_value(q ** (-m), q, m)
    else:
        k = -m
        num = x * q ** k * s * qpoch_value(q * s * x, q, k - 1) * qpoch_value(s / x, q, k + 1)
        den = qpoch_value(q ** k * s * s, q, k + 1) * qpoch_value(q ** (1 - k), q, k - 1)
    return num / den
