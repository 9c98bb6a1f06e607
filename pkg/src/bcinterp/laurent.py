"""
Sparse Laurent polynomials in n variables with exact rational coefficients.

A :class:`LaurentPoly` maps exponent vectors (tuples of ints) to nonzero
:class:`fractions.Fraction` coefficients.  Terms iterate in graded-lex
order: by weight ``|alpha|``, then lexicographically.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import weyl
from .weyl import ArityError, SignedPermutation

__all__ = [
    "LaurentPoly", "NotSymmetricError", "monomial_key", "as_fraction",
    "sym_monomial", "expand_in_msym", "restrict", "act_poly",
]

NEG_INF = -math.inf  # degree of the zero polynomial


class NotSymmetricError(ValueError):
    pass


def monomial_key(alpha: Sequence[int]):
    return (weight_of(alpha), tuple(alpha))


def weight_of(alpha: Sequence[int]) -> int:
    return sum(abs(a) for a in alpha)


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are rejected."""
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'p/q'")
    return Fraction(x)


class LaurentPoly:
    """
    >>> x = LaurentPoly.monomial((1,))
    >>> xi = LaurentPoly.monomial((-1,))
    >>> f = (x + 1) * (xi + 1)
    >>> f
    LaurentPoly(1, {(0,): 2, (-1,): 1, (1,): 1})
    >>> f.degree
    1
    >>> f(2)
    Fraction(9, 2)
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple, object] | Iterable = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, Fraction] = {}
        for alpha, c in items:
            alpha = tuple(alpha)
            if len(alpha) != n:
                raise ArityError(f"exponent {alpha} has arity != {n}")
            acc[alpha] = acc.get(alpha, 0) + as_fraction(c)
        self._terms = {a: acc[a] for a in sorted(acc, key=monomial_key) if acc[a] != 0}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> LaurentPoly:
        # terms already exact and nonzero; only sorting needed
        self = cls.__new__(cls)
        self.n = n
        self._terms = {a: terms[a] for a in sorted(terms, key=monomial_key)}
        self._hash = None
        return self

    @classmethod
    def zero(cls, n: int) -> LaurentPoly:
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c=1) -> LaurentPoly:
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, alpha: Sequence[int], c=1) -> LaurentPoly:
        return cls(len(alpha), {tuple(alpha): c})

    @classmethod
    def variable(cls, n: int, i: int) -> LaurentPoly:
        """x_i, 1-based."""
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[tuple]:
        return list(self._terms)

    def coeff(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self):
        """Max weight over the support; ``-math.inf`` for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        return max(weight_of(a) for a in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __repr__(self):
        body = ", ".join(f"{a}: {c}" for a, c in self._terms.items())
        return f"LaurentPoly({self.n}, {{{body}}})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for alpha, c in self._terms.items():
            mono = "*".join(f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}"
                            for i, a in enumerate(alpha) if a != 0)
            if not mono:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(self._terms.items())))
        return self._hash

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ArityError(f"arity mismatch: {self.n} != {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for a, c in other._terms.items():
            v = acc.get(a, 0) + c
            if v:
                acc[a] = v
            else:
                acc.pop(a, None)
        return LaurentPoly._raw(self.n, acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.n, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> LaurentPoly:
        c = as_fraction(c)
        if c == 0:
            return LaurentPoly.zero(self.n)
        return LaurentPoly._raw(self.n, {a: c * v for a, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple, Fraction] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                e = tuple(x + y for x, y in zip(a, b))
                acc[e] = acc.get(e, 0) + c * d
        return LaurentPoly._raw(self.n, {a: c for a, c in acc.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, c):
        if isinstance(c, LaurentPoly):
            return NotImplemented
        return self.scale(1 / as_fraction(c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not supported")
        out = LaurentPoly.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    # -- evaluation --------------------------------------------------------

    def __call__(self, *z):
        if len(z) == 1 and isinstance(z[0], (tuple, list)):
            z = z[0]
        return self.eval(z)

    def eval(self, z: Sequence) -> Fraction:
        """Exact value at a point with nonzero rational coordinates."""
        if len(z) != self.n:
            raise ArityError(f"point of arity {len(z)} for a polynomial in {self.n} variables")
        z = [as_fraction(v) for v in z]
        if any(v == 0 for v in z):
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at a zero coordinate")
        powers: list[dict[int, Fraction]] = [{} for _ in range(self.n)]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = z[i] ** k
            return cache[k]

        total = Fraction(0)
        for alpha, c in self._terms.items():
            term = c
            for i, k in enumerate(alpha):
                if k:
                    term *= pw(i, k)
            total += term
        return total

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n,
                "terms": [{"exp": list(a), "coef": f"{c.numerator}/{c.denominator}"}
                          for a, c in self._terms.items()]}

    @classmethod
    def from_dict(cls, data: Mapping) -> LaurentPoly:
        return cls(int(data["n"]), [(t["exp"], Fraction(t["coef"])) for t in data["terms"]])

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_dict(json.loads(text))

    # -- variable manipulation ---------------------------------------------

    def embed(self, n: int, positions: Sequence[int]) -> LaurentPoly:
        """Rename variable k+1 of ``self`` to variable ``positions[k]`` (1-based) of an n-variable ring."""
        if len(positions) != self.n:
            raise ArityError("one target position per variable required")
        terms = {}
        for a, c in self._terms.items():
            e = [0] * n
            for k, p in enumerate(positions):
                e[p - 1] = a[k]
            terms[tuple(e)] = c
        return LaurentPoly._raw(n, terms)


def act_poly(w: SignedPermutation, f: LaurentPoly) -> LaurentPoly:
    """(w f)(x) = f(w^{-1} x), i.e. x^alpha -> x^{w alpha}."""
    if w.n != f.n:
        raise ArityError(f"arity mismatch: {w.n} != {f.n}")
    return LaurentPoly._raw(f.n, {weyl.act(w, a): c for a, c in f.items()})


def sym_monomial(lam: Sequence[int]) -> LaurentPoly:
    """m_lam = sum of x^mu over the W_n-orbit of lam."""
    return LaurentPoly._raw(len(lam), {mu: Fraction(1) for mu in weyl.orbit(lam)})


def restrict(f: LaurentPoly, k: int, a) -> LaurentPoly:
    """Substitute x_k = a (1-based k); the result lives in n-1 variables."""
    a = as_fraction(a)
    if a == 0:
        raise ZeroDivisionError("cannot restrict a Laurent polynomial to x_k = 0")
    if not 1 <= k <= f.n:
        raise IndexError(f"variable index {k} out of range 1..{f.n}")
    acc: dict[tuple, Fraction] = {}
    for alpha, c in f.items():
        e = alpha[:k - 1] + alpha[k:]
        acc[e] = acc.get(e, 0) + c * a ** alpha[k - 1]
    return LaurentPoly._raw(f.n - 1, {e: c for e, c in acc.items() if c})


def is_symmetric(f: LaurentPoly) -> bool:
    return all(act_poly(weyl.simple_reflection(f.n, j), f) == f for j in range(1, f.n + 1))


def expand_in_msym(f: LaurentPoly) -> dict[tuple, Fraction]:
    """
    Coefficients of a W_n-invariant ``f`` in the basis {m_mu}.

    >>> expand_in_msym(sym_monomial((2, 1)) * 3 + 5)
    {(2, 1): Fraction(3, 1), (0, 0): Fraction(5, 1)}
    """
    if not is_symmetric(f):
        raise NotSymmetricError("polynomial is not W_n-invariant")
    out: dict[tuple, Fraction] = {}
    rest = f
    while rest:
        alpha = rest.support()[-1]  # a support element of maximal weight
        mu = weyl.dominant(alpha)
        c = rest.coeff(alpha)
        out[mu] = c
        rest = rest - sym_monomial(mu).scale(c)
    return out
