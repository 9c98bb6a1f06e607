"""
Demazure-Lusztig operators realizing the Hecke algebra H_n(t, -1).

    H_j = t + (x_j - t x_{j+1}) / (x_j - x_{j+1}) (s_j - 1)                (j < n)
    H_n = -1 + (1 - s x_n^-1)(1 - s^-1 x_n^-1) / (1 - x_n^-2) (s_n - 1)

Both are applied through their closed action on monomials, so no division
by (x_j - x_{j+1}) or (1 - x_n^-2) ever happens.  H_j only touches the
exponents of x_j, x_{j+1}; H_n only the exponent of x_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import weyl
from .interp import build_G, build_R, expand_in_G
from .laurent import LaurentPoly, as_fraction
from .points import DegenerateParameters, InterpParams, Verdict, node_general, node_partition
from .weyl import SignedPermutation

__all__ = [
    "HeckeParams", "apply_T", "apply_word", "symmetrize", "hecke_char",
    "hecke_images", "kappa", "upsilon", "c_coeff", "check_expansion_theorem",
    "cst_lambda", "stabilizer_char", "w0_coset_rep", "word_coefficient",
]


@dataclass(frozen=True)
class HeckeParams:
    """Long-root parameter ``t`` and representation parameter ``s``; t_n = -1."""
    t: Fraction
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", as_fraction(self.t))
        object.__setattr__(self, "s", as_fraction(self.s))
        if self.t == 0 or self.s == 0:
            raise ValueError("Hecke parameters s and t must be nonzero")

    @classmethod
    def from_interp(cls, p: InterpParams) -> HeckeParams:
        if not p.is_principal:
            raise ValueError("the Hecke action needs principal parameters")
        return cls(p.t, p.s)

    def kappa(self, j: int, n: int) -> Fraction:
        """chi(T_j): t for j < n, -1 for j = n."""
        return self.t if j < n else Fraction(-1)


def _pair_image(k: int, l: int, t: Fraction) -> list[tuple[int, int, Fraction]]:
    """H_1 (two variables) on x_1^k x_2^l as (k', l', coeff) terms."""
    if k == l:
        return [(k, k, t)]
    if k > l:
        out = [(l, k, t)]
        out += [(a, k + l - a, t - 1) for a in range(l + 1, k + 1)]
        return out
    out = [(l, k, Fraction(1))]
    out += [(a, k + l - a, 1 - t) for a in range(k + 1, l)]
    return out


def _last_image(k: int, s: Fraction) -> list[tuple[int, Fraction]]:
    """H_n (one variable) on x^k."""
    if k == 0:
        return [(0, Fraction(-1))]
    ss = s + 1 / s
    if k > 0:
        out = [(-k, Fraction(-1))]
        out += [(e, Fraction(-2)) for e in range(-k + 2, k + 1, 2)]
        out += [(e, ss) for e in range(-k + 1, k, 2)]
        return out
    m = -k
    out = [(m, Fraction(1))]
    out += [(e, Fraction(2)) for e in range(k + 2, m - 1, 2)]
    out += [(e, -ss) for e in range(k + 1, m, 2)]
    return out


def apply_T(j: int, f: LaurentPoly, hp: HeckeParams) -> LaurentPoly:
    """
    The image of f under H_j (1 <= j < n) or H_n (j = n).

    >>> hp = HeckeParams(Fraction(1, 5), Fraction(1, 3))
    >>> apply_T(1, LaurentPoly.monomial((1,)), hp)
    LaurentPoly(1, {(0,): 10/3, (-1,): -1, (1,): -2})
    """
    n = f.n
    if not 1 <= j <= n:
        raise IndexError(f"generator index {j} out of range 1..{n}")
    acc: dict[tuple, Fraction] = {}
    if j < n:
        for alpha, c in f.items():
            for k2, l2, v in _pair_image(alpha[j - 1], alpha[j], hp.t):
                e = alpha[:j - 1] + (k2, l2) + alpha[j + 1:]
                acc[e] = acc.get(e, 0) + c * v
    else:
        for alpha, c in f.items():
            for k2, v in _last_image(alpha[-1], hp.s):
                e = alpha[:-1] + (k2,)
                acc[e] = acc.get(e, 0) + c * v
    return LaurentPoly(n, acc)


def apply_word(word: Sequence[int], f: LaurentPoly, hp: HeckeParams) -> LaurentPoly:
    """T_{i_1} ... T_{i_r} f (the rightmost generator acts first)."""
    for j in reversed(word):
        f = apply_T(j, f, hp)
    return f


def hecke_images(f: LaurentPoly, hp: HeckeParams) -> dict[SignedPermutation, LaurentPoly]:
    """
    T_w f for every w in W_n.

    Built up by length: w = s_i v with l(w) = l(v) + 1 gives T_w f = T_i (T_v f).
    """
    n = f.n
    out = {weyl.identity(n): f}
    frontier = [weyl.identity(n)]
    while frontier:
        nxt = []
        for v in frontier:
            ell = weyl.length(v)
            for i in range(1, n + 1):
                w = weyl.simple_reflection(n, i) * v
                if w not in out and weyl.length(w) == ell + 1:
                    out[w] = apply_T(i, out[v], hp)
                    nxt.append(w)
        frontier = nxt
    return out


def symmetrize(f: LaurentPoly, hp: HeckeParams) -> LaurentPoly:
    """C_+ f = sum over w of T_w f."""
    total = LaurentPoly.zero(f.n)
    for g in hecke_images(f, hp).values():
        total = total + g
    return total


def hecke_char(w: SignedPermutation, hp: HeckeParams) -> Fraction:
    """chi(T_w) = t^(#generators j < n) (-1)^(#generators n) in a reduced word."""
    word = weyl.reduced_word(w)
    long_count = sum(1 for j in word if j < w.n)
    return hp.t ** long_count * (-1) ** (len(word) - long_count)


def stabilizer_char(lam: Sequence[int], hp: HeckeParams) -> Fraction:
    """chi(C_{+,lam}) = sum of chi(T_v) over the stabilizer of lam."""
    _, stab = weyl.min_reps_and_stabilizer(lam)
    return sum((hecke_char(v, hp) for v in stab), Fraction(0))


# -- c-coefficients --------------------------------------------------------

def _is_short(beta: Sequence[int]) -> bool:
    return sum(1 for b in beta if b) == 1


def kappa(beta: Sequence[int], hp: HeckeParams) -> Fraction:
    return hp.s if _is_short(beta) else hp.t


def upsilon(beta: Sequence[int], hp: HeckeParams) -> Fraction:
    return -1 / hp.s if _is_short(beta) else Fraction(1)


def _node_power(z: Sequence[Fraction], beta: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for x, b in zip(z, beta):
        out *= x ** b
    return out


def c_coeff(beta: Sequence[int], alpha: Sequence[int], p: InterpParams, hp: HeckeParams) -> Fraction:
    """(z^beta - kappa_beta)(z^beta + upsilon_beta) / (z^{2 beta} - 1) at z = node of alpha."""
    zb = _node_power(node_general(alpha, p), beta)
    den = zb * zb - 1
    if den == 0:
        raise DegenerateParameters(f"c-coefficient denominator vanishes for beta={tuple(beta)}, alpha={tuple(alpha)}")
    return (zb - kappa(beta, hp)) * (zb + upsilon(beta, hp)) / den


def check_expansion_theorem(alpha: Sequence[int], j: int, p: InterpParams, hp: HeckeParams) -> Verdict:
    """Compare H_j G_alpha with its expansion in G_alpha and G_{s_j alpha}."""
    alpha = tuple(alpha)
    n = p.n
    g = build_G(alpha, p)
    lhs = apply_T(j, g, hp)
    beta = weyl.act(weyl.simple_reflection(n, j), alpha)
    if beta == alpha:
        rhs = g.scale(hp.kappa(j, n))
        case = "fixed"
    else:
        c = c_coeff(tuple(-b for b in weyl.simple_root(n, j)), alpha, p, hp)
        rhs = -g + (build_G(beta, p) + g).scale(c)
        case = "moved"
    return Verdict("expansion-theorem", lhs == rhs, {"alpha": alpha, "j": j, "case": case})


# -- the symmetrizer constant ------------------------------------------------

def w0_coset_rep(lam: Sequence[int]) -> SignedPermutation:
    """Minimal representative of w_0 W_{n,lam}: the shortest w with w(lam) = -lam."""
    return weyl.min_coset_rep(tuple(-a for a in lam))


def cst_lambda(lam: Sequence[int], p: InterpParams, hp: HeckeParams) -> Fraction:
    """chi(C_{+,lam}) times the product of c_{-beta}(lam) over the inversions of w_0^lam."""
    lam = tuple(lam)
    prod = Fraction(1)
    for beta in sorted(weyl.inversion_set(w0_coset_rep(lam))):
        prod *= c_coeff(tuple(-b for b in beta), lam, p, hp)
    return stabilizer_char(lam, hp) * prod


def word_coefficient(lam: Sequence[int], p: InterpParams, hp: HeckeParams) -> Fraction:
    """Coefficient of G_{-lam} in T_{w_0^lam} G_lam, read off by expanding in the G basis."""
    lam = tuple(lam)
    img = apply_word(weyl.reduced_word(w0_coset_rep(lam)), build_G(lam, p), hp)
    return expand_in_G(img, p).get(tuple(-a for a in lam), Fraction(0))
