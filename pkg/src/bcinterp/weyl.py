"""
The hyperoctahedral group W_n = {+1,-1}^n x| S_n, the Weyl group of type B_n.

Exponent vectors and partitions are plain tuples of ints.  A signed
permutation ``w = sigma pi`` acts on Z^n by

    (w a)_j = sigma_j * a_{pi^{-1}(j)},

so ``w(e_i) = sigma_{pi(i)} e_{pi(i)}``.  Simple reflections are indexed
1..n: ``s_i`` (i < n) swaps coordinates i, i+1 and ``s_n`` negates the last
coordinate.

>>> w = min_coset_rep((0, 4, -2, -1, 0, -2, 1, 4, 1))
>>> w.one_line()
(2, 8, 6, 3, 7, 9, 4, 1, 5)
>>> act(w, dominant((0, 4, -2, -1, 0, -2, 1, 4, 1)))
(0, 4, -2, -1, 0, -2, 1, 4, 1)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "ArityError", "SignedPermutation",
    "weight", "is_partition", "partition_length", "dominates", "contains",
    "act", "dominant", "sgn", "simple_reflection", "identity", "longest",
    "min_coset_rep", "length", "reduced_word", "from_word", "elements",
    "orbit", "min_reps_and_stabilizer", "positive_roots", "is_positive_root",
    "roots", "inversion_set", "simple_root",
]

ExponentVector = tuple[int, ...]
Partition = tuple[int, ...]


class ArityError(ValueError):
    """Arguments of an operation live in different numbers of variables."""


def _check_arity(n: int, m: int) -> None:
    if n != m:
        raise ArityError(f"arity mismatch: {n} != {m}")


def sgn(a: int) -> int:
    # sgn(0) = +1
    return 1 if a >= 0 else -1


def weight(alpha: Sequence[int]) -> int:
    return sum(abs(a) for a in alpha)


def is_partition(lam: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:])) and (not lam or lam[-1] >= 0)


def partition_length(lam: Sequence[int]) -> int:
    """Index of the last nonzero entry (0 for the zero partition)."""
    return max((i + 1 for i, a in enumerate(lam) if a != 0), default=0)


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance order ``mu <= lam``: all partial sums of mu bounded by those of lam."""
    _check_arity(len(lam), len(mu))
    return all(x >= y for x, y in zip(itertools.accumulate(lam), itertools.accumulate(mu)))


def contains(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Inclusion ``lam ⊆ mu``."""
    _check_arity(len(lam), len(mu))
    return all(l <= m for l, m in zip(lam, mu))


@dataclass(frozen=True)
class SignedPermutation:
    """
    An element ``sigma pi`` of W_n.

    ``signs[j]`` is sigma_{j+1} and ``perm[j]`` is pi(j+1) - 1, i.e. the
    permutation is stored 0-based as a forward map.  Use :meth:`one_line`
    for the 1-based notation.
    """
    signs: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != len(self.perm):
            raise ArityError("signs and perm differ in length")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"not a permutation: {self.perm}")
        if any(e not in (1, -1) for e in self.signs):
            raise ValueError(f"signs must be +-1: {self.signs}")

    @property
    def n(self) -> int:
        return len(self.perm)

    def one_line(self) -> tuple[int, ...]:
        """pi in 1-based one-line notation (pi(1), ..., pi(n))."""
        return tuple(p + 1 for p in self.perm)

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        _check_arity(self.n, other.n)
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = [1] * self.n
        for i in range(self.n):
            signs[perm[i]] = self.signs[perm[i]] * other.signs[other.perm[i]]
        return SignedPermutation(tuple(signs), perm)

    def inverse(self) -> SignedPermutation:
        inv = [0] * self.n
        for i, p in enumerate(self.perm):
            inv[p] = i
        # w(e_i) = sigma_{pi(i)} e_{pi(i)}  =>  w^{-1}(e_{pi(i)}) = sigma_{pi(i)} e_i
        signs = tuple(self.signs[self.perm[i]] for i in range(self.n))
        return SignedPermutation(signs, tuple(inv))

    def __call__(self, alpha: Sequence) -> tuple:
        return act(self, alpha)


def act(w: SignedPermutation, alpha: Sequence) -> tuple:
    """
    Apply ``w`` to an exponent vector (or any vector of numbers).

    >>> act(simple_reflection(2, 1), (1, 0))
    (0, 1)
    >>> act(simple_reflection(2, 2), (0, 1))
    (0, -1)
    """
    _check_arity(w.n, len(alpha))
    out = [0] * w.n
    for i, a in enumerate(alpha):
        j = w.perm[i]
        out[j] = w.signs[j] * a
    return tuple(out)


def act_multiplicative(w: SignedPermutation, z: Sequence) -> tuple:
    """The exponentiated action on nonzero points: (w z)_j = z_{pi^{-1}(j)}^{sigma_j}."""
    _check_arity(w.n, len(z))
    out = [None] * w.n
    for i, x in enumerate(z):
        j = w.perm[i]
        out[j] = x if w.signs[j] == 1 else 1 / x
    return tuple(out)


def dominant(alpha: Sequence[int]) -> Partition:
    """The unique partition in the W_n-orbit of ``alpha``."""
    return tuple(sorted((abs(a) for a in alpha), reverse=True))


def identity(n: int) -> SignedPermutation:
    return SignedPermutation((1,) * n, tuple(range(n)))


@lru_cache(maxsize=None)
def simple_reflection(n: int, i: int) -> SignedPermutation:
    if not 1 <= i <= n:
        raise IndexError(f"simple reflection index {i} out of range 1..{n}")
    if i == n:
        return SignedPermutation((1,) * (n - 1) + (-1,), tuple(range(n)))
    perm = list(range(n))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return SignedPermutation((1,) * n, tuple(perm))


def longest(n: int) -> SignedPermutation:
    """w_0 = -id."""
    return SignedPermutation((-1,) * n, tuple(range(n)))


def from_word(n: int, word: Sequence[int]) -> SignedPermutation:
    """The product s_{i_1} s_{i_2} ... s_{i_r}."""
    w = identity(n)
    for i in word:
        w = w * simple_reflection(n, i)
    return w


def min_coset_rep(alpha: Sequence[int]) -> SignedPermutation:
    """
    The minimal length ``w_alpha`` with ``w_alpha(alpha^+) = alpha``.

    sigma_alpha is the sign vector of alpha (sgn(0) = +1).  pi_alpha lists
    the positions of alpha in order of decreasing modulus; among equal
    moduli the nonnegative entries come first in increasing position, then
    the negative entries in decreasing position.
    """
    alpha = tuple(alpha)
    signs = tuple(sgn(a) for a in alpha)

    def key(i):
        a = alpha[i]
        return (-abs(a), 0, i) if a >= 0 else (-abs(a), 1, -i)

    order = sorted(range(len(alpha)), key=key)  # order[k] = pi(k)
    return SignedPermutation(signs, tuple(order))


def simple_root(n: int, i: int) -> ExponentVector:
    """beta^i = e_i - e_{i+1} (i < n), beta^n = e_n."""
    v = [0] * n
    v[i - 1] = 1
    if i < n:
        v[i] = -1
    return tuple(v)


def is_positive_root(beta: Sequence[int]) -> bool:
    # every root of B_n is positive iff its first nonzero entry is
    return next(b for b in beta if b != 0) > 0


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[ExponentVector, ...]:
    """R^+ = {e_i +- e_j : i < j} u {e_i}."""
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(tuple(e))
        for j in range(i + 1, n):
            for sj in (-1, 1):
                v = [0] * n
                v[i], v[j] = 1, sj
                out.append(tuple(v))
    return tuple(sorted(out, key=lambda v: (weight(v), v)))


def roots(n: int) -> tuple[ExponentVector, ...]:
    pos = positive_roots(n)
    return pos + tuple(tuple(-b for b in beta) for beta in pos)


def inversion_set(w: SignedPermutation) -> frozenset[ExponentVector]:
    """Positive roots sent by ``w`` to negative roots."""
    return frozenset(beta for beta in positive_roots(w.n)
                     if not is_positive_root(act(w, beta)))


def length(w: SignedPermutation) -> int:
    return len(inversion_set(w))


def reduced_word(w: SignedPermutation) -> list[int]:
    """
    A reduced word [i_1, ..., i_r] with w = s_{i_1} ... s_{i_r}.

    Greedy: strip a right descent ``s_i`` (l(w s_i) < l(w)) until the
    identity is reached.
    """
    word: list[int] = []
    ell = length(w)
    while ell > 0:
        for i in range(1, w.n + 1):
            v = w * simple_reflection(w.n, i)
            if length(v) < ell:
                word.append(i)
                w, ell = v, ell - 1
                break
    word.reverse()
    return word


@lru_cache(maxsize=None)
def elements(n: int) -> tuple[SignedPermutation, ...]:
    """All 2^n n! elements, sorted by length and then by (perm, signs)."""
    ws = [SignedPermutation(signs, perm)
          for perm in itertools.permutations(range(n))
          for signs in itertools.product((1, -1), repeat=n)]
    return tuple(sorted(ws, key=lambda w: (length(w), w.perm, tuple(-s for s in w.signs))))


def orbit(lam: Sequence[int]) -> list[ExponentVector]:
    """The W_n-orbit of ``lam``, deduplicated, in graded-lex order."""
    lam = tuple(lam)
    seen = set()
    for perm in set(itertools.permutations(lam)):
        choices = [(a,) if a == 0 else (a, -a) for a in perm]
        seen.update(itertools.product(*choices))
    return sorted(seen, key=lambda v: (weight(v), v))


def iter_orbit_with_reps(lam: Sequence[int]) -> Iterator[tuple[ExponentVector, SignedPermutation]]:
    for beta in orbit(lam):
        yield beta, min_coset_rep(beta)


def min_reps_and_stabilizer(lam: Sequence[int]) -> tuple[frozenset[SignedPermutation], frozenset[SignedPermutation]]:
    """
    The minimal coset representatives W_n^lam and the stabilizer W_{n,lam}.

    Both computed by enumerating W_n; a coset u W_{n,lam} is determined by
    u(lam), and its minimal element is the shortest w with w(lam) = u(lam).
    """
    lam = tuple(lam)
    stab = frozenset(w for w in elements(len(lam)) if act(w, lam) == lam)
    best: dict[ExponentVector, SignedPermutation] = {}
    for w in elements(len(lam)):  # sorted by length, so first hit is minimal
        best.setdefault(act(w, lam), w)
    return frozenset(best.values()), stab
