"""
Interpolation parameters and interpolation nodes.

For a partition mu the node is ``(q^{mu_i} tau_i)_i``; for a general
exponent vector alpha it is

    alpha_bar_i = q^{alpha_i} * tau_{pi_alpha^{-1}(i)} ^ sgn(alpha_i)

with pi_alpha from :func:`bcinterp.weyl.min_coset_rep`.  All parameters are
exact positive rationals.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import weyl
from .laurent import as_fraction
from .weyl import sgn

__all__ = [
    "InterpParams", "DegenerateParameters", "in_q_powers",
    "node_partition", "node_general", "node_action_check",
    "enumerate_ball", "enumerate_ball_dominant", "Verdict",
]


class DegenerateParameters(ArithmeticError):
    """The parameters hit a vanishing denominator or a singular system."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of a single identity check."""
    check: str
    passed: bool
    info: dict = field(default_factory=dict, compare=False, hash=False)

    def __bool__(self):
        return self.passed


def in_q_powers(x: Fraction, q: Fraction) -> int | None:
    """
    The integer k with ``x == q**k``, or None.

    Decided exactly: the float logarithm only proposes candidates.
    """
    if x <= 0:
        return None
    if x == 1:
        return 0
    if q == 1:
        return None
    guess = math.log(x.numerator) - math.log(x.denominator)
    guess /= math.log(q.numerator) - math.log(q.denominator)
    for k in (math.floor(guess), math.ceil(guess)):
        if q ** k == x:
            return k
    return None


@dataclass(frozen=True)
class InterpParams:
    """
    Exact parameters ``q`` and ``tau``.

    ``s`` and ``t`` are set in principal mode, where ``tau_i = s t^(n-i)``.
    Use :meth:`general` and :meth:`principal` rather than the constructor.
    """
    q: Fraction
    tau: tuple[Fraction, ...]
    s: Fraction | None = None
    t: Fraction | None = None

    @classmethod
    def general(cls, q, tau: Sequence) -> InterpParams:
        q = as_fraction(q)
        tau = tuple(as_fraction(x) for x in tau)
        cls._validate(q, tau)
        return cls(q, tau)

    @classmethod
    def principal(cls, q, s, t, n: int) -> InterpParams:
        q, s, t = as_fraction(q), as_fraction(s), as_fraction(t)
        if t == 0:
            raise ValueError("t must be nonzero")
        tau = tuple(s * t ** (n - i) for i in range(1, n + 1))
        cls._validate(q, tau)
        return cls(q, tau, s, t)

    @classmethod
    def constant(cls, q, s, n: int) -> InterpParams:
        """tau = (s, ..., s); not strictly ordered, but unisolvent."""
        return cls.general(q, (s,) * n)

    @staticmethod
    def _validate(q: Fraction, tau: tuple[Fraction, ...]) -> None:
        if not 0 < q < 1:
            raise ValueError(f"q must lie in (0, 1), got {q}")
        if not tau:
            raise ValueError("at least one variable is required")
        if any(x == 0 for x in tau):
            raise ValueError("tau entries must be nonzero")

    @property
    def n(self) -> int:
        return len(self.tau)

    @property
    def is_principal(self) -> bool:
        return self.s is not None

    @property
    def mode(self) -> str:
        return "principal" if self.is_principal else "general"

    def strictly_ordered(self) -> bool:
        """Whether 0 < |tau_1| < ... < |tau_n| < 1."""
        mods = [abs(x) for x in self.tau]
        return 0 < mods[0] and all(a < b for a, b in zip(mods, mods[1:])) and mods[-1] < 1

    def genericity_failures(self) -> list[str]:
        """Violations of tau_i^2, tau_i tau_j^{+-1} not in q^Z (i != j)."""
        bad = []
        for i, a in enumerate(self.tau):
            if in_q_powers(a * a, self.q) is not None:
                bad.append(f"tau_{i + 1}^2 in q^Z")
            for j, b in enumerate(self.tau):
                if i < j:
                    if in_q_powers(a * b, self.q) is not None:
                        bad.append(f"tau_{i + 1} tau_{j + 1} in q^Z")
                    if in_q_powers(a / b, self.q) is not None:
                        bad.append(f"tau_{i + 1}/tau_{j + 1} in q^Z")
        return bad

    def is_generic(self) -> bool:
        return not self.genericity_failures()

    def drop_last(self) -> InterpParams:
        """Parameters for n-1 variables, tau' = (tau_1, ..., tau_{n-1})."""
        if self.n < 2:
            raise ValueError("cannot drop the only variable")
        if self.is_principal:
            return InterpParams(self.q, self.tau[:-1], self.s * self.t, self.t)
        return InterpParams(self.q, self.tau[:-1])

    def shifted(self) -> InterpParams:
        """Parameters (q, q tau)."""
        tau = tuple(self.q * x for x in self.tau)
        if self.is_principal:
            return InterpParams(self.q, tau, self.q * self.s, self.t)
        return InterpParams(self.q, tau)

    def to_dict(self) -> dict:
        fr = lambda x: f"{x.numerator}/{x.denominator}"
        out = {"mode": self.mode, "n": self.n, "q": fr(self.q), "tau": [fr(x) for x in self.tau]}
        if self.is_principal:
            out.update(s=fr(self.s), t=fr(self.t))
        return out


def node_partition(mu: Sequence[int], p: InterpParams) -> tuple[Fraction, ...]:
    """(q^{mu_i} tau_i)_i."""
    if len(mu) != p.n:
        raise weyl.ArityError(f"partition of arity {len(mu)} for {p.n} parameters")
    return tuple(p.q ** m * x for m, x in zip(mu, p.tau))


def node_general(alpha: Sequence[int], p: InterpParams) -> tuple[Fraction, ...]:
    """
    >>> p = InterpParams.general(Fraction(1, 2), (Fraction(1, 4), Fraction(1, 3)))
    >>> node_general((0, -1), p)
    (Fraction(1, 3), Fraction(8, 1))
    """
    if len(alpha) != p.n:
        raise weyl.ArityError(f"exponent of arity {len(alpha)} for {p.n} parameters")
    perm = weyl.min_coset_rep(alpha).perm
    inv = [0] * p.n
    for k, i in enumerate(perm):
        inv[i] = k
    return tuple(p.q ** a * p.tau[inv[i]] ** sgn(a) for i, a in enumerate(alpha))


def node_action_check(alpha: Sequence[int], j: int, p: InterpParams) -> Verdict:
    """
    Check how the simple reflection ``s_j`` acts on the node of ``alpha``.

    Clause ``a``: s_j alpha != alpha and s_j maps the node of alpha to the
    node of s_j alpha.  Clause ``b``: j < n, alpha_j = alpha_{j+1}, and the
    ratio of consecutive coordinates is the tau-ratio.  Clause ``c``: j = n,
    alpha_n = 0, and the last coordinate is tau_n.
    """
    alpha = tuple(alpha)
    n = p.n
    s = weyl.simple_reflection(n, j)
    node = node_general(alpha, p)
    beta = weyl.act(s, alpha)
    if beta != alpha:
        lhs = weyl.act_multiplicative(s, node)
        rhs = node_general(beta, p)
        return Verdict("node-action-a", lhs == rhs, {"alpha": alpha, "j": j})
    if j < n:
        perm = weyl.min_coset_rep(alpha).perm
        k = perm.index(j - 1)  # pi^{-1}(j), 0-based
        e = sgn(alpha[j - 1])
        expected = (p.tau[k] / p.tau[k + e]) ** e
        return Verdict("node-action-b", node[j - 1] / node[j] == expected,
                       {"alpha": alpha, "j": j, "ratio": str(node[j - 1] / node[j])})
    return Verdict("node-action-c", node[n - 1] == p.tau[n - 1], {"alpha": alpha, "j": j})


def enumerate_ball(n: int, d: int) -> list[tuple[int, ...]]:
    """All alpha in Z^n with |alpha| <= d, in graded-lex order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    pts = [a for a in itertools.product(range(-d, d + 1), repeat=n) if weyl.weight(a) <= d]
    return sorted(pts, key=lambda a: (weyl.weight(a), a))


def enumerate_ball_dominant(n: int, d: int) -> list[tuple[int, ...]]:
    """All partitions with at most n parts and weight <= d, in graded-lex order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    out = []

    def rec(prefix, remaining, cap):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for a in range(min(cap, remaining), -1, -1):
            rec(prefix + [a], remaining - a, a)

    rec([], d, d)
    return sorted(out, key=lambda a: (sum(a), a))
