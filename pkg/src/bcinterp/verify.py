"""
Named verification suites.  Each returns a list of :class:`Verdict`.

The suites sweep the identities of the package over small index sets with
exact arithmetic; they back the ``verify`` command of the CLI.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import hecke, interp, vanish, weyl
from .laurent import LaurentPoly, act_poly
from .points import (InterpParams, Verdict, enumerate_ball, enumerate_ball_dominant,
                     node_action_check, node_general, node_partition)

__all__ = ["SUITES", "run_suite", "EXAMPLE_ALPHA"]

EXAMPLE_ALPHA = (0, 4, -2, -1, 0, -2, 1, 4, 1)
EXAMPLE_PI = (2, 8, 6, 3, 7, 9, 4, 1, 5)
TYPE_A_PI = (2, 8, 3, 6, 4, 7, 9, 1, 5)


def _draws(seed: int, n: int, count: int) -> list[InterpParams]:
    return [vanish.pseudo_random_draw(seed + 1000 * k, n) for k in range(count)]


# -- weyl --------------------------------------------------------------------

def minimality_failures(n: int, dmax: int) -> list[tuple]:
    """alpha where w_alpha is not a shortest element mapping alpha^+ to alpha."""
    bad = []
    for alpha in enumerate_ball(n, dmax):
        lam = weyl.dominant(alpha)
        w = weyl.min_coset_rep(alpha)
        best = min(weyl.length(v) for v in weyl.elements(n) if weyl.act(v, lam) == alpha)
        if weyl.act(w, lam) != alpha or weyl.length(w) != best:
            bad.append(alpha)
    return bad


def weyl_suite(nmax: int = 3, dmax: int = 4, **_) -> list[Verdict]:
    out = []
    for n in range(1, nmax + 1):
        bad = minimality_failures(n, dmax)
        out.append(Verdict("min-coset-rep-minimal", not bad, {"n": n, "dmax": dmax, "failures": bad}))
        bad = []
        for w in weyl.elements(n):
            word = weyl.reduced_word(w)
            inv = weyl.inversion_set(w)
            if not (weyl.length(w) == len(word) == len(inv) and weyl.from_word(n, word) == w):
                bad.append(w.one_line())
            # inversions from the reduced word: s_{i_r} ... s_{i_{j+1}} beta^{i_j}
            roots = set()
            for k, i in enumerate(word):
                tail = weyl.from_word(n, list(reversed(word[k + 1:])))
                roots.add(weyl.act(tail, weyl.simple_root(n, i)))
            if roots != inv:
                bad.append(("inversions", w.one_line(), w.signs))
        out.append(Verdict("length-word-inversions", not bad, {"n": n, "failures": bad}))
        order = 2 ** n * len(list(itertools.permutations(range(n))))
        bad = []
        for lam in enumerate_ball_dominant(n, dmax):
            reps, stab = weyl.min_reps_and_stabilizer(lam)
            if len(weyl.orbit(lam)) * len(stab) != order or len(reps) * len(stab) != order:
                bad.append(lam)
            for u, v in itertools.product(reps, stab):
                if weyl.length(u * v) != weyl.length(u) + weyl.length(v):
                    bad.append((lam, "length-additivity"))
                    break
        out.append(Verdict("orbit-stabilizer", not bad, {"n": n, "failures": bad}))
    out.append(Verdict("coset-rep-example", weyl.min_coset_rep(EXAMPLE_ALPHA).one_line() == EXAMPLE_PI,
                       {"pi": weyl.min_coset_rep(EXAMPLE_ALPHA).one_line()}))
    return out


# -- nodes -------------------------------------------------------------------

def injectivity(p: InterpParams, d: int) -> Verdict:
    nodes = [node_general(b, p) for b in enumerate_ball(p.n, d)]
    return Verdict("node-injective", len(set(nodes)) == len(nodes), {"n": p.n, "d": d})


def nodes_suite(seed: int = 7, draws: int = 3, **_) -> list[Verdict]:
    out = []
    for p in _draws(seed, 2, draws):
        out.append(injectivity(p, 6))
    p2, p3 = _draws(seed, 2, 1)[0], _draws(seed, 3, 1)[0]
    bad = [a for a in enumerate_ball(3, 3)
           if node_general(a, p3) != weyl.act_multiplicative(weyl.min_coset_rep(a),
                                                               node_partition(weyl.dominant(a), p3))]
    out.append(Verdict("node-from-dominant", not bad, {"failures": bad}))
    bad = []
    for a in enumerate_ball(2, 4):
        z = node_general(a, p2)
        for beta in weyl.roots(2):
            val = Fraction(1)
            for x, b in zip(z, beta):
                val *= x ** b
            if val == 1:
                bad.append((a, beta))
    out.append(Verdict("root-values-not-one", not bad, {"failures": bad}))
    bad = []
    pd, ps = p3.drop_last(), p3.shifted()
    for mu in enumerate_ball_dominant(3, 4):
        if mu[-1] == 0:
            if node_partition(mu, p3) != node_partition(mu[:-1], pd) + (p3.tau[-1],):
                bad.append(mu)
        elif node_partition(mu, p3) != node_partition(tuple(m - 1 for m in mu), ps):
            bad.append(mu)
    out.append(Verdict("node-shift-identities", not bad, {"failures": bad}))
    bad = []
    if p3.strictly_ordered():
        for mu in enumerate_ball_dominant(3, 4):
            z = node_partition(mu, p3)
            if not (0 < z[0] and all(a < b for a, b in zip(z, z[1:])) and z[-1] < 1):
                bad.append(mu)
    out.append(Verdict("monotone-section", not bad,
                       {"failures": bad, "strictly_ordered": p3.strictly_ordered()}))
    bad = [(a, j) for a in enumerate_ball(3, 3) for j in (1, 2, 3)
           if not node_action_check(a, j, p3)]
    out.append(Verdict("node-action", not bad, {"failures": bad}))
    return out


# -- interp ------------------------------------------------------------------

def kronecker_suite(p: InterpParams, dmax: int) -> list[Verdict]:
    out = []
    bad = []
    for a in enumerate_ball(p.n, dmax):
        g = interp.build_G(a, p)
        if interp.kronecker_failures(g, a, p, symmetric=False) or g.degree != weyl.weight(a) \
                or interp.leading_coeff(g, a) == 0:
            bad.append(a)
    out.append(Verdict("G-kronecker-degree-leading", not bad, {"n": p.n, "dmax": dmax, "failures": bad}))
    bad = []
    for lam in enumerate_ball_dominant(p.n, dmax):
        r = interp.build_R(lam, p)
        if interp.kronecker_failures(r, lam, p, symmetric=True) or r.degree != sum(lam) \
                or interp.leading_coeff(r, lam) == 0:
            bad.append(lam)
    out.append(Verdict("R-kronecker-degree-leading", not bad, {"n": p.n, "dmax": dmax, "failures": bad}))
    return out


def closed_form_suite(seed: int, draws: int = 5, mmax: int = 6) -> Verdict:
    bad = []
    for p in _draws(seed, 1, draws):
        for m in range(-mmax, mmax + 1):
            if interp.build_G((m,), p) != interp.closed_G1(m, p.q, p.s):
                bad.append(("G", m, p.to_dict()))
        for m in range(mmax + 1):
            if interp.build_R((m,), p) != interp.closed_R1(m, p.q, p.s):
                bad.append(("R", m, p.to_dict()))
    return Verdict("one-variable-closed-forms", not bad, {"failures": bad})


def extra_vanishing_symmetric(p: InterpParams, lam_max: int = 3, mu_max: int = 6) -> Verdict:
    bad = []
    for lam in enumerate_ball_dominant(p.n, lam_max):
        r = interp.build_R(lam, p)
        for mu in enumerate_ball_dominant(p.n, mu_max):
            if not weyl.contains(mu, lam) and r.eval(node_partition(mu, p)) != 0:
                bad.append((lam, mu))
    return Verdict("symmetric-extra-vanishing", not bad, {"failures": bad})


def interp_suite(seed: int = 7, draws: int = 3, **_) -> list[Verdict]:
    out = []
    for p in _draws(seed, 2, draws):
        out += kronecker_suite(p, 4)
    p3 = _draws(seed, 3, 1)[0]
    out += kronecker_suite(p3, 3)
    out.append(closed_form_suite(seed))
    bad = [lam for lam in enumerate_ball_dominant(3, 4) if lam[-1] == 0
           and not interp.check_restriction(lam, p3)]
    out.append(Verdict("restriction", not bad, {"failures": bad}))
    p2 = _draws(seed, 2, 1)[0]
    bad = [lam for lam in enumerate_ball_dominant(2, 4) if lam[-1] > 0
           and not interp.check_shift(lam, p2)]
    out.append(Verdict("shift", not bad, {"failures": bad}))
    out.append(extra_vanishing_symmetric(p2))
    bad = []
    for lam in enumerate_ball_dominant(2, 4):
        r = interp.build_R(lam, p2)
        for a in enumerate_ball(2, 4):
            if r.eval(node_general(a, p2)) != r.eval(node_partition(weyl.dominant(a), p2)):
                bad.append((lam, a))
    out.append(Verdict("symmetric-node-invariance", not bad, {"failures": bad}))
    return out


def symexp_suite(n: int = 2, dmax: int = 4, seed: int = 7, **_) -> list[Verdict]:
    p = _draws(seed, n, 1)[0]
    bad = [lam for lam in enumerate_ball_dominant(n, dmax)
           if not interp.check_sym_expansion(lam, p)]
    return [Verdict("symmetrization", not bad, {"n": n, "dmax": dmax, "failures": bad})]


# -- hecke -------------------------------------------------------------------

def hecke_relation_failures(n: int, d: int, hp: hecke.HeckeParams) -> list[tuple]:
    bad = []
    T = lambda j, f: hecke.apply_T(j, f, hp)
    for a in enumerate_ball(n, d):
        f = LaurentPoly.monomial(a)
        for i in range(1, n + 1):
            k = hp.kappa(i, n)
            tf = T(i, f)
            if T(i, tf) - tf.scale(k - 1) - f.scale(k) != LaurentPoly.zero(n):
                bad.append((a, "quadratic", i))
        for i in range(1, n - 1):
            if T(i, T(i + 1, T(i, f))) != T(i + 1, T(i, T(i + 1, f))):
                bad.append((a, "braid", i))
        if n >= 2:
            m = n - 1
            if T(m, T(n, T(m, T(n, f)))) != T(n, T(m, T(n, T(m, f)))):
                bad.append((a, "braid4"))
        for i, j in itertools.combinations(range(1, n + 1), 2):
            if j - i > 1 and T(i, T(j, f)) != T(j, T(i, f)):
                bad.append((a, "commute", i, j))
    return bad


def hecke_suite(seed: int = 7, draws: int = 3, **_) -> list[Verdict]:
    out = []
    rng = random.Random(seed)
    for p in _draws(seed, 3, draws):
        hp = hecke.HeckeParams.from_interp(p)
        for n in (2, 3):
            bad = hecke_relation_failures(n, 3, hp)
            out.append(Verdict("hecke-relations", not bad, {"n": n, "failures": bad}))
    hp = hecke.HeckeParams(Fraction(rng.randint(1, 99), 100), Fraction(rng.randint(1, 99), 100))
    bad = []
    for _ in range(200):
        n = rng.randint(1, 3)
        f = random_poly(rng, n, 3)
        j = rng.randint(1, n)
        if hecke.apply_T(j, f, hp).degree > f.degree:
            bad.append((str(f), j))
    out.append(Verdict("degree-filtration", not bad, {"failures": bad}))
    p = _draws(seed, 2, 1)[0]
    hp = hecke.HeckeParams.from_interp(p)
    bad = [(a, j) for a in enumerate_ball(2, 4) for j in (1, 2)
           if not hecke.check_expansion_theorem(a, j, p, hp)]
    out.append(Verdict("expansion-theorem", not bad, {"failures": bad}))
    out += symmetrizer_checks(p, hp, rng)
    return out


def random_poly(rng: random.Random, n: int, d: int, terms: int = 5) -> LaurentPoly:
    pts = enumerate_ball(n, d)
    return LaurentPoly(n, {rng.choice(pts): Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                           for _ in range(terms)})


def symmetrizer_checks(p: InterpParams, hp: hecke.HeckeParams, rng: random.Random,
                       dmax: int = 3, samples: int = 20) -> list[Verdict]:
    n = p.n
    bad = []
    for a in enumerate_ball(n, dmax):
        lam = weyl.dominant(a)
        sym = hecke.symmetrize(interp.build_G(a, p), hp)
        cst = sym.eval(node_partition(lam, p))
        if sym != interp.build_R(lam, p).scale(cst):
            bad.append(a)
        if a == lam and cst != hecke.cst_lambda(lam, p, hp):
            bad.append((a, "closed-form"))
    out = [Verdict("symmetrizer-scalar", not bad, {"failures": bad})]
    bad = []
    for lam in enumerate_ball_dominant(n, dmax):
        chi = hecke.stabilizer_char(lam, hp)
        if chi and hecke.word_coefficient(lam, p, hp) * chi != hecke.cst_lambda(lam, p, hp):
            bad.append(lam)
    out.append(Verdict("cst-word-coefficient", not bad, {"failures": bad}))
    bad = []
    for _ in range(samples):
        f = random_poly(rng, n, 3)
        sym = hecke.symmetrize(f, hp)
        for j in range(1, n + 1):
            if hecke.apply_T(j, sym, hp) != sym.scale(hp.kappa(j, n)):
                bad.append((str(f), j))
            if act_poly(weyl.simple_reflection(n, j), sym) != sym:
                bad.append((str(f), j, "invariance"))
    out.append(Verdict("symmetrizer-absorption", not bad, {"failures": bad}))
    return out


# -- zero sets and permutations ----------------------------------------------

def vanishing_symmetry_suite(seed: int = 1, radius: int = 10, **_) -> list[Verdict]:
    draws = [vanish.pseudo_random_draw(seed), vanish.pseudo_random_draw(seed + 1)]
    return [vanish.check_zero_symmetry(a, radius, draws) for a in vanish.WEIGHT4_ALPHAS]


def type_a_comparison(**_) -> list[Verdict]:
    """pi_alpha against the type-A minimal permutation of sigma_alpha alpha."""
    w = weyl.min_coset_rep(EXAMPLE_ALPHA)
    # sigma_alpha alpha is nonnegative, so its pi is the type-A minimal permutation
    flipped = tuple(abs(a) for a in EXAMPLE_ALPHA)
    u = weyl.min_coset_rep(flipped)
    return [
        Verdict("signed-pi", w.one_line() == EXAMPLE_PI, {"pi_alpha": w.one_line()}),
        Verdict("type-a-pi", u.one_line() == TYPE_A_PI, {"u": u.one_line()}),
        Verdict("permutations-differ", u.one_line() != w.one_line(), {}),
    ]


SUITES = {
    "weyl": weyl_suite,
    "nodes": nodes_suite,
    "interp": interp_suite,
    "hecke": hecke_suite,
    "symexp": symexp_suite,
    "vanishing-symmetry": vanishing_symmetry_suite,
    "knop-remark": type_a_comparison,
}


def run_suite(name: str, **options) -> list[Verdict]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return suite(**{k: v for k, v in options.items() if v is not None})
