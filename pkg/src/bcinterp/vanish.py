"""
Zero sets of the nonsymmetric polynomials G_alpha at the nodes of a grid.

For a fixed alpha and a few principal parameter draws, every beta in the
box [-radius, radius]^n is classified as

    alpha_point   beta == alpha
    origin        beta == 0 (alpha != 0)
    node_zero     |beta| <= |alpha|, beta not alpha or 0
    extra_zero    any other beta where G_alpha vanishes in every draw
    nonzero       everything else

Zero detection is exact.  Agreement across draws is the working notion of
parameter-independent vanishing; it is evidence, not proof.
"""

from __future__ import annotations

import csv
import io
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import weyl
from .interp import build_G
from .points import DegenerateParameters, InterpParams, Verdict, in_q_powers, node_general

__all__ = [
    "VanishGrid", "scan", "check_conjecture", "check_zero_symmetry", "render",
    "pseudo_random_draw", "draw_certificate", "in_upper_set", "in_lower_set",
    "CLASSES", "WEIGHT4_ALPHAS",
]

CLASSES = ("alpha_point", "origin", "node_zero", "extra_zero", "nonzero")
ZERO_CLASSES = frozenset({"origin", "node_zero", "extra_zero"})

# the nine exponents with |alpha| = 4 and alpha_2 >= 0
WEIGHT4_ALPHAS = ((4, 0), (3, 1), (2, 2), (1, 3), (0, 4), (-1, 3), (-2, 2), (-3, 1), (-4, 0))


@dataclass
class VanishGrid:
    alpha: tuple[int, ...]
    radius: int
    draws: tuple[InterpParams, ...]
    cells: dict[tuple, str] = field(default_factory=dict)
    values: dict[tuple, tuple[Fraction, ...]] = field(default_factory=dict)
    disagreements: frozenset = frozenset()

    @property
    def n(self) -> int:
        return len(self.alpha)

    def points(self) -> list[tuple]:
        """Grid points with beta_1 outermost, matching the CSV row order."""
        return sorted(self.cells)

    def zero_cells(self) -> set[tuple]:
        return {b for b, c in self.cells.items() if c in ZERO_CLASSES}

    def cells_of(self, cls: str) -> set[tuple]:
        return {b for b, c in self.cells.items() if c == cls}


def _draw_relations(q: Fraction, s: Fraction, t: Fraction, span: int) -> list[str]:
    bad = []
    for b, c in itertools.product(range(-span, span + 1), repeat=2):
        if (b, c) == (0, 0):
            continue
        k = in_q_powers(s ** b * t ** c, q)
        if k is not None:
            bad.append(f"s^{b} t^{c} = q^{k}")
    return bad


def draw_certificate(p: InterpParams, span: int = 4) -> list[str]:
    """
    Reasons to reject a principal draw; empty when it is accepted.

    Beyond tau_i^2, tau_i tau_j^{+-1} not in q^Z, rejects any
    multiplicative relation s^b t^c in q^Z with |b|, |c| <= span, so that
    accidental zeros of one draw are unlikely to repeat in another.
    """
    reasons = p.genericity_failures()
    if p.is_principal:
        reasons += _draw_relations(p.q, p.s, p.t, span)
    return reasons


def pseudo_random_draw(seed: int, n: int = 2, max_attempts: int = 1000) -> InterpParams:
    """Seeded principal parameters q, s, t drawn from {1/100, ..., 99/100}."""
    rng = random.Random(seed)
    for _ in range(max_attempts):
        q, s, t = (Fraction(rng.randint(1, 99), 100) for _ in range(3))
        p = InterpParams.principal(q, s, t, n)
        if not draw_certificate(p):
            return p
    raise RuntimeError(f"no generic draw found for seed {seed} in {max_attempts} attempts")


def _classify(beta, alpha, d, zero_everywhere) -> str:
    if beta == alpha:
        return "alpha_point"
    if not any(beta):
        return "origin"
    if weyl.weight(beta) <= d:
        return "node_zero"
    return "extra_zero" if zero_everywhere else "nonzero"


def _draw_values(alpha, radius, p) -> list[Fraction]:
    g = build_G(alpha, p)
    return [g.eval(node_general(beta, p))
            for beta in itertools.product(range(-radius, radius + 1), repeat=len(alpha))]


def scan(alpha: Sequence[int], radius: int, draws: Sequence[InterpParams],
         workers: int = 1) -> VanishGrid:
    """
    Evaluate G_alpha at every grid node, once per draw, and classify.

    With ``workers > 1`` the draws are evaluated in separate processes; the
    result does not depend on the worker count.
    """
    alpha = tuple(alpha)
    draws = tuple(draws)
    if len(draws) < 2:
        raise ValueError("at least two parameter draws are required")
    for p in draws:
        if not p.is_principal or p.n != len(alpha):
            raise ValueError("draws must be principal parameters in len(alpha) variables")
        if p.genericity_failures():
            raise DegenerateParameters(f"draw fails the genericity certificate: {p.genericity_failures()}")
    d = weyl.weight(alpha)
    jobs = [(alpha, radius, p) for p in draws]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(draws))) as pool:
            columns = list(pool.map(_draw_values, *zip(*jobs)))
    else:
        columns = [_draw_values(*job) for job in jobs]
    grid = VanishGrid(alpha, radius, draws)
    disagree = set()
    box = itertools.product(range(-radius, radius + 1), repeat=len(alpha))
    for beta, vals in zip(box, zip(*columns)):
        zeros = [v == 0 for v in vals]
        if any(zeros) and not all(zeros):
            disagree.add(beta)
        grid.values[beta] = vals
        grid.cells[beta] = _classify(beta, alpha, d, all(zeros))
    grid.disagreements = frozenset(disagree)
    return grid


# -- the conjectured structure of the zero set --------------------------------

def in_upper_set(mu: Sequence[int], beta: Sequence[int]) -> bool:
    """mu in the closed set: mu_i >= beta_i / <= beta_i / free for beta_i > 0 / < 0 / = 0."""
    return all((m >= b) if b > 0 else (m <= b) if b < 0 else True for m, b in zip(mu, beta))


def in_lower_set(mu: Sequence[int], beta: Sequence[int]) -> bool:
    """mu in the open set: mu_i > beta_i / < beta_i / nonzero for beta_i > 0 / < 0 / = 0."""
    return all((m > b) if b > 0 else (m < b) if b < 0 else (m != 0) for m, b in zip(mu, beta))


def check_conjecture(grid: VanishGrid) -> Verdict:
    """
    Test the sandwich structure of the zero set on the grid window.

    (i) zero cells avoid every open set; (ii) cells outside every closed set
    are zero cells; (iii) no zero cell lies in the closed set of alpha.
    The report also gives, per beta in the orbit, the largest candidate for
    the in-between set compatible with the observed zeros.
    """
    alpha = grid.alpha
    orb = weyl.orbit(weyl.dominant(alpha))
    zeros = grid.zero_cells()
    viol_lower, viol_upper, viol_alpha = [], [], []
    for beta, cls in sorted(grid.cells.items()):
        is_zero = beta in zeros
        if is_zero and any(in_lower_set(beta, g) for g in orb):
            viol_lower.append(beta)
        if not is_zero and not any(in_upper_set(beta, g) for g in orb):
            viol_upper.append(beta)
        if is_zero and in_upper_set(beta, alpha):
            viol_alpha.append(beta)
    candidates = {
        g: sorted(b for b in grid.cells if b not in zeros and in_upper_set(b, g))
        for g in orb
    }
    passed = not (viol_lower or viol_upper or viol_alpha)
    return Verdict("conjecture-sandwich", passed, {
        "alpha": alpha,
        "zero_in_open_set": viol_lower,
        "nonzero_outside_closed_sets": viol_upper,
        "zero_in_closed_set_of_alpha": viol_alpha,
        "candidate_sizes": {str(g): len(v) for g, v in candidates.items()},
        "candidates": candidates,
    })


def check_zero_symmetry(alpha: Sequence[int], radius: int, draws: Sequence[InterpParams],
                        workers: int = 1) -> Verdict:
    """
    G_{(a1,-a2)} vanishes at the node of (b1, b2) iff G_{(a1,a2)} vanishes
    at the node of (b1, -b2), compared draw by draw.
    """
    alpha = tuple(alpha)
    if len(alpha) != 2:
        raise ValueError("the reflection symmetry is stated for two variables")
    mirror = (alpha[0], -alpha[1])
    a_grid = scan(alpha, radius, draws, workers)
    m_grid = scan(mirror, radius, draws, workers)
    bad = []
    for (b1, b2), vals in m_grid.values.items():
        other = a_grid.values[(b1, -b2)]
        for k, (u, v) in enumerate(zip(vals, other)):
            if (u == 0) != (v == 0):
                bad.append(((b1, b2), k))
    return Verdict("zero-symmetry", not bad, {"alpha": alpha, "mirror": mirror, "violations": bad})


# -- rendering ---------------------------------------------------------------

_CHARS = {"alpha_point": "A", "origin": "O", "node_zero": "#", "extra_zero": "*", "nonzero": "."}
_COLOURS = {"alpha_point": "#8b4513", "origin": "#2e8b57", "node_zero": "#000000",
            "extra_zero": "#d62728", "nonzero": "#f2f2f2"}
CELL = 12


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def render(grid: VanishGrid, fmt: str = "text") -> str:
    """Render a grid as ``text``, ``svg`` or ``csv``."""
    if fmt == "csv":
        return _render_csv(grid)
    if grid.n != 2:
        raise ValueError(f"{fmt} rendering needs two variables, got {grid.n}")
    if fmt == "text":
        r = grid.radius
        lines = []
        for b2 in range(r, -r - 1, -1):
            lines.append("".join(_CHARS[grid.cells[(b1, b2)]] for b1 in range(-r, r + 1)))
        return "\n".join(lines) + "\n"
    if fmt == "svg":
        return _render_svg(grid)
    raise ValueError(f"unknown format {fmt!r}")


def _render_csv(grid: VanishGrid) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"beta{i + 1}" for i in range(grid.n)] + ["class"]
               + [f"draw{k + 1}_value" for k in range(len(grid.draws))])
    for beta in grid.points():
        w.writerow(list(beta) + [grid.cells[beta]] + [_fraction_str(v) for v in grid.values[beta]])
    return buf.getvalue()


def _render_svg(grid: VanishGrid) -> str:
    r = grid.radius
    side = (2 * r + 1) * CELL
    legend_h = 5 * 16 + 8
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side + 2 * CELL}" '
        f'height="{side + 2 * CELL + legend_h}">',
        f'<title>zeros of G_{grid.alpha} at grid nodes</title>',
    ]
    for (b1, b2), cls in sorted(grid.cells.items()):
        x = CELL + (b1 + r) * CELL
        y = CELL + (r - b2) * CELL  # beta_2 upward
        out.append(f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{_COLOURS[cls]}" '
                   f'stroke="#ffffff" stroke-width="1"><title>{b1},{b2}: {cls}</title></rect>')
    y0 = side + 2 * CELL + 4
    for k, cls in enumerate(CLASSES):
        y = y0 + 16 * k
        out.append(f'<rect x="{CELL}" y="{y}" width="{CELL}" height="{CELL}" fill="{_COLOURS[cls]}"/>')
        out.append(f'<text x="{3 * CELL}" y="{y + CELL - 2}" font-family="monospace" '
                   f'font-size="11">{cls}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
