"""
Exact interpolation Laurent polynomials of type BC.

Symmetric (R_lambda) and nonsymmetric (G_alpha) interpolation polynomials
are built by exact rational linear algebra, together with the
hyperoctahedral group, Demazure-Lusztig operators and a scanner for the
zero sets of G_alpha on grids of nodes.

>>> from fractions import Fraction as F
>>> p = InterpParams.general(F(1, 2), (F(1, 3),))
>>> build_G((-1,), p) == closed_G1(-1, F(1, 2), F(1, 3))
True
"""

from .hecke import HeckeParams, apply_T, cst_lambda, symmetrize
from .interp import build_G, build_R, closed_G1, closed_R1, expand_in_G
from .laurent import LaurentPoly
from .points import (DegenerateParameters, InterpParams, Verdict, enumerate_ball,
                     enumerate_ball_dominant, node_general, node_partition)
from .vanish import check_conjecture, pseudo_random_draw, render, scan
from .weyl import SignedPermutation, min_coset_rep

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly", "InterpParams", "DegenerateParameters", "Verdict",
    "SignedPermutation", "min_coset_rep",
    "node_general", "node_partition", "enumerate_ball", "enumerate_ball_dominant",
    "build_G", "build_R", "closed_G1", "closed_R1", "expand_in_G",
    "HeckeParams", "apply_T", "symmetrize", "cst_lambda",
    "scan", "check_conjecture", "render", "pseudo_random_draw",
]
