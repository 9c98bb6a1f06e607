"""
Demazure-Lusztig operators
==========================

H_1 and H_2 act on Laurent polynomials in two variables without ever
dividing.  The G basis is almost an eigenbasis: H_j G_alpha only involves
G_alpha and G_{s_j alpha}.
"""

from fractions import Fraction as F

from bcinterp import InterpParams, build_G, build_R, weyl
from bcinterp.hecke import HeckeParams, apply_T, c_coeff, cst_lambda, symmetrize
from bcinterp.laurent import LaurentPoly
from bcinterp.points import node_partition

p = InterpParams.principal(F(1, 2), F(1, 3), F(1, 5), 2)
hp = HeckeParams.from_interp(p)

x = LaurentPoly.monomial((1, 0))
print(apply_T(1, x, hp))
print(apply_T(2, LaurentPoly.monomial((0, 1)), hp))

# quadratic relation (T - t)(T + 1) = 0 on a random-looking polynomial
f = LaurentPoly(2, {(2, -1): 3, (0, 1): F(1, 2)})
tf = apply_T(1, f, hp)
print(apply_T(1, tf, hp) - tf.scale(hp.t - 1) - f.scale(hp.t))

# H_1 G_(0,1) in terms of G_(0,1) and G_(1,0)
alpha, beta = (0, 1), (1, 0)
c = c_coeff((-1, 1), alpha, p, hp)
lhs = apply_T(1, build_G(alpha, p), hp)
print(lhs == -build_G(alpha, p) + (build_G(beta, p) + build_G(alpha, p)).scale(c))

# the symmetrizer sends G_alpha to a multiple of R_{alpha^+}
for a in [(1, 1), (-1, 1), (2, 1), (2, 0)]:
    lam = weyl.dominant(a)
    sym = symmetrize(build_G(a, p), hp)
    cst = sym.eval(node_partition(lam, p))
    print(a, cst, sym == build_R(lam, p).scale(cst))
print(cst_lambda((2, 1), p, hp))
