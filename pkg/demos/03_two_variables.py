"""
Two variables, principal parameters
===================================

tau = (s t, s).  G_alpha has degree |alpha| and is pinned down by its
values at the 2|alpha|^2 + 2|alpha| + 1 nodes of weight <= |alpha|.
"""

from fractions import Fraction as F

from bcinterp import InterpParams, build_G, build_R, enumerate_ball, node_general, weyl
from bcinterp.interp import expand_in_G, kronecker_failures
from bcinterp.laurent import LaurentPoly

p = InterpParams.principal(F(1, 2), F(1, 3), F(1, 5), 2)
print(p.tau, p.is_generic())

g = build_G((1, -1), p)
print("degree", g.degree, "terms", len(g))
print("leading coefficient", g.coeff((1, -1)))
print("conditions violated:", kronecker_failures(g, (1, -1), p, symmetric=False))

# summing G over an orbit gives the symmetric polynomial
lam = (2, 1)
total = sum((build_G(b, p) for b in weyl.orbit(lam)), LaurentPoly.zero(2))
print(total == build_R(lam, p))

# any polynomial expands in the G basis; the values at nodes do the work
f = build_R((1, 0), p) * build_R((1, 0), p)
for beta, c in expand_in_G(f, p).items():
    print(beta, c)

# the nodes themselves
for b in enumerate_ball(2, 1):
    print(b, node_general(b, p))
