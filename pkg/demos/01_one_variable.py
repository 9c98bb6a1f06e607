"""
One variable
============

In one variable the interpolation polynomials have product formulas, so
this is the place to get a feel for the objects before going up in rank.
"""

from fractions import Fraction as F

from bcinterp import InterpParams, build_G, build_R, closed_G1, node_general

q, s = F(1, 2), F(1, 3)
p = InterpParams.general(q, (s,))

# the nodes of weight <= 2: q^m s for m >= 0 and q^|m| / s for m < 0
for m in (0, 1, -1, 2, -2):
    print(m, node_general((m,), p))

# G_{-1} is 1 at its own node and 0 at the other two nodes of weight <= 1
g = build_G((-1,), p)
print("G_-1 =", g)
print([g(node_general((m,), p)) for m in (0, 1, -1)])

# the linear solve agrees with the q-shifted factorial formula
print(all(build_G((m,), p) == closed_G1(m, q, s) for m in range(-6, 7)))

# R_m is symmetric under x -> 1/x
r = build_R((2,), p)
print("R_2 =", r)
print(r.coeff((2,)) == r.coeff((-2,)))
