"""
Signed permutations
===================

The hyperoctahedral group acts on exponent vectors by permuting entries
and flipping signs.  Each alpha has a unique shortest w_alpha taking the
partition alpha^+ to alpha; it fixes the order of the node coordinates.
"""

from bcinterp import weyl

alpha = (0, 4, -2, -1, 0, -2, 1, 4, 1)
w = weyl.min_coset_rep(alpha)
print("alpha^+   ", weyl.dominant(alpha))
print("pi_alpha  ", w.one_line())      # 2 8 6 3 7 9 4 1 5
print("signs     ", w.signs)
print("length    ", weyl.length(w))
print("w(alpha^+)", weyl.act(w, weyl.dominant(alpha)))

# among the entries of equal modulus, nonnegative ones come first
# (left to right) and negative ones last (right to left)

# a reduced word, read right to left
word = weyl.reduced_word(w)
print(len(word), word[:12], "...")
print(weyl.from_word(9, word) == w)

# ignoring signs gives a different permutation
u = weyl.min_coset_rep(tuple(abs(a) for a in alpha))
print("type A    ", u.one_line())      # 2 8 3 6 4 7 9 1 5

# in rank 2 everything fits on one screen
for v in weyl.elements(2):
    print(v.one_line(), v.signs, weyl.length(v), weyl.reduced_word(v))
