"""
Where does G_alpha vanish?
==========================

G_alpha vanishes at the nodes of weight <= |alpha| by construction.  On a
larger grid it keeps vanishing at many more nodes, and the pattern does
not depend on the parameters.  Two seeded draws are compared exactly.

Legend: A alpha, O origin, # forced zero, * extra zero, . nonzero.
"""

from pathlib import Path

from bcinterp import vanish

draws = [vanish.pseudo_random_draw(1), vanish.pseudo_random_draw(2)]
for p in draws:
    print(p.q, p.s, p.t)

for alpha in [(4, 0), (2, 2), (-1, 3)]:
    grid = vanish.scan(alpha, 10, draws)
    print(alpha, "extra zeros:", len(grid.cells_of("extra_zero")),
          "disagreements:", len(grid.disagreements))
    print(vanish.render(grid, "text"))
    verdict = vanish.check_conjecture(grid)
    print("sandwich:", verdict.passed, verdict.info["candidate_sizes"])

# flipping the sign of alpha_2 mirrors the zero set
print(vanish.check_zero_symmetry((-1, 3), 10, draws))

out = Path("figures")
out.mkdir(exist_ok=True)
for alpha in vanish.WEIGHT4_ALPHAS:
    grid = vanish.scan(alpha, 10, draws)
    name = "G_{}_{}.svg".format(*alpha).replace("-", "m")
    (out / name).write_text(vanish.render(grid, "svg"), encoding="utf-8")
print("wrote", len(vanish.WEIGHT4_ALPHAS), "svg files to", out)
