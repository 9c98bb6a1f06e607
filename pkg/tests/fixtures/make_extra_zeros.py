"""Regenerate extra_zeros.json: extra-zero cells of the nine |alpha| = 4 grids."""

import json
from pathlib import Path

from bcinterp import vanish

RADIUS, SEEDS = 10, (1, 2)


def main():
    draws = [vanish.pseudo_random_draw(s) for s in SEEDS]
    out = {"radius": RADIUS, "seeds": list(SEEDS), "grids": {}}
    for alpha in vanish.WEIGHT4_ALPHAS:
        grid = vanish.scan(alpha, RADIUS, draws)
        out["grids"][",".join(map(str, alpha))] = [list(b) for b in sorted(grid.cells_of("extra_zero"))]
    path = Path(__file__).with_name("extra_zeros.json")
    path.write_text(json.dumps(out, indent=1) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
