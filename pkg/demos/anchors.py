"""Closed-form anchor values next to the numerical solvers.

For each catalog domain the distance from 0 to 0.5 e1 is computed by the
solver and by plain dense boundary sampling. The two δ values on the sector
complements differ from the printed closed forms; the dense sampling shows
which one is right.

Run: python3 demos/anchors.py
"""

from __future__ import annotations

import math

import numpy as np

from hypgrow import catalog, evaluate
from hypgrow.metrics import brute_force_value

ZERO, W = np.zeros(2), np.array([0.5, 0.0])
PRINTED = {("g2", "delta"): math.log(1.5), ("g3", "delta"): math.log(5 / 3)}


def main():
    cat = catalog()
    print(f"{'domain':<10}{'metric':<8}{'solver':>14}{'dense grid':>14}{'printed':>14}")
    for name in ("ball", "g1", "g2", "g3"):
        for m in ("j", "s", "c", "delta", "v"):
            value = evaluate(cat[name], m, ZERO, W).value
            grid = "" if m == "j" else f"{brute_force_value(cat[name], m, ZERO, W, budget=20_000):14.8f}"
            printed = PRINTED.get((name, m))
            printed = "" if printed is None else f"{printed:14.8f}"
            print(f"{name:<10}{m:<8}{value:14.8f}{grid:>14}{printed:>14}")
    print()
    print("On G2 the pair (a at infinity, b = 0.5 e1) gives 1 + |u - w| / |b - w| = 2, so δ = log 2.")
    print("On G3 the pair (a = 0.5 e1, b = -0.5 e1) gives 1 + 2 * 0.5 / 0.5 = 3, so δ = log 3.")


if __name__ == "__main__":
    main()
