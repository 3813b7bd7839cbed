"""Quasihyperbolic distance from a straightened grid path.

In the unit disk k(0, t e) = log(1 / (1 - t)) for every unit vector e. The
grid method walks an 8-neighbour lattice, then straightens the path with
BFGS and keeps it only if every edge provably stays in the domain. Its
value is therefore the length of an actual curve, an upper bound on k.
The script prints it next to the exact radial value and the lower bound j.

Run: python3 demos/quasihyperbolic_graph.py
"""

from __future__ import annotations

import math

import numpy as np

from hypgrow import Ball, catalog, evaluate
from hypgrow.metrics import k_graph


def main():
    ball = Ball()
    print(f"{'angle':>8}{'t':>6}{'graph k':>16}{'exact':>16}{'error':>11}")
    for angle in (0.0, math.pi / 4, math.pi / 3):
        e = np.array([math.cos(angle), math.sin(angle)])
        for t in (0.3, 0.6, 0.9):
            value, _ = k_graph(ball, np.zeros(2), t * e)
            exact = math.log(1 / (1 - t))
            print(f"{angle:8.4f}{t:6.1f}{value:16.12f}{exact:16.12f}{value - exact:11.2e}")
    print()
    comb = catalog()["comb"]
    u, w = np.array([0.0, 0.0]), np.array([0.75, 0.05])
    j = evaluate(comb, "j", u, w).value
    k = evaluate(comb, "k", u, w, k_method="graph").value
    print(f"comb, 0 to (0.75, 0.05): j = {j:.6f} <= k (graph upper bound) = {k:.6f}")


if __name__ == "__main__":
    main()
