"""Vectorised golden-section search.

Every bracket ``[lo[i], hi[i]]`` is shrunk independently; ``f`` is called
with an array of abscissae shaped like ``lo`` and must return values of the
same shape.  Only interior points are evaluated, so open ends (a ray's
point at infinity) are never touched.
"""

from __future__ import annotations

import numpy as np

INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, lo, hi, tol=1e-10, max_iter=200):
    """Maximise ``f`` on each bracket.

    Returns ``(x, fx, width, evaluations)`` where ``width`` is the final
    bracket width per entry.
    """
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1 = np.asarray(f(x1), dtype=float)
    f2 = np.asarray(f(x2), dtype=float)
    evaluations = 2 * a.size
    for _ in range(max_iter):
        active = (b - a) > tol
        if not np.any(active):
            break
        right = active & (f2 > f1)
        left = active & ~right
        # right: keep [x1, b]; left: keep [a, x2]
        a = np.where(right, x1, a)
        b = np.where(left, x2, b)
        new_x1 = np.where(right, x2, np.where(left, b - INV_PHI * (b - a), x1))
        new_x2 = np.where(left, x1, np.where(right, a + INV_PHI * (b - a), x2))
        probe = np.where(right, new_x2, new_x1)
        fp = np.asarray(f(probe), dtype=float)
        evaluations += int(np.count_nonzero(active))
        f1, f2 = np.where(right, f2, np.where(left, fp, f1)), np.where(left, f1, np.where(right, fp, f2))
        x1, x2 = new_x1, new_x2
    best_is_1 = f1 >= f2
    x = np.where(best_is_1, x1, x2)
    fx = np.where(best_is_1, f1, f2)
    return x, fx, b - a, evaluations


def golden_section_min(f, lo, hi, tol=1e-10, max_iter=200):
    """Minimise ``f``; same conventions as :func:`golden_section_max`."""
    x, fx, width, n = golden_section_max(lambda s: -np.asarray(f(s)), lo, hi, tol, max_iter)
    return x, -fx, width, n
