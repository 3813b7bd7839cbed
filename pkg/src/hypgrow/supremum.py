"""Suprema of functionals over a domain boundary.

A :class:`Functional` has a vectorised finite branch ``finite(q)`` over an
``(N, 2)`` array of boundary points and an analytic branch ``at_infinity``
for each direction in which the boundary is unbounded.  Pair functionals
carry the three mixed branches (``a`` at infinity, ``b`` at infinity, both).

:func:`sup_boundary` and :func:`sup_boundary_pairs` run a coarse pass over
boundary samples and refine the best discrete local maxima with golden
section search along each boundary piece.  :func:`brute_force_sup` only
samples and is the independent oracle the refined solvers are checked
against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .domains import BoundaryPoint, BoundarySample, Domain, sample_boundary
from .optimize import golden_section_max

# keeps golden-section probes on rays at finite (if huge) distances
_RAY_END = 1.0 - 1e-12


class NonFiniteFunctionalError(ValueError):
    """A functional returned NaN or an infinity on the boundary."""


class EmptyBoundaryError(ValueError):
    """The domain offered no boundary points to optimise over."""


@dataclass(frozen=True)
class Functional:
    finite: Callable[[np.ndarray], np.ndarray]
    at_infinity: Callable[[np.ndarray], float]
    name: str = ""

    def __call__(self, q: BoundaryPoint) -> float:
        if q.is_infinite:
            return float(self.at_infinity(q.direction))
        return float(self.finite(q.point[None, :])[0])


@dataclass(frozen=True)
class PairFunctional:
    """``F(a, b)``; ``finite`` broadcasts over leading axes of ``a`` and ``b``.

    When ``separable = (f1, f2)`` is given, ``F(a, b) = f1(a) + f2(b)`` and the
    pair problem splits into two single-point problems.

    ``block_bound(ca, ra, cb, rb)``, when given, returns an upper bound of the
    finite part over ``|a - ca| <= ra``, ``|b - cb| <= rb`` (broadcasting like
    ``finite``; ``inf`` is allowed). It lets :func:`brute_force_sup` find the
    exact maximum over a large sample grid without scanning every pair.
    """

    finite: Callable[[np.ndarray, np.ndarray], np.ndarray]
    a_infinite: Callable[[np.ndarray, np.ndarray], np.ndarray]
    b_infinite: Callable[[np.ndarray, np.ndarray], np.ndarray]
    both_infinite: Callable[[np.ndarray, np.ndarray], float]
    separable: tuple[Functional, Functional] | None = None
    name: str = ""
    block_bound: Callable[[np.ndarray, np.ndarray, np.ndarray, np.ndarray], np.ndarray] | None = None

    def __call__(self, a: BoundaryPoint, b: BoundaryPoint) -> float:
        if a.is_infinite and b.is_infinite:
            return float(self.both_infinite(a.direction, b.direction))
        if a.is_infinite:
            return float(self.a_infinite(a.direction, b.point[None, :])[0])
        if b.is_infinite:
            return float(self.b_infinite(a.point[None, :], b.direction)[0])
        return float(self.finite(a.point[None, :], b.point[None, :])[0])


@dataclass(frozen=True)
class SupResult:
    value: float
    witness: object            # BoundaryPoint, or a pair of them
    enclosure_radius: float
    evaluations: int

    def __post_init__(self):
        if not np.isfinite(self.value):
            raise NonFiniteFunctionalError(f"supremum is not finite: {self.value}")


def _checked(values, what):
    values = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(values)):
        raise NonFiniteFunctionalError(f"{what} produced a non-finite value")
    return values


def _sample(d: Domain, budget: int) -> BoundarySample:
    sample = sample_boundary(d, budget)
    if len(sample) == 0 and not sample.infinity:
        raise EmptyBoundaryError(f"{d.tag} has no boundary samples")
    return sample


def _points_at(pieces, which, u):
    """Boundary points for parameters ``u`` on pieces ``which`` (same shape)."""
    which = np.asarray(which)
    u = np.asarray(u, dtype=float)
    out = np.empty(u.shape + (2,))
    for k in np.unique(which):
        m = which == k
        out[m] = pieces[k].at(u[m])
    return out


def _bracket(piece, u, h):
    if piece.periodic:
        return u - h, u + h
    hi_cap = _RAY_END if piece.unbounded else 1.0
    return max(0.0, u - h), min(hi_cap, u + h)


def _local_maxima(sample: BoundarySample, values: np.ndarray) -> np.ndarray:
    """Indices of discrete local maxima along each piece, including endpoints."""
    found = []
    for k, pc in enumerate(sample.pieces):
        idx = np.flatnonzero(sample.piece == k)
        v = values[idx]
        if len(v) == 1:
            found.append(idx)
            continue
        if pc.periodic:
            left, right = np.roll(v, 1), np.roll(v, -1)
        else:
            left = np.concatenate([[-np.inf], v[:-1]])
            right = np.concatenate([v[1:], [-np.inf]])
        found.append(idx[(v >= left) & (v >= right)])
    return np.concatenate(found) if found else np.array([], dtype=int)


def _top(indices: np.ndarray, values: np.ndarray, k: int) -> np.ndarray:
    """``k`` best indices by value; ties keep the original (piece, parameter) order."""
    order = np.argsort(-values[indices], kind="stable")
    return indices[order[:k]]


def sup_boundary(d: Domain, F: Functional, budget: int = 4096, refine_tol: float = 1e-10,
                 starts: int = 3) -> SupResult:
    """``sup_{q in boundary} F(q)``: coarse samples, then golden section around the best local maxima."""
    if budget < 16:
        raise ValueError("sup_boundary needs budget >= 16")
    sample = _sample(d, budget)
    vals = _checked(F.finite(sample.points), F.name or "functional") if len(sample) else np.empty(0)
    evaluations = len(vals)

    best_val, best_wit, radius = -np.inf, None, 0.0
    if len(vals):
        i0 = int(np.argmax(vals))
        best_val = float(vals[i0])
        best_wit = BoundaryPoint(point=sample.points[i0])
        radius = float(sample.pitch[sample.piece[i0]])

        cands = _top(_local_maxima(sample, vals), vals, starts)
        cands = [i for i in cands if sample.pitch[sample.piece[i]] > 0]
        if cands:
            which = sample.piece[cands]
            brackets = [_bracket(sample.pieces[k], sample.u[i], sample.pitch[k]) for i, k in zip(cands, which)]
            lo = np.array([b[0] for b in brackets])
            hi = np.array([b[1] for b in brackets])

            def along(x):
                return _checked(F.finite(_points_at(sample.pieces, which, x)), F.name or "functional")

            x, fx, width, n = golden_section_max(along, lo, hi, tol=refine_tol)
            evaluations += n * len(cands)
            for j in range(len(cands)):
                if fx[j] > best_val:
                    best_val = float(fx[j])
                    best_wit = BoundaryPoint(point=sample.pieces[which[j]].at(np.array([x[j]]))[0])
                    radius = float(width[j])

    for v in sample.infinity:
        val = float(F.at_infinity(v))
        evaluations += 1
        if not np.isfinite(val):
            raise NonFiniteFunctionalError(f"{F.name or 'functional'} at infinity is not finite")
        if val > best_val:
            best_val, best_wit, radius = val, BoundaryPoint(direction=v), 0.0
    if best_wit is None:
        raise EmptyBoundaryError(f"{d.tag} has no boundary samples")
    return SupResult(best_val, best_wit, radius, evaluations)


def _pair_candidates(sample, F):
    """Coarse pair matrix plus the infinity rows, flattened into (value, a-slot, b-slot) lists.

    A slot is ``("f", index)`` for a finite sample and ``("i", k)`` for direction ``k``.
    """
    P = sample.points
    vals, slots = [], []
    if len(P):
        M = _checked(F.finite(P[:, None, :], P[None, :, :]), F.name or "pair functional")
        vals.append(M.ravel())
        ii, jj = np.divmod(np.arange(M.size), M.shape[1])
        slots.extend(zip(("f",) * M.size, ii, ("f",) * M.size, jj))
    for k, v in enumerate(sample.infinity):
        if len(P):
            row = _checked(F.a_infinite(v, P), F.name or "pair functional")
            col = _checked(F.b_infinite(P, v), F.name or "pair functional")
            vals.extend([row, col])
            slots.extend(("i", k, "f", j) for j in range(len(P)))
            slots.extend(("f", j, "i", k) for j in range(len(P)))
        for k2, v2 in enumerate(sample.infinity):
            vals.append(_checked([F.both_infinite(v, v2)], F.name or "pair functional"))
            slots.append(("i", k, "i", k2))
    return np.concatenate(vals), slots


def _as_boundary_point(sample, kind, idx, u=None):
    if kind == "i":
        return BoundaryPoint(direction=sample.infinity[idx])
    if u is None:
        return BoundaryPoint(point=sample.points[idx])
    return BoundaryPoint(point=sample.pieces[sample.piece[idx]].at(np.array([u]))[0])


def sup_boundary_pairs(d: Domain, F: PairFunctional, budget: int = 256, refine_tol: float = 1e-10,
                       starts: int = 6, sweeps: int = 8, single_budget: int = 4096) -> SupResult:
    """``sup_{a, b in boundary} F(a, b)``.

    Separable functionals are two single-point problems.  Otherwise a
    ``budget x budget`` coarse matrix (plus infinity rows) is scanned and the
    best entries are refined by alternating golden section on ``a`` and ``b``.
    """
    if F.separable is not None:
        f1, f2 = F.separable
        r1 = sup_boundary(d, f1, single_budget, refine_tol)
        r2 = sup_boundary(d, f2, single_budget, refine_tol)
        return SupResult(r1.value + r2.value, (r1.witness, r2.witness),
                         max(r1.enclosure_radius, r2.enclosure_radius), r1.evaluations + r2.evaluations)
    if budget < 16:
        raise ValueError("sup_boundary_pairs needs budget >= 16 per side")
    sample = _sample(d, budget)
    vals, slots = _pair_candidates(sample, F)
    evaluations = len(vals)
    order = np.argsort(-vals, kind="stable")
    i0 = int(order[0])
    best_val = float(vals[i0])
    ka, ia, kb, ib = slots[i0]
    best_wit = (_as_boundary_point(sample, ka, ia), _as_boundary_point(sample, kb, ib))
    radius = max(sample.pitch[sample.piece[ia]] if ka == "f" else 0.0,
                 sample.pitch[sample.piece[ib]] if kb == "f" else 0.0)

    pieces, pitch = sample.pieces, sample.pitch
    for pos in order[:starts]:
        ka, ia, kb, ib = slots[int(pos)]
        ua = sample.u[ia] if ka == "f" else None
        ub = sample.u[ib] if kb == "f" else None
        wa = wb = 0.0

        def value_with(a_u, b_u):
            a = pieces[sample.piece[ia]].at(np.atleast_1d(a_u)) if ka == "f" else None
            b = pieces[sample.piece[ib]].at(np.atleast_1d(b_u)) if kb == "f" else None
            if a is None and b is None:
                return np.array([F.both_infinite(sample.infinity[ia], sample.infinity[ib])])
            if a is None:
                return _checked(F.a_infinite(sample.infinity[ia], b), "pair functional")
            if b is None:
                return _checked(F.b_infinite(a, sample.infinity[ib]), "pair functional")
            return _checked(F.finite(a, b), "pair functional")

        current = float(vals[int(pos)])
        for _ in range(sweeps):
            moved = False
            if ua is not None and pitch[sample.piece[ia]] > 0:
                lo, hi = _bracket(pieces[sample.piece[ia]], ua, pitch[sample.piece[ia]])
                x, fx, w, n = golden_section_max(lambda s: value_with(s, ub), np.array([lo]), np.array([hi]),
                                                 tol=refine_tol)
                evaluations += n
                if fx[0] > current:
                    ua, current, wa, moved = float(x[0]), float(fx[0]), float(w[0]), True
            if ub is not None and pitch[sample.piece[ib]] > 0:
                lo, hi = _bracket(pieces[sample.piece[ib]], ub, pitch[sample.piece[ib]])
                x, fx, w, n = golden_section_max(lambda s: value_with(ua, s), np.array([lo]), np.array([hi]),
                                                 tol=refine_tol)
                evaluations += n
                if fx[0] > current:
                    ub, current, wb, moved = float(x[0]), float(fx[0]), float(w[0]), True
            if not moved:
                break
        if current > best_val:
            best_val = current
            best_wit = (_as_boundary_point(sample, ka, ia, ua), _as_boundary_point(sample, kb, ib, ub))
            radius = max(wa, wb)
    return SupResult(best_val, best_wit, radius, evaluations)


def brute_force_sup(d: Domain, F, budget: int = 100_000, chunk: int = 512) -> SupResult:
    """Dense-sampling maximum without refinement; ``budget`` counts samples per boundary side.

    For pair functionals the result is the maximum of ``F`` over all pairs of
    the same sample. Separable functionals take the two single-point maxima.
    Functionals with a ``block_bound`` skip sample blocks whose bound cannot
    beat the current best, which gives the same grid maximum.
    """
    if budget < 1000:
        raise ValueError("brute_force_sup needs budget >= 1000")
    sample = _sample(d, budget)
    if isinstance(F, Functional):
        return _single_max(sample, F)
    if F.separable is not None:
        r1, r2 = (_single_max(sample, f) for f in F.separable)
        return SupResult(r1.value + r2.value, (r1.witness, r2.witness), 0.0, r1.evaluations + r2.evaluations)

    P = sample.points
    if F.block_bound is not None:
        best_val, best_wit, evaluations = _pruned_pair_max(P, F)
    else:
        best_val, best_wit, evaluations = -np.inf, None, 0
        for start in range(0, len(P), chunk):
            block = _checked(F.finite(P[start:start + chunk, None, :], P[None, :, :]), "pair functional")
            evaluations += block.size
            i, j = np.unravel_index(int(np.argmax(block)), block.shape)
            if block[i, j] > best_val:
                best_val = float(block[i, j])
                best_wit = (BoundaryPoint(point=P[start + i]), BoundaryPoint(point=P[j]))
    for k, v in enumerate(sample.infinity):
        row = _checked(F.a_infinite(v, P), "pair functional")
        col = _checked(F.b_infinite(P, v), "pair functional")
        evaluations += 2 * len(P)
        if row.max() > best_val:
            best_val = float(row.max())
            best_wit = (BoundaryPoint(direction=v), BoundaryPoint(point=P[int(np.argmax(row))]))
        if col.max() > best_val:
            best_val = float(col.max())
            best_wit = (BoundaryPoint(point=P[int(np.argmax(col))]), BoundaryPoint(direction=v))
        for v2 in sample.infinity:
            val = float(F.both_infinite(v, v2))
            evaluations += 1
            if val > best_val:
                best_val, best_wit = val, (BoundaryPoint(direction=v), BoundaryPoint(direction=v2))
    return SupResult(best_val, best_wit, 0.0, evaluations)


def _single_max(sample: BoundarySample, F: Functional) -> SupResult:
    vals = _checked(F.finite(sample.points), F.name or "functional") if len(sample) else np.empty(0)
    best_val, best_wit = -np.inf, None
    if len(vals):
        i0 = int(np.argmax(vals))
        best_val, best_wit = float(vals[i0]), BoundaryPoint(point=sample.points[i0])
    for v in sample.infinity:
        val = float(F.at_infinity(v))
        if val > best_val:
            best_val, best_wit = val, BoundaryPoint(direction=v)
    return SupResult(best_val, best_wit, 0.0, len(vals) + len(sample.infinity))


def _pruned_pair_max(P: np.ndarray, F: PairFunctional, leaf: int = 8, batch: int = 1024):
    """Exact maximum of ``F.finite`` over ``P x P`` by block branch and bound.

    Consecutive samples form a binary hierarchy of blocks; each block gets the
    centre of its bounding box and the largest sample distance from it. Block
    pairs whose bound falls below the best sampled value are dropped, the rest
    are halved on both sides down to ``leaf`` samples, and the surviving leaf
    pairs are scanned in order of decreasing bound.
    """
    n = len(P)
    if n == 0:
        return -np.inf, None, 0
    levels = max(0, int(np.ceil(np.log2(max(n / leaf, 1.0)))))
    total = leaf << levels
    pad = np.concatenate([P, np.repeat(P[-1:], total - n, axis=0)])
    centres, radii = [], []
    for lv in range(levels + 1):
        blocks = pad.reshape(1 << lv, total >> lv, P.shape[1])
        c = 0.5 * (blocks.min(axis=1) + blocks.max(axis=1))
        centres.append(c)
        radii.append(np.linalg.norm(blocks - c[:, None, :], axis=2).max(axis=1) * (1 + 1e-12) + 1e-300)

    def bound(lv, ia, ib):
        ub = F.block_bound(centres[lv][ia], radii[lv][ia], centres[lv][ib], radii[lv][ib])
        return np.where(np.isnan(ub), np.inf, ub)

    def probe(lv, ia, ib):
        step = total >> lv
        vals = _checked(F.finite(pad[ia * step], pad[ib * step]), "pair functional")
        k = int(np.argmax(vals))
        return float(vals[k]), (BoundaryPoint(point=pad[ia[k] * step]), BoundaryPoint(point=pad[ib[k] * step]))

    lv = min(levels, 3)
    ia, ib = (g.ravel() for g in np.meshgrid(np.arange(1 << lv), np.arange(1 << lv), indexing="ij"))
    best_val, best_wit = probe(lv, ia, ib)
    evaluations = len(ia)
    while True:
        ub = bound(lv, ia, ib)
        keep = ub >= best_val
        ia, ib, ub = ia[keep], ib[keep], ub[keep]
        if lv == levels or len(ia) == 0:
            break
        lv += 1
        ia = (2 * ia[:, None] + np.array([0, 0, 1, 1])).ravel()
        ib = (2 * ib[:, None] + np.array([0, 1, 0, 1])).ravel()
        val, wit = probe(lv, ia, ib)
        evaluations += len(ia)
        if val > best_val:
            best_val, best_wit = val, wit
    blocks = pad.reshape(1 << levels, leaf, P.shape[1])
    order = np.argsort(-ub, kind="stable")
    ia, ib, ub = ia[order], ib[order], ub[order]
    for start in range(0, len(ia), batch):
        sel = slice(start, start + batch)
        live = ub[sel] >= best_val
        if not live.any():
            break
        ja, jb = ia[sel][live], ib[sel][live]
        vals = _checked(F.finite(blocks[ja][:, :, None, :], blocks[jb][:, None, :, :]), "pair functional")
        evaluations += vals.size
        m, i, j = np.unravel_index(int(np.argmax(vals)), vals.shape)
        if vals[m, i, j] > best_val:
            best_val = float(vals[m, i, j])
            best_wit = (BoundaryPoint(point=blocks[ja[m], i]), BoundaryPoint(point=blocks[jb[m], j]))
    return best_val, best_wit, evaluations
