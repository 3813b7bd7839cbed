"""Catalog of starlike test domains.

Each domain is an immutable object exposing open-set membership, the exact
distance to the boundary ``d_G``, and a parametrisation of its boundary as a
finite union of 1-D pieces (arcs, segments, rays, graph arcs).  Unbounded
boundaries additionally carry directions at infinity.

Domains serialise to small JSON records, e.g. ``{"type": "ball",
"center": [0, 0], "radius": 1.0}``; see :func:`parse_domain_spec`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .geometry import Sector, as_point, norm, segment_distance
from .optimize import golden_section_min


class OutsideDomainError(ValueError):
    """A point given to a domain query does not lie in the (open) domain."""


class DomainSpecError(ValueError):
    """A domain-spec record is malformed or names an unknown domain type."""


@dataclass(frozen=True, eq=False)
class BoundaryPoint:
    """A finite boundary point, or a marker for the point at infinity reached along ``direction``."""

    point: np.ndarray | None = None
    direction: np.ndarray | None = None

    @classmethod
    def finite(cls, p) -> BoundaryPoint:
        return cls(point=as_point(p))

    @classmethod
    def at_infinity(cls, direction) -> BoundaryPoint:
        d = as_point(direction)
        return cls(direction=d / norm(d))

    @property
    def is_infinite(self) -> bool:
        return self.point is None

    def to_json(self):
        if self.is_infinite:
            return {"at_infinity": [float(c) for c in self.direction]}
        return [float(c) for c in self.point]

    def __repr__(self):
        if self.is_infinite:
            return f"BoundaryPoint.at_infinity({self.direction.tolist()})"
        return f"BoundaryPoint.finite({self.point.tolist()})"


# ---------------------------------------------------------------------------
# boundary pieces: every piece maps u in [0, 1] to boundary points
# ---------------------------------------------------------------------------

class Piece:
    periodic = False
    unbounded = False
    direction = None

    def at(self, u) -> np.ndarray:
        raise NotImplementedError

    @property
    def weight(self) -> float:
        """Share of the sampling budget (arclength for bounded pieces)."""
        raise NotImplementedError


class SegmentPiece(Piece):
    def __init__(self, a, b):
        self.a = np.asarray(a, dtype=float)
        self.b = np.asarray(b, dtype=float)

    def at(self, u):
        u = np.asarray(u, dtype=float)
        return self.a + u[..., None] * (self.b - self.a)

    @property
    def weight(self):
        return float(norm(self.b - self.a))


class PointPiece(Piece):
    def __init__(self, p):
        self.p = np.asarray(p, dtype=float)

    def at(self, u):
        u = np.asarray(u, dtype=float)
        return np.broadcast_to(self.p, u.shape + self.p.shape).copy()

    @property
    def weight(self):
        return 0.0


class RayPiece(Piece):
    """Ray ``origin + s * direction`` with ``s = scale * u / (1 - u)``; ``u = 1`` is infinity."""

    unbounded = True

    def __init__(self, origin, direction, scale):
        self.origin = np.asarray(origin, dtype=float)
        d = np.asarray(direction, dtype=float)
        self.direction = d / norm(d)
        self.scale = float(scale)

    def at(self, u):
        u = np.asarray(u, dtype=float)
        with np.errstate(divide="ignore"):
            s = self.scale * u / (1.0 - u)
        return self.origin + s[..., None] * self.direction

    @property
    def weight(self):
        return 4.0 * self.scale


class ArcPiece(Piece):
    def __init__(self, center, radius, theta0, theta1):
        self.center = np.asarray(center, dtype=float)
        self.radius = float(radius)
        self.theta0 = float(theta0)
        self.theta1 = float(theta1)
        self.periodic = math.isclose(abs(theta1 - theta0), 2 * math.pi)

    def at(self, u):
        th = self.theta0 + np.asarray(u, dtype=float) * (self.theta1 - self.theta0)
        return self.center + self.radius * np.stack([np.cos(th), np.sin(th)], axis=-1)

    @property
    def weight(self):
        return self.radius * abs(self.theta1 - self.theta0)


class GraphPiece(Piece):
    """Reflected graph ``(sx * u, sy * (1 - u)**p)`` of the polynomial profile."""

    def __init__(self, p, sx, sy):
        self.p, self.sx, self.sy = int(p), float(sx), float(sy)

    def at(self, u):
        u = np.asarray(u, dtype=float)
        return np.stack([self.sx * u, self.sy * (1.0 - u) ** self.p], axis=-1)

    @property
    def weight(self):
        u = np.linspace(0.0, 1.0, 513)
        return float(np.sum(norm(np.diff(self.at(u), axis=0))))


# ---------------------------------------------------------------------------
# domains
# ---------------------------------------------------------------------------

class Domain:
    """Base class; subclasses implement the exact distance to the complement."""

    tag = "domain"
    dim = 2

    def _dist(self, p) -> np.ndarray:
        """Distance to the complement for points in G; 0 (or less) outside. No checks."""
        raise NotImplementedError

    def contains(self, p):
        p = np.asarray(p, dtype=float)
        out = self._inside(p)
        return bool(out) if out.ndim == 0 else out

    def _inside(self, p) -> np.ndarray:
        return self._dist(p) > 0

    def dist_boundary(self, p):
        p = np.asarray(p, dtype=float)
        if p.shape[-1] != self.dim:
            raise ValueError(f"{self.tag} is {self.dim}-dimensional, got a point with {p.shape[-1]} coordinates")
        inside = self._inside(p)
        if not np.all(inside):
            bad = p if p.ndim == 1 else p[~inside][0]
            raise OutsideDomainError(f"point {np.asarray(bad).tolist()} is not in {self.tag}")
        d = self._dist(p)
        return float(d) if np.ndim(d) == 0 else d

    def pieces(self) -> list[Piece]:
        raise NotImplementedError

    def infinity_directions(self) -> list[np.ndarray]:
        return [pc.direction for pc in self.pieces() if pc.unbounded]

    def boundary_direction(self) -> np.ndarray:
        """Direction of the default profiling boundary point ``z``."""
        return np.eye(self.dim)[0]

    def _origin_candidates(self) -> np.ndarray:
        """Boundary points realising ``d_G(0)`` (all of them, up to symmetry ties)."""
        raise NotImplementedError

    def params(self) -> dict:
        return {}

    def to_spec(self) -> dict:
        return {"type": self.tag, **self.params()}

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.params().items())
        return f"{type(self).__name__}({args})"


class Ball(Domain):
    tag = "ball"

    def __init__(self, center=(0.0, 0.0), radius=1.0):
        self.center = as_point(center)
        self.radius = float(radius)
        if not self.radius > 0:
            raise ValueError("ball radius must be positive")
        self.dim = self.center.size
        if not norm(self.center) < self.radius:
            raise ValueError("the origin must lie inside the ball")

    def _dist(self, p):
        return self.radius - norm(np.asarray(p, dtype=float) - self.center)

    def pieces(self):
        if self.dim != 2:
            raise ValueError("boundary sampling is planar")
        return [ArcPiece(self.center, self.radius, -math.pi, math.pi)]

    def _origin_candidates(self):
        c = self.center
        if not np.any(c):
            return -self.radius * np.eye(self.dim)[:1]
        return (c - self.radius * c / norm(c))[None, :]

    def params(self):
        return {"center": self.center.tolist(), "radius": self.radius}


class ShiftedHalfSpace(Domain):
    """``{a : a_n > b}`` with ``b < 0``."""

    tag = "half_space_shifted"

    def __init__(self, b=-1.0, dim=2):
        self.b = float(b)
        if not self.b < 0:
            raise ValueError("the shifted half space needs b < 0")
        self.dim = int(dim)

    def _dist(self, p):
        return np.asarray(p, dtype=float)[..., -1] - self.b

    def pieces(self):
        if self.dim != 2:
            raise ValueError("boundary sampling is planar")
        foot = np.array([0.0, self.b])
        return [RayPiece(foot, (-1.0, 0.0), abs(self.b)), RayPiece(foot, (1.0, 0.0), abs(self.b))]

    def boundary_direction(self):
        return -np.eye(self.dim)[-1]

    def _origin_candidates(self):
        return (self.b * np.eye(self.dim)[-1])[None, :]

    def params(self):
        out = {"b": self.b}
        if self.dim != 2:
            out["dim"] = self.dim
        return out


class ConeComplement(Domain):
    """The plane minus disjoint closed sectors and closed half planes.

    A removed half plane is ``{u : normal . u <= offset}`` with a unit normal.
    """

    def __init__(self, tag, x, sectors, halfplanes=(), boundary_point=None):
        self.tag = tag
        self.x = as_point(x, 2)
        if not np.any(self.x):
            raise ValueError("x must be non-zero")
        self.sectors = list(sectors)
        self.halfplanes = [(np.asarray(n, dtype=float) / norm(n), float(c)) for n, c in halfplanes]
        self._z = self.x if boundary_point is None else as_point(boundary_point, 2)

    def _dist(self, p):
        p = np.asarray(p, dtype=float)
        d = np.full(p.shape[:-1], np.inf)
        for s in self.sectors:
            d = np.minimum(d, s.distance(p))
        for n, c in self.halfplanes:
            d = np.minimum(d, np.sum(p * n, axis=-1) - c)
        return d

    def _inside(self, p):
        p = np.asarray(p, dtype=float)
        ok = np.ones(p.shape[:-1], dtype=bool)
        for s in self.sectors:
            ok &= ~s.contains(p)
        for n, c in self.halfplanes:
            ok &= np.sum(p * n, axis=-1) > c
        return ok

    def pieces(self):
        scale = float(norm(self.x))
        out = []
        for s in self.sectors:
            out.extend(RayPiece(s.apex, d, scale) for d in s.boundary_directions())
        for n, c in self.halfplanes:
            foot = c * n
            perp = np.array([-n[1], n[0]])
            out.extend([RayPiece(foot, perp, scale), RayPiece(foot, -perp, scale)])
        return out

    def boundary_direction(self):
        return self._z / norm(self._z)

    def _origin_candidates(self):
        cands = []
        for s in self.sectors:
            v = -s.apex
            best = s.apex
            for d in s.boundary_directions():
                foot = s.apex + max(0.0, float(v @ d)) * d
                if norm(foot) < norm(best):
                    best = foot
            cands.append(best)
        cands.extend(c * n for n, c in self.halfplanes)
        return np.array(cands)

    def params(self):
        return {"x": self.x.tolist()}

    def __repr__(self):
        return f"ConeComplement({self.tag}, x={self.x.tolist()})"


def sector_complement_g1(x=(1.0, 0.0)) -> ConeComplement:
    """``R^2`` minus ``S(pi/4, -x, -2x)`` and ``S(pi/4, 3x, 4x)``; profiled toward ``z = 3x``."""
    x = as_point(x, 2)
    return ConeComplement("sector_complement_G1", x,
                          [Sector(-x, -2 * x, math.pi / 4), Sector(3 * x, 4 * x, math.pi / 4)],
                          boundary_point=3 * x)


def sector_complement_g2(x=(1.0, 0.0)) -> ConeComplement:
    """``R^2`` minus ``S(pi/4, x, 2x)``; profiled toward ``z = x``."""
    x = as_point(x, 2)
    return ConeComplement("sector_complement_G2", x, [Sector(x, 2 * x, math.pi / 4)])


def g3(x=(1.0, 0.0)) -> ConeComplement:
    """G2 minus ``{u : |u + 2x| <= |u|}``, i.e. minus the half plane ``u . x <= -|x|^2``."""
    x = as_point(x, 2)
    r = float(norm(x))
    return ConeComplement("g3", x, [Sector(x, 2 * x, math.pi / 4)], [(x / r, -r)])


def alpha_sharp(x=(1.0, 0.0)) -> ConeComplement:
    """``R^2`` minus ``S(pi/4, -x, -2x)`` and ``S(pi/4, x, 2x)``."""
    x = as_point(x, 2)
    return ConeComplement("alpha_sharp", x,
                          [Sector(-x, -2 * x, math.pi / 4), Sector(x, 2 * x, math.pi / 4)])


class QuadrantComplement(Domain):
    """``R^2`` minus the closed quadrant ``{w1 >= x1, w2 >= x2}``; ``z = (x1, z2)`` with ``z2 > x2``."""

    tag = "quadrant_complement"

    def __init__(self, x=(1.0, 1.0), z2=None):
        self.x = as_point(x, 2)
        if not (self.x[0] > 0 and self.x[1] > 0):
            raise ValueError("quadrant corner needs x1 > 0 and x2 > 0")
        self.z2 = 2.0 * self.x[1] if z2 is None else float(z2)
        if not self.z2 > self.x[1]:
            raise ValueError("z2 must exceed x2")

    @property
    def z(self):
        return np.array([self.x[0], self.z2])

    def _dist(self, p):
        p = np.asarray(p, dtype=float)
        return np.hypot(np.maximum(0.0, self.x[0] - p[..., 0]), np.maximum(0.0, self.x[1] - p[..., 1]))

    def _inside(self, p):
        p = np.asarray(p, dtype=float)
        return (p[..., 0] < self.x[0]) | (p[..., 1] < self.x[1])

    def pieces(self):
        scale = float(norm(self.x))
        return [RayPiece(self.x, (0.0, 1.0), scale), RayPiece(self.x, (1.0, 0.0), scale)]

    def boundary_direction(self):
        return self.z / norm(self.z)

    def _origin_candidates(self):
        return self.x[None, :]

    def params(self):
        return {"x": self.x.tolist(), "z2": self.z2}


_NOTCH_CENTERS = np.array([[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]])


class CircularNotched(Domain):
    """Unit disk minus the closed unit disks centred at ``(+-1, +-1)``."""

    tag = "circular_notched"

    def _dist(self, p):
        p = np.asarray(p, dtype=float)
        d = 1.0 - norm(p)
        for c in _NOTCH_CENTERS:
            q = p - c
            # |q| - 1 without cancellation next to the cusps at (+-1, 0), (0, +-1)
            num = q[..., 0] ** 2 + (q[..., 1] - 1.0) * (q[..., 1] + 1.0)
            d = np.minimum(d, num / (norm(q) + 1.0))
        return d

    def pieces(self):
        # arc of each notch circle facing the origin, listed counter-clockwise from (1, 0)
        return [ArcPiece(_NOTCH_CENTERS[0], 1.0, 1.5 * math.pi, math.pi),
                ArcPiece(_NOTCH_CENTERS[1], 1.0, 2.0 * math.pi, 1.5 * math.pi),
                ArcPiece(_NOTCH_CENTERS[2], 1.0, 0.5 * math.pi, 0.0),
                ArcPiece(_NOTCH_CENTERS[3], 1.0, math.pi, 0.5 * math.pi)]

    def _origin_candidates(self):
        return _NOTCH_CENTERS * (1.0 - 1.0 / math.sqrt(2.0))


class PolynomialDomain(Domain):
    """``{(a, b) : |a| < 1, |b| < (1 - |a|)**p}``: the graph of ``(1 - s)**p`` reflected across both axes.

    ``d_G`` has no closed form; it is the minimum over three coarse starts of a
    golden-section search along the first-quadrant arc (the nearest arc to a
    point is always the one in its own quadrant).
    """

    tag = "polynomial_boundary"
    _COARSE = 129
    _CHUNK = 8192

    def __init__(self, p=2):
        if int(p) != p or p < 1:
            raise ValueError("polynomial degree must be a positive integer")
        self.p = int(p)

    def _inside(self, q):
        q = np.asarray(q, dtype=float)
        a, b = np.abs(q[..., 0]), np.abs(q[..., 1])
        return (a < 1.0) & (b < np.clip(1.0 - a, 0.0, None) ** self.p)

    def _dist(self, q):
        q = np.asarray(q, dtype=float)
        flat = np.abs(q.reshape(-1, 2))
        out = np.empty(len(flat))
        for i in range(0, len(flat), self._CHUNK):
            out[i:i + self._CHUNK] = self._arc_distance(flat[i:i + self._CHUNK])
        out = np.where(self._inside(q).reshape(-1), out, 0.0)
        return out.reshape(q.shape[:-1])

    def _arc_distance(self, pts):
        p = self.p
        a, b = pts[:, :1], pts[:, 1:]
        s = np.linspace(0.0, 1.0, self._COARSE)
        d2 = (s - a) ** 2 + ((1.0 - s) ** p - b) ** 2
        padded = np.pad(d2, ((0, 0), (1, 1)), constant_values=np.inf)
        local = (d2 <= padded[:, :-2]) & (d2 <= padded[:, 2:])
        ranked = np.where(local, d2, np.inf)
        starts = np.argsort(ranked, axis=1, kind="stable")[:, :3]
        step = 1.0 / (self._COARSE - 1)
        lo = np.clip(s[starts] - step, 0.0, 1.0)
        hi = np.clip(s[starts] + step, 0.0, 1.0)
        aa = np.broadcast_to(a, lo.shape)
        bb = np.broadcast_to(b, lo.shape)
        _, fx, _, _ = golden_section_min(lambda u: (u - aa) ** 2 + ((1.0 - u) ** p - bb) ** 2,
                                         lo, hi, tol=1e-15, max_iter=120)
        best = np.minimum(fx.min(axis=1), d2.min(axis=1))
        return np.sqrt(best)

    def pieces(self):
        return [GraphPiece(self.p, sx, sy) for sx, sy in ((1, 1), (-1, 1), (-1, -1), (1, -1))]

    def _origin_candidates(self):
        f = lambda u: u ** 2 + (1.0 - u) ** (2 * self.p)
        s = np.linspace(0.0, 1.0, 4097)
        k = int(np.argmin(f(s)))
        u, _, _, _ = golden_section_min(f, np.array([s[max(k - 1, 0)]]), np.array([s[min(k + 1, 4096)]]), 1e-15)
        u0 = float(u[0])
        h = (1.0 - u0) ** self.p
        return np.array([[sx * u0, sy * h] for sx in (1, -1) for sy in (1, -1)])

    def params(self):
        return {"p": self.p}


class Comb(Domain):
    """Unit disk minus the radial teeth ``[a_l, a_l / |a_l|]``, ``a_l = (1 - 2^-l, 2^-(l+1))``, ``l <= max_teeth``."""

    tag = "comb"

    def __init__(self, max_teeth=20):
        if int(max_teeth) != max_teeth or max_teeth < 1:
            raise ValueError("max_teeth must be a positive integer")
        self.max_teeth = int(max_teeth)
        lv = np.arange(self.max_teeth + 1, dtype=float)
        self.tooth_roots = np.stack([1.0 - 2.0 ** -lv, 2.0 ** -(lv + 1)], axis=1)
        self.tooth_tips = self.tooth_roots / norm(self.tooth_roots)[:, None]

    def _dist(self, p):
        p = np.asarray(p, dtype=float)
        d = 1.0 - norm(p)
        for a, b in zip(self.tooth_roots, self.tooth_tips):
            d = np.minimum(d, segment_distance(p, a, b))
        return d

    def pieces(self):
        return [ArcPiece((0.0, 0.0), 1.0, -math.pi, math.pi)] + [
            SegmentPiece(a, b) for a, b in zip(self.tooth_roots, self.tooth_tips)]

    def _origin_candidates(self):
        cands = [np.array([-1.0, 0.0])]
        for a, b in zip(self.tooth_roots, self.tooth_tips):
            ab = b - a
            s = np.clip(-(a @ ab) / (ab @ ab), 0.0, 1.0)
            cands.append(a + s * ab)
        return np.array(cands)

    def params(self):
        return {"max_teeth": self.max_teeth}


class Punctured(Domain):
    """``R^2`` minus a single point."""

    tag = "punctured"

    def __init__(self, point=(1.0, 0.0)):
        self.point = as_point(point, 2)
        if not np.any(self.point):
            raise ValueError("the puncture must differ from the origin")

    def _dist(self, p):
        return norm(np.asarray(p, dtype=float) - self.point)

    def pieces(self):
        return [PointPiece(self.point)]

    def infinity_directions(self):
        return [self.point / norm(self.point)]

    def boundary_direction(self):
        return self.point / norm(self.point)

    def _origin_candidates(self):
        return self.point[None, :]

    def params(self):
        return {"point": self.point.tolist()}


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

def contains(d: Domain, p) -> bool:
    return bool(d.contains(as_point(p, d.dim)))


def dist_boundary(d: Domain, p) -> float:
    return float(d.dist_boundary(as_point(p, d.dim)))


@dataclass(frozen=True, eq=False)
class BoundarySample:
    """Array form of a boundary sampling, as used by the sup-solver."""

    points: np.ndarray      # (N, 2)
    piece: np.ndarray       # (N,) piece index
    u: np.ndarray           # (N,) piece parameter
    pitch: np.ndarray       # (P,) parameter spacing per piece
    pieces: tuple
    infinity: tuple         # unit directions

    def __len__(self):
        return len(self.points)


def sample_boundary(d: Domain, budget: int) -> BoundarySample:
    if budget < 1:
        raise ValueError("budget must be positive")
    pieces = d.pieces()
    if not pieces:
        raise ValueError(f"{d.tag} has an empty boundary")
    weights = np.array([pc.weight for pc in pieces])
    total = weights.sum()
    pts, idx, us, pitch = [], [], [], []
    for i, pc in enumerate(pieces):
        if isinstance(pc, PointPiece):
            n = 1
        else:
            share = budget * weights[i] / total if total > 0 else budget / len(pieces)
            n = max(4, int(math.ceil(share - 1e-9)))
        if isinstance(pc, PointPiece):
            u = np.zeros(1)
            h = 0.0
        elif pc.periodic or pc.unbounded:
            u = np.arange(n) / n
            h = 1.0 / n
        else:
            u = np.linspace(0.0, 1.0, n)
            h = 1.0 / (n - 1)
        pts.append(pc.at(u))
        idx.append(np.full(n, i))
        us.append(u)
        pitch.append(h)
    return BoundarySample(np.concatenate(pts), np.concatenate(idx), np.concatenate(us),
                          np.array(pitch), tuple(pieces), tuple(d.infinity_directions()))


def boundary_samples(d: Domain, budget: int) -> list[BoundaryPoint]:
    """At least ``budget`` finite boundary points, followed by one marker per direction at infinity."""
    if budget < 8:
        raise ValueError("budget must be at least 8")
    sample = sample_boundary(d, budget)
    out = [BoundaryPoint(point=p) for p in sample.points]
    out.extend(BoundaryPoint.at_infinity(v) for v in sample.infinity)
    return out


def nearest_boundary_direction(d: Domain) -> np.ndarray:
    """Unit vector toward a boundary point at distance ``d_G(0)``; ties go to the lexicographically smallest."""
    cands = np.atleast_2d(d._origin_candidates())
    r = norm(cands)
    d0 = float(d._dist(np.zeros(d.dim)))
    close = cands[np.abs(r - d0) <= 1e-9 * max(1.0, d0)]
    if len(close) == 0:
        raise RuntimeError(f"no nearest-point candidate of {d.tag} matches d_G(0) = {d0}")
    dirs = close / norm(close)[:, None] + 0.0
    order = np.lexsort(dirs.T[::-1])
    return dirs[order[0]]


def ray_exit(d: Domain, direction, t_cap: float = 1e8) -> float:
    """``sup{t : s * direction in G for all s in [0, t)}``; ``inf`` if the ray never leaves G.

    Sphere tracing never overshoots the boundary; once its steps stall (cusps
    make it converge slowly) the exit is bracketed and bisected.
    """
    u = as_point(direction, d.dim)
    u = u / norm(u)
    t = 0.0
    step = float(d._dist(t * u))
    for _ in range(400):
        t += step
        if t > t_cap:
            return math.inf
        step = float(d._dist(t * u)) if d.contains(t * u) else 0.0
        if step <= 1e-9 * max(1.0, t):
            break
    if step <= 0.0:
        return t
    lo, width = t, max(step, 1e-12)
    while d.contains((lo + width) * u):
        lo, width = lo + width, 2.0 * width
        if lo > t_cap:
            return math.inf
    hi = lo + width
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if d.contains(mid * u):
            lo = mid
        else:
            hi = mid
    return lo


# ---------------------------------------------------------------------------
# domain-spec records
# ---------------------------------------------------------------------------

def _vec(v, name):
    try:
        return as_point(v, 2) if name != "center" else as_point(v)
    except (TypeError, ValueError) as exc:
        raise DomainSpecError(f"field {name!r}: {exc}") from exc


_BUILDERS = {
    "ball": (Ball, {"center": _vec, "radius": float}),
    "half_space_shifted": (ShiftedHalfSpace, {"b": float, "dim": int}),
    "sector_complement_G1": (sector_complement_g1, {"x": _vec}),
    "sector_complement_G2": (sector_complement_g2, {"x": _vec}),
    "g3": (g3, {"x": _vec}),
    "alpha_sharp": (alpha_sharp, {"x": _vec}),
    "quadrant_complement": (QuadrantComplement, {"x": _vec, "z2": float}),
    "circular_notched": (CircularNotched, {}),
    "polynomial_boundary": (PolynomialDomain, {"p": int}),
    "comb": (Comb, {"max_teeth": int}),
    "punctured": (Punctured, {"point": _vec}),
}

_ALIASES = {"halfspace": "half_space_shifted", "g1": "sector_complement_G1",
            "g2": "sector_complement_G2", "polynomial": "polynomial_boundary"}

DOMAIN_TAGS = tuple(_BUILDERS)


def parse_domain_spec(record) -> Domain:
    """Build a domain from a tagged record such as ``{"type": "g2", "x": [1, 0]}``."""
    if not isinstance(record, dict) or "type" not in record:
        raise DomainSpecError("a domain spec is an object with a 'type' field")
    tag = _ALIASES.get(record["type"], record["type"])
    if tag not in _BUILDERS:
        valid = ", ".join(sorted(set(_BUILDERS) | set(_ALIASES)))
        raise DomainSpecError(f"unknown domain type {record['type']!r}; valid types: {valid}")
    builder, fields = _BUILDERS[tag]
    extra = set(record) - set(fields) - {"type"}
    if extra:
        raise DomainSpecError(f"unknown field(s) for {tag}: {', '.join(sorted(extra))}")
    kwargs = {}
    for name, conv in fields.items():
        if name in record:
            try:
                kwargs[name] = conv(record[name], name) if conv is _vec else conv(record[name])
            except (TypeError, ValueError) as exc:
                raise DomainSpecError(f"field {name!r} of {tag}: {exc}") from exc
    try:
        return builder(**kwargs)
    except ValueError as exc:
        raise DomainSpecError(f"invalid {tag} parameters: {exc}") from exc


def load_domain_spec(path) -> Domain:
    text = Path(path).read_text(encoding="utf-8")
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainSpecError(f"{path}: not valid JSON ({exc})") from exc
    return parse_domain_spec(record)


def catalog(max_teeth: int = 20) -> dict[str, Domain]:
    """One default instance of every catalog domain, keyed by a short name."""
    return {
        "ball": Ball(),
        "halfspace": ShiftedHalfSpace(-1.0),
        "g1": sector_complement_g1(),
        "g2": sector_complement_g2(),
        "g3": g3(),
        "alpha_sharp": alpha_sharp(),
        "quadrant": QuadrantComplement((1.0, 1.0), 2.0),
        "circular_notched": CircularNotched(),
        "polynomial1": PolynomialDomain(1),
        "polynomial2": PolynomialDomain(2),
        "polynomial3": PolynomialDomain(3),
        "comb": Comb(max_teeth),
    }
