"""Euclidean primitives: points, segments, angles and angular sectors.

Point arrays have shape ``(..., n)``; scalar results drop the last axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DegenerateVertexError(ValueError):
    """Raised when an angle is requested at a vertex that coincides with an endpoint."""


def as_point(p, dim: int | None = None) -> np.ndarray:
    """Return ``p`` as a finite 1-D float array, optionally checking its dimension."""
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size < 2:
        raise ValueError(f"a point needs at least two coordinates, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"point has non-finite coordinates: {arr}")
    if dim is not None and arr.size != dim:
        raise ValueError(f"expected a {dim}-dimensional point, got {arr.size} coordinates")
    return arr


def norm(v) -> np.ndarray:
    return np.linalg.norm(v, axis=-1)


def _vector_angle(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    # 2-D: atan2(|cross|, dot); n-D: Kahan's half-angle form. Both stay accurate near 0 and pi.
    if u.shape[-1] == 2:
        cross = u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]
        dot = np.sum(u * v, axis=-1)
        return np.abs(np.arctan2(cross, dot))
    uh = u / norm(u)[..., None]
    vh = v / norm(v)[..., None]
    return 2.0 * np.arctan2(norm(uh - vh), norm(uh + vh))


def angle(a, b, c) -> float:
    """Angle at vertex ``b`` between the segments ``[a, b]`` and ``[b, c]``, in ``[0, pi]``."""
    a, b, c = (as_point(p) for p in (a, b, c))
    u, v = a - b, c - b
    if not np.any(u) or not np.any(v):
        raise DegenerateVertexError("angle vertex coincides with an endpoint")
    return float(_vector_angle(u, v))


def angles_at(vertices: np.ndarray, a, c) -> np.ndarray:
    """Vectorised ``angle(a, vertex, c)`` over an ``(N, n)`` array of vertices.

    Vertices equal to ``a`` or ``c`` give angle 0.
    """
    vertices = np.asarray(vertices, dtype=float)
    u = np.asarray(a, dtype=float) - vertices
    v = np.asarray(c, dtype=float) - vertices
    with np.errstate(invalid="ignore", divide="ignore"):
        out = _vector_angle(u, v)
    return np.nan_to_num(out, nan=0.0)


@dataclass(frozen=True, eq=False)
class Segment:
    """Closed segment ``[a, b]`` parametrised as ``a + t (b - a)``, ``t`` in ``[0, 1]``."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", as_point(self.a))
        object.__setattr__(self, "b", as_point(self.b, self.a.size))

    def point_at(self, t):
        t = np.asarray(t, dtype=float)
        return self.a + t[..., None] * (self.b - self.a)

    @property
    def length(self) -> float:
        return float(norm(self.b - self.a))

    def distance(self, p) -> np.ndarray:
        return segment_distance(p, self.a, self.b)


def segment_distance(p, a, b) -> np.ndarray:
    """Distance from points ``p`` (shape ``(..., n)``) to the closed segment ``[a, b]``."""
    p = np.asarray(p, dtype=float)
    ab = b - a
    ll = float(np.dot(ab, ab))
    if ll == 0.0:
        return norm(p - a)
    s = np.clip(np.sum((p - a) * ab, axis=-1) / ll, 0.0, 1.0)
    return norm(p - (a + s[..., None] * ab))


@dataclass(frozen=True, eq=False)
class Sector:
    """Closed angular sector ``{z : angle(axis_point, apex, z) <= half_angle}`` (apex included)."""

    apex: np.ndarray
    axis_point: np.ndarray
    half_angle: float

    def __post_init__(self):
        apex = as_point(self.apex)
        axis_point = as_point(self.axis_point, apex.size)
        if not np.any(axis_point - apex):
            raise ValueError("sector axis point must differ from the apex")
        if not 0.0 < self.half_angle < np.pi:
            raise ValueError(f"half angle must lie in (0, pi), got {self.half_angle}")
        object.__setattr__(self, "apex", apex)
        object.__setattr__(self, "axis_point", axis_point)
        object.__setattr__(self, "half_angle", float(self.half_angle))

    @property
    def axis(self) -> np.ndarray:
        d = self.axis_point - self.apex
        return d / norm(d)

    def _offset_angle(self, p):
        v = np.asarray(p, dtype=float) - self.apex
        r = norm(v)
        with np.errstate(invalid="ignore", divide="ignore"):
            theta = _vector_angle(np.broadcast_to(self.axis, v.shape), v)
        return r, np.where(r > 0, theta, 0.0)

    def contains(self, p) -> np.ndarray:
        r, theta = self._offset_angle(p)
        return (r == 0) | (theta <= self.half_angle)

    def distance(self, p) -> np.ndarray:
        """Euclidean distance to the closed sector, by apex / ray-foot / interior cases."""
        r, theta = self._offset_angle(p)
        excess = theta - self.half_angle
        foot = r * np.sin(np.clip(excess, 0.0, np.pi / 2))
        return np.where(excess <= 0, 0.0, np.where(excess >= np.pi / 2, r, foot))

    def boundary_directions(self) -> list[np.ndarray]:
        """Unit directions of the two boundary rays (planar sectors only)."""
        if self.apex.size != 2:
            raise ValueError("boundary rays are only enumerated for planar sectors")
        base = np.arctan2(self.axis[1], self.axis[0])
        return [np.array([np.cos(base + s * self.half_angle), np.sin(base + s * self.half_angle)])
                for s in (1.0, -1.0)]


def sector_contains(s: Sector, p) -> bool:
    return bool(s.contains(as_point(p, s.apex.size)))


def dist_point_to_sector(p, s: Sector) -> float:
    return float(s.distance(as_point(p, s.apex.size)))
