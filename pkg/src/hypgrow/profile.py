"""Growth of a metric along a ray from the origin.

For a domain G, a unit direction z and a metric m this module tabulates

    g(t) = d_G(t z)      and      f_m(t) = m(0, t z),

estimates ``f_m'(0)`` by Richardson-extrapolated forward differences, and
evaluates the two-sided envelopes that bound ``f_m`` in terms of
``d = d_G(0)`` alone.
"""

from __future__ import annotations

import csv
import io
import math
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .domains import Domain, ray_exit
from .geometry import as_point, norm
from .metrics import MetricKind, MetricOverflowError, evaluate

CSV_HEADER = ("t", "g", "f", "env_lo", "env_hi")


class RayExitError(ValueError):
    def __init__(self, t: float):
        super().__init__(f"the ray leaves the domain at t = {t!r}")
        self.t = t


class NonConvergenceError(ArithmeticError):
    """Successive Richardson extrapolants of f'(0) disagree by more than the tolerance."""


class ProfileParseError(ValueError):
    """A profile CSV does not follow the ``t,g,f,env_lo,env_hi`` layout."""


@dataclass(frozen=True)
class ProfileRow:
    t: float
    g: float
    f: float | None
    env_lo: float | None
    env_hi: float | None


@dataclass(frozen=True)
class ProfileTable:
    domain: Domain
    metric: MetricKind | None
    direction: np.ndarray
    rows: tuple

    def column(self, name: str) -> np.ndarray:
        return np.array([np.nan if getattr(r, name) is None else getattr(r, name) for r in self.rows])


@dataclass(frozen=True)
class DerivativeEstimate:
    value: float
    bracket: tuple
    step_sequence: tuple

    @property
    def width(self) -> float:
        return self.bracket[1] - self.bracket[0]


def thread_count() -> int:
    """Worker threads from ``HYPGROW_THREADS``: unset means serial, 0 means one per CPU."""
    raw = os.environ.get("HYPGROW_THREADS", "").strip()
    if not raw:
        return 1
    n = int(raw)
    if n < 0:
        raise ValueError("HYPGROW_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def envelope(m, d0: float, t: float):
    """``(lo, hi)`` bounds on ``f_m(t)`` from ``d0 = d_G(0)``; ``hi`` is None when ``t >= d0``.

    Returns ``(None, None)`` for the reference metrics rho_ball / rho_halfspace.
    """
    m = MetricKind.parse(m)
    d, t = float(d0), float(t)
    if not d > 0:
        raise ValueError("d0 must be positive")
    inside = t < d
    K = MetricKind
    if m in (K.J, K.K):
        return math.log1p(t / d), (math.log(d / (d - t)) if inside else None)
    if m is K.S:
        return t / (2 * d + t), (t / (2 * d - t) if inside else None)
    if m in (K.SIGMA, K.SIGMA_TILDE):
        scale = 4.0 / math.pi if m is K.SIGMA_TILDE else 1.0
        lo = scale * math.tan(math.pi * t / (4 * d + 2 * t))
        return lo, (scale * math.tan(math.pi * t / (4 * d - 2 * t)) if inside else None)
    if m is K.C:
        return t / (d * (d + t)), (t / (d * (d - t)) if inside else None)
    if m in (K.ALPHA, K.DELTA):
        return math.log1p(t / d), (math.log((d + t) / (d - t)) if inside else None)
    if m is K.V:
        return 0.0, (math.asin(t / d) if inside else None)
    if m in (K.TAU, K.TAU_TILDE):
        scale = 2.0 if m is K.TAU_TILDE else 1.0
        return 0.0, (scale * t / (math.sqrt(d * d - t * t) + d) if inside else None)
    return None, None


def growth(d: Domain, m, direction, t: float, k_method: str = "segment_upper") -> float:
    """``f_m(t) = m(0, t * direction)``."""
    z = np.zeros(d.dim)
    return evaluate(d, m, z, float(t) * as_point(direction, d.dim), k_method=k_method).value


def _unit(d: Domain, direction):
    v = d.boundary_direction() if direction is None else as_point(direction, d.dim)
    n = float(norm(v))
    if not n > 0:
        raise ValueError("direction must be non-zero")
    return v / n


def profile(d: Domain, m, direction=None, t_max: float | None = None, steps: int = 64,
            k_method: str = "segment_upper", threads: int | None = None) -> ProfileTable:
    """Tabulate ``(t, g, f_m, env_lo, env_hi)`` on ``t = t_max * i / steps``.

    ``m`` may be None for a g-only table.  ``t_max`` defaults to 95% of the
    exit distance along the ray.  sigma / tau overflows leave ``f`` empty.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    kind = None if m is None else MetricKind.parse(m)
    z = _unit(d, direction)
    exit_t = ray_exit(d, z)
    if t_max is None:
        if not math.isfinite(exit_t):
            raise ValueError("the ray never leaves the domain; give t_max explicitly")
        t_max = 0.95 * exit_t
    if not t_max > 0:
        raise ValueError("t_max must be positive")
    ts = [t_max * i / steps for i in range(steps + 1)]
    for t in ts:
        if t >= exit_t or not d.contains(t * z):
            raise RayExitError(min(t, exit_t))
    d0 = float(d.dist_boundary(np.zeros(d.dim)))

    def row(t):
        g = float(d.dist_boundary(t * z))
        if kind is None:
            return ProfileRow(t, g, None, None, None)
        try:
            f = 0.0 if t == 0 else growth(d, kind, z, t, k_method)
        except MetricOverflowError:
            f = None
        lo, hi = envelope(kind, d0, t)
        return ProfileRow(t, g, f, lo, hi)

    n = thread_count() if threads is None else threads
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            rows = tuple(pool.map(row, ts))
    else:
        rows = tuple(row(t) for t in ts)
    return ProfileTable(d, kind, z, rows)


def derivative_at_zero(d: Domain, m, direction=None, k_method: str = "segment_upper",
                       k_range=(6, 16), rtol: float = 1e-3) -> DerivativeEstimate:
    """Estimate ``f_m'(0)`` from ``f(h)/h`` at ``h = d_G(0) 2^-k`` with two Richardson levels (ratio 2)."""
    kind = MetricKind.parse(m)
    z = _unit(d, direction)
    d0 = float(d.dist_boundary(np.zeros(d.dim)))
    hs = [d0 * 2.0 ** -k for k in range(k_range[0], k_range[1] + 1)]
    quot = np.array([growth(d, kind, z, h, k_method) / h for h in hs])
    level1 = 2.0 * quot[1:] - quot[:-1]
    level2 = (4.0 * level1[1:] - level1[:-1]) / 3.0
    a, b = float(level2[-2]), float(level2[-1])
    if abs(b - a) > rtol * max(abs(a), abs(b), 1e-300):
        raise NonConvergenceError(f"extrapolants {a!r} and {b!r} differ by more than {rtol:g} relative")
    return DerivativeEstimate(b, (min(a, b), max(a, b)), tuple(hs))


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

def _fmt(x) -> str:
    return "" if x is None else format(float(x), ".17g")


def profile_csv_text(table: ProfileTable) -> str:
    if not table.rows:
        raise ValueError("cannot write an empty profile table")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in table.rows:
        w.writerow([_fmt(r.t), _fmt(r.g), _fmt(r.f), _fmt(r.env_lo), _fmt(r.env_hi)])
    return buf.getvalue()


def write_atomic(path, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file in the same directory."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent if str(path.parent) else ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit_profile_csv(table: ProfileTable, path) -> None:
    write_atomic(path, profile_csv_text(table))


def read_profile_csv(path) -> list[ProfileRow]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ProfileParseError(f"{path}: not UTF-8 text ({exc.reason})") from None
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ProfileParseError(f"{path}: empty file") from None
    if tuple(header) != CSV_HEADER:
        raise ProfileParseError(f"{path}: expected header {','.join(CSV_HEADER)}, got {','.join(header)}")
    rows = []
    for lineno, rec in enumerate(reader, start=2):
        if len(rec) != len(CSV_HEADER):
            raise ProfileParseError(f"{path}:{lineno}: expected {len(CSV_HEADER)} fields, got {len(rec)}")
        try:
            vals = [None if s == "" else float(s) for s in rec]
        except ValueError as exc:
            raise ProfileParseError(f"{path}:{lineno}: {exc}") from None
        if vals[0] is None or vals[1] is None:
            raise ProfileParseError(f"{path}:{lineno}: t and g are required")
        rows.append(ProfileRow(*vals))
    if not rows:
        raise ProfileParseError(f"{path}: no data rows")
    return rows
