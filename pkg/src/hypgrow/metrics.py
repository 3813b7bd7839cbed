"""Hyperbolic-type distances on catalog domains.

Every distance returns a :class:`MetricResult` holding the value and an
enclosure ``[lower, upper]``.  Boundary-supremum metrics (s, c, alpha,
delta, v) take ``lower`` from the attained witness value and ``upper`` from
an elementary triangle-inequality bound; the quasihyperbolic distance k is
bracketed between j and the cheapest explicit curve found.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import integrate, optimize, sparse
from scipy.sparse.csgraph import dijkstra

from .domains import Ball, Domain, OutsideDomainError, ShiftedHalfSpace, sample_boundary
from .geometry import angles_at, as_point, norm
from .supremum import Functional, PairFunctional, sup_boundary, sup_boundary_pairs

_SLACK = 1e-7


class MetricKind(str, Enum):
    J = "j"
    K = "k"
    S = "s"
    SIGMA = "sigma"
    SIGMA_TILDE = "sigma_tilde"
    C = "c"
    ALPHA = "alpha"
    DELTA = "delta"
    V = "v"
    TAU = "tau"
    TAU_TILDE = "tau_tilde"
    RHO_BALL = "rho_ball"
    RHO_HALFSPACE = "rho_halfspace"

    @classmethod
    def parse(cls, name) -> MetricKind:
        if isinstance(name, cls):
            return name
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown metric {name!r}; valid metrics: {valid}") from None


class MetricOverflowError(ArithmeticError):
    """sigma or tau blew up because s reached 1 or v reached pi."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class DegenerateBoundaryError(ValueError):
    """The boundary lies on a single circle or line, so the Apollonian metric is not a metric."""


class DisconnectedGridError(RuntimeError):
    """The grid graph for the quasihyperbolic distance has no path between the points."""


@dataclass(frozen=True)
class MetricResult:
    value: float
    lower: float
    upper: float
    witness: object = None
    method: str = "closed_form"

    def __post_init__(self):
        slack = _SLACK * max(1.0, abs(self.value))
        if not (self.lower - slack <= self.value <= self.upper + slack):
            raise ValueError(f"enclosure violated: {self.lower} <= {self.value} <= {self.upper}")

    def to_json(self) -> dict:
        def wit(w):
            if w is None:
                return None
            if isinstance(w, tuple):
                return [x.to_json() for x in w]
            return w.to_json()
        return {"value": self.value, "lower": self.lower, "upper": self.upper,
                "method": self.method, "witness": wit(self.witness)}


def _exact(value, method="closed_form", witness=None) -> MetricResult:
    return MetricResult(float(value), float(value), float(value), witness, method)


_ZERO = MetricResult(0.0, 0.0, 0.0, None, "closed_form")


def _pair(d: Domain, u, w):
    u, w = as_point(u, d.dim), as_point(w, d.dim)
    du, dw = d.dist_boundary(u), d.dist_boundary(w)
    return u, w, du, dw


# ---------------------------------------------------------------------------
# reference closed forms
# ---------------------------------------------------------------------------

def rho_halfspace(b: float, u, w) -> float:
    """``arccosh(1 + |u-w|^2 / (2 (u_n - b)(w_n - b)))`` on ``{a : a_n > b}``."""
    u, w = as_point(u), as_point(w, np.size(u))
    hu, hw = u[-1] - b, w[-1] - b
    if not (hu > 0 and hw > 0):
        raise OutsideDomainError(f"points must satisfy a_n > {b}")
    x = float(np.sum((u - w) ** 2)) / (2.0 * hu * hw)
    return math.log1p(x + math.sqrt(x * (x + 2.0)))


def rho_ball(center, r: float, u, w) -> float:
    """``arcsinh((|u-w|/r) / (sqrt(1-|u|^2/r^2) sqrt(1-|w|^2/r^2)))``, coordinates relative to ``center``."""
    c = as_point(center)
    u, w = as_point(u, c.size) - c, as_point(w, c.size) - c
    qu, qw = 1.0 - float(u @ u) / r ** 2, 1.0 - float(w @ w) / r ** 2
    if not (qu > 0 and qw > 0):
        raise OutsideDomainError("points must lie inside the ball")
    return math.asinh(float(norm(u - w)) / r / (math.sqrt(qu) * math.sqrt(qw)))


# ---------------------------------------------------------------------------
# j and k
# ---------------------------------------------------------------------------

def j_dist(d: Domain, u, w) -> MetricResult:
    u, w, du, dw = _pair(d, u, w)
    return _exact(math.log1p(float(norm(u - w)) / min(du, dw)))


def _k_closed_form(d: Domain, u, w, du, dw):
    if isinstance(d, Ball):
        a, b = u - d.center, w - d.center
        cross = abs(a[0] * b[1] - a[1] * b[0]) if d.dim == 2 else float(norm(np.cross(a, b)))
        same_side = float(a @ b) >= 0.0
        if cross <= 1e-14 * max(1.0, float(norm(a) * norm(b))) and same_side:
            return abs(math.log(du / dw))
    if isinstance(d, ShiftedHalfSpace) and np.allclose(u[:-1], w[:-1], rtol=0.0, atol=1e-15):
        return abs(math.log(du / dw))
    return None


def _segment_integral(d: Domain, u, w) -> float:
    """Quasihyperbolic length of ``[u, w]``; ``inf`` if the segment leaves G."""
    L = float(norm(w - u))
    probe = u + np.linspace(0.0, 1.0, 257)[:, None] * (w - u)
    if not np.all(d.contains(probe)):
        return math.inf
    val, _ = integrate.quad(lambda s: L / float(d._dist(u + s * (w - u))), 0.0, 1.0,
                            epsabs=1e-13, epsrel=1e-11, limit=200)
    return float(val)


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def _polyline_length(d: Domain, path) -> float:
    """Quasihyperbolic length of a polyline, Gauss-Legendre on each edge."""
    a, b = path[:-1], path[1:]
    s = 0.5 * (_GL_NODES + 1.0)
    pts = a[:, None, :] + s[None, :, None] * (b - a)[:, None, :]
    inv = 1.0 / d._dist(pts.reshape(-1, d.dim)).reshape(pts.shape[:2])
    return float(np.sum(norm(b - a) * (0.5 * inv @ _GL_WEIGHTS)))


def _edge_inside(d: Domain, a, b) -> bool:
    """Cover ``[a, b]`` by inscribed disks ``B(p, d_G(p))``; False if the walk stalls at the boundary."""
    L = float(norm(b - a))
    s = 0.0
    while s < L:
        p = a + (s / L) * (b - a)
        if not d.contains(p):
            return False
        r = float(d._dist(p))
        if r <= 1e-12 * max(1.0, L):
            return False
        s += 0.9 * r
    return True


def _shorten(d: Domain, path, points: int = 33) -> float:
    """Straighten a grid path: minimise the exact length over the interior vertices of a resampled polyline.

    The grid only moves in 45-degree steps, so its paths overestimate k by up to
    8% however fine the spacing; the relaxed polyline converges to the geodesic.
    Returns the length of the best curve that is verified to stay in G.
    """
    base = _polyline_length(d, path)
    # resample evenly in quasihyperbolic arclength so vertices crowd where d_G is small
    seg = norm(np.diff(path, axis=0)) / d._dist(0.5 * (path[1:] + path[:-1]))
    arc = np.concatenate([[0.0], np.cumsum(seg)])
    s = np.linspace(0.0, arc[-1], points)
    start = np.column_stack([np.interp(s, arc, path[:, i]) for i in range(path.shape[1])])
    ends = start[[0, -1]]

    def full(x):
        return np.vstack([ends[:1], x.reshape(-1, path.shape[1]), ends[1:]])

    s_q = 0.5 * (_GL_NODES + 1.0)
    eps = 1e-7
    steps = eps * np.eye(path.shape[1])

    def length_and_grad(x):
        poly = full(x)
        if not np.all(d.contains(poly)):
            return 1e300, np.zeros_like(x)
        a, b = poly[:-1], poly[1:]
        e = b - a
        L = norm(e)
        q = (a[:, None, :] + s_q[None, :, None] * e[:, None, :]).reshape(-1, d.dim)
        # d at the quadrature nodes and central-difference gradients, all in one vectorised call
        probes = np.concatenate([q[None], q[None] + steps[:, None], q[None] - steps[:, None]])
        vals = d._dist(probes.reshape(-1, d.dim)).reshape(1 + 2 * d.dim, -1)
        dist = vals[0]
        if not np.all(dist > 0):
            return 1e300, np.zeros_like(x)
        grad_d = ((vals[1:1 + d.dim] - vals[1 + d.dim:]) / (2 * eps)).T.reshape(len(e), len(s_q), d.dim)
        inv = (1.0 / dist).reshape(len(e), len(s_q))
        I = 0.5 * inv @ _GL_WEIGHTS
        total = float(np.sum(L * I))
        unit = e / np.where(L > 0, L, 1.0)[:, None]
        wg = (-0.5 * _GL_WEIGHTS * inv ** 2)[:, :, None] * grad_d
        ga = -unit * I[:, None] + L[:, None] * np.sum(wg * (1.0 - s_q)[None, :, None], axis=1)
        gb = unit * I[:, None] + L[:, None] * np.sum(wg * s_q[None, :, None], axis=1)
        g = np.zeros_like(poly)
        g[:-1] += ga
        g[1:] += gb
        return total, g[1:-1].ravel()

    x, best = start[1:-1].ravel(), math.inf
    for _ in range(5):
        # plain BFGS: L-BFGS-B's first full step tends to hit the outside-the-domain wall and stall
        res = optimize.minimize(length_and_grad, x, jac=True, method="BFGS", options={"gtol": 1e-9, "maxiter": 2000})
        improved = res.fun < best - 1e-13 * abs(res.fun)
        if res.fun < best:
            x, best = res.x, float(res.fun)
        if not improved:
            break
    res.x, res.fun = x, best
    poly = full(res.x)
    if res.fun < base and all(_edge_inside(d, a, b) for a, b in zip(poly[:-1], poly[1:])):
        return float(res.fun)
    return base


def _grid_path(d: Domain, u, w, h: float) -> np.ndarray:
    """Vertices of the shortest 8-neighbour grid path from u to w (edge weights by the midpoint rule)."""
    margin = 0.5 * float(norm(w - u)) + 2.0 * h
    lo = np.minimum(u, w) - margin
    hi = np.maximum(u, w) + margin
    i = np.arange(math.floor((lo[0] - u[0]) / h), math.ceil((hi[0] - u[0]) / h) + 1)
    k = np.arange(math.floor((lo[1] - u[1]) / h), math.ceil((hi[1] - u[1]) / h) + 1)
    X, Y = np.meshgrid(u[0] + h * i, u[1] + h * k)
    pts = np.stack([X, Y], axis=-1)
    inside = d.contains(pts.reshape(-1, 2)).reshape(X.shape)
    ids = np.full(X.shape, -1)
    ids[inside] = np.arange(int(inside.sum()))
    nodes = pts[inside]
    src = int(ids[int(np.flatnonzero(k == 0)[0]), int(np.flatnonzero(i == 0)[0])])

    rows, cols, wts = [], [], []

    def connect(a_idx, b_idx, pa, pb):
        mid = 0.5 * (pa + pb)
        e = norm(pb - pa)
        ok = d.contains(mid)
        dm = np.where(ok, d._dist(mid), 0.0)
        ok &= dm > 0.5 * e
        rows.append(a_idx[ok])
        cols.append(b_idx[ok])
        wts.append(e[ok] / dm[ok])

    ny, nx = X.shape
    for di, dk in ((0, 1), (1, 0), (1, 1), (1, -1)):
        r0, r1 = max(0, -dk), ny - max(0, dk)
        a = ids[r0:r1, 0:nx - di]
        b = ids[r0 + dk:r1 + dk, di:nx]
        both = (a >= 0) & (b >= 0)
        connect(a[both], b[both], nodes[a[both]], nodes[b[both]])

    n = len(nodes)
    rel = (w - u) / h
    if np.allclose(rel, np.round(rel), rtol=0.0, atol=1e-9):
        gi = int(np.flatnonzero(i == int(round(rel[0])))[0])
        gk = int(np.flatnonzero(k == int(round(rel[1])))[0])
        dst = int(ids[gk, gi])
    else:
        dst = n
        near = np.flatnonzero(norm(nodes - w) <= 1.5 * h)
        connect(np.full(len(near), dst), near, np.broadcast_to(w, (len(near), 2)), nodes[near])
        n += 1
    g = sparse.csr_matrix((np.concatenate(wts), (np.concatenate(rows), np.concatenate(cols))), shape=(n, n))
    dist, pred = dijkstra(g, directed=False, indices=src, return_predecessors=True)
    if dst < 0 or not np.isfinite(dist[dst]):
        raise DisconnectedGridError(f"no grid path at spacing {h:g}; increase resolution")
    chain = [dst]
    while chain[-1] != src:
        chain.append(int(pred[chain[-1]]))
    return np.array([w if c == len(nodes) else nodes[c] for c in reversed(chain)])


def k_graph(d: Domain, u, w, tol: float = 1e-4, max_halvings: int = 3):
    """Upper bound on k from a grid path, refined until stable and then straightened.

    Returns ``(value, spacing)`` at the finest grid used.
    """
    h = float(d._dist(np.zeros(d.dim))) / 64.0
    path = _grid_path(d, u, w, h)
    val = _polyline_length(d, path)
    for _ in range(max_halvings):
        h /= 2.0
        path = _grid_path(d, u, w, h)
        new = _polyline_length(d, path)
        done = abs(new - val) < tol
        val = new
        if done:
            break
    return _shorten(d, path), h


def k_dist(d: Domain, u, w, method: str = "auto") -> MetricResult:
    """Quasihyperbolic distance: closed form where known, else the enclosure ``[j, cheapest curve]``."""
    if method not in ("auto", "closed_form", "graph", "segment_upper"):
        raise ValueError(f"unknown k method {method!r}")
    u, w, du, dw = _pair(d, u, w)
    if not np.any(u != w):
        return _ZERO
    lower = math.log1p(float(norm(u - w)) / min(du, dw))
    if method in ("auto", "closed_form"):
        exact = _k_closed_form(d, u, w, du, dw)
        if exact is not None:
            return _exact(exact)
        if method == "closed_form":
            raise ValueError(f"no closed form for k on {d.tag} at these points")
    if d.dim != 2 and method != "segment_upper":
        raise ValueError("the grid method is planar")
    if method == "segment_upper":
        upper, tag = _segment_integral(d, u, w), "segment_integral"
        if not math.isfinite(upper):
            raise ValueError("segment [u, w] leaves the domain; use the graph method")
    elif method == "graph":
        upper, tag = k_graph(d, u, w)[0], "graph_approx"
    else:
        seg = _segment_integral(d, u, w)
        graph = k_graph(d, u, w)[0]
        upper, tag = (seg, "segment_integral") if seg <= graph else (graph, "graph_approx")
    return MetricResult(upper, lower, upper, None, tag)


# ---------------------------------------------------------------------------
# boundary-supremum metrics
# ---------------------------------------------------------------------------

def triangular_ratio_functional(u, w) -> Functional:
    L = float(norm(u - w))
    return Functional(lambda q: L / (norm(u - q) + norm(q - w)), lambda v: 0.0, "triangular ratio")


def cassinian_functional(u, w) -> Functional:
    L = float(norm(u - w))
    return Functional(lambda q: L / (norm(u - q) * norm(q - w)), lambda v: 0.0, "cassinian")


def visual_angle_functional(u, w) -> Functional:
    return Functional(lambda q: angles_at(q, u, w), lambda v: 0.0, "visual angle")


def apollonian_functional(u, w) -> PairFunctional:
    f1 = Functional(lambda a: np.log(norm(a - w) / norm(a - u)), lambda v: 0.0, "apollonian (a)")
    f2 = Functional(lambda b: np.log(norm(b - u) / norm(b - w)), lambda v: 0.0, "apollonian (b)")
    return PairFunctional(
        finite=lambda a, b: f1.finite(a) + f2.finite(b),
        a_infinite=lambda v, b: f2.finite(b),
        b_infinite=lambda a, v: f1.finite(a),
        both_infinite=lambda v1, v2: 0.0,
        separable=(f1, f2), name="apollonian")


def seittenranta_functional(u, w) -> PairFunctional:
    L = float(norm(u - w))
    return PairFunctional(
        finite=lambda a, b: np.log1p(norm(a - b) * L / (norm(a - u) * norm(b - w))),
        a_infinite=lambda v, b: np.log1p(L / norm(b - w)),
        b_infinite=lambda a, v: np.log1p(L / norm(a - u)),
        both_infinite=lambda v1, v2: 0.0,
        name="seittenranta",
        block_bound=lambda ca, ra, cb, rb: _seittenranta_bound(u, w, L, ca, ra, cb, rb))


def _seittenranta_bound(u, w, L, ca, ra, cb, rb):
    """Upper bound of the Seittenranta functional for a, b in two discs."""
    num = norm(ca - cb) + ra + rb
    da, db = norm(ca - u) - ra, norm(cb - w) - rb
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.log1p(num * L / (da * db))
    return np.where((da > 0) & (db > 0), out, np.inf)


def s_family(d: Domain, u, w, budget: int = 4096):
    """``(s, sigma, sigma_tilde)``; raises :class:`MetricOverflowError` (with ``partial = s``) when s ~ 1."""
    u, w, du, dw = _pair(d, u, w)
    if not np.any(u != w):
        return _ZERO, _ZERO, _ZERO
    r = sup_boundary(d, triangular_ratio_functional(u, w), budget)
    upper = min(1.0, float(norm(u - w)) / (du + dw))
    s = MetricResult(r.value, r.value, max(upper, r.value), r.witness, "sup_solver")
    if s.value >= 1.0 - 1e-12:
        raise MetricOverflowError("s reached 1, sigma is infinite", partial=s)
    to_sigma = lambda x: math.tan(math.pi * x / 2.0) if x < 1.0 else math.inf
    sigma = MetricResult(to_sigma(s.value), to_sigma(s.lower), to_sigma(s.upper), r.witness, "sup_solver")
    k = 4.0 / math.pi
    tilde = MetricResult(k * sigma.value, k * sigma.lower, k * sigma.upper, r.witness, "sup_solver")
    return s, sigma, tilde


def c_dist(d: Domain, u, w, budget: int = 4096) -> MetricResult:
    u, w, du, dw = _pair(d, u, w)
    if not np.any(u != w):
        return _ZERO
    r = sup_boundary(d, cassinian_functional(u, w), budget)
    upper = float(norm(u - w)) / (du * dw)
    return MetricResult(r.value, r.value, max(upper, r.value), r.witness, "sup_solver")


def check_not_spherical(d: Domain, samples: int = 64, tol: float = 1e-9) -> None:
    """Raise if the finite boundary samples fit one circle or line ``A|p|^2 + D x + E y + F = 0``."""
    pts = sample_boundary(d, samples).points
    if len(pts) < 4:
        raise DegenerateBoundaryError(f"the boundary of {d.tag} has fewer than four points")
    scale = float(np.max(norm(pts))) or 1.0
    p = pts / scale
    M = np.column_stack([np.sum(p * p, axis=1), p[:, 0], p[:, 1], np.ones(len(p))])
    sv = np.linalg.svd(M, compute_uv=False)
    if sv[-1] <= tol * sv[0]:
        raise DegenerateBoundaryError(f"the boundary of {d.tag} lies on one circle or line")


def alpha_dist(d: Domain, u, w, budget: int = 4096) -> MetricResult:
    check_not_spherical(d)
    u, w, du, dw = _pair(d, u, w)
    if not np.any(u != w):
        return _ZERO
    r = sup_boundary_pairs(d, apollonian_functional(u, w), single_budget=budget)
    L = float(norm(u - w))
    upper = math.log1p(L / du) + math.log1p(L / dw)
    return MetricResult(r.value, r.value, max(upper, r.value), r.witness, "sup_solver")


def delta_upper_bound(u, w, du: float, dw: float) -> float:
    """Triangle-inequality bound ``log(1 + t/d(u) + t/d(w) + t^2/(d(u) d(w)))`` with ``t = |u - w|``."""
    t = float(norm(as_point(u) - as_point(w)))
    return math.log1p(t / du + t / dw + t * t / (du * dw))


def delta_dist(d: Domain, u, w, budget: int = 256) -> MetricResult:
    u, w, du, dw = _pair(d, u, w)
    if not np.any(u != w):
        return _ZERO
    r = sup_boundary_pairs(d, seittenranta_functional(u, w), budget)
    try:
        lower = alpha_dist(d, u, w).value
    except DegenerateBoundaryError:
        lower = r.value
    upper = delta_upper_bound(u, w, du, dw)
    return MetricResult(r.value, lower, max(upper, r.value), r.witness, "sup_solver")


def v_family(d: Domain, u, w, budget: int = 4096):
    """``(v, tau, tau_tilde)``; raises :class:`MetricOverflowError` (with ``partial = v``) when v ~ pi."""
    u, w, du, dw = _pair(d, u, w)
    if not np.any(u != w):
        return _ZERO, _ZERO, _ZERO
    r = sup_boundary(d, visual_angle_functional(u, w), budget)
    v = MetricResult(r.value, r.value, math.pi, r.witness, "sup_solver")
    if v.value >= math.pi - 1e-12:
        raise MetricOverflowError("v reached pi, tau is infinite", partial=v)
    tau = MetricResult(math.tan(v.value / 2.0), math.tan(v.lower / 2.0), math.inf, r.witness, "sup_solver")
    tilde = MetricResult(2.0 * tau.value, 2.0 * tau.lower, math.inf, r.witness, "sup_solver")
    return v, tau, tilde


def evaluate(d: Domain, kind, u, w, k_method: str = "auto", budget: int = 4096,
             pair_budget: int = 256) -> MetricResult:
    """Evaluate one metric by tag; sigma and tau overflows raise :class:`MetricOverflowError`."""
    kind = MetricKind.parse(kind)
    if kind is MetricKind.J:
        return j_dist(d, u, w)
    if kind is MetricKind.K:
        return k_dist(d, u, w, k_method)
    if kind in (MetricKind.S, MetricKind.SIGMA, MetricKind.SIGMA_TILDE):
        try:
            s, sigma, tilde = s_family(d, u, w, budget)
        except MetricOverflowError as exc:
            if kind is MetricKind.S:
                return exc.partial
            raise
        return {MetricKind.S: s, MetricKind.SIGMA: sigma, MetricKind.SIGMA_TILDE: tilde}[kind]
    if kind is MetricKind.C:
        return c_dist(d, u, w, budget)
    if kind is MetricKind.ALPHA:
        return alpha_dist(d, u, w, budget)
    if kind is MetricKind.DELTA:
        return delta_dist(d, u, w, pair_budget)
    if kind in (MetricKind.V, MetricKind.TAU, MetricKind.TAU_TILDE):
        try:
            v, tau, tilde = v_family(d, u, w, budget)
        except MetricOverflowError as exc:
            if kind is MetricKind.V:
                return exc.partial
            raise
        return {MetricKind.V: v, MetricKind.TAU: tau, MetricKind.TAU_TILDE: tilde}[kind]
    if kind is MetricKind.RHO_BALL:
        if not isinstance(d, Ball):
            raise ValueError("rho_ball needs a ball domain")
        return _exact(rho_ball(d.center, d.radius, u, w))
    if not isinstance(d, ShiftedHalfSpace):
        raise ValueError("rho_halfspace needs a half_space_shifted domain")
    return _exact(rho_halfspace(d.b, u, w))


def brute_force_value(d: Domain, kind, u, w, budget: int = 100_000) -> float:
    """Metric value from dense boundary sampling only, as an independent check on the refined solvers.

    ``budget`` samples per boundary side are used for every metric. For α and δ
    the value is the maximum over all pairs of that sample.
    """
    from .supremum import brute_force_sup

    kind = MetricKind.parse(kind)
    u, w, du, dw = _pair(d, u, w)
    if not np.any(u != w):
        return 0.0
    K = MetricKind
    if kind in (K.J, K.K, K.RHO_BALL, K.RHO_HALFSPACE):
        raise ValueError(f"{kind.value} is not a boundary supremum")
    if kind in (K.S, K.SIGMA, K.SIGMA_TILDE):
        s = brute_force_sup(d, triangular_ratio_functional(u, w), budget).value
        sigma = math.tan(math.pi * s / 2.0)
        return {K.S: s, K.SIGMA: sigma, K.SIGMA_TILDE: 4.0 / math.pi * sigma}[kind]
    if kind is K.C:
        return brute_force_sup(d, cassinian_functional(u, w), budget).value
    if kind is K.ALPHA:
        return brute_force_sup(d, apollonian_functional(u, w), budget).value
    if kind is K.DELTA:
        return brute_force_sup(d, seittenranta_functional(u, w), budget).value
    v = brute_force_sup(d, visual_angle_functional(u, w), budget).value
    return {K.V: v, K.TAU: math.tan(v / 2.0), K.TAU_TILDE: 2.0 * math.tan(v / 2.0)}[kind]
