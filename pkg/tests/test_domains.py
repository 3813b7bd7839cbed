from __future__ import annotations

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hypgrow import domains as D
from hypgrow.geometry import Sector, sector_contains
from hypgrow.domains import (Ball, BoundaryPoint, Comb, DomainSpecError, OutsideDomainError, boundary_samples,
                             contains, dist_boundary, nearest_boundary_direction, parse_domain_spec, ray_exit)

angle_st = st.floats(0, 2 * math.pi)


def test_membership_examples(cat):
    assert contains(Ball((0, 0), 1), (0.5, 0))
    assert not contains(D.sector_complement_g2((1, 0)), (2, 0))
    assert contains(Comb(20), (0.99, 0))


def test_distance_examples(cat):
    assert dist_boundary(Ball(), (0.3, 0)) == pytest.approx(0.7, abs=1e-15)
    assert dist_boundary(D.sector_complement_g1((1, 0)), (0.5, 0)) == pytest.approx(1.5, abs=1e-15)
    assert dist_boundary(D.CircularNotched(), (0.5, 0)) == pytest.approx(math.sqrt(1.25) - 1, abs=1e-15)


def test_polynomial_distance_corrected():
    # the printed closed form sqrt((1-t)^4 + (1-t)^6) = 0.2795085 is the distance to one
    # particular boundary point, hence only an upper bound; the true minimum is smaller
    d = D.PolynomialDomain(2)
    printed = math.sqrt(0.5 ** 4 + 0.5 ** 6)
    s = np.linspace(0, 1, 2_000_001)
    oracle = float(np.min(np.hypot(s - 0.5, (1 - s) ** 2)))
    got = dist_boundary(d, (0.5, 0))
    assert got == pytest.approx(oracle, abs=1e-9)
    assert got < printed


def test_comb_distance_corrected():
    # at t = 0.5625 the circle is 0.4375 away, so the printed sqrt(65)/16 = 0.5039 cannot be g;
    # the second tooth (root (0.75, 0.125)) is the closest boundary piece
    c = Comb(20)
    a, b = c.tooth_roots[2], c.tooth_tips[2]
    p = np.array([0.5625, 0.0])
    s = np.clip(np.dot(p - a, b - a) / np.dot(b - a, b - a), 0, 1)
    oracle = min(float(np.linalg.norm(p - (a + s * (b - a)))), 1 - 0.5625,
                 min(float(D.segment_distance(p, r, t)) for r, t in zip(c.tooth_roots, c.tooth_tips)))
    assert dist_boundary(c, p) == pytest.approx(oracle, abs=1e-15)
    assert dist_boundary(c, p) < math.sqrt(65) / 16


def test_outside_raises():
    with pytest.raises(OutsideDomainError):
        dist_boundary(Ball(), (2, 0))
    with pytest.raises(ValueError):
        dist_boundary(Ball(), (0, 0, 0))


def test_boundary_samples_ball():
    pts = boundary_samples(Ball(), 8)
    assert len(pts) == 8 and not any(p.is_infinite for p in pts)
    assert all(abs(np.linalg.norm(p.point) - 1) < 1e-15 for p in pts)


def test_boundary_samples_g2_has_two_infinity_markers():
    d = D.sector_complement_g2((1, 0))
    pts = boundary_samples(d, 16)
    inf = [p.direction for p in pts if p.is_infinite]
    assert len(inf) == 2
    for u in inf:
        assert abs(abs(u[1]) - math.sqrt(0.5)) < 1e-12 and u[0] > 0
    # finite samples lie on the sector rays: the point is in the closed sector, a step off it is not
    S = Sector((1, 0), (2, 0), math.pi / 4)
    for p in (q.point for q in pts if not q.is_infinite):
        assert sector_contains(S, p)
        v = p - np.array([1.0, 0.0])
        if np.linalg.norm(v) > 0:
            off = p + 1e-6 * np.array([0.0, np.sign(v[1])])
            assert not sector_contains(S, off) and d.contains(off)


def test_boundary_samples_g3_contains_line():
    d = D.g3((1, 0))
    pts = [p.point for p in boundary_samples(d, 16) if not p.is_infinite]
    assert any(abs(p[0] + 1) < 1e-12 for p in pts)
    # membership probes around a line point
    assert not d.contains([-1.0 - 1e-6, 0.3]) and d.contains([-1.0 + 1e-6, 0.3])


def test_nearest_boundary_direction_examples():
    np.testing.assert_allclose(nearest_boundary_direction(Ball((0.2, 0), 1)), [-1, 0], atol=1e-12)
    np.testing.assert_allclose(nearest_boundary_direction(D.sector_complement_g2((1, 0))), [1, 0], atol=1e-12)
    np.testing.assert_allclose(nearest_boundary_direction(Comb(20)), [0, 1], atol=1e-12)
    assert dist_boundary(Comb(20), (0, 0)) == pytest.approx(0.5)


@pytest.mark.parametrize("name", ["ball", "halfspace", "g1", "g2", "g3", "alpha_sharp", "quadrant",
                                  "circular_notched", "polynomial1", "polynomial2", "polynomial3"])
@given(theta=angle_st)
@settings(max_examples=15, deadline=None)
def test_ray_exit_is_on_boundary(cat, name, theta):
    d = cat[name]
    z = np.array([math.cos(theta), math.sin(theta)])
    T = ray_exit(d, z)
    if math.isfinite(T):
        assert d.contains(0.999 * T * z)
        assert float(d._dist(T * z)) < 1e-6
    else:
        assert d.contains(1e3 * z)


@pytest.mark.parametrize("name", ["ball", "g1", "g2", "g3", "quadrant", "circular_notched", "polynomial2",
                                  "comb"])
@given(p=st.tuples(st.floats(-1.2, 1.2), st.floats(-1.2, 1.2)), q=st.tuples(st.floats(-1.2, 1.2),
                                                                             st.floats(-1.2, 1.2)))
@settings(max_examples=30, deadline=None)
def test_distance_is_one_lipschitz(cat, name, p, q):
    d = cat[name]
    p, q = np.array(p), np.array(q)
    if not (d.contains(p) and d.contains(q)):
        return
    assert abs(float(d._dist(p)) - float(d._dist(q))) <= np.linalg.norm(p - q) + 1e-12


def test_spec_round_trip(cat):
    for name, d in cat.items():
        again = parse_domain_spec(json.loads(json.dumps(d.to_spec())))
        p = 0.1 * d.boundary_direction()
        assert float(again._dist(p)) == float(d._dist(p)), name


def test_spec_errors():
    with pytest.raises(DomainSpecError, match="valid types"):
        parse_domain_spec({"type": "blob"})
    with pytest.raises(DomainSpecError):
        parse_domain_spec({"type": "ball", "centre": [0, 0]})
    with pytest.raises(DomainSpecError):
        parse_domain_spec([1, 2])


def test_boundary_point_json():
    assert BoundaryPoint.finite((1, 2)).to_json() == [1.0, 2.0]
    assert BoundaryPoint.at_infinity((0, 2)).to_json() == {"at_infinity": [0.0, 1.0]}
