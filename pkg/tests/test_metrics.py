from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hypgrow import domains as D
from hypgrow.metrics import (DegenerateBoundaryError, MetricKind, MetricOverflowError, MetricResult,
                             alpha_dist, brute_force_value, c_dist, delta_dist, delta_upper_bound, evaluate,
                             j_dist, k_dist, k_graph, rho_ball, rho_halfspace, s_family, v_family)

O = np.zeros(2)
W = np.array([0.5, 0.0])
inner = st.tuples(st.floats(-0.6, 0.6), st.floats(-0.6, 0.6)).map(np.array)


def test_rho_halfspace_examples():
    assert rho_halfspace(-1.0, O, (0, -0.5)) == pytest.approx(math.log(2), abs=1e-12)
    assert rho_halfspace(-1.0, O, (0.3, 0)) == pytest.approx(math.acosh(1 + 0.09 / 2), abs=1e-12)
    assert rho_halfspace(-1.0, (0.2, 0.1), (0.2, 0.1)) == 0.0


def test_rho_ball_examples():
    assert rho_ball(O, 1.0, O, W) == pytest.approx(math.asinh(0.5 / math.sqrt(0.75)), abs=1e-12)
    assert rho_ball(O, 1.0, W, W) == 0.0
    h = 1e-6
    assert rho_ball(O, 1.0, O, (h, 0)) / h == pytest.approx(1.0, abs=1e-6)


@given(inner, inner)
def test_rho_ball_symmetric(u, w):
    assert rho_ball(O, 1.0, u, w) == pytest.approx(rho_ball(O, 1.0, w, u), rel=1e-12, abs=1e-15)


def test_j_examples(cat):
    assert j_dist(cat["ball"], O, W).value == pytest.approx(math.log(2), abs=1e-12)
    assert j_dist(cat["g1"], O, W).value == pytest.approx(math.log(1.5), abs=1e-12)
    assert j_dist(cat["ball"], W, W).value == 0.0


def test_k_examples(cat):
    r = k_dist(cat["ball"], O, W)
    assert r.method == "closed_form" and r.value == pytest.approx(math.log(2), abs=1e-15)
    g = k_dist(cat["ball"], O, W, method="graph")
    assert abs(g.value - math.log(2)) < 1e-3
    assert k_dist(cat["g1"], W, W).value == 0.0


@given(inner, inner)
@settings(max_examples=15, deadline=None)
def test_k_enclosure_on_ball(u, w):
    if np.allclose(u, w):
        return
    B = D.Ball()
    # on the disk rho / 2 <= k <= rho for the hyperbolic metric rho, and rho_ball returns rho / 2
    half = rho_ball(O, 1.0, u, w)
    seg = k_dist(B, u, w, method="segment_upper")
    assert seg.lower <= 2 * half + 1e-12
    assert seg.upper >= half - 1e-12
    val, h = k_graph(B, u, w)
    assert val >= seg.lower - 1e-12 and val >= half - 1e-12


def test_s_family_examples(cat):
    s, sigma, tilde = s_family(cat["ball"], O, W)
    assert s.value == pytest.approx(1 / 3, abs=1e-9)
    assert sigma.value == pytest.approx(math.tan(math.pi / 6), abs=1e-9)
    # the printed 0.7351327 is a digit slip: (4/pi) tan(pi/6) = 0.73510519...
    assert tilde.value == pytest.approx(4 / math.pi * math.tan(math.pi / 6), abs=1e-9)
    assert tilde.value == pytest.approx(0.7351052, abs=1e-7)
    assert s_family(cat["g1"], O, W)[0].value == pytest.approx(0.2, abs=1e-9)
    assert all(r.value == 0 for r in s_family(cat["ball"], W, W))
    assert brute_force_value(cat["ball"], "s", O, W) == pytest.approx(1 / 3, abs=1e-7)


def test_s_overflow_near_boundary_pair():
    P = D.Punctured((1.0, 0.0))
    with pytest.raises(MetricOverflowError) as exc:
        s_family(P, O, (2.0, 0.0))
    assert exc.value.partial.value == pytest.approx(1.0)


def test_c_examples(cat):
    r = c_dist(cat["ball"], O, W)
    assert r.value == pytest.approx(1.0, abs=1e-9)
    np.testing.assert_allclose(r.witness.point, [1, 0], atol=1e-5)
    assert brute_force_value(cat["ball"], "c", O, W) == pytest.approx(1.0, abs=1e-7)
    r = c_dist(cat["g1"], O, W)
    assert r.value == pytest.approx(1 / 3, abs=1e-9)
    np.testing.assert_allclose(r.witness.point, [-1, 0], atol=1e-5)


def test_alpha_examples(cat):
    assert alpha_dist(cat["alpha_sharp"], O, W).value == pytest.approx(math.log(3), abs=1e-6)
    assert alpha_dist(cat["g2"], O, W).value == pytest.approx(math.log(2), abs=1e-6)
    with pytest.raises(DegenerateBoundaryError):
        alpha_dist(cat["ball"], O, W)


def test_delta_examples(cat):
    # printed: log 1.5 on G2 and log(5/3) on G3.  Dense pair sampling sides with the solver:
    # on G2 the pair (a at infinity, b = x) gives log(1 + |w|/|b - w|) = log 2, and on G3
    # a = x, b = -x gives log(1 + 2 * 0.5 / 0.5) = log 3.
    assert delta_dist(cat["g2"], O, W).value == pytest.approx(math.log(2), abs=1e-6)
    assert delta_dist(cat["g3"], O, W).value == pytest.approx(math.log(3), abs=1e-6)
    assert brute_force_value(cat["g3"], "delta", O, W) == pytest.approx(math.log(3), abs=1e-5)
    r = delta_dist(cat["ball"], O, W)
    assert r.value == pytest.approx(math.log(3), abs=1e-6)
    assert brute_force_value(cat["ball"], "delta", O, W) == pytest.approx(math.log(3), abs=1e-5)


def test_delta_upper_bound_simplifies():
    d, t = 1.0, 0.5
    assert delta_upper_bound(O, W, d, d - t) == pytest.approx(math.log((d + t) / (d - t)), abs=1e-14)


def test_v_examples(cat):
    v, tau, tilde = v_family(cat["ball"], O, W)
    assert v.value == pytest.approx(math.pi / 6, abs=1e-9)
    assert tau.value == pytest.approx(0.2679492, abs=1e-7)
    assert tilde.value == pytest.approx(0.5358984, abs=1e-7)
    assert all(r.value == 0 for r in v_family(cat["ball"], W, W))


def test_v_overflow_through_puncture():
    P = D.Punctured((1.0, 0.0))
    with pytest.raises(MetricOverflowError) as exc:
        v_family(P, (0.0, 0.0), (2.0, 0.0))
    assert exc.value.partial.value == pytest.approx(math.pi)
    assert evaluate(P, "v", O, (2.0, 0.0)).value == pytest.approx(math.pi)
    with pytest.raises(MetricOverflowError):
        evaluate(P, "tau", O, (2.0, 0.0))


def test_metric_kind_parse():
    assert MetricKind.parse("sigma_tilde") is MetricKind.SIGMA_TILDE
    with pytest.raises(ValueError, match="valid metrics"):
        MetricKind.parse("nope")


def test_metric_result_validation():
    with pytest.raises(ValueError):
        MetricResult(1.0, 2.0, 3.0, None, "x")


def test_outside_domain(cat):
    with pytest.raises(D.OutsideDomainError):
        evaluate(cat["ball"], "j", O, (1.5, 0))


@pytest.mark.parametrize("kind", ["j", "s", "c", "v", "delta"])
@given(u=inner, w=inner)
@settings(max_examples=6, deadline=None)
def test_symmetry_and_identity(cat, kind, u, w):
    d = cat["g1"]
    a = evaluate(d, kind, u, w).value
    b = evaluate(d, kind, w, u).value
    assert a == pytest.approx(b, rel=1e-6, abs=1e-9)
    assert a >= 0 and evaluate(d, kind, u, u).value == 0


@given(u=inner, w=inner)
@settings(max_examples=10, deadline=None)
def test_alpha_below_delta(cat, u, w):
    d = cat["g3"]
    assert alpha_dist(d, u, w).value <= delta_dist(d, u, w).value + 1e-7
