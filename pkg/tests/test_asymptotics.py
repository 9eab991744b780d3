import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diskgap.asymptotics import (
    fit_power_law,
    gap_comparator,
    gap_profile_prediction,
    gap_weight,
    incident_gap_derivative,
    predicted_lambda_gap,
)
from diskgap.errors import DomainError
from diskgap.geometry import DiskPair, gap_arcs, gap_width
from diskgap.incident import IncidentField


def test_gap_derivative_values():
    k = 0.05
    assert incident_gap_derivative(IncidentField.plane_wave(k, (0, 1))) == pytest.approx(1j * k)
    assert incident_gap_derivative(IncidentField.sinusoid(k, 1.0, (0, 1))) == pytest.approx(1.0)
    assert incident_gap_derivative(IncidentField.bessel_mode(k, 0)) == 0


def test_prediction_blowup_leading_term():
    pair = DiskPair(1.0, 1.0, 1e-3)
    k = 0.05
    pred = predicted_lambda_gap(pair, k, IncidentField.plane_wave(k, (0, 1)))
    assert not pred.order_only
    assert pred.lambda_gap == pytest.approx(4.47214e-3 * 1j, rel=1e-5)
    assert pred.leading_constant == pytest.approx(4 * math.sqrt(0.5) * math.sqrt(1e-3))
    # mean-value relation ties the gradient scale to the gap over 2 eps
    assert pred.gradient_scale == pytest.approx(abs(pred.lambda_gap) / (2 * pair.eps))
    # which algebraically equals 2 sqrt(r1 r2/((r1+r2) eps)) |du|
    assert pred.gradient_scale == pytest.approx(
        2 * math.sqrt(0.5 / 1e-3) * abs(incident_gap_derivative(pred_inc(k))), rel=1e-12)


def pred_inc(k):
    return IncidentField.plane_wave(k, (0, 1))


def test_prediction_vanishing_drive():
    pair = DiskPair(1.0, 1.0, 1e-3)
    k = 0.05
    pred = predicted_lambda_gap(pair, k, IncidentField.plane_wave(k, (1, 0)))
    assert pred.lambda_gap == 0


def test_prediction_bounded_regime_flagged():
    k = 0.05
    eps = 1e-3
    pair = DiskPair(1.0, eps, eps)
    pred = predicted_lambda_gap(pair, k, IncidentField.plane_wave(k, (0, 1)))
    assert pred.order_only
    assert abs(pred.lambda_gap) == pytest.approx(eps * k)
    assert pred.x_star_segment[0][1] == pytest.approx(float(pair.c2[1]))
    assert pred.x_star_segment[1][1] == pytest.approx(float(pair.c1[1]))


def test_prediction_scale_monotonicity():
    k = 0.05
    scales_eps = [predicted_lambda_gap(DiskPair(1, 1, e), k, pred_inc(k)).gradient_scale
                  for e in (1e-2, 1e-3, 1e-4)]
    assert scales_eps[0] < scales_eps[1] < scales_eps[2]
    scales_k = [predicted_lambda_gap(DiskPair(1, 1, 1e-3), kk, pred_inc(kk)).gradient_scale
                for kk in (0.02, 0.05, 0.1)]
    assert scales_k[0] < scales_k[1] < scales_k[2]


def test_gap_weight_and_comparator_on_arcs():
    pair = DiskPair(1.0, 0.7, 5e-3)
    lam1, lam2 = 0.3 + 0.1j, -0.2 + 0.05j
    for x1 in (0.0, 0.1, -0.2):
        top, bot = gap_arcs(pair, x1)
        assert gap_weight(pair, (x1, float(top))) == pytest.approx(1.0, abs=1e-12)
        assert gap_weight(pair, (x1, float(bot))) == pytest.approx(0.0, abs=1e-12)
        assert gap_comparator(pair, lam1, lam2, (x1, float(top))) == pytest.approx(lam1)
        assert gap_comparator(pair, lam1, lam2, (x1, float(bot))) == pytest.approx(lam2)


def test_gap_profile_midpoint_gradient():
    pair = DiskPair(1.0, 1.0, 1e-3)
    lam1, lam2 = 0.5, -0.5
    g = gap_profile_prediction(pair, lam1, lam2, (0.0, 0.0))
    assert g[1] == pytest.approx((lam1 - lam2) / (2 * pair.eps))
    assert abs(g[0]) < 1e-14


def test_gap_profile_transverse_component_bound():
    pair = DiskPair(1.1, 0.9, 2e-3)
    lam1, lam2 = 1.0, 0.0
    for x1 in (0.05, 0.17, -0.21):
        top, bot = gap_arcs(pair, x1)
        x = (x1, 0.3 * float(top) + 0.7 * float(bot))
        g = gap_profile_prediction(pair, lam1, lam2, x)
        delta = float(gap_width(pair, x1))
        d1 = x1 / math.sqrt(pair.r1 ** 2 - x1 ** 2)
        d2 = x1 / math.sqrt(pair.r2 ** 2 - x1 ** 2)
        bound = 2 * abs(lam1 - lam2) * abs(d1 + d2) / delta
        assert abs(g[0]) <= bound + 1e-15


def test_gap_profile_matches_finite_differences():
    pair = DiskPair(1.0, 0.8, 3e-3)
    lam1, lam2 = 0.4 + 0.2j, -0.1
    x = np.array([0.07, 1e-4])
    g = gap_profile_prediction(pair, lam1, lam2, x)
    h = 1e-8
    fx = (gap_comparator(pair, lam1, lam2, x + [h, 0]) - gap_comparator(pair, lam1, lam2, x - [h, 0])) / (2 * h)
    fy = (gap_comparator(pair, lam1, lam2, x + [0, h]) - gap_comparator(pair, lam1, lam2, x - [0, h])) / (2 * h)
    assert abs(g[0] - fx) < 1e-6 * (abs(fx) + abs(fy))
    assert abs(g[1] - fy) < 1e-6 * abs(fy)


def test_gap_profile_domain_errors():
    pair = DiskPair(1.0, 1.0, 1e-3)
    with pytest.raises(DomainError):
        gap_weight(pair, (0.6, 0.0))  # outside |x1| < min radius / 2
    with pytest.raises(DomainError):
        gap_weight(pair, (0.0, 1.0))  # above the upper arc


def test_fit_power_law_exact():
    fit = fit_power_law([(p, 3.0 * p ** -0.5) for p in (1e-2, 1e-3, 1e-4)])
    assert fit.exponent == pytest.approx(-0.5, abs=1e-12)
    assert fit.r_squared == pytest.approx(1.0)
    assert fit.log_intercept == pytest.approx(math.log(3.0), abs=1e-10)
    assert fit.n_points == 3


def test_fit_power_law_constant():
    fit = fit_power_law([(p, 2.5) for p in (0.1, 0.2, 0.4, 0.8)])
    assert fit.exponent == pytest.approx(0.0, abs=1e-13)


def test_fit_power_law_with_noise(rng):
    ps = np.logspace(-4, 0, 9)
    vals = ps ** -0.5 * np.exp(rng.normal(0.0, 0.01, ps.size))
    fit = fit_power_law(list(zip(ps, vals)))
    assert abs(fit.exponent + 0.5) < 0.02
    assert fit.r_squared > 0.999


@settings(max_examples=40, deadline=None)
@given(expo=st.floats(-3, 3), amp=st.floats(0.1, 10), n=st.integers(3, 12))
def test_fit_power_law_recovers_exact_laws(expo, amp, n):
    ps = np.logspace(-2, 1, n)
    fit = fit_power_law([(p, amp * p ** expo) for p in ps])
    assert abs(fit.exponent - expo) < 1e-8


def test_fit_power_law_rejects_bad_input():
    with pytest.raises(DomainError):
        fit_power_law([(1.0, 1.0), (2.0, 2.0)])
    with pytest.raises(DomainError):
        fit_power_law([(1.0, 1.0), (2.0, -2.0), (3.0, 1.0)])
