import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diskgap.errors import DomainError, SingularityError
from diskgap.geometry import (
    DiskPair,
    fixed_point_distances,
    fixed_point_leading_order,
    fixed_points,
    gap_arcs,
    gap_width,
    reflect,
    regime_classify,
)


def test_centers_and_gap_by_construction():
    pair = DiskPair(1.5, 0.7, 0.01)
    assert pair.c1[1] == 1.51 and pair.c2[1] == -0.71
    # boundary-to-boundary distance along the axis
    assert (pair.c1[1] - pair.r1) - (pair.c2[1] + pair.r2) == pytest.approx(2 * pair.eps)


def test_invalid_pair():
    with pytest.raises(DomainError):
        DiskPair(1.0, -2.0, 0.1)
    with pytest.raises(DomainError):
        DiskPair(1.0, 1.0, 0.0)


def test_eps_floor_warns():
    with pytest.warns(UserWarning):
        DiskPair(1.0, 1.0, 1e-8)


def test_reflect_fixes_boundary_points():
    pair = DiskPair(1.0, 2.0, 0.05)
    x = pair.c2 + np.array([2.0 * math.cos(0.3), 2.0 * math.sin(0.3)])
    assert np.allclose(reflect(pair, 2, x), x, atol=1e-14)


def test_reflect_example_point():
    pair = DiskPair(1.0, 1.0, 0.01)
    # |x - c1| = 0.5 below the center -> image at distance 2 below the center
    out = reflect(pair, 1, np.array([0.0, 0.51]))
    assert np.allclose(out, [0.0, -0.99], atol=1e-14)


def test_reflect_center_is_singular():
    pair = DiskPair(1.0, 1.0, 0.01)
    with pytest.raises(SingularityError):
        reflect(pair, 1, pair.c1)


def test_reflect_involution():
    pair = DiskPair(0.8, 1.7, 0.02)
    x = np.array([0.3, 0.9])
    assert np.allclose(reflect(pair, 1, reflect(pair, 1, x)), x, rtol=1e-12)


def test_fixed_points_symmetric_pair():
    fp = fixed_points(DiskPair(1.0, 1.0, 0.01))
    assert fp.p1 == pytest.approx(-fp.p2, rel=1e-15)
    assert fp.p1 == pytest.approx(0.1417744, abs=2e-7)
    assert fp.d == pytest.approx(math.sqrt(2.050401), rel=1e-12)


def test_fixed_points_satisfy_reflections():
    rng = np.random.default_rng(7)
    for _ in range(100):
        r1 = float(rng.uniform(0.3, 3.0))
        r2 = float(rng.uniform(0.3, 3.0))
        eps = min(r1, r2) * 10.0 ** float(rng.uniform(-5, 0))
        pair = DiskPair(r1, r2, eps)
        fp = fixed_points(pair)
        scale = max(r1, r2)
        assert np.linalg.norm(reflect(pair, 1, fp.P1) - fp.P2) < 1e-12 * scale
        assert np.linalg.norm(reflect(pair, 2, fp.P2) - fp.P1) < 1e-12 * scale
        assert fp.p1 > 0 > fp.p2
        # both points sit strictly inside their disks
        assert np.linalg.norm(fp.P1 - pair.c1) < pair.r1
        assert np.linalg.norm(fp.P2 - pair.c2) < pair.r2


@settings(max_examples=60, deadline=None)
@given(r1=st.floats(0.2, 4.0), r2=st.floats(0.2, 4.0), le=st.floats(-5.0, -0.05))
def test_fixed_points_solve_their_quadratic(r1, r2, le):
    eps = min(r1, r2) * 10.0 ** le
    pair = DiskPair(r1, r2, eps)
    fp = fixed_points(pair)
    scale = (r1 + r2) * max(r1, r2) ** 2
    for root in (fp.p1, fp.p2):
        q = ((r1 + r2 + 2 * eps) * root * root + 2 * eps * (r2 - r1) * root
             - eps * (4 * r1 * r2 + 3 * r1 * eps + 3 * r2 * eps + 2 * eps * eps))
        assert abs(q) < 1e-12 * scale


def test_fixed_points_leading_order():
    pair = DiskPair(1.0, 1.0, 1e-6)
    fp = fixed_points(pair)
    assert abs(fp.p1 / fixed_point_leading_order(pair) - 1.0) < 1e-2


def test_scale_covariance_power_of_two():
    pair = DiskPair(0.9, 1.4, 3e-3)
    scaled = DiskPair(4 * 0.9, 4 * 1.4, 4 * 3e-3)
    fp, fps = fixed_points(pair), fixed_points(scaled)
    assert fps.p1 == 4 * fp.p1 and fps.p2 == 4 * fp.p2 and fps.d == 8 * fp.d
    assert gap_width(scaled, 4 * 0.2) == pytest.approx(4 * gap_width(pair, 0.2), rel=1e-15)


def test_distances_collinearity():
    pair = DiskPair(1.1, 0.8, 2e-3)
    fp = fixed_points(pair)
    d = fixed_point_distances(pair, fp)
    assert d[(1, 1)] + fp.p1 == pytest.approx(pair.r1 + pair.eps, rel=1e-15)
    assert d[(2, 1)] == pytest.approx(pair.r1 + pair.eps - fp.p2, rel=1e-15)
    # cross-check against explicit point distances
    assert d[(2, 1)] == pytest.approx(float(np.linalg.norm(fp.P2 - pair.c1)), rel=1e-14)
    assert d[(1, 2)] == pytest.approx(float(np.linalg.norm(fp.P1 - pair.c2)), rel=1e-14)


def test_distances_example_and_leading_order():
    pair = DiskPair(1.0, 1.0, 0.01)
    d = fixed_point_distances(pair)
    assert d[(2, 1)] == pytest.approx(1.1517744, abs=2e-7)
    small = DiskPair(1.0, 1.0, 1e-6)
    ds = fixed_point_distances(small)
    lead = fixed_point_leading_order(small)
    assert abs((ds[(2, 1)] - small.r1) / lead - 1.0) < 1e-2


def test_gap_width_values():
    pair = DiskPair(1.0, 1.0, 0.01)
    assert gap_width(pair, 0.0) == 0.02
    assert gap_width(pair, 0.1) == pytest.approx(0.02 + 2 * (1 - math.sqrt(0.99)), rel=1e-12)
    assert gap_width(pair, 0.1) == gap_width(pair, -0.1)


def test_gap_width_convex_even():
    pair = DiskPair(1.3, 0.9, 5e-3)
    xs = np.linspace(-0.4, 0.4, 41)
    vals = np.array([gap_width(pair, float(t)) for t in xs])
    assert np.all(vals[1:-1] <= 0.5 * (vals[2:] + vals[:-2]) + 1e-15)
    assert np.allclose(vals, vals[::-1], rtol=1e-14)


def test_gap_width_domain():
    pair = DiskPair(1.0, 0.5, 0.01)
    with pytest.raises(DomainError):
        gap_width(pair, 0.5)


def test_gap_arcs_match_circles():
    pair = DiskPair(1.2, 0.8, 4e-3)
    x1 = np.array([0.0, 0.1, -0.25])
    top, bot = gap_arcs(pair, x1)
    assert np.allclose(np.hypot(x1 - pair.c1[0], top - pair.c1[1]), pair.r1, rtol=1e-14)
    assert np.allclose(np.hypot(x1 - pair.c2[0], bot - pair.c2[1]), pair.r2, rtol=1e-14)


def test_regime_flags():
    rep = regime_classify(DiskPair(1.0, 1.0, 1e-3), 0.05)
    assert rep.quasi_static and rep.blowup_regime and rep.mitigation_ok
    assert not regime_classify(DiskPair(1.0, 1.0, 1e-3), 10.0).quasi_static
    small = regime_classify(DiskPair(1.0, 0.02, 0.02), 0.05)
    assert not small.blowup_regime


def test_regime_monotone_in_eps():
    k = 0.05
    flags = [regime_classify(DiskPair(1.0, 1.0, e), k).blowup_regime
             for e in (1e-1, 1e-2, 1e-3, 1e-4)]
    # once on, decreasing eps cannot turn the blowup flag off
    first_on = flags.index(True)
    assert all(flags[first_on:])
