import math

import mpmath as mp
import numpy as np
import pytest

from diskgap.errors import AsymptoticRangeError, CapabilityError, DomainError, SingularityError
from diskgap.oracle import fd_helmholtz_residual
from diskgap.specfun import (
    EULER_GAMMA,
    bessel_j,
    bessel_y,
    besselj_scaled_seq,
    bessely_seq,
    expansion_coefficient_b,
    expansion_coefficient_c,
    fundamental_solution,
    gamma_k_expansion,
    hankel1,
    hankel1_scaled_seq,
)

mp.mp.dps = 40


def j_series(n, x, terms=60):
    """Truncated power series oracle for J_n."""
    total = 0.0
    for m in range(terms):
        total += (-1.0) ** m * (x / 2.0) ** (2 * m + n) / (math.factorial(m) * math.factorial(m + n))
    return total


def test_j_at_origin():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(3, 0.0) == 0.0


def test_j_small_argument_series():
    val = bessel_j(2, 0.1)
    assert abs(val - 1.2490e-3) < 1e-7
    assert abs(val - j_series(2, 0.1)) < 1e-15


def test_wronskian_at_unit_argument():
    w = bessel_j(1, 1.0) * bessel_y(0, 1.0) - bessel_j(0, 1.0) * bessel_y(1, 1.0)
    assert abs(w - 2.0 / math.pi) < 1e-13
    w2 = bessel_j(1, 2.0) * bessel_y(0, 2.0) - bessel_j(0, 2.0) * bessel_y(1, 2.0)
    assert abs(w2 - 1.0 / math.pi) < 1e-13


def test_j_against_arbitrary_precision():
    for x in np.logspace(-3, math.log10(50.0), 25):
        for n in (0, 1, 2, 7, 31, 64):
            exact = float(mp.besselj(n, float(x)))
            got = bessel_j(n, float(x))
            if abs(exact) > 1e-100:
                assert abs(got - exact) <= 1e-12 * abs(exact), (n, x)


def test_y_against_arbitrary_precision():
    for x in np.logspace(-3, math.log10(50.0), 25):
        for n in (0, 1, 2, 7, 31, 64):
            exact = float(mp.bessely(n, float(x)))
            got = bessel_y(n, float(x))
            assert abs(got - exact) <= 1e-10 * abs(exact), (n, x)


def test_y_value_spot():
    assert abs(bessel_y(1, 1.0) - (-0.7812128)) < 1e-7


def test_y_small_argument_log_behaviour():
    x = 1e-6
    assert abs(bessel_y(0, x) / ((2.0 / math.pi) * (math.log(x / 2.0) + EULER_GAMMA)) - 1.0) < 1e-6


def test_domain_and_capability_errors():
    with pytest.raises(DomainError):
        bessel_j(-1, 1.0)
    with pytest.raises(DomainError):
        bessel_j(2, float("nan"))
    with pytest.raises(DomainError):
        bessel_y(0, 0.0)
    with pytest.raises(DomainError):
        bessel_y(0, -1.0)
    with pytest.raises(CapabilityError):
        bessel_j(129, 1.0)
    with pytest.raises(CapabilityError):
        bessel_y(200, 1.0)


def test_scaled_sequences_match_plain_values():
    z = np.array([0.05, 0.7, 12.0])
    mant, expo = hankel1_scaled_seq(40, z)
    for zi, zz in enumerate(z):
        for n in (0, 1, 5, 40):
            exact = complex(mp.hankel1(n, float(zz)))
            got = mant[n, zi] * np.exp(expo[n, zi])
            assert abs(got - exact) < 1e-12 * abs(exact)
    jm, je = besselj_scaled_seq(40, z)
    for zi, zz in enumerate(z):
        for n in (0, 3, 40):
            exact = float(mp.besselj(n, float(zz)))
            got = jm[n, zi] * np.exp(je[n, zi])
            assert abs(got - exact) < 1e-12 * max(abs(exact), 1e-280)


def test_scaled_hankel_handles_extreme_orders():
    mant, expo = hankel1_scaled_seq(600, np.array([0.05]))
    exact = mp.hankel1(600, 0.05)
    assert abs(expo[600, 0] - float(mp.log(abs(exact)))) < 1e-9 * abs(float(mp.log(abs(exact))))


def test_fundamental_solution_radial_symmetry():
    x = np.array([0.3, -0.4])
    assert fundamental_solution(0.7, x) == fundamental_solution(0.7, -x)


def test_fundamental_solution_log_limit():
    k = 0.3
    x = np.array([1e-8, 0.0])
    head = fundamental_solution(k, x) - math.log(np.hypot(*x)) / (2 * math.pi)
    expected = math.log(k / 2.0) / (2 * math.pi) + EULER_GAMMA / (2 * math.pi) - 0.25j
    assert abs(head - expected) < 1e-9


def test_fundamental_solution_solves_helmholtz():
    k = 0.3
    res = fd_helmholtz_residual(lambda x: fundamental_solution(k, x), k, np.array([0.8, 0.6]), h=1e-4)
    assert abs(res) < 1e-6


def test_fundamental_solution_pole_error():
    with pytest.raises(SingularityError):
        fundamental_solution(1.0, np.array([0.0, 0.0]))


def test_expansion_coefficients():
    assert abs(expansion_coefficient_b(1) - (-1.0 / (8.0 * math.pi))) < 1e-18
    c1 = expansion_coefficient_c(1)
    assert abs(c1 - (EULER_GAMMA - math.log(2.0) - 0.5j * math.pi - 1.0)) < 1e-15


def test_expansion_head_only():
    k, x = 0.4, np.array([0.05, 0.02])
    r = float(np.hypot(*x))
    head = math.log(r) / (2 * math.pi) + math.log(k / 2) / (2 * math.pi) + EULER_GAMMA / (2 * math.pi) - 0.25j
    assert gamma_k_expansion(k, x, 0) == pytest.approx(head)


def test_expansion_matches_kernel_closely():
    k = 1.0
    x = np.array([0.05, 0.0])
    assert abs(gamma_k_expansion(k, x, 2) - fundamental_solution(k, x)) < 1e-10


def test_expansion_range_error():
    with pytest.raises(AsymptoticRangeError):
        gamma_k_expansion(2.0, np.array([1.0, 0.0]), 1)


def test_expansion_convergence_order():
    k = 1.0
    for terms in (0, 1):
        rs = np.logspace(-1.6, -0.8, 6)
        errs = [abs(gamma_k_expansion(k, np.array([r, 0.0]), terms)
                    - fundamental_solution(k, np.array([r, 0.0])))
                / abs(math.log(k * r) + expansion_coefficient_c(terms + 1)) for r in rs]
        slope = np.polyfit(np.log(rs), np.log(errs), 1)[0]
        assert slope >= 2 * terms + 2 - 0.1


def test_hankel_derivative_identity():
    h = 1e-6
    for x in (0.7, 3.3, 21.0):
        for n in (1, 4):
            fd = (hankel1(n, x + h) - hankel1(n, x - h)) / (2 * h)
            an = hankel1(n - 1, x) - (n / x) * hankel1(n, x)
            assert abs(fd - an) < 1e-7 * abs(an)


def test_forward_y_recurrence_consistency():
    x = 7.3
    y = bessely_seq(20, x)
    for n in (3, 11, 19):
        lhs = y[n - 1] + y[n + 1] if n + 1 <= 20 else None
        if lhs is not None:
            assert abs(lhs - (2 * n / x) * y[n]) < 1e-9 * (abs(lhs) + abs((2 * n / x) * y[n]))
