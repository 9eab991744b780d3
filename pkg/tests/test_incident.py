import math

import numpy as np
import pytest

from diskgap.errors import DomainError
from diskgap.incident import IncidentField
from diskgap.oracle import fd_helmholtz_residual

KINDS = [
    IncidentField.plane_wave(0.3, direction=(0.6, 0.8), amplitude=1.5 - 0.5j),
    IncidentField.sinusoid(0.3, amplitude=2.0, direction=(0, 1)),
    IncidentField.bessel_mode(0.3, n=1, a_n=1.0 + 1.0j),
    IncidentField.bessel_mode(0.3, n=-2, a_n=0.7),
    IncidentField.bessel_mode(0.3, n=0),
]


@pytest.mark.parametrize("inc", KINDS, ids=lambda f: f.label())
def test_entire_helmholtz_solutions(inc, rng):
    for _ in range(3):
        x = rng.uniform(-2, 2, 2)
        res = fd_helmholtz_residual(lambda y: complex(inc.value(y)), inc.k, x, h=1e-4)
        assert abs(res) < 1e-6


@pytest.mark.parametrize("inc", KINDS, ids=lambda f: f.label())
def test_gradient_matches_finite_differences(inc, rng):
    x = rng.uniform(-1.5, 1.5, 2)
    gx, gy = inc.gradient(x)
    h = 1e-6
    fx = (complex(inc.value(x + [h, 0])) - complex(inc.value(x - [h, 0]))) / (2 * h)
    fy = (complex(inc.value(x + [0, h])) - complex(inc.value(x - [0, h]))) / (2 * h)
    scale = abs(fx) + abs(fy) + 1e-12
    assert abs(complex(gx) - fx) < 1e-7 * scale
    assert abs(complex(gy) - fy) < 1e-7 * scale


def test_sinusoid_definition():
    inc = IncidentField.sinusoid(0.2, amplitude=3.0, direction=(0, 1))
    x = np.array([0.4, 1.3])
    assert complex(inc.value(x)) == pytest.approx(3.0 / 0.2 * math.sin(0.2 * 1.3))


def test_gap_derivatives():
    k = 0.11
    assert IncidentField.plane_wave(k, (0, 1)).gap_derivative() == pytest.approx(1j * k)
    assert IncidentField.plane_wave(k, (1, 0)).gap_derivative() == 0
    assert IncidentField.sinusoid(k, 1.0, (0, 1)).gap_derivative() == pytest.approx(1.0)
    assert IncidentField.bessel_mode(k, 0).gap_derivative() == 0
    assert IncidentField.bessel_mode(k, 1).gap_derivative() == pytest.approx(0.5j * k)
    assert IncidentField.bessel_mode(k, 5).gap_derivative() == 0


def test_gap_derivative_matches_gradient_at_origin():
    for inc in KINDS:
        _, gy = inc.gradient(np.array([0.0, 0.0]))
        assert complex(gy) == pytest.approx(inc.gap_derivative(), abs=1e-14)


@pytest.mark.parametrize("inc", KINDS, ids=lambda f: f.label())
def test_regular_expansion_reconstructs_field(inc):
    center = np.array([0.2, 1.4])
    nmax = 24
    coeffs = inc.regular_coefficients(center, nmax)
    from diskgap.specfun import besselj_seq

    rho = 0.8
    for th in (0.0, 1.1, 2.9, 4.4):
        x = center + rho * np.array([math.cos(th), math.sin(th)])
        jseq = besselj_seq(nmax, inc.k * rho)
        n = np.arange(-nmax, nmax + 1)
        sgn = np.where((n < 0) & (np.abs(n) % 2 == 1), -1.0, 1.0)
        series = np.sum(coeffs * sgn * jseq[np.abs(n)] * np.exp(1j * n * th))
        assert abs(series - complex(inc.value(x))) < 1e-12


def test_direction_normalized():
    inc = IncidentField.plane_wave(1.0, direction=(0, 5))
    assert inc.direction == (0.0, 1.0)


def test_invalid_inputs():
    with pytest.raises(DomainError):
        IncidentField.plane_wave(-1.0, (0, 1))
    with pytest.raises(DomainError):
        IncidentField.plane_wave(1.0, (0, 0))
    with pytest.raises(DomainError):
        IncidentField.sinusoid(1.0, amplitude=1j)  # type: ignore[arg-type]
    with pytest.raises(DomainError):
        IncidentField(kind="cylinder", k=1.0)
