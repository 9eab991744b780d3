import math

import numpy as np
import pytest

from diskgap.errors import AccuracyError, DomainError
from diskgap.oracle import (
    boundary_quadrature,
    disk_quadrature,
    fd_gradient,
    fd_helmholtz_residual,
    radial_reduction,
)


def test_area_of_disk():
    q = disk_quadrature(lambda p: np.ones(p.shape[0]), (0.0, 0.0), 2.0, tol=1e-10)
    assert abs(q.value - 4 * math.pi) < 1e-10
    assert q.estimated_error < 1e-10


def test_log_kernel_at_center():
    c = np.array([0.4, -0.1])
    f = lambda p: np.log(np.hypot(p[:, 0] - c[0], p[:, 1] - c[1])) / (2 * math.pi)
    q = disk_quadrature(f, c, 1.0, tol=1e-10, log_point=c)
    assert abs(q.value - (-0.25)) < 1e-10
    # 1-D radial cross-check: 2 pi int_0^1 t ln t /(2 pi) dt = -1/4
    rad = radial_reduction(lambda t: np.log(t) / (2 * math.pi), 1.0)
    assert abs(rad - (-0.25)) < 1e-9
    assert abs(q.value - rad) < 1e-9


def test_odd_integrand_vanishes():
    q = disk_quadrature(lambda p: p[:, 0] * np.exp(p[:, 1]), (0.0, 0.0), 1.5, tol=1e-11)
    assert abs(q.value) < 1e-11


def test_off_center_log_point():
    c = np.array([0.0, 0.0])
    p0 = np.array([0.3, 0.2])
    f = lambda p: np.log(np.hypot(p[:, 0] - p0[0], p[:, 1] - p0[1])) / (2 * math.pi)
    q = disk_quadrature(f, c, 1.0, tol=1e-11, log_point=p0)
    a = float(np.hypot(*p0))
    exact = 0.25 * (a * a - 1.0)  # f_r inside with r = 1
    assert abs(q.value - exact) < 1e-10


def test_log_point_must_be_interior():
    with pytest.raises(DomainError):
        disk_quadrature(lambda p: np.ones(p.shape[0]), (0, 0), 1.0, log_point=(2.0, 0.0))


def test_budget_exhaustion_carries_best():
    # absurd tolerance on a rough integrand exhausts the budget
    f = lambda p: np.log(np.hypot(p[:, 0] - 1.001, p[:, 1]))
    with pytest.raises(AccuracyError) as err:
        disk_quadrature(f, (0, 0), 1.0, tol=1e-16, max_evals=200_000)
    assert err.value.best is not None


def test_boundary_quadrature_circumference():
    v = boundary_quadrature(lambda p: np.ones(p.shape[0]), (1.0, 2.0), 0.7, 64)
    assert abs(v - 2 * math.pi * 0.7) < 1e-12


def test_boundary_quadrature_orthogonality():
    c = np.array([0.0, 0.0])
    f = lambda p: p[:, 0] / np.hypot(p[:, 0], p[:, 1])  # cos(theta)
    assert abs(boundary_quadrature(f, c, 1.0, 32)) < 1e-13


def test_boundary_quadrature_plateau():
    c = np.array([0.2, -0.5])
    f = lambda p: np.exp(np.sin(3 * np.arctan2(p[:, 1] - c[1], p[:, 0] - c[0])))
    a = boundary_quadrature(f, c, 1.0, 64)
    b = boundary_quadrature(f, c, 1.0, 128)
    assert abs(a - b) < 1e-12


def test_fd_gradient_linear_exact():
    g = fd_gradient(lambda x: 3.0 * x[0] - 2.0 * x[1], np.array([0.4, 0.6]))
    assert np.allclose(g.astype(complex), [3.0, -2.0], atol=1e-9)


def test_fd_gradient_quadratic():
    g = fd_gradient(lambda x: x[0] ** 2 + x[1] ** 2, np.array([1.0, 2.0]))
    assert np.allclose(g.astype(complex), [2.0, 4.0], atol=1e-8)


def test_fd_helmholtz_residual_on_exact_solution():
    k = 0.1
    res = fd_helmholtz_residual(lambda x: np.exp(1j * k * x[1]), k, np.array([0.3, 0.7]), h=1e-4)
    assert abs(res) < 1e-6
