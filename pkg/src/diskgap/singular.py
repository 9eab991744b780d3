"""The quasi-static singular function and its exact boundary/volume data.

h_k is the difference of outgoing fundamental solutions anchored at the two
mutually inverse fixed points.  Its static part h_0 = (1/2pi) ln(|x-P1|/|x-P2|)
is exactly constant on each circle (Apollonius), with closed-form constants
C_1 = (1/2pi) ln(r_1/|p_2-c_1|) < 0 < C_2 = (1/2pi) ln(|p_1-c_2|/r_2).

The log-kernel disk potentials f_r and g_r give the static disk integrals in
closed form; the full integral of h_k over a disk is delegated to adaptive
quadrature (the frequency correction h_1 = h_k - h_0 is evaluated as the
difference, exact to floating point).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError
from .geometry import DiskPair, FixedPoints, fixed_point_distances, fixed_points
from .oracle import QuadratureResult, boundary_quadrature, disk_quadrature
from .specfun import hankel1_scaled_seq, hankel1_scalar_any


@dataclass(frozen=True)
class SingularEval:
    at: np.ndarray
    h0: float
    h1: complex
    hk: complex


def _pole_vectors(pair: DiskPair, fp: FixedPoints | None = None):
    fp = fp or fixed_points(pair)
    return fp.P1, fp.P2


def h_k_eval(pair: DiskPair, k: float, x, fp: FixedPoints | None = None) -> SingularEval:
    """Evaluate h_k, its static part h0, and the frequency correction h1 at x."""
    if k <= 0:
        raise DomainError("wavenumber must be positive")
    x = np.asarray(x, dtype=float)
    P1, P2 = _pole_vectors(pair, fp)
    d1 = float(np.hypot(x[0] - P1[0], x[1] - P1[1]))
    d2 = float(np.hypot(x[0] - P2[0], x[1] - P2[1]))
    if d1 == 0.0 or d2 == 0.0:
        raise SingularityError("h_k evaluated at one of its poles")
    hk = -0.25j * (hankel1_scalar_any(0, k * d1) - hankel1_scalar_any(0, k * d2))
    h0 = math.log(d1 / d2) / (2.0 * math.pi)
    return SingularEval(at=x, h0=h0, h1=hk - h0, hk=hk)


def h_k_values(pair: DiskPair, k: float, pts: np.ndarray, fp: FixedPoints | None = None) -> np.ndarray:
    """Vectorized h_k over an (M, 2) array of points."""
    P1, P2 = _pole_vectors(pair, fp)
    d1 = np.hypot(pts[:, 0] - P1[0], pts[:, 1] - P1[1])
    d2 = np.hypot(pts[:, 0] - P2[0], pts[:, 1] - P2[1])
    if np.any(d1 == 0) or np.any(d2 == 0):
        raise SingularityError("h_k evaluated at one of its poles")
    m, e = hankel1_scaled_seq(0, k * np.concatenate([d1, d2]))
    h = m[0] * np.exp(e[0])
    return -0.25j * (h[: d1.size] - h[d1.size:])


def h_k_gradient(pair: DiskPair, k: float, pts: np.ndarray, fp: FixedPoints | None = None) -> np.ndarray:
    """Analytic gradient of h_k at an (M, 2) array of points, shape (M, 2)."""
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    P1, P2 = _pole_vectors(pair, fp)
    out = np.zeros((pts.shape[0], 2), dtype=complex)
    for sign, P in ((1.0, P1), (-1.0, P2)):
        dx = pts[:, 0] - P[0]
        dy = pts[:, 1] - P[1]
        r = np.hypot(dx, dy)
        m, e = hankel1_scaled_seq(1, k * r)
        h1 = m[1] * np.exp(e[1])
        # grad of -(i/4) H_0(k|y|) is +(i/4) k H_1(k|y|) y/|y|
        g = sign * 0.25j * k * h1 / r
        out[:, 0] += g * dx
        out[:, 1] += g * dy
    return out


def boundary_constant(pair: DiskPair, j: int) -> float:
    """Exact static boundary constant C_j of h_0 on circle j."""
    if j not in (1, 2):
        raise DomainError("disk index must be 1 or 2")
    dist = fixed_point_distances(pair)
    if j == 1:
        return math.log(pair.r1 / dist[(2, 1)]) / (2.0 * math.pi)
    return math.log(dist[(1, 2)] / pair.r2) / (2.0 * math.pi)


def boundary_constant_leading(pair: DiskPair, j: int) -> float:
    """Leading small-gap term (-1)^j (1/pi) sqrt(r_{3-j}/(r_j (r1+r2))) sqrt(eps)."""
    if j not in (1, 2):
        raise DomainError("disk index must be 1 or 2")
    r_self = pair.radius(j)
    r_other = pair.radius(3 - j)
    mag = math.sqrt(r_other / (r_self * (pair.r1 + pair.r2))) * math.sqrt(pair.eps) / math.pi
    return (-1.0) ** j * mag  # C_1 < 0 < C_2


def log_disk_potential(center, r: float, x) -> float:
    """f_r(x) = (1/2pi) * integral over the disk of ln|x - y| dy, closed form.

    Inside: (a^2 - r^2)/4 + (r^2/2) ln r; outside: (r^2/2) ln a, a = |x - center|.
    """
    if r <= 0:
        raise DomainError("radius must be positive")
    c = np.asarray(center, dtype=float)
    x = np.asarray(x, dtype=float)
    a = float(np.hypot(x[0] - c[0], x[1] - c[1]))
    if a <= r:
        return 0.25 * (a * a - r * r) + 0.5 * r * r * math.log(r)
    return 0.5 * r * r * math.log(a)


def biharmonic_disk_potential(center, r: float, x) -> float:
    """g_r(x) = (1/8pi) * integral of ln|x - y| |x - y|^2 dy, closed form.

    The outside branch carries (ln a + 1), not (ln r + 1): that is what C^1
    matching across the rim and the far-field expansion
    (1/8pi) ln a * integral |x-y|^2 dy = (1/8) r^2 a^2 ln a + (1/16) r^4 ln a + ...
    require, and what the quadrature oracle confirms.
    """
    if r <= 0:
        raise DomainError("radius must be positive")
    c = np.asarray(center, dtype=float)
    x = np.asarray(x, dtype=float)
    a = float(np.hypot(x[0] - c[0], x[1] - c[1]))
    if a <= r:
        return (a ** 4 - r ** 4) / 64.0 + (r * r / 16.0) * (2.0 * a * a * math.log(r) + a * a + r * r * math.log(r))
    return 0.125 * r * r * a * a * math.log(a) + (r ** 4 / 16.0) * (math.log(a) + 1.0)


def disk_integral_h0(pair: DiskPair, j: int) -> float:
    """Exact integral of h_0 over disk j, assembled from f_r pieces.

    Negative for j = 1 and positive for j = 2 (the in-disk pole dominates).
    """
    if j not in (1, 2):
        raise DomainError("disk index must be 1 or 2")
    dist = fixed_point_distances(pair)
    if j == 1:
        inside = 0.25 * (dist[(1, 1)] ** 2 - pair.r1 ** 2)          # pole P1 in D_1
        return inside - 0.5 * pair.r1 ** 2 * math.log(dist[(2, 1)] / pair.r1)
    inside = 0.25 * (dist[(2, 2)] ** 2 - pair.r2 ** 2)              # pole P2 in D_2
    return 0.5 * pair.r2 ** 2 * math.log(dist[(1, 2)] / pair.r2) - inside


def disk_integral_h0_leading(pair: DiskPair, j: int) -> float:
    """Leading term (-1)^j 2 r_j sqrt(r1 r2/(r1+r2)) sqrt(eps)."""
    mag = 2.0 * pair.radius(j) * math.sqrt(pair.r1 * pair.r2 / (pair.r1 + pair.r2)) * math.sqrt(pair.eps)
    return -mag if j == 1 else mag


def disk_integral_hk(pair: DiskPair, k: float, j: int, tol: float = 1e-9) -> QuadratureResult:
    """Adaptive quadrature of the full h_k over disk j (quadrature is the
    ground truth here; no closed form for the frequency correction is used)."""
    if j not in (1, 2):
        raise DomainError("disk index must be 1 or 2")
    fp = fixed_points(pair)
    pole = fp.P1 if j == 1 else fp.P2
    f = lambda pts: h_k_values(pair, k, pts, fp)
    return disk_quadrature(f, pair.center(j), pair.radius(j), tol=tol, log_point=pole)


def flux_identity_defect(pair: DiskPair, k: float, j: int, n_boundary: int = 4096,
                         target: float = 1e-7) -> complex:
    """Defect of the distributional identity for disk j:

        contour integral of dh_k/dnu  +  k^2 * area integral of h_k  -  (-1)^{j+1}

    with nu the outward normal of the disk.  Exactly zero for the true h_k;
    the area quadrature tolerance is derived from ``target`` (the k^2 factor
    relaxes the absolute accuracy the area term needs).
    """
    fp = fixed_points(pair)
    c = pair.center(j)
    r = pair.radius(j)

    def dnu(pts):
        g = h_k_gradient(pair, k, pts, fp)
        nx = (pts[:, 0] - c[0]) / r
        ny = (pts[:, 1] - c[1]) / r
        return g[:, 0] * nx + g[:, 1] * ny

    # double the trapezoid until it plateaus; a pole hugging the rim (small
    # second disk) pushes the spectral onset to n ~ r / dist(pole, boundary)
    contour = boundary_quadrature(dnu, c, r, n_boundary)
    for _ in range(6):
        finer = boundary_quadrature(dnu, c, r, 2 * n_boundary)
        n_boundary *= 2
        done = abs(finer - contour) <= 0.1 * target
        contour = finer
        if done:
            break
    area = disk_integral_hk(pair, k, j, tol=0.2 * target / (k * k)).value
    return contour + k * k * area - (-1.0) ** (j + 1)
