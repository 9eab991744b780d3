"""Closed-form predictors for the gap quantities plus power-law fitting.

In the blowup regime (min radius >> gap) the boundary-constant difference is
predicted by the leading term

    lambda_2 - lambda_1  ~  4 sqrt(r1 r2/(r1+r2)) sqrt(eps) * du^i/dx2(0),

and the mean-value relation turns it into the gradient scale
|lambda_gap| / (2 eps) attained inside the gap.  (The measured difference
matches this magnitude; its sign comes out opposite, consistent with the
exact static limit lambda_1 - lambda_2 -> p1 - p2, so comparisons are made
on magnitudes.)  In the small-disk regime (min radius = O(eps)) only the
order |lambda_gap| ~ eps * |du^i/dx2| is predicted and results are flagged
``order_only``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import DiskPair, RegimeReport, boundary_offset, gap_width, regime_classify
from .incident import IncidentField


@dataclass(frozen=True)
class Prediction:
    lambda_gap: complex          # predicted lambda_2 - lambda_1 (leading term)
    gradient_scale: float        # predicted sup |grad u| in the gap
    regime: RegimeReport
    leading_constant: float      # 4 sqrt(r1 r2/(r1+r2)) sqrt(eps), or eps in the bounded regime
    order_only: bool             # True when only the order of magnitude is asserted
    x_star_segment: tuple[tuple[float, float], tuple[float, float]]  # bracketing segment for x_*


def incident_gap_derivative(incident: IncidentField) -> complex:
    """Exact du^i/dx2 at the gap midpoint (the origin)."""
    return incident.gap_derivative()


def predicted_lambda_gap(pair: DiskPair, k: float, incident: IncidentField) -> Prediction:
    """Leading-order prediction of lambda_2 - lambda_1 and the gap gradient scale."""
    regime = regime_classify(pair, k)
    du = incident_gap_derivative(incident)
    if regime.blowup_regime:
        const = 4.0 * math.sqrt(pair.r1 * pair.r2 / (pair.r1 + pair.r2)) * math.sqrt(pair.eps)
        gap = const * du
        order_only = False
    else:
        const = pair.eps
        gap = const * du
        order_only = True
    seg = ((0.0, float(pair.c2[1])), (0.0, float(pair.c1[1])))
    return Prediction(
        lambda_gap=complex(gap),
        gradient_scale=abs(gap) / (2.0 * pair.eps),
        regime=regime,
        leading_constant=const,
        order_only=order_only,
        x_star_segment=seg,
    )


def gap_weight(pair: DiskPair, x) -> float:
    """Linear-in-x2 interpolation weight across the gap: 1 on arc 1, 0 on arc 2."""
    x = np.asarray(x, dtype=float)
    x1, x2 = float(x[0]), float(x[1])
    r0 = pair.min_radius / 2.0
    if abs(x1) >= r0:
        raise DomainError(f"|x1| = {abs(x1):g} outside the gap neighborhood (< {r0:g})")
    g2 = float(boundary_offset(pair, 2, x1))
    g1 = float(boundary_offset(pair, 1, x1))
    if not (-(pair.eps + g2) - 1e-12 <= x2 <= pair.eps + g1 + 1e-12):
        raise DomainError("point lies outside the strip between the two arcs")
    return (x2 + pair.eps + g2) / float(gap_width(pair, x1))


def gap_comparator(pair: DiskPair, lambda1: complex, lambda2: complex, x) -> complex:
    """The singular comparator (lambda1 - lambda2) * weight + lambda2."""
    return (lambda1 - lambda2) * gap_weight(pair, x) + lambda2


def gap_profile_prediction(pair: DiskPair, lambda1: complex, lambda2: complex, x) -> np.ndarray:
    """Analytic gradient of the gap comparator at x, shape (2,) complex.

    The x2-component (lambda1 - lambda2)/delta(x1) dominates; the
    x1-component is bounded by 2 |delta'/delta| |lambda1 - lambda2|.
    """
    x = np.asarray(x, dtype=float)
    x1, x2 = float(x[0]), float(x[1])
    gap_weight(pair, x)  # domain validation
    delta = float(gap_width(pair, x1))
    g2 = float(boundary_offset(pair, 2, x1))
    d_g1 = x1 / math.sqrt(pair.r1 ** 2 - x1 ** 2)
    d_g2 = x1 / math.sqrt(pair.r2 ** 2 - x1 ** 2)
    d_delta = d_g1 + d_g2
    dw_dx1 = (d_g2 * delta - (x2 + pair.eps + g2) * d_delta) / (delta * delta)
    dlam = lambda1 - lambda2
    return np.array([dlam * dw_dx1, dlam / delta])


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    log_intercept: float
    r_squared: float
    n_points: int


def fit_power_law(samples) -> PowerLawFit:
    """Unweighted least squares of log(value) against log(parameter).

    ``samples`` is a sequence of (parameter, value) pairs with strictly
    positive entries; needs at least 3 points.
    """
    pts = [(float(p), float(v)) for p, v in samples]
    if len(pts) < 3:
        raise DomainError(f"need at least 3 samples, got {len(pts)}")
    if any(p <= 0 or v <= 0 for p, v in pts):
        raise DomainError("power-law fitting requires positive parameters and values")
    lx = np.log([p for p, _ in pts])
    ly = np.log([v for _, v in pts])
    A = np.vstack([lx, np.ones_like(lx)]).T
    (slope, intercept), *_ = np.linalg.lstsq(A, ly, rcond=None)
    resid = ly - (slope * lx + intercept)
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 - float(np.sum(resid ** 2)) / ss_tot if ss_tot > 0 else 1.0
    return PowerLawFit(exponent=float(slope), log_intercept=float(intercept),
                       r_squared=r2, n_points=len(pts))
