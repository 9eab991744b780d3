"""Two-disk geometry: circle inversion, mutually inverse fixed points, gap
profile, and regime classification.

Conventions: the disks sit on the x2-axis with the origin at the gap
midpoint, centers c1 = (0, r1 + eps), c2 = (0, -(r2 + eps)); ``eps`` is HALF
the boundary-to-boundary distance.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError

#: advisory thresholds turning the asymptotic regimes into testable flags
QUASI_STATIC_MAX = 0.1          # k * max{r1, r2, eps} <= this
BLOWUP_MIN_RATIO = 50.0         # min{r1, r2} / eps >= this
MITIGATION_FACTOR = 3.0         # k >= this * sqrt(eps / min{r1, r2})
EPS_FLOOR_FACTOR = 1e-6         # below eps = factor * max radius, warn


@dataclass(frozen=True)
class DiskPair:
    """Two disks separated by a gap of width 2*eps."""

    r1: float
    r2: float
    eps: float

    def __post_init__(self):
        for name in ("r1", "r2", "eps"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be a positive finite number, got {v!r}")
        if self.eps < EPS_FLOOR_FACTOR * max(self.r1, self.r2):
            warnings.warn(
                f"eps = {self.eps:g} is below {EPS_FLOOR_FACTOR:g} * max radius; "
                "results may be limited by conditioning",
                stacklevel=2,
            )

    @property
    def c1(self) -> np.ndarray:
        return np.array([0.0, self.r1 + self.eps])

    @property
    def c2(self) -> np.ndarray:
        return np.array([0.0, -(self.r2 + self.eps)])

    def center(self, j: int) -> np.ndarray:
        return self.c1 if j == 1 else self.c2

    def radius(self, j: int) -> float:
        return self.r1 if j == 1 else self.r2

    @property
    def min_radius(self) -> float:
        return min(self.r1, self.r2)

    @property
    def max_scale(self) -> float:
        return max(self.r1, self.r2, self.eps)

    def contains(self, j: int, x, margin: float = 0.0) -> bool:
        """Whether x lies strictly inside disk j (shrunk by ``margin``)."""
        x = np.asarray(x, dtype=float)
        c = self.center(j)
        return bool(np.hypot(x[..., 0] - c[0], x[..., 1] - c[1]) < self.radius(j) - margin)


@dataclass(frozen=True)
class FixedPoints:
    """The unique mutually inverse pair of the two disks, on the x2-axis.

    p1 > 0 > p2 are x2-coordinates; ``d`` is the square root of the quadratic
    discriminant entering the closed forms.
    """

    p1: float
    p2: float
    d: float

    @property
    def P1(self) -> np.ndarray:
        return np.array([0.0, self.p1])

    @property
    def P2(self) -> np.ndarray:
        return np.array([0.0, self.p2])


def _check_index(j: int) -> None:
    if j not in (1, 2):
        raise DomainError(f"disk index must be 1 or 2, got {j!r}")


def reflect(pair: DiskPair, j: int, x) -> np.ndarray:
    """Circle inversion of x in disk j: c + r^2 (x - c)/|x - c|^2.

    Boundary points are fixed; the center is sent to infinity
    (SingularityError).
    """
    _check_index(j)
    x = np.asarray(x, dtype=float)
    c = pair.center(j)
    d = x - c
    rho2 = float(d @ d)
    if rho2 == 0.0:
        raise SingularityError("reflection of the disk center is the point at infinity")
    return c + (pair.radius(j) ** 2 / rho2) * d


def fixed_points(pair: DiskPair) -> FixedPoints:
    """Exact closed-form roots of the fixed-point quadratic.

    Both points satisfy R_1(P1) = P2 and R_2(P2) = P1; p1 is always strictly
    greater than eps, so P1 is interior to disk 1 (and symmetrically for P2).
    """
    r1, r2, e = pair.r1, pair.r2, pair.eps
    d = math.sqrt(r1 * r2 * (r1 + r2) + (r1 * r1 + r2 * r2 + 3.0 * r1 * r2) * e
                  + 2.0 * (r1 + r2) * e * e + e ** 3)
    se = math.sqrt(e)
    denom = r1 + r2 + 2.0 * e
    p1 = se * (2.0 * d + se * (r1 - r2)) / denom
    p2 = -se * (2.0 * d - se * (r1 - r2)) / denom
    return FixedPoints(p1=p1, p2=p2, d=d)


def fixed_point_leading_order(pair: DiskPair) -> float:
    """Leading small-gap term 2 sqrt(r1 r2/(r1+r2)) sqrt(eps) of |p_j|."""
    return 2.0 * math.sqrt(pair.r1 * pair.r2 / (pair.r1 + pair.r2)) * math.sqrt(pair.eps)


def fixed_point_distances(pair: DiskPair, fp: FixedPoints | None = None) -> dict[tuple[int, int], float]:
    """Distances |p_i - c_j| from the collinear relations.

    Returns a dict keyed by (i, j) for point p_i and center c_j.
    """
    if fp is None:
        fp = fixed_points(pair)
    out = {}
    for i, p in ((1, fp.p1), (2, fp.p2)):
        out[(i, 1)] = pair.r1 + pair.eps - p
        out[(i, 2)] = p + pair.r2 + pair.eps
    return out


def boundary_offset(pair: DiskPair, j: int, x1) -> np.ndarray:
    """g_j(x1) = r_j - sqrt(r_j^2 - x1^2), the sagitta of arc j over the gap.

    Evaluated cancellation-free as x1^2 / (r_j + sqrt(r_j^2 - x1^2)).
    """
    _check_index(j)
    x1 = np.asarray(x1, dtype=float)
    r = pair.radius(j)
    if np.any(np.abs(x1) >= r):
        raise DomainError(f"|x1| must be < r_{j} = {r:g}")
    return x1 * x1 / (r + np.sqrt(r * r - x1 * x1))


def gap_width(pair: DiskPair, x1) -> np.ndarray | float:
    """Vertical distance delta(x1) = 2 eps + g1(x1) + g2(x1) between the arcs.

    Requires |x1| < min{r1, r2}; delta(0) = 2 eps exactly, delta is even and
    convex.
    """
    x1a = np.asarray(x1, dtype=float)
    if np.any(np.abs(x1a) >= pair.min_radius):
        raise DomainError(f"|x1| must be < min radius {pair.min_radius:g} to stay in the gap")
    val = 2.0 * pair.eps + boundary_offset(pair, 1, x1a) + boundary_offset(pair, 2, x1a)
    return float(val) if np.isscalar(x1) or val.ndim == 0 else val


def gap_arcs(pair: DiskPair, x1) -> tuple[np.ndarray, np.ndarray]:
    """x2-coordinates of the upper (disk 1) and lower (disk 2) arcs over x1."""
    top = pair.eps + boundary_offset(pair, 1, x1)
    bot = -(pair.eps + boundary_offset(pair, 2, x1))
    return top, bot


@dataclass(frozen=True)
class RegimeReport:
    """Advisory classification flags (the solver runs regardless)."""

    quasi_static: bool
    blowup_regime: bool
    mitigation_ok: bool
    k_scale: float          # k * max{r1, r2, eps}
    radius_gap_ratio: float  # min{r1, r2} / eps
    mitigation_margin: float  # k / sqrt(eps / min{r1, r2})


def regime_classify(pair: DiskPair, k: float) -> RegimeReport:
    """Classify (pair, k) against the quasi-static / blowup / mitigation
    thresholds."""
    if not (math.isfinite(k) and k > 0):
        raise DomainError(f"wavenumber must be positive, got {k!r}")
    k_scale = k * pair.max_scale
    ratio = pair.min_radius / pair.eps
    margin = k / math.sqrt(pair.eps / pair.min_radius)
    return RegimeReport(
        quasi_static=k_scale <= QUASI_STATIC_MAX,
        blowup_regime=ratio >= BLOWUP_MIN_RATIO,
        mitigation_ok=margin >= MITIGATION_FACTOR,
        k_scale=k_scale,
        radius_gap_ratio=ratio,
        mitigation_margin=margin,
    )
