"""Exterior Helmholtz solver for two disks with constant Dirichlet data.

Representation: the scattered field is a pair of truncated radiating
multipole series about the two centers,

    u - u^i = sum_n A_n H_n(k|x-c1|) e^{i n th1} + sum_n B_n H_n(k|x-c2|) e^{i n th2},

matched in the Fourier basis of each circle.  The opposite frame's outgoing
waves are re-expanded locally as regular waves through the addition theorem

    H_n(k|x-cs|) e^{i n th_s} = sum_m H_{n-m}(k|b|) e^{i(n-m) arg b} J_m(k|x-ct|) e^{i m th_t},

with b = ct - cs (valid since each circle lies inside the other frame's
convergence disk).  The unknown boundary constants lambda_j enter as bordered
unknowns closed by the boundary model: vanishing total flux per disk,
flux-proportional Dirichlet data (lambda_j = -tau/(k^2 pi r_j^2) * flux_j),
or lambda_j = 0 for perfect conductors.

Scaling: at quasi-static arguments H_n overflows and J_n underflows double
precision far below the truncation orders needed for nearly touching disks,
so the system is formulated in boundary-value normalization: the unknowns
are A~_n = A_n H_n(k r_1), B~_n = B_n H_n(k r_2), and every matrix entry is a
log-compensated product of scaled cylinder-function sequences.  This keeps
all entries O(1) and the system well conditioned at any truncation order.

Truncation: N starts at ``start_order`` and doubles until the measured
boundary residual (sup of |u - lambda_j| over 8N collocation points per
circle, via direct series evaluation) meets ``residual_target`` or N hits
``max_order``; the achieved residual is always attached.  Nearly touching
disks limit the convergence rate to (1 - O(sqrt(eps/r)))^N, so the smallest
gaps may finish at the cap with a warning; record-and-continue is the
intended failure policy for sweeps.
"""

from __future__ import annotations

import math
import warnings as _warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import lapack as _lapack
from scipy.linalg import lu_factor, lu_solve

from .errors import ConvergenceError, DomainError
from .geometry import DiskPair, FixedPoints, fixed_points, gap_arcs, regime_classify
from .incident import IncidentField
from .singular import h_k_gradient, h_k_values
from .specfun import besselj_scaled_seq, hankel1_scaled_seq

_I_POW = np.array([1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j])


def _ipow(n):
    """Exact i**n for integer arrays (table lookup, no phase drift)."""
    return _I_POW[np.mod(n, 4)]


def _order_sign(n):
    """(-1)^n factor mapping C_{|n|} to C_n for negative integer orders."""
    n = np.asarray(n)
    return np.where((n < 0) & (np.abs(n) % 2 == 1), -1.0, 1.0)


@dataclass(frozen=True)
class BoundaryModel:
    """One of the three degenerate boundary closures."""

    kind: str
    tau: float | None = None

    _KINDS = ("zero_flux", "flux_coupled", "pec")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise DomainError(f"unknown boundary model {self.kind!r}; expected one of {self._KINDS}")
        if self.kind == "flux_coupled":
            if self.tau is None or not (math.isfinite(self.tau) and self.tau > 0):
                raise DomainError("flux_coupled requires a positive material ratio tau")
        elif self.tau is not None:
            raise DomainError(f"tau is only meaningful for flux_coupled, got tau={self.tau!r} for {self.kind}")

    @classmethod
    def zero_flux(cls) -> "BoundaryModel":
        return cls(kind="zero_flux")

    @classmethod
    def flux_coupled(cls, tau: float) -> "BoundaryModel":
        return cls(kind="flux_coupled", tau=float(tau))

    @classmethod
    def pec(cls) -> "BoundaryModel":
        return cls(kind="pec")

    def label(self) -> str:
        if self.kind == "flux_coupled":
            return f"flux_coupled(tau={self.tau:g})"
        return self.kind


@dataclass(frozen=True)
class SolverOptions:
    residual_target: float = 1e-8
    start_order: int = 16
    max_order: int = 512
    condition_threshold: float = 1e12
    raise_on_nonconvergence: bool = False


class _ScaledSeq:
    """(mantissa, exponent) table of a cylinder-function sequence at one radius."""

    __slots__ = ("mant", "expo")

    def __init__(self, mant, expo):
        self.mant = mant[:, 0] if mant.ndim == 2 else mant
        self.expo = expo[:, 0] if expo.ndim == 2 else expo

    def value(self, n: int):
        return self.mant[n] * math.exp(self.expo[n])

    def ratio(self, n_num: int, n_den: int):
        """C_{n_num} / C_{n_den} without overflow."""
        return self.mant[n_num] / self.mant[n_den] * math.exp(self.expo[n_num] - self.expo[n_den])


@dataclass
class MultipoleSolution:
    """Immutable-after-construction solution of one scattering problem."""

    pair: DiskPair
    k: float
    model: BoundaryModel
    incident: IncidentField
    N: int
    lambda1: complex
    lambda2: complex
    boundary_residual: float
    condition_estimate: float
    warnings: tuple[str, ...]
    coeffs1_scaled: np.ndarray = field(repr=False)
    coeffs2_scaled: np.ndarray = field(repr=False)
    alpha0: tuple[complex, complex] = field(repr=False)
    _h1: _ScaledSeq = field(repr=False)
    _h2: _ScaledSeq = field(repr=False)
    _fp: FixedPoints = field(repr=False)

    @property
    def orders(self) -> np.ndarray:
        return np.arange(-self.N, self.N + 1)

    def _unscale(self, scaled: np.ndarray, h: _ScaledSeq) -> np.ndarray:
        na = np.abs(self.orders)
        sg = _order_sign(self.orders)
        with np.errstate(under="ignore"):
            return scaled / (sg * h.mant[na]) * np.exp(-h.expo[na])

    @property
    def coeffs1(self) -> np.ndarray:
        """Radiating coefficients A_n in frame c1 (high orders underflow to 0;
        field evaluation uses the scaled form throughout)."""
        return self._unscale(self.coeffs1_scaled, self._h1)

    @property
    def coeffs2(self) -> np.ndarray:
        return self._unscale(self.coeffs2_scaled, self._h2)

    @property
    def fixed_points(self) -> FixedPoints:
        return self._fp

    def lambda_of(self, j: int) -> complex:
        return self.lambda1 if j == 1 else self.lambda2

    # ------------------------------------------------------------------
    def _check_exterior(self, pts: np.ndarray, strict: bool) -> None:
        for j in (1, 2):
            c = self.pair.center(j)
            r = self.pair.radius(j)
            rho = np.hypot(pts[:, 0] - c[0], pts[:, 1] - c[1])
            bad = rho < r * (1.0 - 1e-12) if not strict else rho < r
            if np.any(bad):
                raise DomainError(f"evaluation point inside disk {j}")

    def _scattered(self, pts: np.ndarray, deriv: bool):
        """Scattered field (and optionally its gradient) at an (M, 2) array."""
        n = self.orders
        na = np.abs(n)
        k = self.k
        u = np.zeros(pts.shape[0], dtype=complex)
        gx = np.zeros(pts.shape[0], dtype=complex) if deriv else None
        gy = np.zeros(pts.shape[0], dtype=complex) if deriv else None
        for c, coef, own in ((self.pair.c1, self.coeffs1_scaled, self._h1),
                             (self.pair.c2, self.coeffs2_scaled, self._h2)):
            dx = pts[:, 0] - c[0]
            dy = pts[:, 1] - c[1]
            rho = np.hypot(dx, dy)
            th = np.arctan2(dy, dx)
            hm, he = hankel1_scaled_seq(self.N + 1, k * rho)
            with np.errstate(under="ignore"):
                ratio = hm[na] / own.mant[na][:, None] * np.exp(he[na] - own.expo[na][:, None])
                phase = np.exp(1j * np.outer(n, th))
                u += coef @ (ratio * phase)
                if deriv:
                    s_n = _order_sign(n)
                    s_p = _order_sign(n + 1)
                    s_m = _order_sign(n - 1)
                    rp = hm[np.abs(n + 1)] / own.mant[na][:, None] * np.exp(he[np.abs(n + 1)] - own.expo[na][:, None])
                    rp *= (s_p / s_n)[:, None]
                    rm = hm[np.abs(n - 1)] / own.mant[na][:, None] * np.exp(he[np.abs(n - 1)] - own.expo[na][:, None])
                    rm *= (s_m / s_n)[:, None]
                    dplus = -k * (coef @ (rp * np.exp(1j * np.outer(n + 1, th))))
                    dminus = k * (coef @ (rm * np.exp(1j * np.outer(n - 1, th))))
                    gx += 0.5 * (dplus + dminus)
                    gy += (dplus - dminus) / 2j
        return u, gx, gy

    def total_field(self, x) -> np.ndarray:
        """u = u^i + scattered at points x (shape (..., 2)); DomainError inside a disk."""
        pts = np.atleast_2d(np.asarray(x, dtype=float))
        self._check_exterior(pts, strict=False)
        u, _, _ = self._scattered(pts, deriv=False)
        out = u + self.incident.value(pts)
        return out if np.asarray(x).ndim > 1 else out[0]

    def total_gradient(self, x) -> np.ndarray:
        """(du/dx1, du/dx2) by term-by-term differentiation (no finite differences)."""
        pts = np.atleast_2d(np.asarray(x, dtype=float))
        self._check_exterior(pts, strict=False)
        _, gx, gy = self._scattered(pts, deriv=True)
        ix, iy = self.incident.gradient(pts)
        g = np.stack([gx + ix, gy + iy], axis=-1)
        return g if np.asarray(x).ndim > 1 else g[0]

    def total_field_and_gradient(self, x) -> tuple[np.ndarray, np.ndarray]:
        """(u, grad u) sharing one pass over the Hankel tables."""
        pts = np.atleast_2d(np.asarray(x, dtype=float))
        self._check_exterior(pts, strict=False)
        u, gx, gy = self._scattered(pts, deriv=True)
        u = u + self.incident.value(pts)
        ix, iy = self.incident.gradient(pts)
        return u, np.stack([gx + ix, gy + iy], axis=-1)


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------
def _translation_block(jm_t, je_t, hmL, heL, hm_s, he_s, N, conj_phase):
    """K[m, n] = J_m(k r_t) * i^{+-(n-m)} * H_{n-m}(k L) / H_n(k r_s), scaled.

    ``conj_phase`` selects i^{n-m} (source below target, b along +x2) or
    (-i)^{n-m} (the reverse translation).
    """
    n = np.arange(-N, N + 1)
    dif = n[None, :] - n[:, None]               # [m, n] = n - m
    da = np.abs(dif)
    na = np.abs(n)
    sgd = _order_sign(dif)
    sgn = _order_sign(n)
    phase = _ipow(dif) if not conj_phase else np.conj(_ipow(dif))
    with np.errstate(under="ignore"):
        mant = (jm_t[na] * sgn)[:, None] * (hmL[da] * sgd) * phase / (hm_s[na] * sgn)[None, :]
        return mant * np.exp((je_t[na])[:, None] + heL[da] - (he_s[na])[None, :])


def assemble_and_solve(pair: DiskPair, k: float, model: BoundaryModel,
                       incident: IncidentField, opts: SolverOptions | None = None) -> MultipoleSolution:
    """Solve the two-disk exterior problem under the given boundary model.

    Doubles the truncation order until the boundary residual target is met
    (see module docstring); on an unreachable target the best solution is
    returned with a warning attached, or ConvergenceError is raised when
    ``opts.raise_on_nonconvergence`` is set.
    """
    if opts is None:
        opts = SolverOptions()
    if not (math.isfinite(k) and k > 0):
        raise DomainError(f"wavenumber must be positive, got {k!r}")
    if abs(incident.k - k) > 1e-14 * max(1.0, k):
        raise DomainError(f"incident field wavenumber {incident.k} does not match solve wavenumber {k}")

    N = opts.start_order
    sol = None
    while True:
        sol = _solve_at_order(pair, k, model, incident, N, opts)
        if sol.boundary_residual <= opts.residual_target:
            return sol
        if N >= opts.max_order:
            msg = (f"residual target {opts.residual_target:g} not reached at max order "
                   f"{opts.max_order}: achieved {sol.boundary_residual:.3e}")
            if opts.raise_on_nonconvergence:
                raise ConvergenceError(msg, best=sol, residual=sol.boundary_residual)
            sol.warnings = sol.warnings + (msg,)
            return sol
        N = min(2 * N, opts.max_order)


def _solve_at_order(pair, k, model, incident, N, opts):
    r1, r2 = pair.r1, pair.r2
    L = r1 + r2 + 2.0 * pair.eps
    n = np.arange(-N, N + 1)
    na = np.abs(n)
    nn = 2 * N + 1
    m0 = N

    hm1, he1 = hankel1_scaled_seq(N + 1, k * r1)
    hm2, he2 = hankel1_scaled_seq(N + 1, k * r2)
    hmL, heL = hankel1_scaled_seq(2 * N, k * L)
    jm1, je1 = besselj_scaled_seq(N + 1, k * r1)
    jm2, je2 = besselj_scaled_seq(N + 1, k * r2)
    sq = lambda a: a[:, 0]
    hm1, he1, hm2, he2, hmL, heL = map(sq, (hm1, he1, hm2, he2, hmL, heL))
    jm1, je1, jm2, je2 = map(sq, (jm1, je1, jm2, je2))

    # b = c1 - c2 points along +x2 (angle pi/2) for source 2 -> target 1
    K21 = _translation_block(jm1, je1, hmL, heL, hm2, he2, N, conj_phase=False)
    K12 = _translation_block(jm2, je2, hmL, heL, hm1, he1, N, conj_phase=True)

    a1 = incident.regular_coefficients(pair.c1, N)
    a2 = incident.regular_coefficients(pair.c2, N)
    sgn = _order_sign(n)
    with np.errstate(under="ignore"):
        j_at_1 = jm1[na] * sgn * np.exp(je1[na])     # plain J_n(k r1), n = -N..N
        j_at_2 = jm2[na] * sgn * np.exp(je2[na])

    nl = 0 if model.kind == "pec" else 2
    size = 2 * nn + nl
    M = np.zeros((size, size), dtype=complex)
    rhs = np.zeros(size, dtype=complex)
    idx = np.arange(nn)
    M[idx, idx] = 1.0
    M[nn + idx, nn + idx] = 1.0
    M[0:nn, nn:2 * nn] = K21
    M[nn:2 * nn, 0:nn] = K12
    rhs[0:nn] = -j_at_1 * a1
    rhs[nn:2 * nn] = -j_at_2 * a2

    # translated n = 0 couplings used by the flux brackets:
    #   alpha_0^{(1)} = a1_0 + sum_n B~_n i^n H_n(kL)/H_n(k r2)
    with np.errstate(under="ignore"):
        t21 = _ipow(n) * (hmL[na] * sgn) / (hm2[na] * sgn) * np.exp(heL[na] - he2[na])
        t12 = np.conj(_ipow(n)) * (hmL[na] * sgn) / (hm1[na] * sgn) * np.exp(heL[na] - he1[na])
    j1r1 = jm1[1] * math.exp(je1[1])
    j1r2 = jm2[1] * math.exp(je2[1])
    h10_1 = hm1[1] / hm1[0] * math.exp(he1[1] - he1[0])
    h10_2 = hm2[1] / hm2[0] * math.exp(he2[1] - he2[0])

    if model.kind != "pec":
        M[m0, 2 * nn] = -1.0
        M[nn + m0, 2 * nn + 1] = -1.0
        brow1 = np.zeros(size, dtype=complex)
        brow1[nn:2 * nn] = j1r1 * t21
        brow1[m0] = h10_1
        brow2 = np.zeros(size, dtype=complex)
        brow2[0:nn] = j1r2 * t12
        brow2[nn + m0] = h10_2
        if model.kind == "zero_flux":
            M[2 * nn, :] = brow1
            rhs[2 * nn] = -j1r1 * a1[m0]
            M[2 * nn + 1, :] = brow2
            rhs[2 * nn + 1] = -j1r2 * a2[m0]
        else:  # flux_coupled: lambda_j = (2 tau/(k r_j)) * [alpha_0 J_1 + A~_0 H_1/H_0]
            f1 = 2.0 * model.tau / (k * r1)
            f2 = 2.0 * model.tau / (k * r2)
            M[2 * nn, :] = -f1 * brow1
            M[2 * nn, 2 * nn] += 1.0
            rhs[2 * nn] = f1 * j1r1 * a1[m0]
            M[2 * nn + 1, :] = -f2 * brow2
            M[2 * nn + 1, 2 * nn + 1] += 1.0
            rhs[2 * nn + 1] = f2 * j1r2 * a2[m0]

    lu, piv = lu_factor(M, check_finite=False)
    gecon = _lapack.zgecon
    rcond, _ = gecon(lu, np.linalg.norm(M, 1), norm="1")
    cond = math.inf if rcond == 0 else 1.0 / rcond
    z = lu_solve((lu, piv), rhs, check_finite=False)

    warn: tuple[str, ...] = ()
    if cond > opts.condition_threshold:
        warn = (f"linear system condition estimate {cond:.3e} exceeds {opts.condition_threshold:g}",)

    at1 = z[0:nn]
    at2 = z[nn:2 * nn]
    lam1 = complex(z[2 * nn]) if model.kind != "pec" else 0.0 + 0.0j
    lam2 = complex(z[2 * nn + 1]) if model.kind != "pec" else 0.0 + 0.0j
    alpha0_1 = complex(a1[m0] + t21 @ at2)
    alpha0_2 = complex(a2[m0] + t12 @ at1)

    sol = MultipoleSolution(
        pair=pair, k=k, model=model, incident=incident, N=N,
        lambda1=lam1, lambda2=lam2,
        boundary_residual=math.inf, condition_estimate=cond, warnings=warn,
        coeffs1_scaled=at1, coeffs2_scaled=at2,
        alpha0=(alpha0_1, alpha0_2),
        _h1=_ScaledSeq(hm1[:, None], he1[:, None]),
        _h2=_ScaledSeq(hm2[:, None], he2[:, None]),
        _fp=fixed_points(pair),
    )
    sol.boundary_residual = _measure_residual(sol)
    return sol


def _measure_residual(sol: MultipoleSolution) -> float:
    """Sup of |u - lambda_j| over 8N equispaced points per circle, by direct
    series evaluation (the truncated local re-expansion would hide exactly
    the unmatched modes)."""
    npts = max(256, 8 * sol.N)
    th = np.linspace(0.0, 2.0 * math.pi, npts, endpoint=False)
    worst = 0.0
    for j in (1, 2):
        c = sol.pair.center(j)
        r = sol.pair.radius(j)
        pts = np.stack([c[0] + r * np.cos(th), c[1] + r * np.sin(th)], axis=-1)
        vals = sol.total_field(pts)
        worst = max(worst, float(np.max(np.abs(vals - sol.lambda_of(j)))))
    return worst


# ---------------------------------------------------------------------------
# spec operations on a solution
# ---------------------------------------------------------------------------
def eval_total_field(sol: MultipoleSolution, x) -> complex:
    """Total field at one exterior point."""
    return complex(sol.total_field(np.asarray(x, dtype=float)))


def eval_gradient(sol: MultipoleSolution, x) -> np.ndarray:
    """Analytic field gradient at one exterior point, shape (2,) complex."""
    return sol.total_gradient(np.asarray(x, dtype=float))


def boundary_flux(sol: MultipoleSolution, j: int, method: str = "spectral",
                  n_points: int = 4096) -> complex:
    """Total flux of u through circle j with the outward normal.

    ``spectral`` uses the n = 0 Fourier mode of the local expansion exactly;
    ``trapezoid`` integrates the series gradient (cross-check path).
    """
    if j not in (1, 2):
        raise DomainError("disk index must be 1 or 2")
    k = sol.k
    r = sol.pair.radius(j)
    if method == "trapezoid":
        c = sol.pair.center(j)
        th = np.linspace(0.0, 2.0 * math.pi, n_points, endpoint=False)
        pts = np.stack([c[0] + r * np.cos(th), c[1] + r * np.sin(th)], axis=-1)
        g = sol.total_gradient(pts)
        dnu = g[:, 0] * np.cos(th) + g[:, 1] * np.sin(th)
        return complex(np.sum(dnu) * (2.0 * math.pi * r / n_points))
    if method != "spectral":
        raise DomainError(f"unknown flux method {method!r}")
    own = sol._h1 if j == 1 else sol._h2
    jm, je = besselj_scaled_seq(1, k * r)
    j1 = jm[1, 0] * math.exp(je[1, 0])
    at0 = sol.coeffs1_scaled[sol.N] if j == 1 else sol.coeffs2_scaled[sol.N]
    bracket = sol.alpha0[j - 1] * j1 + at0 * own.ratio(1, 0)
    return complex(-2.0 * math.pi * r * k * bracket)


def reciprocity_defect(sol: MultipoleSolution, n_points: int = 2048) -> complex:
    """Defect of the exact two-disk reciprocity identity.

    With nu the outward normal of the disks,

        sum_j contour_j [ dh_k/dnu * u - du/dnu * h_k ] ds  =  u^i(P1) - u^i(P2),

    where P1, P2 are the fixed points (this orientation makes the identity
    hold exactly; flipping nu flips the right-hand side's sign).  Returns
    LHS - RHS, which vanishes up to truncation and quadrature error.
    """
    pair, k = sol.pair, sol.k
    fp = sol.fixed_points
    total = 0.0 + 0.0j
    for j in (1, 2):
        c = pair.center(j)
        r = pair.radius(j)
        th = np.linspace(0.0, 2.0 * math.pi, n_points, endpoint=False)
        pts = np.stack([c[0] + r * np.cos(th), c[1] + r * np.sin(th)], axis=-1)
        nu = np.stack([np.cos(th), np.sin(th)], axis=-1)
        u, g = sol.total_field_and_gradient(pts)
        du = g[:, 0] * nu[:, 0] + g[:, 1] * nu[:, 1]
        h = h_k_values(pair, k, pts, fp)
        gh = h_k_gradient(pair, k, pts, fp)
        dh = gh[:, 0] * nu[:, 0] + gh[:, 1] * nu[:, 1]
        total += np.sum(dh * u - du * h) * (2.0 * math.pi * r / n_points)
    rhs = complex(sol.incident.value(fp.P1) - sol.incident.value(fp.P2))
    return complex(total) - rhs


def max_gap_gradient(sol: MultipoleSolution, n_segment: int = 65, n_arc: int = 33,
                     n_curves: int = 9, refine_rounds: int = 8) -> tuple[float, np.ndarray]:
    """Sup of |grad u| over the gap region and where it is attained.

    Samples the gap segment {(0, t): |t| <= eps} plus offset curves spanning
    the gap neighborhood |x1| < min(r1, r2)/2, then refines around the best
    point with shrinking local grids.  Deterministic sampling throughout.
    """
    pair = sol.pair
    eps = pair.eps
    r0 = pair.min_radius / 2.0
    t = np.linspace(-eps, eps, n_segment)
    cand = [np.stack([np.zeros_like(t), t], axis=-1)]
    x1 = np.linspace(-r0, r0, n_arc) * 0.999
    top, bot = gap_arcs(pair, x1)
    for f in np.linspace(0.06, 0.94, n_curves):
        cand.append(np.stack([x1, bot + f * (top - bot)], axis=-1))
    pts = np.concatenate(cand, axis=0)
    g = sol.total_gradient(pts)
    mag = np.hypot(np.abs(g[:, 0]), np.abs(g[:, 1]))
    i = int(np.argmax(mag))
    best, val = pts[i], float(mag[i])

    h = max(eps, r0 / n_arc)
    for _ in range(refine_rounds):
        xs = best[0] + np.linspace(-h, h, 9)
        ys = best[1] + np.linspace(-h, h, 9)
        X, Y = np.meshgrid(xs, ys)
        Q = np.stack([X.ravel(), Y.ravel()], axis=-1)
        inside_band = np.abs(Q[:, 0]) < r0
        Qx = np.clip(Q[:, 0], -r0 * 0.999, r0 * 0.999)
        top_q, bot_q = gap_arcs(pair, Qx)
        ok = inside_band & (Q[:, 1] <= top_q) & (Q[:, 1] >= bot_q)
        Q = Q[ok]
        if Q.shape[0] == 0:
            break
        gq = sol.total_gradient(Q)
        mq = np.hypot(np.abs(gq[:, 0]), np.abs(gq[:, 1]))
        jbest = int(np.argmax(mq))
        if mq[jbest] > val:
            val = float(mq[jbest])
            best = Q[jbest]
        h /= 3.0
    return val, best


def solution_regime(sol: MultipoleSolution):
    return regime_classify(sol.pair, sol.k)
