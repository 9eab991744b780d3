"""Incident fields: entire solutions of the Helmholtz equation.

Three kinds are supported:

* ``plane_wave``:  A exp(i k d.x) for a unit direction d,
* ``bessel_mode``: a_n J_n(k|x|) exp(i n theta) about the origin,
* ``sinusoid``:    (a/k) sin(k x.d), the combination whose gap derivative is
  independent of k (it tends to the linear potential a x.d as k -> 0).

Each kind knows its exact point values, gradients, regular (Bessel) expansion
coefficients about an arbitrary center, and the derivative along x2 at the
gap midpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .specfun import besselj_seq

_I_POW = np.array([1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j])  # i**n by n mod 4


def _ipow(n):
    return _I_POW[np.mod(n, 4)]


def _signed_j(seq: np.ndarray, n) -> np.ndarray:
    """J_n from a 0..nmax table, n possibly negative (J_{-n} = (-1)^n J_n)."""
    n = np.asarray(n)
    a = np.abs(n)
    sg = np.where((n < 0) & (a % 2 == 1), -1.0, 1.0)
    return sg * seq[a]


@dataclass(frozen=True)
class IncidentField:
    kind: str
    k: float
    amplitude: complex = 1.0 + 0.0j
    direction: tuple[float, float] = (0.0, 1.0)
    mode: int = 0

    def __post_init__(self):
        if self.kind not in ("plane_wave", "bessel_mode", "sinusoid"):
            raise DomainError(f"unknown incident field kind {self.kind!r}")
        if not (math.isfinite(self.k) and self.k > 0):
            raise DomainError(f"wavenumber must be positive, got {self.k!r}")
        if self.kind != "bessel_mode":
            dx, dy = self.direction
            norm = math.hypot(dx, dy)
            if abs(norm - 1.0) > 1e-12:
                if norm == 0.0:
                    raise DomainError("direction must be a nonzero vector")
                object.__setattr__(self, "direction", (dx / norm, dy / norm))
        if self.kind == "sinusoid" and abs(complex(self.amplitude).imag) > 0:
            raise DomainError("sinusoid amplitude must be real")

    # -- constructors ------------------------------------------------------
    @classmethod
    def plane_wave(cls, k: float, direction=(0.0, 1.0), amplitude=1.0) -> "IncidentField":
        return cls(kind="plane_wave", k=k, amplitude=complex(amplitude), direction=tuple(direction))

    @classmethod
    def bessel_mode(cls, k: float, n: int, a_n=1.0) -> "IncidentField":
        return cls(kind="bessel_mode", k=k, amplitude=complex(a_n), mode=int(n))

    @classmethod
    def sinusoid(cls, k: float, amplitude=1.0, direction=(0.0, 1.0)) -> "IncidentField":
        return cls(kind="sinusoid", k=k, amplitude=complex(amplitude), direction=tuple(direction))

    # -- evaluation --------------------------------------------------------
    def value(self, x) -> np.ndarray:
        """u^i at points x, shape (..., 2) -> complex array of shape (...)."""
        x = np.asarray(x, dtype=float)
        k = self.k
        if self.kind == "plane_wave":
            d = self.direction
            return self.amplitude * np.exp(1j * k * (x[..., 0] * d[0] + x[..., 1] * d[1]))
        if self.kind == "sinusoid":
            d = self.direction
            return (self.amplitude / k) * np.sin(k * (x[..., 0] * d[0] + x[..., 1] * d[1])) + 0.0j
        rho = np.hypot(x[..., 0], x[..., 1])
        th = np.arctan2(x[..., 1], x[..., 0])
        n = self.mode
        flat = np.atleast_1d(rho).ravel()
        jn = np.array([besselj_seq(abs(n), k * r)[abs(n)] if r > 0 else (1.0 if n == 0 else 0.0)
                       for r in flat]).reshape(np.shape(rho))
        if n < 0 and abs(n) % 2 == 1:
            jn = -jn
        return self.amplitude * jn * np.exp(1j * n * th)

    def gradient(self, x) -> tuple[np.ndarray, np.ndarray]:
        """(du/dx1, du/dx2) at points x, exact analytic forms."""
        x = np.asarray(x, dtype=float)
        k = self.k
        if self.kind == "plane_wave":
            d = self.direction
            g = self.amplitude * 1j * k * np.exp(1j * k * (x[..., 0] * d[0] + x[..., 1] * d[1]))
            return g * d[0], g * d[1]
        if self.kind == "sinusoid":
            d = self.direction
            g = self.amplitude * np.cos(k * (x[..., 0] * d[0] + x[..., 1] * d[1])) + 0.0j
            return g * d[0], g * d[1]
        # bessel mode: ladder identities (d_x +- i d_y) C_n e^{in th} = -+ k C_{n+-1} e^{i(n+-1) th}
        rho = np.hypot(x[..., 0], x[..., 1])
        th = np.arctan2(x[..., 1], x[..., 0])
        n = self.mode
        na = abs(n)
        flat = np.atleast_1d(rho).ravel()
        tab = np.array([besselj_seq(na + 1, k * r) if r > 0 else
                        np.eye(na + 2)[0] for r in flat])  # row: J_0..J_{na+1} (origin limit)
        shape = np.shape(rho)
        jm = _signed_j(tab.T, n - 1).reshape(shape)
        jp = _signed_j(tab.T, n + 1).reshape(shape)
        ep = np.exp(1j * (n + 1) * th)
        em = np.exp(1j * (n - 1) * th)
        dplus = -k * jp * ep          # (d_x + i d_y)
        dminus = k * jm * em          # (d_x - i d_y)
        gx = 0.5 * (dplus + dminus) * self.amplitude
        gy = (dplus - dminus) / 2j * self.amplitude
        return gx, gy

    def gap_derivative(self) -> complex:
        """Exact du^i/dx2 at the origin (the gap midpoint)."""
        if self.kind == "plane_wave":
            return self.amplitude * 1j * self.k * self.direction[1]
        if self.kind == "sinusoid":
            return self.amplitude * self.direction[1]
        if abs(self.mode) == 1:
            return self.amplitude * 0.5j * self.k
        return 0.0 + 0.0j

    # -- expansion about a center -----------------------------------------
    def regular_coefficients(self, center, nmax: int) -> np.ndarray:
        """Coefficients a_m, m = -nmax..nmax, of u^i = sum a_m J_m(k rho) e^{im theta}
        about ``center`` (rho, theta local polar coordinates)."""
        c = np.asarray(center, dtype=float)
        k = self.k
        m = np.arange(-nmax, nmax + 1)
        if self.kind == "plane_wave":
            return self._plane_coeffs(k, c, m, self.direction, self.amplitude)
        if self.kind == "sinusoid":
            d = self.direction
            plus = self._plane_coeffs(k, c, m, d, self.amplitude / self.k)
            minus = self._plane_coeffs(k, c, m, (-d[0], -d[1]), self.amplitude / self.k)
            return (plus - minus) / 2j
        # bessel mode: regular-to-regular translation with b = center - origin
        n = self.mode
        b = math.hypot(c[0], c[1])
        if b == 0.0:
            out = np.zeros(2 * nmax + 1, dtype=complex)
            if abs(n) <= nmax:
                out[n + nmax] = self.amplitude
            return out
        thb = math.atan2(c[1], c[0])
        dif = n - m
        tab = besselj_seq(int(np.max(np.abs(dif))), k * b)
        return self.amplitude * _signed_j(tab, dif) * np.exp(1j * dif * thb)

    @staticmethod
    def _plane_coeffs(k, c, m, d, amp) -> np.ndarray:
        # Jacobi-Anger about c: A e^{ik d.x} = A e^{ik d.c} sum_m i^m e^{-im th_d} J_m(k rho) e^{im th}
        thd = math.atan2(d[1], d[0])
        return amp * np.exp(1j * k * (d[0] * c[0] + d[1] * c[1])) * _ipow(m) * np.exp(-1j * m * thd)

    def label(self) -> str:
        """Short human-readable tag used in sweep reports."""
        if self.kind == "plane_wave":
            return f"plane_wave(d=({self.direction[0]:g};{self.direction[1]:g}))"
        if self.kind == "sinusoid":
            return f"sinusoid(a={self.amplitude.real:g};d=({self.direction[0]:g};{self.direction[1]:g}))"
        return f"bessel_mode(n={self.mode};a={self.amplitude:g})"
