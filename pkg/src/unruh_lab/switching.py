"""Normalized switching windows chi(tau/sigma) and their Fourier-side data.

Every family is L2-normalized, ||chi||_2 = 1, equivalently
(1/2pi) int |chi~(w)|^2 dw = 1.  The response quadrature consumes
|chi~(w)|^2 and a truncation half-width; the long-interaction series
machinery consumes the squared derivative norms

    ||chi^(k)||_2^2 = (1/2pi) int w^{2k} |chi~(w)|^2 dw.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as sc

from .errors import DomainError, SeriesConvergenceError
from .quadrature import adaptive_gl

GAUSSIAN = "gaussian"
BAND_LIMITED = "band-limited"
TABULATED = "user-tabulated"


class SwitchingFunction:
    """Base interface; concrete families override the evaluation hooks."""

    family: str = "abstract"
    supports_series: bool = False

    def chi(self, u):
        raise NotImplementedError

    def chi_tilde(self, omega_bar):
        raise NotImplementedError

    def chi_tilde_sq(self, omega_bar):
        ct = self.chi_tilde(omega_bar)
        return np.abs(ct) ** 2

    def derivative_norm_sq(self, k: int) -> float:
        raise NotImplementedError

    @property
    def fourier_truncation(self) -> float:
        """Half-width of the omega-bar integration window for the response."""
        raise NotImplementedError


class GaussianSwitching(SwitchingFunction):
    """chi(u) = pi^{-1/4} exp(-u^2/2); chi~(w) = sqrt(2 pi) pi^{-1/4} exp(-w^2/2)."""

    family = GAUSSIAN

    # |chi~|^2 < 4e-44 outside |w| <= 10: tail negligible at any tolerance used
    _TRUNCATION = 10.0

    def chi(self, u):
        return math.pi ** -0.25 * np.exp(-0.5 * np.asarray(u, dtype=float) ** 2)

    def chi_tilde(self, omega_bar):
        w = np.asarray(omega_bar, dtype=float)
        return math.sqrt(2.0 * math.pi) * math.pi ** -0.25 * np.exp(-0.5 * w * w)

    def derivative_norm_sq(self, k: int) -> float:
        # (1/2pi) int w^{2k} |chi~|^2 dw = Gamma(k + 1/2) / sqrt(pi)
        if k < 0:
            raise DomainError("derivative order must be >= 0")
        log_val = sc.gammaln(k + 0.5) - 0.5 * math.log(math.pi)
        if log_val > 700.0:
            raise OverflowError(f"||chi^({k})||^2 exceeds float range")
        return float(math.exp(log_val))

    @property
    def fourier_truncation(self) -> float:
        return self._TRUNCATION


class BandLimitedSwitching(SwitchingFunction):
    """Fourier transform compactly supported on [-A, A].

    The default flat profile chi~ = sqrt(pi/A) gives the sinc-type window
    chi(u) = sin(A u) / (sqrt(pi A) u); a custom nonnegative profile may be
    supplied (it is renormalized to unit L2 norm) for bound-checking tests.
    """

    family = BAND_LIMITED
    supports_series = True

    def __init__(self, A: float = 1.0, fourier_profile=None):
        if not A > 0:
            raise DomainError("Fourier support half-width A must be > 0")
        self.A = float(A)
        if fourier_profile is None:
            self._profile = None
        else:
            # normalize: (1/2pi) int |profile|^2 = 1 on [-A, A]
            raw = lambda w: np.asarray(fourier_profile(w), dtype=float)
            norm_sq, _ = adaptive_gl(lambda w: raw(w) ** 2, -self.A, self.A,
                                     rel_tol=1e-13, n0=16)
            scale = math.sqrt(2.0 * math.pi / norm_sq)
            self._profile = lambda w: scale * raw(w)
        grid = np.linspace(-self.A, self.A, 4001)
        prof_sq = self.chi_tilde_sq(grid)
        self.X_inf = float(np.min(prof_sq))
        self.X_sup = float(np.max(prof_sq))

    def chi(self, u):
        u = np.asarray(u, dtype=float)
        if self._profile is None:
            out = np.empty_like(u)
            small = np.abs(u) < 1e-8
            out[small] = math.sqrt(self.A / math.pi)
            us = u[~small]
            out[~small] = np.sin(self.A * us) / (math.sqrt(math.pi * self.A) * us)
            return out
        # inverse transform of the custom profile (chi real: profile even)
        def point(x):
            val, _ = adaptive_gl(
                lambda w: self._profile(w) * np.cos(w * x),
                -self.A, self.A, rel_tol=1e-11, n0=16,
            )
            return val / (2.0 * math.pi)
        return np.array([point(x) for x in np.atleast_1d(u)])

    def chi_tilde(self, omega_bar):
        w = np.asarray(omega_bar, dtype=float)
        if self._profile is None:
            return np.where(np.abs(w) <= self.A, math.sqrt(math.pi / self.A), 0.0)
        return np.where(np.abs(w) <= self.A, self._profile(w), 0.0)

    def derivative_norm_sq(self, k: int) -> float:
        if k < 0:
            raise DomainError("derivative order must be >= 0")
        if self._profile is None:
            log_val = 2 * k * math.log(self.A) - math.log(2 * k + 1)
            if log_val > 700.0:
                raise OverflowError(f"||chi^({k})||^2 exceeds float range")
            return self.A ** (2 * k) / (2 * k + 1)
        val, _ = adaptive_gl(
            lambda w: w ** (2 * k) * self.chi_tilde_sq(w),
            -self.A, self.A, rel_tol=1e-12, n0=32,
        )
        return val / (2.0 * math.pi)

    @property
    def fourier_truncation(self) -> float:
        return self.A


class TabulatedSwitching(SwitchingFunction):
    """Window given by samples on a uniform grid; L2-normalized on input.

    chi~ is evaluated by trapezoidal Fourier sums, which are spectrally
    accurate for smooth windows decaying inside the tabulated range.
    Excluded from series-mode computations (no exact moments).
    """

    family = TABULATED

    def __init__(self, u_grid, values):
        u = np.asarray(u_grid, dtype=float)
        v = np.asarray(values, dtype=float)
        if u.ndim != 1 or u.size < 8 or u.shape != v.shape:
            raise DomainError("need matching 1-d grids with >= 8 samples")
        du = np.diff(u)
        if not np.allclose(du, du[0], rtol=1e-9):
            raise DomainError("tabulated switching requires a uniform grid")
        self._u = u
        self._du = float(du[0])
        norm = math.sqrt(float(np.sum(v * v) * self._du))
        if norm == 0.0:
            raise DomainError("tabulated switching is identically zero")
        self._v = v / norm

    def chi(self, u):
        return np.interp(np.asarray(u, dtype=float), self._u, self._v,
                         left=0.0, right=0.0)

    def chi_tilde(self, omega_bar):
        w = np.atleast_1d(np.asarray(omega_bar, dtype=float))
        phase = np.exp(-1j * w[:, None] * self._u[None, :])
        return (phase @ self._v) * self._du

    def derivative_norm_sq(self, k: int) -> float:
        if k < 0:
            raise DomainError("derivative order must be >= 0")
        w_max = self.fourier_truncation * (1.0 + 0.5 * k)
        val, _ = adaptive_gl(
            lambda w: w ** (2 * k) * np.abs(self.chi_tilde(w)) ** 2,
            -w_max, w_max, rel_tol=1e-9, n0=64,
        )
        return val / (2.0 * math.pi)

    @property
    def fourier_truncation(self) -> float:
        # Nyquist limit of the tabulation
        return math.pi / self._du


def gaussian_fourier(omega_bar):
    """Fourier transform of the normalized Gaussian window."""
    return GaussianSwitching().chi_tilde(omega_bar)


def derivative_norm(sw: SwitchingFunction, k: int) -> float:
    """Squared L2 norm of the k-th derivative of the window; k = 0 gives 1."""
    return sw.derivative_norm_sq(k)


def moment_bounds(sw: SwitchingFunction, k: int) -> tuple[float, float]:
    """Bracketing bounds for int_{-A}^{A} w^{2k} |chi~|^2 dw.

    lower = 2 A^{2k+1} X_inf / (2k+1), upper = 2 A^{2k+1} X_sup / (2k+1),
    where X_inf, X_sup are the extrema of |chi~|^2 on its compact support.
    Only defined for the band-limited family.
    """
    if not isinstance(sw, BandLimitedSwitching):
        raise SeriesConvergenceError("moment bounds require a band-limited window")
    if k < 0:
        raise DomainError("moment order must be >= 0")
    A = sw.A
    factor = 2.0 * A ** (2 * k + 1) / (2 * k + 1)
    return factor * sw.X_inf, factor * sw.X_sup


def make_switching(family: str, A: float = 1.0) -> SwitchingFunction:
    """Factory used by the CLI/service configuration keys."""
    key = family.strip().lower()
    if key in ("gaussian", "gauss"):
        return GaussianSwitching()
    if key in ("band-limited", "bandlimited", "band_limited", "sinc"):
        return BandLimitedSwitching(A)
    raise DomainError(f"unknown switching family {family!r}")
