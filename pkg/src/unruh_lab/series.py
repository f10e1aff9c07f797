"""Long-interaction-time series machinery for the massless KMS scenario.

For an inertial detector in a massless d = 3 thermal state the response
function admits the expansion

    F(Omega, sigma, beta) = W(Omega) + sum_{k>=1} ||chi^(k)||_2^2
                            * W^(2k)(Omega) / (2k)! * sigma^{-2k},

convergent for band-limited windows with support A <= 1 inside the
convergence radius w_c = sigma Omega sqrt(1 + (2 pi / beta Omega)^2).  The
even derivatives of W are taken by Chebyshev spectral differentiation on a
safety interval well inside the distance to the nearest Bose pole; nested
finite differences would lose every digit past order ~3.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as ncheb

from .errors import (
    DerivativeError,
    DomainError,
    SeriesConvergenceError,
    ValidityWarning,
)
from .switching import SwitchingFunction

# trailing Chebyshev coefficients below this relative level are rounding
# noise; differentiating them 2k times would amplify it catastrophically
_CHOP_REL = 1e-14
_DECAY_REL = 1e-8


@dataclass(frozen=True)
class SeriesConfig:
    k_max: int = 8
    deriv_method: str = "chebyshev-spectral"
    cheb_points: int = 64
    radius_safety: float = 0.5

    def __post_init__(self):
        if self.k_max < 0:
            raise DomainError("k_max must be >= 0")
        if not 0.0 < self.radius_safety < 1.0:
            raise DomainError("radius_safety must lie in (0, 1)")
        if self.deriv_method != "chebyshev-spectral":
            raise DomainError(f"unknown derivative method {self.deriv_method!r}")
        if self.cheb_points < 8:
            raise DomainError("cheb_points must be >= 8")


def massless_wightman_d3(omega, beta: float):
    """omega / (2 pi (e^{beta omega} - 1)), analytic across omega = 0."""
    w = np.asarray(omega, dtype=float)
    out = np.empty_like(w)
    tiny = np.abs(beta * w) < 1e-12
    out[tiny] = 1.0 / (2.0 * math.pi * beta)
    out[~tiny] = w[~tiny] / (2.0 * math.pi * np.expm1(beta * w[~tiny]))
    return out


def convergence_radius_massless(Omega: float, sigma: float, beta: float) -> float:
    """w_c = sigma Omega sqrt(1 + (2 pi / beta Omega)^2).

    Distance (in the scaled integration variable) from the expansion centre
    to the nearest Bose pole of the massless KMS transform.
    """
    if not (Omega > 0 and sigma > 0 and beta > 0):
        raise DomainError("convergence radius needs Omega, sigma, beta > 0")
    return sigma * Omega * math.sqrt(1.0 + (2.0 * math.pi / (beta * Omega)) ** 2)


def _chebyshev_even_derivatives(
    f, center: float, radius: float, orders: list[int], n_points: int
) -> dict[int, float]:
    """Derivatives of f at ``center`` from a chopped Chebyshev interpolant."""
    domain = [center - radius, center + radius]
    poly = ncheb.Chebyshev.interpolate(f, n_points - 1, domain=domain)
    coef = poly.coef.copy()
    top = np.max(np.abs(coef))
    tail = np.max(np.abs(coef[-max(4, n_points // 4):]))
    if tail > _DECAY_REL * top:
        raise DerivativeError(
            "Chebyshev coefficients fail to decay "
            f"(tail/top = {tail / top:.2e}); derivatives unstable"
        )
    keep = np.nonzero(np.abs(coef) > _CHOP_REL * top)[0]
    poly = ncheb.Chebyshev(coef[: keep[-1] + 1], domain=domain)
    out: dict[int, float] = {}
    deriv = poly
    last = 0
    for order in sorted(orders):
        deriv = deriv.deriv(order - last)
        last = order
        out[order] = float(deriv(center))
    return out


def response_series(
    Omega: float,
    sigma: float,
    beta: float,
    switching: SwitchingFunction,
    cfg: SeriesConfig | None = None,
    enforce_gate: bool = True,
) -> float:
    """Truncated long-time series for the massless inertial d = 3 response.

    Requires a band-limited window with A <= 1 inside the convergence
    radius; ``enforce_gate=False`` skips the check (used to demonstrate
    divergence outside the proven region, never in production paths).
    """
    cfg = cfg or SeriesConfig()
    if not getattr(switching, "supports_series", False):
        raise SeriesConvergenceError(
            f"series mode needs a band-limited window, got {switching.family!r}"
        )
    A = switching.A
    if enforce_gate:
        if A > 1.0:
            raise SeriesConvergenceError(
                f"series convergence is proven only for A <= 1 (A = {A:g})"
            )
        w_c = convergence_radius_massless(abs(Omega), sigma, beta)
        if w_c <= A:
            raise SeriesConvergenceError(
                f"convergence radius {w_c:g} does not exceed the Fourier "
                f"support A = {A:g}"
            )
    total = float(massless_wightman_d3(np.array([Omega]), beta)[0])
    if cfg.k_max == 0:
        return total
    radius = cfg.radius_safety * min(
        convergence_radius_massless(abs(Omega), sigma, beta) / sigma, abs(Omega)
    )
    derivs = _chebyshev_even_derivatives(
        lambda w: massless_wightman_d3(w, beta),
        Omega,
        radius,
        [2 * k for k in range(1, cfg.k_max + 1)],
        cfg.cheb_points,
    )
    for k in range(1, cfg.k_max + 1):
        total += (
            switching.derivative_norm_sq(k)
            * derivs[2 * k]
            / math.factorial(2 * k)
            * sigma ** (-2 * k)
        )
    return total


def beta_edr_expansion(
    Omega: float, sigma: float, beta: float, switching: SwitchingFunction
) -> float:
    """Next-to-leading-order effective inverse EDR temperature,

        beta_EDR ~ beta [1 - (||chi'||^2 / 12)(1 - (beta Omega)^2 / 60)
                         (beta / sigma)^2].

    Exact limit beta at sigma = inf; validity guard (beta/sigma)^2 <= 0.1
    and beta Omega <= 1 (warning outside).
    """
    if math.isinf(sigma):
        return beta
    if not (Omega > 0 and sigma > 0 and beta > 0):
        raise DomainError("expansion needs Omega, sigma, beta > 0")
    ratio_sq = (beta / sigma) ** 2
    if ratio_sq > 0.1 or beta * Omega > 1.0:
        warnings.warn(
            f"beta_EDR expansion outside its regime: (beta/sigma)^2 = "
            f"{ratio_sq:.3g}, beta*Omega = {beta * Omega:.3g}",
            ValidityWarning,
            stacklevel=2,
        )
    chi1 = switching.derivative_norm_sq(1)
    return beta * (1.0 - (chi1 / 12.0) * (1.0 - (beta * Omega) ** 2 / 60.0) * ratio_sq)
