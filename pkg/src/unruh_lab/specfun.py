"""Special functions backing the Wightman spectral densities.

Provides the modified Bessel function of imaginary order K_{i nu}(x), the
continuous gamma-argument phase 2 Arg Gamma(i z), and the Planckian (Bose)
occupation factor.

K_{i nu}(x) is real and even in nu.  Two evaluation routes are used:

* integral representation K_{i nu}(x) = int_0^inf exp(-x cosh t) cos(nu t) dt,
  integrated adaptively after scaling out exp(-x).  Safe whenever nu is small:
  the oscillatory cancellation inflates relative error by ~exp(pi nu / 2).
* ascending-series route through Im I_{i nu}(x), scaled by exp(-pi nu / 2).
  Stable in the oscillatory regime where the integral representation loses
  all digits; used for x below the crossover pi nu / 2.

Both routes return a (mantissa, exponent) pair with K = mantissa * e^exponent
so that callers can fold the exponent into their own prefactors instead of
underflowing.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import special as sc

from .errors import (
    DomainError,
    PrecisionLossWarning,
    QuadratureError,
    SingularFrequencyError,
)
from .quadrature import adaptive_gl

# exp(-x (cosh t - 1)) is below double-precision underflow past this budget
_EXP_BUDGET = 745.0
_SMALL_X_WARN = 1e-6
# measured cancellation: the series loses ~exp(1.55 (x - nu)) digits (max
# term vs the Im part), the integral route ~exp(x (sqrt(1-r^2) + r asin r
# - 1)) with r = nu/x; the curves cross near x = 1.28 nu.  Small orders
# always take the integral route (loss capped at exp(pi nu / 2) there).
_INTEGRAL_NU_MAX = 4.0
_SERIES_X_PER_NU = 1.28
_SERIES_K_MAX = 500


def _use_integral_route(nu: float, x: float) -> bool:
    return nu <= _INTEGRAL_NU_MAX or x > _SERIES_X_PER_NU * nu


@dataclass(frozen=True)
class BesselEvalConfig:
    """Quadrature controls for the integral-representation route."""

    rel_tol: float = 1e-12
    # arccosh(1 + 745/x) <= 60 keeps the truncated tail negligible down
    # to x ~ 1e-23
    t_max_cap: float = 60.0
    max_subdivisions: int = 12

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")
        if not self.t_max_cap > 0:
            raise DomainError("t_max_cap must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


_DEFAULT_CFG = BesselEvalConfig()


def _k_integral_scaled(nu: float, x: float, cfg: BesselEvalConfig) -> tuple[float, float]:
    """exp(x) * K_{i nu}(x) by adaptive quadrature of exp(-x(cosh t - 1)) cos(nu t)."""
    t_max = min(float(np.arccosh(1.0 + _EXP_BUDGET / x)), cfg.t_max_cap)

    def integrand(t):
        return np.exp(-x * (np.cosh(t) - 1.0)) * np.cos(nu * t)

    # panel budget: one oscillation per panel plus resolution of the
    # exp(-x t^2 / 2) decay scale near t = 0
    n0 = max(8, math.ceil(nu * t_max / (2.0 * math.pi)),
             math.ceil(2.0 * t_max * math.sqrt(x)))
    val, _ = adaptive_gl(
        integrand, 0.0, t_max,
        rel_tol=cfg.rel_tol, n0=n0, max_doublings=cfg.max_subdivisions,
    )
    return val, -x


def _k_series_scaled(nu: float, x: float) -> tuple[float, float]:
    """exp(pi nu / 2) * K_{i nu}(x) through the ascending series of I_{i nu}.

    K_{i nu} = -pi Im I_{i nu} / sinh(pi nu); every factor is evaluated in
    scaled form so nothing overflows for large nu.
    """
    # a_0 = exp(-pi nu / 2) / Gamma(1 + i nu), |a_0| = O(nu^{-1/2})
    term = cmath.exp(-sc.loggamma(complex(1.0, nu)) - 0.5 * math.pi * nu)
    acc = term
    z = 0.25 * x * x
    for k in range(1, _SERIES_K_MAX + 1):
        term *= z / (k * complex(k, nu))
        acc += term
        if abs(term) <= 1e-18 * abs(acc) + 1e-300:
            break
    # I_{i nu}(x) e^{-pi nu/2} = (x/2)^{i nu} * acc
    im_scaled = (cmath.exp(1j * nu * math.log(0.5 * x)) * acc).imag
    mantissa = 2.0 * math.pi * im_scaled / math.expm1(-2.0 * math.pi * nu)
    return mantissa, -0.5 * math.pi * nu


def bessel_k_imag_order_scaled(
    nu: float, x: float, cfg: BesselEvalConfig | None = None
) -> tuple[float, float]:
    """K_{i nu}(x) as (mantissa, exponent) with K = mantissa * exp(exponent).

    The order is symmetrised (nu -> |nu|).  Raises DomainError for x <= 0;
    emits PrecisionLossWarning for x < 1e-6 where the oscillatory
    small-argument regime limits attainable accuracy.
    """
    cfg = cfg or _DEFAULT_CFG
    if not x > 0:
        raise DomainError(f"K_(i nu)(x) requires x > 0, got x = {x}")
    nu = abs(float(nu))
    x = float(x)
    if x < _SMALL_X_WARN:
        warnings.warn(
            f"K_(i nu) argument x = {x:g} < {_SMALL_X_WARN:g}: small-argument "
            "oscillatory regime, accuracy degrades",
            PrecisionLossWarning,
            stacklevel=2,
        )
    if _use_integral_route(nu, x):
        return _k_integral_scaled(nu, x, cfg)
    return _k_series_scaled(nu, x)


def _k_integral_scaled_batch(
    nu: np.ndarray, x: np.ndarray, cfg: BesselEvalConfig
) -> np.ndarray:
    """Integral-representation mantissas for arrays of (nu, x), shared t-grid.

    All points are integrated on the grid of the widest member; per-point
    convergence is tracked through the doubling refinement.
    """
    t_max = np.minimum(np.arccosh(1.0 + _EXP_BUDGET / x), cfg.t_max_cap)
    T = float(np.max(t_max))
    n = max(
        8,
        math.ceil(float(np.max(nu)) * T / (2.0 * math.pi)),
        math.ceil(2.0 * T * math.sqrt(float(np.max(x)))),
    )
    from .quadrature import _GL_NODES, _GL_WEIGHTS  # fixed 16-point rule

    def level(n_panels: int) -> tuple[np.ndarray, np.ndarray]:
        edges = np.linspace(0.0, T, n_panels + 1)
        mid = 0.5 * (edges[:-1] + edges[1:])
        half = 0.5 * (edges[1:] - edges[:-1])
        t = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
        w = (half[:, None] * np.broadcast_to(_GL_WEIGHTS, (n_panels, _GL_NODES.size))).ravel()
        ch = np.cosh(t) - 1.0
        # (n_points, n_t) integrand matrix
        mat = np.exp(-x[:, None] * ch[None, :]) * np.cos(nu[:, None] * t[None, :])
        return mat @ w, np.abs(mat) @ w

    prev, _ = level(n)
    for _ in range(cfg.max_subdivisions):
        n *= 2
        cur, cur_abs = level(n)
        diff = np.abs(cur - prev)
        # per-point: relative agreement, or pinned at the cancellation
        # noise floor of the |integrand| mass
        ok = (diff <= cfg.rel_tol * np.abs(cur)) | (diff <= 8e-16 * cur_abs)
        if ok.all():
            return cur
        prev = cur
    raise QuadratureError("batched Bessel quadrature failed to converge")


def _k_series_scaled_batch(nu: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Ascending-series mantissas (scale e^{-pi nu/2}) for arrays of (nu, x)."""
    term = np.exp(-sc.loggamma(1.0 + 1j * nu) - 0.5 * math.pi * nu)
    acc = term.copy()
    z = 0.25 * x * x
    active = np.ones(nu.shape, dtype=bool)
    for k in range(1, _SERIES_K_MAX + 1):
        term = term * (z / (k * (k + 1j * nu)))
        acc += term
        active = np.abs(term) > 1e-18 * np.abs(acc) + 1e-300
        if not active.any():
            break
    im_scaled = (np.exp(1j * nu * np.log(0.5 * x)) * acc).imag
    return 2.0 * math.pi * im_scaled / np.expm1(-2.0 * math.pi * nu)


def bessel_k_imag_order_scaled_batch(
    nu, x, cfg: BesselEvalConfig | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized ``bessel_k_imag_order_scaled`` over broadcastable arrays.

    Returns (mantissa, exponent) arrays with K = mantissa * exp(exponent).
    No small-argument warning is emitted here; callers on hot paths are
    expected to know their regime.
    """
    cfg = cfg or _DEFAULT_CFG
    nu_a, x_a = np.broadcast_arrays(
        np.abs(np.asarray(nu, dtype=float)), np.asarray(x, dtype=float)
    )
    if np.any(x_a <= 0.0):
        raise DomainError("K_(i nu)(x) requires x > 0")
    nu_a = nu_a.ravel().copy()
    x_flat = x_a.ravel()
    mant = np.empty_like(x_flat)
    expo = np.empty_like(x_flat)
    use_integral = (nu_a <= _INTEGRAL_NU_MAX) | (x_flat > _SERIES_X_PER_NU * nu_a)

    idx = np.nonzero(use_integral)[0]
    if idx.size:
        # bucket by decade of x so the shared t-grid stays economical
        decades = np.clip(np.floor(np.log10(x_flat[idx])), -12, 4).astype(int)
        for dec in np.unique(decades):
            sel = idx[decades == dec]
            mant[sel] = _k_integral_scaled_batch(nu_a[sel], x_flat[sel], cfg)
            expo[sel] = -x_flat[sel]
    idx = np.nonzero(~use_integral)[0]
    if idx.size:
        mant[idx] = _k_series_scaled_batch(nu_a[idx], x_flat[idx])
        expo[idx] = -0.5 * math.pi * nu_a[idx]
    return mant.reshape(x_a.shape), expo.reshape(x_a.shape)


def bessel_k_imag_order(nu: float, x: float, cfg: BesselEvalConfig | None = None) -> float:
    """Modified Bessel function K_{i nu}(x) for real order parameter nu and x > 0.

    Real-valued; underflows gracefully to 0.0 when the result is below the
    double-precision range.
    """
    mantissa, exponent = bessel_k_imag_order_scaled(nu, x, cfg)
    try:
        scale = math.exp(exponent)
    except OverflowError:  # exponent is never positive in practice
        return math.inf
    return mantissa * scale


def gamma_arg_phase(z: float) -> float:
    """Continuous phase 2 Arg Gamma(i z) for z > 0.

    Evaluated through the analytic continuation of log-Gamma, which is
    single-valued off the negative real axis, so no branch jumps occur
    along the positive imaginary axis.
    """
    if not z > 0:
        raise DomainError(f"gamma_arg_phase requires z > 0, got {z}")
    return 2.0 * complex(sc.loggamma(complex(0.0, z))).imag


def planck(omega: float, beta: float) -> float:
    """Planckian occupation 1 / (exp(beta omega) - 1) at inverse temperature beta.

    Stable for |beta omega| down to 1e-12 (expm1) and underflows cleanly to
    exp(-beta omega) for beta omega > 700.  Raises at beta omega = 0.
    """
    arg = beta * omega
    if arg == 0.0:
        raise SingularFrequencyError("Planck factor singular at beta*omega = 0")
    if arg > 700.0:
        return math.exp(-arg)
    return 1.0 / math.expm1(arg)
