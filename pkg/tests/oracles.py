"""Independent reference implementations used to freeze expected values.

Deliberately disjoint from the library's evaluation paths: Bessel references
come from arbitrary-precision quadrature of the defining integral (mpmath),
the gamma phase from a Stirling-series log-gamma with recurrence shift, and
the response reference from the position-space Wightman function on the
trajectory, integrated with QUADPACK.
"""

from __future__ import annotations

import cmath
import math

import mpmath as mp
import numpy as np
from scipy import integrate
from scipy.interpolate import CubicSpline
from scipy.special import j0, y0


def bessel_k_imag_reference(nu: float, x: float, dps: int = 40) -> float:
    """High-precision quadrature of int_0^inf exp(-x cosh t) cos(nu t) dt."""
    with mp.workdps(dps):
        nu_m, x_m = mp.mpf(nu), mp.mpf(x)
        t_max = mp.acosh(1 + (mp.mpf(10) * dps) / x_m)
        f = lambda t: mp.exp(-x_m * mp.cosh(t)) * mp.cos(nu_m * t)
        # split at half-periods of the cosine so tanh-sinh sees smooth pieces
        if nu > 0:
            half = mp.pi / nu_m
            pts = [mp.mpf(0)]
            while pts[-1] < t_max:
                pts.append(min(pts[-1] + half, t_max))
        else:
            pts = [mp.mpf(0), t_max]
        val = mp.quad(f, pts)
        return float(val)


_BERNOULLI = (
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6,
)


def loggamma_stirling(z: complex) -> complex:
    """log Gamma(z) by recurrence shift plus the Stirling asymptotic series."""
    w = complex(z)
    acc = 0.0 + 0.0j
    while abs(w) < 12.0:
        acc -= cmath.log(w)
        w += 1.0
    s = (w - 0.5) * cmath.log(w) - w + 0.5 * math.log(2.0 * math.pi)
    for n, b in enumerate(_BERNOULLI, start=1):
        s += b / ((2 * n) * (2 * n - 1) * w ** (2 * n - 1))
    return s + acc


def gamma_arg_phase_reference(z: float) -> float:
    return 2.0 * loggamma_stirling(complex(0.0, z)).imag


def wightman_position_space(delta: float, beta: float, m: float) -> complex:
    """1+1D massive-vacuum Wightman function pulled back on the uniformly
    accelerated trajectory with a = 2 pi / beta, at proper-time separation
    delta (boundary value; valid for delta != 0)."""
    y = (beta * m / math.pi) * abs(math.sinh(math.pi * delta / beta))
    return complex(-0.25 * y0(y), -0.25 * math.copysign(1.0, delta) * j0(y))


def _autocorrelation_spline(chi, v_max: float, support: float = 9.0):
    """Cubic spline of rho(v) = int chi(u) chi(u - v) du on [0, v_max]."""
    trapezoid = getattr(np, "trapezoid", np.trapz)
    v_grid = np.linspace(0.0, v_max, 2200)
    u = np.linspace(-support, support + v_max, 6000)
    chi_u = chi(u)
    vals = np.empty_like(v_grid)
    for i, v in enumerate(v_grid):
        vals[i] = trapezoid(chi_u * chi(u - v), u)
    return CubicSpline(v_grid, vals)


def response_time_domain(
    Omega: float,
    sigma: float,
    beta: float,
    m: float,
    chi=None,
    rel_tol: float = 1e-9,
) -> float:
    """Time-domain response oracle for the accelerated massive 1+1D scenario.

    F = int dDelta rho(Delta/sigma) W(Delta) exp(-i Omega Delta), reduced to
    twice the real part over Delta > 0, with W the position-space Wightman
    function above and rho the numerically computed window autocorrelation.
    """
    if chi is None:
        chi = lambda u: math.pi ** -0.25 * np.exp(-0.5 * np.asarray(u) ** 2)
    L = 12.5 * sigma
    rho = _autocorrelation_spline(chi, 13.0)

    def f(d):
        w = wightman_position_space(d, beta, m)
        return 2.0 * float(rho(d / sigma)) * (
            w.real * math.cos(Omega * d) + w.imag * math.sin(Omega * d)
        )

    # geometric segments absorb the log singularity at Delta -> 0; width is
    # capped to ~60 oscillation periods so QUADPACK converges; terminate once
    # the window has buried the Wightman envelope
    total = 0.0
    lo = 1e-12
    while lo < L:
        rate = m * math.cosh(math.pi * lo / beta) + abs(Omega) + 1.0
        width = min(max(0.6 * lo, 1e-12), 2.0 * math.pi * 60.0 / rate)
        hi = min(lo + width, L)
        val, _ = integrate.quad(f, lo, hi, limit=400, epsabs=1e-14, epsrel=rel_tol)
        total += val
        y_hi = (beta * m / math.pi) * math.sinh(math.pi * hi / beta)
        env = 0.25 * math.sqrt(2.0 / (math.pi * max(y_hi, 1e-2)))
        if hi > 4.0 * sigma and float(rho(min(hi / sigma, 12.9))) * env * beta \
                < 1e-17 * max(abs(total), 1e-30):
            break
        lo = hi
    return total
