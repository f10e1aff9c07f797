"""Fourier-space Wightman functions W(omega, beta) and commutator transforms.

Supported physical scenarios:

* ``inertial-thermal``: detector at rest in a KMS (thermal) state of a scalar
  field of mass m >= 0 with optional IR cutoff Lambda, in d in {1,2,3} spatial
  dimensions.  The commutator transform has a closed form and is independent
  of beta; the Wightman transform is assembled as -C * P(omega, beta).
* ``accelerated-vacuum``: uniformly accelerated detector in the Minkowski
  vacuum, beta = 2 pi / a.  Massless d in {1,3} reduces to the inertial
  closed forms; massive d = 1 has the Bessel closed form; d in {2,3} massive
  uses the radial mode integral over |k|.

An IR cutoff together with acceleration breaks stationarity; such scenarios
carry kms_flag = False and are rejected by the spectral operations.  The
position-space defect they produce is quantified by ``stationarity_defect``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy import special as sc

from .errors import (
    DomainError,
    QuadratureError,
    SingularFrequencyError,
    UnsupportedScenarioError,
)
from .quadrature import integrate_decaying_tail
from .specfun import (
    BesselEvalConfig,
    bessel_k_imag_order_scaled,
    bessel_k_imag_order_scaled_batch,
    planck,
)

INERTIAL = "inertial-thermal"
ACCELERATED = "accelerated-vacuum"

# |beta*omega| below this is treated as the omega -> 0 limit point
_ZERO_FREQ_TOL = 1e-10
_TINY = 1e-300


@dataclass(frozen=True)
class Scenario:
    """Which Wightman spectral function applies.

    motion: "inertial-thermal" or "accelerated-vacuum"
    d:      spatial dimension, 1, 2 or 3
    m:      field mass >= 0 (natural units)
    Lambda: IR momentum cutoff >= 0
    beta:   inverse KMS temperature > 0 (accelerated: beta = 2 pi / a)
    """

    motion: str
    d: int
    m: float = 0.0
    Lambda: float = 0.0
    beta: float = 1.0

    def __post_init__(self):
        if self.motion not in (INERTIAL, ACCELERATED):
            raise DomainError(f"unknown motion kind {self.motion!r}")
        if self.d not in (1, 2, 3):
            raise DomainError(f"spatial dimension must be 1, 2 or 3, got {self.d}")
        if self.m < 0:
            raise DomainError("mass must be >= 0")
        if self.Lambda < 0:
            raise DomainError("IR cutoff must be >= 0")
        if not self.beta > 0:
            raise DomainError("inverse KMS temperature must be > 0")

    @property
    def kms(self) -> bool:
        """KMS holds except for accelerated motion with a hard IR cutoff."""
        return self.motion == INERTIAL or self.Lambda == 0.0

    @property
    def acceleration(self) -> float:
        if self.motion != ACCELERATED:
            raise UnsupportedScenarioError("proper acceleration defined only for accelerated motion")
        return 2.0 * math.pi / self.beta

    @property
    def commutator_beta_independent(self) -> bool:
        """True when the trajectory (hence the commutator) does not see beta."""
        if self.motion == INERTIAL:
            return True
        return self.m == 0.0 and self.Lambda == 0.0 and self.d in (1, 3)

    def with_beta(self, beta: float) -> "Scenario":
        return replace(self, beta=beta)


@dataclass(frozen=True)
class SpectralDensity:
    """Evaluated spectral data at one frequency."""

    wightman_plus: float
    wightman_minus: float
    commutator: float
    kms_flag: bool


def commutator_ft_inertial_closed(omega: float, d: int, m: float, Lambda: float) -> float:
    """Closed-form commutator transform for a beta-independent trajectory.

    C(omega) = -pi^((2-d)/2) sgn(omega) / (2^(d-1) Gamma(d/2))
               * (omega^2 - m^2)^((d-2)/2) * Theta(|omega|-m) * Theta(|omega|-Lambda)

    Odd in omega; vanishes inside the gap |omega| < max(m, Lambda).
    """
    if d not in (1, 2, 3):
        raise DomainError(f"spatial dimension must be 1, 2 or 3, got {d}")
    a = abs(omega)
    if a <= m or a <= Lambda or a == 0.0:
        return 0.0
    disp = (omega - m) * (omega + m) if omega > 0 else (-omega - m) * (-omega + m)
    pref = math.pi ** (0.5 * (2 - d)) / (2 ** (d - 1) * sc.gamma(0.5 * d))
    return -math.copysign(pref * disp ** (0.5 * (d - 2)), omega)


def _massless_form(omega: float, beta: float, d: int, Lambda: float) -> float:
    """W for the massless beta-independent-commutator scenarios."""
    if abs(beta * omega) < _ZERO_FREQ_TOL:
        if d == 3 and Lambda == 0.0:
            # removable point of omega/(2 pi (e^{beta omega}-1))
            return 1.0 / (2.0 * math.pi * beta)
        if Lambda > 0.0:
            return 0.0
        raise SingularFrequencyError(
            f"massless d={d} Wightman transform diverges at omega = 0"
        )
    c = commutator_ft_inertial_closed(omega, d, 0.0, Lambda)
    if c == 0.0:
        return 0.0
    return -c * planck(omega, beta)


def _inertial_wightman(scn: Scenario, omega: float) -> float:
    if scn.m == 0.0:
        return _massless_form(omega, scn.beta, scn.d, scn.Lambda)
    c = commutator_ft_inertial_closed(omega, scn.d, scn.m, scn.Lambda)
    if c == 0.0:
        return 0.0
    return -c * planck(omega, scn.beta)


def _bessel_1d_wightman(scn: Scenario, omega: float, cfg: BesselEvalConfig | None) -> float:
    """W_1(omega, beta) = beta e^{-beta omega/2} K_{i beta omega/2pi}(beta m/2pi)^2 / 2 pi^2.

    Assembled with the scaled Bessel mantissa so that neither the Bose
    enhancement at omega < 0 nor the decay at omega > 0 over/underflows.
    """
    beta = scn.beta
    nu = beta * abs(omega) / (2.0 * math.pi)
    x = beta * scn.m / (2.0 * math.pi)
    mant, ex = bessel_k_imag_order_scaled(nu, x, cfg)
    expo = 2.0 * ex - 0.5 * beta * omega
    if expo > 700.0:  # cannot happen for scaled branches; guard anyway
        raise QuadratureError("Wightman exponent overflow")
    return (beta / (2.0 * math.pi ** 2)) * mant * mant * math.exp(expo)


def _radial_prefactor(d: int, beta: float) -> float:
    return beta / (2 ** (d - 1) * math.pi ** (0.5 * (d + 3)) * sc.gamma(0.5 * (d - 1)))


def _radial_wightman(scn: Scenario, omega: float, cfg: BesselEvalConfig | None) -> float:
    """Radial |k| integral for accelerated massive d >= 2."""
    beta, m, d = scn.beta, scn.m, scn.d
    nu = beta * abs(omega) / (2.0 * math.pi)
    shift = -0.5 * beta * omega

    def f(k):
        k = np.asarray(k, dtype=float)
        x = beta * np.hypot(m, k) / (2.0 * math.pi)
        mant, ex = bessel_k_imag_order_scaled_batch(np.full_like(x, nu), x, cfg)
        return k ** (d - 2) * mant * mant * np.exp(np.minimum(2.0 * ex + shift, 700.0))

    # decay scale of K^2 is pi/beta in k; oscillation rate <= 2 nu / max(k, m);
    # geometric segment growth tracks the exponential tail cheaply
    seg = math.pi / beta
    n0 = max(8, min(512, math.ceil(2.0 * nu * seg / (math.pi * max(m, 0.05 * seg)))))
    val, _ = integrate_decaying_tail(
        f, 0.0, seg, rel_tol=1e-10, tail_tol=1e-13, n0=n0, growth=1.3,
    )
    return _radial_prefactor(d, beta) * val


def wightman_ft(
    scenario: Scenario, omega: float, cfg: BesselEvalConfig | None = None
) -> float:
    """Fourier transform of the pulled-back Wightman function at ``omega``.

    Nonnegative for every supported KMS scenario.  Raises
    UnsupportedScenarioError for non-KMS combinations (accelerated motion
    with Lambda > 0, and the massless accelerated d = 2 corner which has no
    closed form here), SingularFrequencyError at non-removable poles.
    """
    if scenario.motion == INERTIAL:
        return _inertial_wightman(scenario, omega)
    if scenario.Lambda > 0.0:
        raise UnsupportedScenarioError(
            "accelerated motion with an IR cutoff is not stationary (no KMS "
            "spectral density); see stationarity_defect"
        )
    if scenario.m == 0.0:
        if scenario.d == 2:
            raise UnsupportedScenarioError(
                "massless accelerated d=2 spectral density not supported"
            )
        return _massless_form(omega, scenario.beta, scenario.d, 0.0)
    if scenario.d == 1:
        return _bessel_1d_wightman(scenario, omega, cfg)
    return _radial_wightman(scenario, omega, cfg)


def _commutator_closed_batch(omega: np.ndarray, d: int, m: float, lam: float) -> np.ndarray:
    absw = np.abs(omega)
    out = np.zeros_like(omega)
    live = (absw > m) & (absw > lam) & (absw > 0.0)
    if np.any(live):
        w = omega[live]
        disp = (np.abs(w) - m) * (np.abs(w) + m)
        pref = math.pi ** (0.5 * (2 - d)) / (2 ** (d - 1) * sc.gamma(0.5 * d))
        out[live] = -np.sign(w) * pref * disp ** (0.5 * (d - 2))
    return out


def _planck_batch(omega: np.ndarray, beta: float) -> np.ndarray:
    arg = beta * omega
    out = np.empty_like(arg)
    big = arg > 700.0
    out[big] = np.exp(-arg[big])
    out[~big] = 1.0 / np.expm1(arg[~big])
    return out


def wightman_ft_batch(
    scenario: Scenario, omega, cfg: BesselEvalConfig | None = None
) -> np.ndarray:
    """Vectorized ``wightman_ft`` over an array of frequencies.

    Closed forms and the d = 1 Bessel form evaluate fully vectorized; the
    radial d >= 2 integral falls back to a per-frequency loop.
    """
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    scn = scenario
    if scn.motion == ACCELERATED:
        if scn.Lambda > 0.0:
            raise UnsupportedScenarioError(
                "accelerated motion with an IR cutoff is not stationary"
            )
        if scn.m == 0.0 and scn.d == 2:
            raise UnsupportedScenarioError(
                "massless accelerated d=2 spectral density not supported"
            )
        if scn.m > 0.0 and scn.d == 1:
            beta = scn.beta
            nu = beta * np.abs(omega) / (2.0 * math.pi)
            x = np.full_like(omega, beta * scn.m / (2.0 * math.pi))
            mant, ex = bessel_k_imag_order_scaled_batch(nu, x, cfg)
            expo = 2.0 * ex - 0.5 * beta * omega
            return (beta / (2.0 * math.pi ** 2)) * mant * mant * np.exp(np.minimum(expo, 700.0))
        if scn.m > 0.0:
            return np.array([_radial_wightman(scn, w, cfg) for w in omega])
        # massless d in {1,3}: closed forms shared with the inertial case
    # closed-form assembly -C * P
    d, m, lam, beta = scn.d, scn.m, scn.Lambda, scn.beta
    near_zero = np.abs(beta * omega) < _ZERO_FREQ_TOL
    if np.any(near_zero) and m == 0.0 and lam == 0.0:
        if d != 3:
            raise SingularFrequencyError(
                f"massless d={d} Wightman transform diverges at omega = 0"
            )
    c = _commutator_closed_batch(omega, d, m, lam)
    out = np.zeros_like(omega)
    live = (c != 0.0) & ~near_zero
    out[live] = -c[live] * _planck_batch(omega[live], beta)
    if m == 0.0 and lam == 0.0 and d == 3:
        out[near_zero] = 1.0 / (2.0 * math.pi * beta)
    return out


def commutator_ft(
    scenario: Scenario, omega: float, cfg: BesselEvalConfig | None = None
) -> float:
    """C(omega) = W(omega) - W(-omega); odd in omega, omega * C <= 0."""
    return wightman_ft(scenario, omega, cfg) - wightman_ft(scenario, -omega, cfg)


def spectral_density(
    scenario: Scenario, omega: float, cfg: BesselEvalConfig | None = None
) -> SpectralDensity:
    wp = wightman_ft(scenario, omega, cfg)
    wm = wightman_ft(scenario, -omega, cfg)
    return SpectralDensity(
        wightman_plus=wp,
        wightman_minus=wm,
        commutator=wp - wm,
        kms_flag=scenario.kms,
    )


def detailed_balance_residual(
    scenario: Scenario, omega: float, cfg: BesselEvalConfig | None = None
) -> float:
    """|W(-omega) - e^{beta omega} W(omega)| / max(W(-omega), tiny).

    Evaluated in log space so the Bose enhancement cannot overflow.  Zero
    when both sides vanish (inside a spectral gap).  Rejects non-KMS
    scenarios.
    """
    if not scenario.kms:
        raise UnsupportedScenarioError("detailed balance applies to KMS scenarios only")
    wp = wightman_ft(scenario, omega, cfg)
    wm = wightman_ft(scenario, -omega, cfg)
    if wp == 0.0 and wm == 0.0:
        return 0.0
    if wp <= 0.0 or wm <= 0.0:
        return 1.0
    return abs(1.0 - math.exp(scenario.beta * omega + math.log(wp) - math.log(wm)))


# ---------------------------------------------------------------------------
# singular structure of W(omega), consumed by the response quadrature
# ---------------------------------------------------------------------------

POLE = "pole"
INV_SQRT = "inv_sqrt"
SQRT_KINK = "sqrt_kink"
JUMP = "jump"


def spectral_singularities(scenario: Scenario) -> list[tuple[float, str]]:
    """Frequencies where W(omega) is non-smooth, with their kind.

    "pole"      -- non-integrable divergence (massless d in {1,2} at 0)
    "inv_sqrt"  -- (omega^2-m^2)^{-1/2} edge (d=1 massive)
    "sqrt_kink" -- (omega^2-m^2)^{+1/2} edge (d=3 massive)
    "jump"      -- finite step (Theta cutoff edges, d=2 mass edge)
    """
    if scenario.motion == ACCELERATED and scenario.m > 0.0:
        return []  # Bessel forms are smooth in omega
    m, lam, d = scenario.m, scenario.Lambda, scenario.d
    out: list[tuple[float, str]] = []
    if m == 0.0 and lam == 0.0:
        if d in (1, 2):
            out.append((0.0, POLE))
        return out
    edge = max(m, lam)
    if lam > m:
        kind = JUMP
    else:
        kind = {1: INV_SQRT, 2: JUMP, 3: SQRT_KINK}[d]
    out.append((edge, kind))
    out.append((-edge, kind))
    return out


def phase_rate_hint(scenario: Scenario) -> float:
    """Upper estimate of |d/d omega| of the oscillation phase of W.

    The Bessel-form transforms oscillate in omega with phase roughly
    (beta omega / pi) log(beta m / 4 pi); closed forms do not oscillate.
    """
    if scenario.motion == ACCELERATED and scenario.m > 0.0:
        x_half = scenario.beta * scenario.m / (4.0 * math.pi)
        return (scenario.beta / math.pi) * abs(math.log(x_half))
    return 0.0


# ---------------------------------------------------------------------------
# Appendix: position-space stationarity defect of an IR cutoff
# ---------------------------------------------------------------------------

def _trajectory_point(a: float, tau: complex) -> tuple[complex, complex]:
    """(t, x) along the uniformly accelerated (or inertial) trajectory."""
    if a == 0.0:
        return tau, 0.0 + 0.0j
    return cmath.sinh(a * tau) / a, cmath.cosh(a * tau) / a


def _mode_integral(
    Lambda: float, m: float, dt: complex, dx: complex, rel_tol: float
) -> complex:
    """(1/4pi) int_{|k|>=Lambda} dk exp(-i(omega_k dt - k dx)) / omega_k.

    dt carries a negative imaginary part (the proper-time i-epsilon), which
    makes both k -> +-inf tails decay exponentially.
    """
    out = 0.0 + 0.0j
    for sign in (+1.0, -1.0):
        c = dt - sign * dx  # exponent ~ -i k c for k -> +inf
        decay = -c.imag
        if decay <= 0:
            raise QuadratureError("mode integral does not decay; regulator too weak")
        osc = abs(c.real) + m + 0.1
        seg = 2.0 * math.pi / osc

        def f_re(k, s=sign):
            w = np.sqrt(k * k + m * m)
            z = np.exp(-1j * (w * dt - s * k * dx)) / w
            return z.real

        def f_im(k, s=sign):
            w = np.sqrt(k * k + m * m)
            z = np.exp(-1j * (w * dt - s * k * dx)) / w
            return z.imag

        re, _ = integrate_decaying_tail(
            f_re, Lambda, seg, rel_tol=rel_tol, tail_tol=1e-13, scale_hint=1.0,
        )
        im, _ = integrate_decaying_tail(
            f_im, Lambda, seg, rel_tol=rel_tol, tail_tol=1e-13, scale_hint=1.0,
        )
        out += complex(re, im)
    return out / (4.0 * math.pi)


def _regulated_wightman(
    Lambda: float, a: float, m: float, tau: float, tau_p: float,
    eps: float, rel_tol: float,
) -> complex:
    t1, x1 = _trajectory_point(a, tau - 0.5j * eps)
    t2, x2 = _trajectory_point(a, tau_p + 0.5j * eps)
    return _mode_integral(Lambda, m, t1 - t2, x1 - x2, rel_tol)


def stationarity_defect(
    Lambda: float,
    a: float,
    m: float,
    delta_tau: float,
    tau_mid_1: float,
    tau_mid_2: float,
    eps_values: tuple[float, float, float] = (0.1, 0.05, 0.025),
    rel_tol: float = 1e-11,
) -> float:
    """|W(tau_1, tau_1') - W(tau_2, tau_2')| for equal proper-time separation.

    The pairs share delta_tau but sit at different midpoints; a nonzero
    defect witnesses loss of stationarity (and hence of KMS).  The Wightman
    boundary value is reached through a proper-time i-epsilon shift of the
    trajectory endpoints, Richardson-extrapolated over the halving
    ``eps_values``.  The defect vanishes (to quadrature accuracy) when
    Lambda = 0 or a = 0.
    """
    if Lambda < 0 or a < 0 or m < 0:
        raise DomainError("Lambda, a and m must all be >= 0")
    if m == 0.0 and Lambda == 0.0:
        raise DomainError("massless uncut 1+1D mode integral is IR divergent")

    def extrapolated(mid: float) -> complex:
        tau = mid + 0.5 * delta_tau
        tau_p = mid - 0.5 * delta_tau
        w = [
            _regulated_wightman(Lambda, a, m, tau, tau_p, eps, rel_tol)
            for eps in eps_values
        ]
        # two Richardson levels for the halving sequence (orders eps, eps^2)
        return (8.0 * w[2] - 6.0 * w[1] + w[0]) / 3.0

    return abs(extrapolated(tau_mid_1) - extrapolated(tau_mid_2))
