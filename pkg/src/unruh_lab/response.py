"""Detector response function F(Omega, sigma, beta) and derived quantities.

F is the switching-weighted spectral integral

    F(Omega, sigma) = (1/2pi) int dw |chi~(w)|^2 W(Omega + w/sigma),

evaluated by adaptive panel quadrature with the window's truncation range,
split at the spectral edges of W and transformed at square-root edges.  The
sigma -> infinity limit returns W(Omega) directly.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    DomainError,
    EDRUndefinedError,
    PerturbativityWarning,
    QuadratureError,
    SingularFrequencyError,
    UnsupportedScenarioError,
)
from .quadrature import integrate_segments, split_interval
from .scenarios import (
    INV_SQRT,
    JUMP,
    POLE,
    SQRT_KINK,
    Scenario,
    phase_rate_hint,
    spectral_singularities,
    wightman_ft,
    wightman_ft_batch,
)
from .specfun import BesselEvalConfig
from .switching import SwitchingFunction

_EDR_FLOOR = 1e-300


@dataclass(frozen=True)
class QuadratureConfig:
    """Controls for the omega-bar quadrature of the response integral."""

    rel_tol: float = 1e-10
    max_doublings: int = 16
    bessel: BesselEvalConfig = field(default_factory=BesselEvalConfig)

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")


@dataclass(frozen=True)
class ResponseQuery:
    """One response-function evaluation request.

    Omega:  detector gap; the sign selects excitation (+) vs deexcitation (-).
    sigma:  interaction timescale > 0, or math.inf for the adiabatic limit.
    """

    Omega: float
    sigma: float
    scenario: Scenario
    switching: SwitchingFunction
    quad: QuadratureConfig = field(default_factory=QuadratureConfig)

    def __post_init__(self):
        if not (self.sigma > 0 or math.isinf(self.sigma)):
            raise DomainError("sigma must be positive or infinite")

    def with_beta(self, beta: float) -> "ResponseQuery":
        return replace(self, scenario=self.scenario.with_beta(beta))

    def with_omega(self, omega: float) -> "ResponseQuery":
        return replace(self, Omega=omega)


@dataclass(frozen=True)
class DetectorCoupling:
    """Coupling strength lambda and monopole matrix element |<e|mu(0)|g>|."""

    lam: float
    mu_matrix_elem: float = 1.0

    def __post_init__(self):
        if self.lam < 0 or self.mu_matrix_elem < 0:
            raise DomainError("coupling data must be >= 0")


@dataclass(frozen=True)
class ResponseResult:
    value: float
    error_estimate: float
    method: str


def _response_segments(q: ResponseQuery) -> tuple[list, int]:
    """Segment list in omega-bar with sqrt transforms, plus a node hint."""
    L = q.switching.fourier_truncation
    sigma = q.sigma
    breakpoints: list[float] = []
    sqrt_points: set[float] = set()
    for omega_s, kind in spectral_singularities(q.scenario):
        wbar = sigma * (omega_s - q.Omega)
        if kind == POLE:
            if -L - 1e-12 <= wbar <= L + 1e-12:
                raise SingularFrequencyError(
                    "response integrand crosses a non-integrable spectral pole "
                    f"(omega = {omega_s:g}); the massless d in {{1,2}} transform "
                    "diverges at omega = 0"
                )
            continue
        if -L < wbar < L:
            breakpoints.append(wbar)
            if kind in (INV_SQRT, SQRT_KINK):
                sqrt_points.add(wbar)
            elif kind != JUMP:
                raise DomainError(f"unknown singularity kind {kind!r}")
    segments = split_interval(-L, L, breakpoints, sqrt_points)
    rate = phase_rate_hint(q.scenario) / sigma  # phase per unit omega-bar
    n0 = max(8, min(4096, math.ceil(rate * 2 * L / (2.0 * math.pi))))
    return segments, n0


def response_function(q: ResponseQuery) -> ResponseResult:
    """Evaluate F for the query; nonnegative, with a quadrature error estimate.

    sigma = inf returns W(Omega) exactly (adiabatic limit).  Raises for
    non-KMS scenarios, at non-integrable poles, and on quadrature failure.
    """
    if not q.scenario.kms:
        raise UnsupportedScenarioError("response function requires a KMS scenario")
    if math.isinf(q.sigma):
        val = wightman_ft(q.scenario, q.Omega, q.quad.bessel)
        return ResponseResult(val, 1e-12 * abs(val), "limit")
    segments, n0 = _response_segments(q)
    scn, sigma = q.scenario, q.sigma

    def integrand(wbar):
        wbar = np.asarray(wbar, dtype=float)
        w = wightman_ft_batch(scn, q.Omega + wbar / sigma, q.quad.bessel)
        return q.switching.chi_tilde_sq(wbar) * w / (2.0 * math.pi)

    val, err = integrate_segments(
        integrand, segments,
        rel_tol=q.quad.rel_tol, n0=n0,
        max_doublings=q.quad.max_doublings, confirmations=2,
    )
    if val < 0.0:
        if -val <= max(10.0 * err, 1e-13):
            val = 0.0
        else:
            raise QuadratureError(f"response came out negative: {val:g} (err {err:g})")
    return ResponseResult(val, err + 1e-12 * val, "quadrature")


def transition_probability(
    q: ResponseQuery, c: DetectorCoupling, excitation: bool = True
) -> float:
    """Leading-order P+- = lambda^2 |<e|mu|g>|^2 sigma F(+-Omega, sigma)."""
    if math.isinf(q.sigma):
        raise DomainError("transition probability needs a finite interaction time")
    gap = q.Omega if excitation else -q.Omega
    f = response_function(q.with_omega(gap)).value
    p = c.lam ** 2 * c.mu_matrix_elem ** 2 * q.sigma * f
    if p > 0.1:
        warnings.warn(
            f"P = {p:.3g} > 0.1 strains leading-order perturbation theory",
            PerturbativityWarning,
            stacklevel=2,
        )
    return p


def edr_ratio(q: ResponseQuery) -> float:
    """Excitation-to-deexcitation ratio R = F(Omega, sigma) / F(-Omega, sigma)."""
    f_plus = response_function(q).value
    f_minus = response_function(q.with_omega(-q.Omega)).value
    if not f_minus > _EDR_FLOOR:
        raise EDRUndefinedError(
            f"deexcitation response {f_minus:g} below numerical floor"
        )
    return f_plus / f_minus


def beta_edr(q: ResponseQuery) -> float:
    """Effective inverse EDR temperature -log(R)/Omega.

    Equals the scenario's beta exactly in the sigma -> infinity KMS limit.
    """
    if q.Omega == 0.0:
        raise DomainError("beta_EDR undefined at Omega = 0")
    r = edr_ratio(q)
    if not r > 0.0:
        raise EDRUndefinedError("EDR ratio must be positive")
    return -math.log(r) / q.Omega
