"""Anti-Unruh classification of the (Omega, sigma, T_KMS, m) parameter space.

Weak Anti-Unruh: the response function decreases as the KMS temperature
increases (d F / d beta > 0, equivalently d F / d T_KMS < 0).  Strong
Anti-Unruh: the effective EDR temperature decreases as the KMS temperature
increases (d beta_EDR / d beta < 0, equivalently d T_EDR / d T_KMS < 0).

Derivatives are central finite differences in beta with one Richardson
extrapolation level; cells whose derivative magnitude does not exceed ten
times its error estimate are labelled "unresolved" rather than classified
inside numerical noise.  Scans expose T_KMS = 1/beta as the user-facing
axis, with d/dT_KMS = -beta^2 d/dbeta.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from .errors import (
    DerivativeError,
    DomainError,
    EDRUndefinedError,
    QuadratureError,
    SingularFrequencyError,
    UnruhLabError,
)
from .response import QuadratureConfig, ResponseQuery, beta_edr, response_function
from .scenarios import Scenario, commutator_ft, wightman_ft
from .switching import SwitchingFunction

LABEL_WEAK = "weak"
LABEL_STRONG = "strong"
LABEL_BOTH = "both"
LABEL_NEITHER = "neither"
LABEL_UNRESOLVED = "unresolved"

# a derivative counts as resolved only beyond this multiple of its error
RESOLUTION_FACTOR = 10.0


@dataclass(frozen=True)
class StepControl:
    """Finite-difference step selection: h = max(rel_step * beta, min_step)."""

    rel_step: float = 1e-4
    min_step: float = 1e-6

    def step(self, beta: float) -> float:
        return max(self.rel_step * beta, self.min_step)


@dataclass(frozen=True)
class DerivativeEstimate:
    value: float
    error: float
    step: float


def _richardson(f: Callable[[float], float], beta: float, h: float) -> DerivativeEstimate:
    coarse = (f(beta + h) - f(beta - h)) / (2.0 * h)
    fine = (f(beta + 0.5 * h) - f(beta - 0.5 * h)) / h
    value = (4.0 * fine - coarse) / 3.0
    return DerivativeEstimate(value, abs(value - fine), h)


def _stabilised(est: DerivativeEstimate, scale: float) -> DerivativeEstimate:
    # "failed to stabilise three digits" relative to the derivative's
    # natural scale, not to an accidentally tiny value near a sign change
    floor = max(1e-3 * abs(est.value), 1e-7 * scale)
    if est.error > floor:
        raise DerivativeError(
            f"finite difference unstable: value {est.value:.3e}, "
            f"error {est.error:.3e}"
        )
    return est


def d_response_d_beta(
    q: ResponseQuery, step: StepControl | None = None
) -> DerivativeEstimate:
    """dF/dbeta at the query's scenario temperature.

    The beta dependence flows through the full spectral density (Bose
    factor and, for accelerated massive scenarios, the Bessel argument).
    """
    step = step or StepControl()
    h = step.step(q.scenario.beta)
    f = lambda b: response_function(q.with_beta(b)).value
    est = _richardson(f, q.scenario.beta, h)
    scale = abs(f(q.scenario.beta)) / q.scenario.beta + 1e-300
    return _stabilised(est, scale)


def d_beta_edr_d_beta(
    q: ResponseQuery, step: StepControl | None = None
) -> DerivativeEstimate:
    """d beta_EDR / d beta; identically 1 in the adiabatic KMS limit."""
    step = step or StepControl()
    h = step.step(q.scenario.beta)
    f = lambda b: beta_edr(q.with_beta(b))
    est = _richardson(f, q.scenario.beta, h)
    return _stabilised(est, 1.0)


def weak_necessary_condition(
    scenario: Scenario, omega: float, step: StepControl | None = None
) -> bool:
    """Can the weak Anti-Unruh condition possibly hold at this frequency?

    For beta-independent commutators this is omega * C(omega) > 0, which the
    sign structure of the spectral data rules out identically.  Otherwise it
    is d_beta (C * P) < 0, i.e. the Wightman transform must grow with beta
    somewhere; tested by finite differences of W (= -C * P).
    """
    if scenario.commutator_beta_independent:
        return omega * commutator_ft(scenario, omega) > 0.0
    step = step or StepControl()
    h = step.step(scenario.beta)
    f = lambda b: wightman_ft(scenario.with_beta(b), omega)
    est = _richardson(f, scenario.beta, h)
    return est.value > 0.0 and abs(est.value) > RESOLUTION_FACTOR * est.error


@dataclass(frozen=True)
class ScanSpec:
    """Rectangular grid over (Omega, sigma, T_KMS, m) for one scenario family."""

    motion: str
    d: int
    Lambda: float
    omegas: tuple[float, ...]
    sigmas: tuple[float, ...]
    t_kms: tuple[float, ...]
    masses: tuple[float, ...]
    switching: SwitchingFunction
    step: StepControl = field(default_factory=StepControl)
    quad: QuadratureConfig = field(default_factory=lambda: QuadratureConfig(rel_tol=1e-9))

    def __post_init__(self):
        for name, axis in (("omegas", self.omegas), ("t_kms", self.t_kms),
                           ("masses", self.masses)):
            if not axis:
                raise DomainError(f"empty scan axis {name!r}")
            if name != "masses" and any(v <= 0 for v in axis):
                raise DomainError(f"axis {name!r} must be strictly positive")
        if not self.sigmas or any(not (s > 0 or math.isinf(s)) for s in self.sigmas):
            raise DomainError("sigma axis must be positive (or inf)")

    def cells(self) -> Iterable[tuple[float, float, float, float]]:
        return product(self.omegas, self.sigmas, self.t_kms, self.masses)


@dataclass(frozen=True)
class CellResult:
    Omega: float
    sigma: float
    t_kms: float
    m: float
    dF_dT: float
    dTedr_dT: float
    label: str
    fd_step: float
    fd_error: float


@dataclass(frozen=True)
class RegionScan:
    spec: ScanSpec
    cells: tuple[CellResult, ...]

    def count(self, label: str) -> int:
        return sum(1 for c in self.cells if c.label == label)


def _classify_flags(value: float, error: float) -> str:
    """'yes' / 'no' / 'unresolved' for the negativity of one derivative."""
    if math.isnan(value):
        return LABEL_UNRESOLVED
    if value == 0.0 and error == 0.0:
        return "no"  # exactly flat (e.g. inside a spectral gap)
    if abs(value) < RESOLUTION_FACTOR * error:
        return LABEL_UNRESOLVED
    return "yes" if value < 0.0 else "no"


def _combine_labels(weak_flag: str, strong_flag: str) -> str:
    if weak_flag == "yes" and strong_flag == "yes":
        return LABEL_BOTH
    if weak_flag == "yes":
        return LABEL_WEAK
    if strong_flag == "yes":
        return LABEL_STRONG
    if weak_flag == "no" and strong_flag == "no":
        return LABEL_NEITHER
    return LABEL_UNRESOLVED


def _evaluate_cell(spec: ScanSpec, cell: tuple[float, float, float, float]) -> CellResult:
    Omega, sigma, t_kms, m = cell
    beta = 1.0 / t_kms
    scenario = Scenario(spec.motion, spec.d, m, spec.Lambda, beta)
    q = ResponseQuery(Omega, sigma, scenario, spec.switching, spec.quad)
    h = spec.step.step(beta)
    jac = beta * beta  # d/dT = -beta^2 d/dbeta

    dF_dT = math.nan
    err_F = math.inf
    try:
        est = d_response_d_beta(q, spec.step)
        dF_dT = -jac * est.value
        err_F = jac * est.error
    except (UnruhLabError, OverflowError):
        pass

    dTedr_dT = math.nan
    err_T = math.inf
    try:
        b_edr = beta_edr(q)
        est = d_beta_edr_d_beta(q, spec.step)
        scale = (beta / b_edr) ** 2
        dTedr_dT = scale * est.value
        err_T = scale * est.error
    except (UnruhLabError, OverflowError):
        pass

    label = _combine_labels(_classify_flags(dF_dT, err_F), _classify_flags(dTedr_dT, err_T))
    return CellResult(Omega, sigma, t_kms, m, dF_dT, dTedr_dT, label, h,
                      max(err_F if math.isfinite(err_F) else 0.0,
                          err_T if math.isfinite(err_T) else 0.0))


def worker_count() -> int:
    raw = os.environ.get("UNRUH_LAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def classify(spec: ScanSpec) -> RegionScan:
    """Label every grid cell; deterministic cell order regardless of workers."""
    cells = list(spec.cells())
    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _evaluate_cell(spec, c), cells))
    else:
        results = [_evaluate_cell(spec, c) for c in cells]
    return RegionScan(spec, tuple(results))


def _fmt(x: float) -> str:
    if math.isinf(x):
        return "inf"
    return f"{x:.17g}"


CSV_HEADER = "Omega,sigma,T_kms,m,dF_dT,dTedr_dT,label,fd_err"


def scan_to_csv(scan: RegionScan) -> str:
    """Deterministic CSV serialization of a region scan."""
    lines = [CSV_HEADER]
    for c in scan.cells:
        lines.append(
            ",".join([
                _fmt(c.Omega), _fmt(c.sigma), _fmt(c.t_kms), _fmt(c.m),
                _fmt(c.dF_dT), _fmt(c.dTedr_dT), c.label, _fmt(c.fd_error),
            ])
        )
    return "\n".join(lines) + "\n"
