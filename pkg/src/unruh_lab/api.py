"""Request/response models and handlers shared by the service and the CLI.

The CLI is a thin client of this layer: it translates flags into the same
pydantic models the HTTP service accepts and dispatches to the handlers
in-process (or over HTTP when pointed at a server).
"""

from __future__ import annotations

import math
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from . import figures, verify
from .antiunruh import ScanSpec, StepControl, classify, scan_to_csv
from .errors import UnsupportedScenarioError
from .response import QuadratureConfig, ResponseQuery, response_function
from .scenarios import ACCELERATED, INERTIAL, Scenario, wightman_ft
from .series import SeriesConfig, response_series
from .asymptotics import MassRegime, response_large_mass, response_small_mass, validity_region
from .switching import SwitchingFunction, make_switching

MOTION_ALIASES = {
    "inertial": INERTIAL,
    "inertial-thermal": INERTIAL,
    "accelerated": ACCELERATED,
    "accelerated-vacuum": ACCELERATED,
}


class ScenarioModel(BaseModel):
    motion: str = "inertial"
    d: int = 3
    m: float = 0.0
    lambda_ir: float = Field(default=0.0, description="IR momentum cutoff")
    beta: Optional[float] = None
    t_kms: Optional[float] = None

    @field_validator("motion")
    @classmethod
    def _known_motion(cls, v: str) -> str:
        if v not in MOTION_ALIASES:
            raise ValueError(f"motion must be one of {sorted(MOTION_ALIASES)}")
        return v

    @model_validator(mode="after")
    def _one_temperature(self):
        if (self.beta is None) == (self.t_kms is None):
            raise ValueError("give exactly one of beta / t_kms")
        return self

    def resolved_beta(self) -> float:
        return self.beta if self.beta is not None else 1.0 / self.t_kms

    def to_scenario(self) -> Scenario:
        return Scenario(
            MOTION_ALIASES[self.motion], self.d, self.m, self.lambda_ir,
            self.resolved_beta(),
        )


class SwitchingModel(BaseModel):
    family: Literal["gaussian", "bandlimited"] = "gaussian"
    A: float = 1.0

    def to_switching(self) -> SwitchingFunction:
        return make_switching(self.family, self.A)


class EvalRequest(BaseModel):
    scenario: ScenarioModel
    switching: SwitchingModel = SwitchingModel()
    omega: float
    sigma: float = math.inf
    method: Literal["auto", "quadrature", "series", "asymptotic", "limit"] = "auto"
    rel_tol: float = 1e-10

    @field_validator("sigma", mode="before")
    @classmethod
    def _parse_sigma(cls, v):
        if isinstance(v, str) and v.strip().lower() in ("inf", "infinity"):
            return math.inf
        return v


class EvalResponse(BaseModel):
    inputs: dict
    value: float
    error_estimate: float
    method: str


class AxisModel(BaseModel):
    start: float
    stop: float
    count: int = Field(ge=1)

    def values(self) -> tuple[float, ...]:
        if self.count == 1:
            return (self.start,)
        step = (self.stop - self.start) / (self.count - 1)
        return tuple(self.start + i * step for i in range(self.count))


class ScanRequest(BaseModel):
    scenario: ScenarioModel = ScenarioModel(motion="inertial", d=3, t_kms=1.0)
    switching: SwitchingModel = SwitchingModel()
    omega: AxisModel
    t_kms: AxisModel
    sigma: list[float] = Field(default=[math.inf], min_length=1)
    m: list[float] = Field(default=[0.0], min_length=1)
    fd_rel_step: float = 1e-4

    @field_validator("sigma", mode="before")
    @classmethod
    def _parse_sigmas(cls, v):
        if isinstance(v, list):
            return [math.inf if isinstance(s, str) and s.strip().lower() in ("inf", "infinity")
                    else s for s in v]
        return v


class ScanResponse(BaseModel):
    csv: str
    counts: dict[str, int]


class FigureRequest(BaseModel):
    name: Literal[figures.PRESETS]


class FigureResponse(BaseModel):
    name: str
    csv: str


class VerifyCheck(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[VerifyCheck]
    report: str


def _json_safe(obj):
    """Replace non-finite floats so strict JSON serializers accept the echo."""
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return "inf" if obj > 0 else ("-inf" if obj < 0 else "nan")
    return obj


def _eval_asymptotic(scenario: Scenario, omega: float, sigma: float) -> tuple[float, str]:
    if not (scenario.motion == ACCELERATED and scenario.d == 1 and scenario.m > 0):
        raise UnsupportedScenarioError(
            "asymptotic method applies to the accelerated massive 1+1D scenario"
        )
    if not math.isinf(sigma):
        raise UnsupportedScenarioError("asymptotic method is an adiabatic (sigma=inf) form")
    region = validity_region(omega, scenario.beta, scenario.m)
    if region in (MassRegime.LARGE, MassRegime.BOTH):
        return response_large_mass(omega, scenario.beta, scenario.m), "asymptotic"
    if region is MassRegime.SMALL:
        return response_small_mass(omega, scenario.beta, scenario.m), "asymptotic"
    raise UnsupportedScenarioError(
        "parameters sit in neither asymptotic validity region"
    )


def handle_eval(req: EvalRequest) -> EvalResponse:
    scenario = req.scenario.to_scenario()
    sw = req.switching.to_switching()
    method = req.method
    if method == "auto":
        method = "limit" if math.isinf(req.sigma) else "quadrature"

    if method == "limit":
        if not math.isinf(req.sigma):
            raise UnsupportedScenarioError("method 'limit' requires sigma = inf")
        value = wightman_ft(scenario, req.omega)
        err = 1e-12 * abs(value)
        used = "limit"
    elif method == "quadrature":
        q = ResponseQuery(req.omega, req.sigma, scenario, sw,
                          QuadratureConfig(rel_tol=req.rel_tol))
        r = response_function(q)
        value, err, used = r.value, r.error_estimate, r.method
    elif method == "series":
        if not (scenario.motion == INERTIAL and scenario.d == 3
                and scenario.m == 0.0 and scenario.Lambda == 0.0):
            raise UnsupportedScenarioError(
                "series mode supports the massless inertial d=3 scenario only"
            )
        value = response_series(req.omega, req.sigma, scenario.beta, sw, SeriesConfig())
        err = 1e-6 * abs(value)
        used = "series"
    else:  # asymptotic
        value, used = _eval_asymptotic(scenario, req.omega, req.sigma)
        err = 0.15 * abs(value)

    return EvalResponse(
        inputs=_json_safe(req.model_dump(mode="json")),
        value=value,
        error_estimate=err,
        method=used,
    )


def handle_scan(req: ScanRequest) -> ScanResponse:
    scenario = req.scenario
    spec = ScanSpec(
        MOTION_ALIASES[scenario.motion], scenario.d, scenario.lambda_ir,
        omegas=req.omega.values(),
        sigmas=tuple(req.sigma),
        t_kms=req.t_kms.values(),
        masses=tuple(req.m),
        switching=req.switching.to_switching(),
        step=StepControl(rel_step=req.fd_rel_step),
    )
    scan = classify(spec)
    labels = ("weak", "strong", "both", "neither", "unresolved")
    return ScanResponse(
        csv=scan_to_csv(scan),
        counts={label: scan.count(label) for label in labels},
    )


def handle_figure(req: FigureRequest) -> FigureResponse:
    rows = figures.generate(req.name)
    return FigureResponse(name=req.name, csv=figures.rows_to_csv(rows))


def handle_verify() -> VerifyResponse:
    results = verify.run_all()
    return VerifyResponse(
        passed=all(r.passed for r in results),
        checks=[VerifyCheck(name=r.name, passed=r.passed, detail=r.detail)
                for r in results],
        report=verify.format_report(results),
    )
