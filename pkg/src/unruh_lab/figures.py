"""Figure-preset data generation.

Each preset tabulates one panel of the standard parameter studies as a
CSV table with columns (x, series_label, y):

* fig1-top     d F/d T_KMS vs T_KMS, accelerated 1+1D, m = 1, sigma = 1,
               Gaussian window, one series per gap in {0.5, 2, 5, 10, 15}.
* fig1-bottom  same at sigma = inf (switching-independent adiabatic limit).
* fig2a        T_EDR vs T_KMS for m = 1, sigma = 0.04, Omega = 1.
* fig2b        zoom of fig2a into the small-T_KMS region.
* fig2c        Omega / T_EDR vs Omega at m = 1, sigma = 0.04, T_KMS = 8.
* fig2d        T_EDR vs Omega, same parameters.
* fig3-top     d F/d T_KMS vs T_KMS at sigma = inf for m = 0.1.
* fig3-bottom  same for m = 10.

The KMS-temperature axes default to 200 points on (0, 10]; fig2a extends
to 60 so the approach
T_EDR -> T_KMS is visible.  All values are deterministic pure functions of
the preset name.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .antiunruh import StepControl, d_response_d_beta
from .errors import DomainError, UnruhLabError
from .response import QuadratureConfig, ResponseQuery, beta_edr
from .scenarios import ACCELERATED, Scenario
from .switching import GaussianSwitching

GAP_SERIES = (0.5, 2.0, 5.0, 10.0, 15.0)

CSV_HEADER = "x,series_label,y"


@dataclass(frozen=True)
class FigureRow:
    x: float
    series_label: str
    y: float


def _t_axis(stop: float = 10.0, count: int = 200, start: float | None = None):
    lo = stop / count if start is None else start
    return np.linspace(lo, stop, count)


def _scenario(m: float, t_kms: float) -> Scenario:
    return Scenario(ACCELERATED, 1, m, 0.0, 1.0 / t_kms)


_QUAD = QuadratureConfig(rel_tol=1e-9)
_STEP = StepControl()


def _df_dt_rows(sigma: float, m: float, t_axis) -> list[FigureRow]:
    sw = GaussianSwitching()
    rows = []
    for omega in GAP_SERIES:
        label = f"Omega={omega:g}"
        for t in t_axis:
            beta = 1.0 / t
            q = ResponseQuery(omega, sigma, _scenario(m, t), sw, _QUAD)
            try:
                est = d_response_d_beta(q, _STEP)
                y = -beta * beta * est.value
            except (UnruhLabError, OverflowError):
                y = math.nan
            rows.append(FigureRow(float(t), label, y))
    return rows


def _t_edr_rows(sigma: float, m: float, omega: float, t_axis) -> list[FigureRow]:
    sw = GaussianSwitching()
    rows = []
    for t in t_axis:
        q = ResponseQuery(omega, sigma, _scenario(m, t), sw, _QUAD)
        try:
            y = 1.0 / beta_edr(q)
        except (UnruhLabError, OverflowError):
            y = math.nan
        rows.append(FigureRow(float(t), "T_EDR", y))
    return rows


def _gap_sweep_rows(sigma: float, m: float, t_kms: float, ratio: bool) -> list[FigureRow]:
    sw = GaussianSwitching()
    rows = []
    label = "Omega/T_EDR" if ratio else "T_EDR"
    for omega in np.linspace(1.0, 15.0, 57):
        q = ResponseQuery(float(omega), sigma, _scenario(m, t_kms), sw, _QUAD)
        try:
            b_edr = beta_edr(q)
            y = float(omega) * b_edr if ratio else 1.0 / b_edr
        except (UnruhLabError, OverflowError):
            y = math.nan
        rows.append(FigureRow(float(omega), label, y))
    return rows


def generate(name: str) -> list[FigureRow]:
    if name == "fig1-top":
        return _df_dt_rows(1.0, 1.0, _t_axis())
    if name == "fig1-bottom":
        return _df_dt_rows(math.inf, 1.0, _t_axis())
    if name == "fig2a":
        return _t_edr_rows(0.04, 1.0, 1.0, np.linspace(0.25, 60.0, 240))
    if name == "fig2b":
        return _t_edr_rows(0.04, 1.0, 1.0, _t_axis(stop=2.0, count=100))
    if name == "fig2c":
        return _gap_sweep_rows(0.04, 1.0, 8.0, ratio=True)
    if name == "fig2d":
        return _gap_sweep_rows(0.04, 1.0, 8.0, ratio=False)
    if name == "fig3-top":
        return _df_dt_rows(math.inf, 0.1, _t_axis())
    if name == "fig3-bottom":
        return _df_dt_rows(math.inf, 10.0, _t_axis())
    raise DomainError(f"unknown figure preset {name!r}")


PRESETS = (
    "fig1-top", "fig1-bottom", "fig2a", "fig2b", "fig2c", "fig2d",
    "fig3-top", "fig3-bottom",
)


def rows_to_csv(rows: list[FigureRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(f"{r.x:.17g},{r.series_label},{r.y:.17g}")
    return "\n".join(lines) + "\n"
