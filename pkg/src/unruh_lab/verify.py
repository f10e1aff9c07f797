"""Self-check battery behind the ``verify`` command.

Runs a condensed version of the invariant suite (detailed balance, spectral
sign structure, dual-route consistency, thermalization limit, series
equivalence, the no-go mini-grid, asymptote spot checks) and reports one
pass/fail line per check.  A kernel object carries the spectral functions
so tests can inject corrupted implementations and confirm the battery
catches them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import antiunruh, asymptotics, scenarios, series, specfun, switching
from .errors import UnruhLabError
from .response import ResponseQuery, edr_ratio, response_function
from .scenarios import ACCELERATED, INERTIAL, Scenario


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass
class VerifyKernel:
    """Injectable function table consumed by the checks."""

    wightman: Callable = scenarios.wightman_ft
    commutator: Callable = scenarios.commutator_ft
    commutator_closed: Callable = scenarios.commutator_ft_inertial_closed
    balance_residual: Callable = scenarios.detailed_balance_residual


def _check(name, fn) -> CheckResult:
    try:
        detail = fn()
        return CheckResult(name, True, detail or "ok")
    except AssertionError as exc:
        return CheckResult(name, False, str(exc) or "assertion failed")
    except UnruhLabError as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")


def _kms_spot_scenarios():
    return [
        Scenario(INERTIAL, 3, 0.0, 0.0, 0.8),
        Scenario(INERTIAL, 1, 1.0, 0.0, 1.5),
        Scenario(INERTIAL, 3, 1.0, 1.0, 0.5),
        Scenario(ACCELERATED, 1, 1.0, 0.0, 2 * math.pi),
        Scenario(ACCELERATED, 1, 0.1, 0.0, 4.0),
    ]


def run_all(kernel: VerifyKernel | None = None) -> list[CheckResult]:
    k = kernel or VerifyKernel()
    checks: list[tuple[str, Callable]] = []

    def add(name):
        def deco(fn):
            checks.append((name, fn))
            return fn
        return deco

    @add("detailed balance residual < 1e-8")
    def _balance():
        worst = 0.0
        for scn in _kms_spot_scenarios():
            for w in (0.4, 1.3, 5.0, 15.0):
                worst = max(worst, k.balance_residual(scn, w))
        assert worst < 1e-8, f"worst residual {worst:.3e}"
        return f"worst residual {worst:.3e}"

    @add("commutator odd and omega*C <= 0")
    def _oddness():
        for scn in _kms_spot_scenarios():
            for w in (0.4, 1.6, 6.0):
                c_p = k.commutator(scn, w)
                c_m = k.commutator(scn, -w)
                assert abs(c_p + c_m) <= 1e-12 * max(abs(c_p), 1e-30), "commutator not odd"
                assert w * c_p <= 0.0, f"omega*C > 0 at omega={w} ({scn.motion}, d={scn.d})"
        return "odd + sign ok on spot grid"

    @add("Wightman transform nonnegative")
    def _positivity():
        for scn in _kms_spot_scenarios():
            for w in (-6.0, -1.0, 0.5, 2.0, 12.0):
                assert k.wightman(scn, w) >= 0.0, f"W < 0 at omega={w}"
        return "nonnegative on spot grid"

    @add("closed-form commutator matches W(+)-W(-)")
    def _two_routes():
        for scn in (Scenario(INERTIAL, 1, 1.0, 0.3, 0.7),
                    Scenario(INERTIAL, 3, 0.5, 0.0, 1.1)):
            for w in (0.8, 1.4, 2.5, -2.5):
                closed = k.commutator_closed(w, scn.d, scn.m, scn.Lambda)
                via_w = k.wightman(scn, w) - k.wightman(scn, -w)
                assert abs(closed - via_w) <= 1e-10 * max(abs(closed), 1e-30), (
                    f"routes disagree at omega={w}: {closed:g} vs {via_w:g}"
                )
        return "dual routes agree to 1e-10"

    @add("adiabatic EDR = exp(-beta Omega)")
    def _edr_limit():
        sw = switching.GaussianSwitching()
        scn = Scenario(ACCELERATED, 1, 1.0, 0.0, 2.0)
        r = edr_ratio(ResponseQuery(1.5, math.inf, scn, sw))
        want = math.exp(-2.0 * 1.5)
        assert abs(r - want) <= 1e-10 * want, f"EDR {r:g} vs {want:g}"
        return "thermal detailed-balance ratio recovered"

    @add("series matches quadrature to 1e-6")
    def _series_check():
        sw = switching.BandLimitedSwitching(1.0)
        scn = Scenario(INERTIAL, 3, 0.0, 0.0, 1.0)
        f_q = response_function(ResponseQuery(1.0, 5.0, scn, sw)).value
        f_s = series.response_series(1.0, 5.0, 1.0, sw, series.SeriesConfig(k_max=8))
        assert abs(f_s - f_q) <= 1e-6 * f_q, f"series {f_s:g} vs quadrature {f_q:g}"
        return f"rel dev {abs(f_s - f_q) / f_q:.2e}"

    @add("no weak/strong Anti-Unruh on inertial mini-grid")
    def _no_go():
        sw = switching.GaussianSwitching()
        spec = antiunruh.ScanSpec(
            INERTIAL, 3, 0.0, omegas=(0.7, 4.0), sigmas=(1.0, math.inf),
            t_kms=(0.4, 3.0), masses=(0.0, 1.0), switching=sw,
        )
        scan = antiunruh.classify(spec)
        bad = scan.count("weak") + scan.count("strong") + scan.count("both")
        assert bad == 0, f"{bad} Anti-Unruh cells on an inertial grid"
        return f"{len(scan.cells)} cells all clean"

    @add("weak Anti-Unruh present for accelerated massive")
    def _weak_exists():
        scn = Scenario(ACCELERATED, 1, 1.0, 0.0, 1.0 / 1.6)
        sw = switching.GaussianSwitching()
        est = antiunruh.d_response_d_beta(ResponseQuery(0.5, math.inf, scn, sw))
        assert est.value > 0.0 and abs(est.value) > 10 * est.error, (
            f"expected dF/dbeta > 0, got {est.value:g} +- {est.error:g}"
        )
        return "adiabatic weak cell confirmed"

    @add("asymptotes agree with exact Bessel form")
    def _asym():
        exact = k.wightman(Scenario(ACCELERATED, 1, 100.0, 0.0, 1.0), 1.0)
        large = asymptotics.response_large_mass(1.0, 1.0, 100.0)
        assert abs(large - exact) <= 0.10 * exact, "large-mass asymptote off"
        exact_s = k.wightman(Scenario(ACCELERATED, 1, 1e-4, 0.0, 1.0), 1.0)
        small = asymptotics.response_small_mass(1.0, 1.0, 1e-4)
        assert abs(small - exact_s) <= 0.15 * exact_s, "small-mass asymptote off"
        return "10%/15% windows met"

    @add("Planck factor identity")
    def _planck():
        for bo in (1e-6, 0.3, 4.0, 200.0):
            p, q = specfun.planck(bo, 1.0), specfun.planck(-bo, 1.0)
            assert abs(p + q + 1.0) <= 1e-12 * max(1.0, abs(p)), "P(w)+P(-w) != -1"
        return "reflection identity holds"

    @add("switching windows normalized")
    def _parseval():
        from .quadrature import adaptive_gl
        for sw in (switching.GaussianSwitching(), switching.BandLimitedSwitching(1.0)):
            half = sw.fourier_truncation  # exact support edge / negligible tail
            val, _ = adaptive_gl(lambda w: sw.chi_tilde_sq(w), -half, half,
                                 rel_tol=1e-11, n0=64)
            assert abs(val / (2 * math.pi) - 1.0) <= 1e-10, f"{sw.family} not normalized"
        return "Parseval holds for both analytic families"

    return [_check(name, fn) for name, fn in checks]


def format_report(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"[{mark}] {r.name:<{width}}  {r.detail}")
    n_bad = sum(1 for r in results if not r.passed)
    lines.append(
        f"{len(results) - n_bad}/{len(results)} checks passed"
        + (f", {n_bad} FAILED" if n_bad else "")
    )
    return "\n".join(lines)
