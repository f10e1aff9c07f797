"""Command-line client for the evaluation, scan, figure and verify handlers.

The CLI builds the same request models the HTTP service accepts and runs
them in-process by default; ``--server URL`` sends them to a running
service instead.  An INI config file can pre-fill any flag (flags win).

Exit codes: 0 success, 1 verification failure, 2 invalid arguments or
unsupported combination, 3 numerical failure, 4 I/O failure.
"""

from __future__ import annotations

import configparser
import json
import math
import sys

import click
from pydantic import ValidationError

from . import api
from .errors import (
    DerivativeError,
    DomainError,
    EDRUndefinedError,
    QuadratureError,
    SeriesConvergenceError,
    SingularFrequencyError,
    UnruhLabError,
    UnsupportedScenarioError,
)

_INVALID = (DomainError, UnsupportedScenarioError, SeriesConvergenceError,
            SingularFrequencyError, ValidationError, ValueError)
_NUMERICAL = (QuadratureError, DerivativeError, EDRUndefinedError, UnruhLabError)


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(fn):
    try:
        return fn()
    except _INVALID as exc:
        _fail(str(exc), 2)
    except _NUMERICAL as exc:
        _fail(f"numerical failure: {exc}", 3)
    except OSError as exc:
        _fail(f"I/O failure: {exc}", 4)


def _load_config(path: str | None) -> configparser.ConfigParser:
    cp = configparser.ConfigParser()
    if path:
        read = cp.read(path)
        if not read:
            _fail(f"config file {path!r} not found", 2)
    return cp


def _cfg(cp: configparser.ConfigParser, section: str, key: str, fallback=None):
    return cp.get(section, key, fallback=fallback)


def _parse_sigma(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    return float(text)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return "inf" if obj > 0 else ("-inf" if obj < 0 else "nan")
    return obj


def _post(server: str, path: str, payload: dict):
    import httpx

    resp = httpx.post(f"{server.rstrip('/')}{path}", json=_jsonable(payload),
                      timeout=3600.0)
    if resp.status_code == 422:
        _fail(resp.json().get("detail", resp.text), 2)
    if resp.status_code >= 400:
        _fail(f"server error {resp.status_code}: {resp.text}", 3)
    return resp.json()


@click.group()
def main():
    """Detector response functions and Anti-Unruh scans for KMS field states."""


_scenario_options = [
    click.option("--scenario", "motion", default=None,
                 type=click.Choice(["inertial", "accelerated"]), help="Motion kind."),
    click.option("--d", type=int, default=None, help="Spatial dimension (1, 2 or 3)."),
    click.option("--m", type=float, default=None, help="Field mass."),
    click.option("--lambda-ir", type=float, default=None, help="IR momentum cutoff."),
    click.option("--beta", type=float, default=None, help="Inverse KMS temperature."),
    click.option("--t-kms", type=float, default=None, help="KMS temperature (1/beta)."),
    click.option("--switching", "family", default=None,
                 type=click.Choice(["gaussian", "bandlimited"]), help="Window family."),
    click.option("--A", "support", type=float, default=None,
                 help="Fourier support half-width (band-limited)."),
    click.option("--config", "config_path", default=None, help="INI config file."),
    click.option("--server", default=None, help="Base URL of a running service."),
]


def scenario_options(fn):
    for opt in reversed(_scenario_options):
        fn = opt(fn)
    return fn


def _build_scenario(cp, motion, d, m, lambda_ir, beta, t_kms) -> dict:
    sc = {
        "motion": motion or _cfg(cp, "scenario", "motion", "inertial"),
        "d": int(d if d is not None else _cfg(cp, "scenario", "d", "3")),
        "m": float(m if m is not None else _cfg(cp, "scenario", "m", "0")),
        "lambda_ir": float(lambda_ir if lambda_ir is not None
                           else _cfg(cp, "scenario", "lambda_ir", "0")),
    }
    if beta is None and t_kms is None:
        raw_beta = _cfg(cp, "scenario", "beta")
        raw_t = _cfg(cp, "scenario", "t_kms")
        beta = float(raw_beta) if raw_beta is not None else None
        t_kms = float(raw_t) if raw_t is not None else None
    if beta is not None:
        sc["beta"] = beta
    if t_kms is not None:
        sc["t_kms"] = t_kms
    return sc


def _build_switching(cp, family, support) -> dict:
    return {
        "family": family or _cfg(cp, "switching", "family", "gaussian"),
        "A": float(support if support is not None else _cfg(cp, "switching", "A", "1.0")),
    }


@main.command("eval")
@scenario_options
@click.option("--omega", type=float, default=None, help="Detector gap Omega.")
@click.option("--sigma", default=None, help="Interaction timescale, or 'inf'.")
@click.option("--method", default=None,
              type=click.Choice(["auto", "quadrature", "series", "asymptotic", "limit"]))
@click.option("--rel-tol", type=float, default=None, help="Quadrature tolerance.")
def cmd_eval(motion, d, m, lambda_ir, beta, t_kms, family, support, config_path,
             server, omega, sigma, method, rel_tol):
    """Evaluate the response function once; print a JSON record."""

    def run():
        cp = _load_config(config_path)
        if omega is None and _cfg(cp, "eval", "omega") is None:
            raise DomainError("--omega is required")
        req = api.EvalRequest(
            scenario=_build_scenario(cp, motion, d, m, lambda_ir, beta, t_kms),
            switching=_build_switching(cp, family, support),
            omega=float(omega if omega is not None else _cfg(cp, "eval", "omega")),
            sigma=_parse_sigma(sigma or _cfg(cp, "eval", "sigma", "inf")),
            method=method or _cfg(cp, "eval", "method", "auto"),
            rel_tol=float(rel_tol if rel_tol is not None
                          else _cfg(cp, "eval", "rel_tol", "1e-10")),
        )
        if server:
            record = _post(server, "/eval", req.model_dump(mode="json"))
        else:
            record = _jsonable(api.handle_eval(req).model_dump(mode="json"))
        click.echo(json.dumps(record, sort_keys=True))

    _guarded(run)


def _parse_grid(specs: tuple[str, ...]) -> dict:
    axes = {}
    for spec in specs:
        try:
            name, rng = spec.split("=", 1)
            start, stop, count = rng.split(":")
            axes[name.strip().replace("-", "_")] = {
                "start": float(start), "stop": float(stop), "count": int(count),
            }
        except ValueError as exc:
            raise DomainError(f"bad grid spec {spec!r}; expected axis=start:stop:count") from exc
    return axes


@main.command("scan")
@scenario_options
@click.option("--grid", "grids", multiple=True,
              help="Axis spec axis=start:stop:count (axes: omega, t-kms).")
@click.option("--sigma", default="inf", help="Comma-separated sigmas, 'inf' allowed.")
@click.option("--m-values", "m_values", default=None,
              help="Comma-separated masses (overrides --m).")
@click.option("--out", "out_path", required=True, help="Output CSV path.")
def cmd_scan(motion, d, m, lambda_ir, beta, t_kms, family, support, config_path,
             server, grids, sigma, m_values, out_path):
    """Classify an (Omega, sigma, T_KMS, m) grid; write the region CSV."""

    def run():
        cp = _load_config(config_path)
        axes = _parse_grid(grids)
        if "omega" not in axes or "t_kms" not in axes:
            raise DomainError("scan needs --grid omega=... and --grid t-kms=...")
        masses = [float(v) for v in m_values.split(",")] if m_values \
            else [float(m if m is not None else 0.0)]
        scenario = _build_scenario(cp, motion, d, 0.0, lambda_ir, beta, t_kms)
        scenario.setdefault("t_kms", 1.0)  # scan supplies the temperature axis
        scenario.pop("beta", None)
        req = api.ScanRequest(
            scenario=scenario,
            switching=_build_switching(cp, family, support),
            omega=axes["omega"],
            t_kms=axes["t_kms"],
            sigma=[_parse_sigma(tok) for tok in sigma.split(",")],
            m=masses,
        )
        if server:
            result = _post(server, "/scan", req.model_dump(mode="json"))
            csv_text, counts = result["csv"], result["counts"]
        else:
            resp = api.handle_scan(req)
            csv_text, counts = resp.csv, resp.counts
        try:
            with open(out_path, "w") as fh:
                fh.write(csv_text)
        except OSError as exc:
            _fail(f"I/O failure: {exc}", 4)
        click.echo(json.dumps({"out": out_path, "counts": counts}, sort_keys=True))

    _guarded(run)


@main.command("figure")
@click.argument("name")
@click.option("--out", "out_path", required=True, help="Output CSV path.")
@click.option("--server", default=None, help="Base URL of a running service.")
def cmd_figure(name, out_path, server):
    """Generate one figure-preset CSV (fig1-top ... fig3-bottom)."""

    def run():
        req = api.FigureRequest(name=name)
        if server:
            result = _post(server, "/figure", req.model_dump(mode="json"))
            csv_text = result["csv"]
        else:
            csv_text = api.handle_figure(req).csv
        try:
            with open(out_path, "w") as fh:
                fh.write(csv_text)
        except OSError as exc:
            _fail(f"I/O failure: {exc}", 4)
        click.echo(json.dumps({"figure": name, "out": out_path}, sort_keys=True))

    _guarded(run)


@main.command("verify")
@click.option("--server", default=None, help="Base URL of a running service.")
def cmd_verify(server):
    """Run the invariant self-check battery; exit 0 iff every check passes."""

    def run():
        if server:
            import httpx

            resp = httpx.get(f"{server.rstrip('/')}/verify", timeout=3600.0)
            data = resp.json()
            click.echo(data["report"])
            sys.exit(0 if data["passed"] else 1)
        result = api.handle_verify()
        click.echo(result.report)
        sys.exit(0 if result.passed else 1)

    _guarded(run)


@main.command("serve")
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def cmd_serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
