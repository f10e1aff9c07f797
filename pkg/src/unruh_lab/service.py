"""FastAPI service exposing the evaluation, scan, figure and verify handlers."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__, api
from .errors import (
    DomainError,
    SeriesConvergenceError,
    SingularFrequencyError,
    UnruhLabError,
    UnsupportedScenarioError,
)

app = FastAPI(
    title="unruh-lab",
    version=__version__,
    description="Detector response functions, EDR temperatures and "
                "Anti-Unruh region scans for KMS field states",
)

_INVALID = (DomainError, UnsupportedScenarioError, SeriesConvergenceError,
            SingularFrequencyError, ValueError)


def _run(handler, *args):
    try:
        return handler(*args)
    except _INVALID as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except UnruhLabError as exc:
        raise HTTPException(status_code=500, detail=f"numerical failure: {exc}") from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/eval", response_model=api.EvalResponse)
def eval_endpoint(req: api.EvalRequest) -> api.EvalResponse:
    return _run(api.handle_eval, req)


@app.post("/scan", response_model=api.ScanResponse)
def scan_endpoint(req: api.ScanRequest) -> api.ScanResponse:
    return _run(api.handle_scan, req)


@app.post("/figure", response_model=api.FigureResponse)
def figure_endpoint(req: api.FigureRequest) -> api.FigureResponse:
    return _run(api.handle_figure, req)


@app.get("/figure/{name}", response_model=api.FigureResponse)
def figure_get(name: str) -> api.FigureResponse:
    try:
        req = api.FigureRequest(name=name)
    except ValueError as exc:
        raise HTTPException(status_code=404, detail=f"unknown preset {name!r}") from exc
    return _run(api.handle_figure, req)


@app.get("/verify", response_model=api.VerifyResponse)
def verify_endpoint() -> api.VerifyResponse:
    return _run(api.handle_verify)
