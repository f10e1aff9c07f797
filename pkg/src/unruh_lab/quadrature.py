"""Adaptive composite Gauss-Legendre quadrature.

All spectral integrals in the library go through this module: panels of a
fixed-order Gauss rule, refined by doubling the panel count until two
successive refinements agree.  Segments abutting an inverse-square-root or
square-root-kink point are integrated under the substitution x = p +/- s^2,
which renders the integrand smooth in s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import QuadratureError

_GL_ORDER = 16
_GL_NODES, _GL_WEIGHTS = leggauss(_GL_ORDER)

# Below this multiple of the accumulated |integrand| mass, refinement
# differences are double-precision noise and cannot shrink further.
_NOISE_FACTOR = 8e-16


def composite_gl(f, a: float, b: float, n_panels: int) -> tuple[float, float]:
    """One composite Gauss-Legendre pass; returns (integral, integral of |f|)."""
    edges = np.linspace(a, b, n_panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    x = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    y = np.asarray(f(x), dtype=float).reshape(n_panels, _GL_ORDER)
    w = half[:, None] * _GL_WEIGHTS[None, :]
    return float(np.sum(w * y)), float(np.sum(w * np.abs(y)))


def adaptive_gl(
    f,
    a: float,
    b: float,
    rel_tol: float = 1e-10,
    n0: int = 8,
    max_doublings: int = 14,
    abs_floor: float = 0.0,
    confirmations: int = 1,
) -> tuple[float, float]:
    """Integrate vectorized ``f`` over [a, b] by panel doubling.

    Converged once ``confirmations`` consecutive refinement pairs agree to
    ``rel_tol`` (relative to max(|I|, abs_floor)) or the difference falls
    below the double-precision noise floor of the |integrand| mass.

    Returns (value, error_estimate); raises QuadratureError if the budget is
    exhausted before agreement.
    """
    if b <= a:
        return 0.0, 0.0
    n = max(1, int(n0))
    prev, _ = composite_gl(f, a, b, n)
    agree = 0
    err = math.inf
    for _ in range(max_doublings):
        n *= 2
        cur, cur_abs = composite_gl(f, a, b, n)
        err = abs(cur - prev)
        scale = max(abs(cur), abs_floor)
        if err <= rel_tol * scale or err <= _NOISE_FACTOR * cur_abs:
            agree += 1
            if agree >= confirmations:
                return cur, err
        else:
            agree = 0
        prev = cur
    raise QuadratureError(
        f"no convergence on [{a:g}, {b:g}] after {max_doublings} doublings "
        f"(last change {err:.3e})"
    )


@dataclass(frozen=True)
class Segment:
    """One integration segment; ``xform`` marks a singular endpoint.

    xform: "none"    -- integrand smooth on [lo, hi]
           "sqrt_lo" -- integrand ~ (x-lo)^(+-1/2) near lo
           "sqrt_hi" -- integrand ~ (hi-x)^(+-1/2) near hi
    """

    lo: float
    hi: float
    xform: str = "none"


def _segment_integrand(f, seg: Segment):
    if seg.xform == "none":
        return f, seg.lo, seg.hi
    width = seg.hi - seg.lo
    s_max = math.sqrt(width)
    if seg.xform == "sqrt_lo":
        lo = seg.lo

        def g(s):
            return 2.0 * s * np.asarray(f(lo + s * s), dtype=float)

        return g, 0.0, s_max
    if seg.xform == "sqrt_hi":
        hi = seg.hi

        def g(s):
            return 2.0 * s * np.asarray(f(hi - s * s), dtype=float)

        return g, 0.0, s_max
    raise ValueError(f"unknown segment transform {seg.xform!r}")


def integrate_segments(
    f,
    segments: list[Segment],
    rel_tol: float = 1e-10,
    n0: int = 8,
    max_doublings: int = 14,
    abs_floor: float = 0.0,
    confirmations: int = 1,
) -> tuple[float, float]:
    """Sum adaptive integrals over a pre-split segment list."""
    total = 0.0
    err = 0.0
    for seg in segments:
        g, a, b = _segment_integrand(f, seg)
        val, e = adaptive_gl(
            g, a, b, rel_tol=rel_tol, n0=n0, max_doublings=max_doublings,
            abs_floor=max(abs_floor, abs(total)), confirmations=confirmations,
        )
        total += val
        err += e
    return total, err


def split_interval(
    a: float,
    b: float,
    breakpoints: list[float],
    sqrt_points: set[float] | None = None,
) -> list[Segment]:
    """Build segments of [a, b] split at interior breakpoints.

    Points inside ``sqrt_points`` get the s^2 endpoint transform on both
    abutting segments; a segment singular at both ends is split at its
    midpoint.
    """
    sqrt_points = sqrt_points or set()
    pts = sorted(p for p in set(breakpoints) if a < p < b)
    edges = [a] + pts + [b]
    segments: list[Segment] = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        lo_sing = lo in sqrt_points
        hi_sing = hi in sqrt_points
        if lo_sing and hi_sing:
            mid = 0.5 * (lo + hi)
            segments.append(Segment(lo, mid, "sqrt_lo"))
            segments.append(Segment(mid, hi, "sqrt_hi"))
        elif lo_sing:
            segments.append(Segment(lo, hi, "sqrt_lo"))
        elif hi_sing:
            segments.append(Segment(lo, hi, "sqrt_hi"))
        else:
            segments.append(Segment(lo, hi))
    return segments


def integrate_decaying_tail(
    f,
    a: float,
    seg_len: float,
    rel_tol: float = 1e-10,
    tail_tol: float = 1e-13,
    growth: float = 1.0,
    max_segments: int = 4000,
    n0: int = 8,
    scale_hint: float = 0.0,
) -> tuple[float, float]:
    """Integrate f over [a, inf) segment by segment until the tail is negligible.

    Stops after two consecutive segments each contribute less than
    tail_tol * max(|total|, scale_hint).  Segment lengths grow geometrically
    by ``growth`` (1.0 keeps them uniform, suitable for oscillatory tails).
    """
    total = 0.0
    err = 0.0
    lo = a
    length = seg_len
    quiet = 0
    for _ in range(max_segments):
        hi = lo + length
        val, e = adaptive_gl(
            f, lo, hi, rel_tol=rel_tol, n0=n0,
            abs_floor=max(abs(total), scale_hint),
        )
        total += val
        err += e
        if abs(val) <= tail_tol * max(abs(total), scale_hint):
            quiet += 1
            if quiet >= 2:
                return total, err
        else:
            quiet = 0
        lo = hi
        length *= growth
    raise QuadratureError("semi-infinite tail did not become negligible")


def vectorize_scalar(func):
    """Adapt a scalar-valued function to the vectorized integrand interface."""

    def wrapped(xs):
        arr = np.atleast_1d(np.asarray(xs, dtype=float))
        return np.array([func(x) for x in arr], dtype=float)

    return wrapped
