"""Grid-plus-refinement search for extrema of sampled 1-D functions.

The library's geometric quantities are extrema of smooth functions of one
parameter, so the workhorse is: evaluate on a coarse grid, bracket every
local extremum candidate, then polish each bracket with golden-section
iterations. All reductions are performed in fixed order so results are
deterministic; ties resolve to the smallest parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0

# Cap on refined brackets per scan; candidates are ranked by coarse value.
MAX_CANDIDATES = 32


def golden_max(f: Callable[[float], float], a: float, b: float,
               iters: int = 60) -> tuple[float, float]:
    """Golden-section maximization of f on [a, b]; returns (t, f(t))."""
    h = b - a
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc = f(c)
    fd = f(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + _INVPHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = f(d)
    if fc >= fd:
        return c, fc
    return d, fd


def golden_min(f: Callable[[float], float], a: float, b: float,
               iters: int = 60) -> tuple[float, float]:
    t, fneg = golden_max(lambda x: -f(x), a, b, iters)
    return t, -fneg


@dataclass
class ScanResult:
    t: float
    value: float
    # Parabolic-interpolation error estimate from the winning coarse cell.
    error_estimate: float


def _candidate_indices(g: np.ndarray, periodic: bool) -> np.ndarray:
    """Indices that are >= both neighbours (plateaus included)."""
    n = len(g)
    if periodic:
        left = np.roll(g, 1)
        right = np.roll(g, -1)
    else:
        left = np.concatenate(([-np.inf], g[:-1]))
        right = np.concatenate((g[1:], [-np.inf]))
    mask = (g >= left) & (g >= right) & np.isfinite(g)
    idx = np.flatnonzero(mask)
    if idx.size == 0:
        finite = np.flatnonzero(np.isfinite(g))
        if finite.size == 0:
            return finite
        idx = finite[np.argmax(g[finite]):][:1]
    if idx.size > MAX_CANDIDATES:
        order = np.argsort(-g[idx], kind="stable")[:MAX_CANDIDATES]
        idx = np.sort(idx[order])
    return idx


def refine_extremum(f: Callable[[float], float], t: np.ndarray, fv: np.ndarray,
                    mode: str = "max", periodic: bool = True,
                    period: float | None = None,
                    iters: int = 60) -> ScanResult:
    """Refine the extremum of a coarse scan (t, fv) of the scalar function f.

    `fv` may contain -inf (max mode) / +inf (min mode) entries marking
    excluded cells; those never become refinement candidates, but brackets of
    adjacent candidates may still probe them, so hard exclusions must also be
    enforced inside f itself. Infinite values of the sought sign
    short-circuit. For periodic scans f must accept parameters outside
    [t0, t0 + period).
    """
    sign = 1.0 if mode == "max" else -1.0
    g = sign * np.asarray(fv, dtype=float)
    tg = np.asarray(t, dtype=float)
    n = len(tg)
    if n == 0:
        raise ValueError("empty scan")
    hit = np.flatnonzero(np.isposinf(g))
    if hit.size:
        i = int(hit[0])
        return ScanResult(float(tg[i]), sign * math.inf, 0.0)
    if periodic and period is None:
        period = float(n * (tg[1] - tg[0])) if n > 1 else 1.0

    idx = _candidate_indices(g, periodic)
    if idx.size == 0:
        return ScanResult(float(tg[0]), float(fv[0]), math.inf)

    fs = (lambda x: f(x)) if sign > 0 else (lambda x: -f(x))
    best_t = None
    best_v = -math.inf
    best_i = -1
    for i in idx:
        il, ir = (i - 1) % n, (i + 1) % n
        # plateau cell: refinement cannot gain more than the local variation
        ref = max(1.0, abs(g[i]))
        flat_cell = (np.isfinite(g[il]) and np.isfinite(g[ir])
                     and abs(g[i] - g[il]) <= 3e-11 * ref
                     and abs(g[i] - g[ir]) <= 3e-11 * ref)
        if periodic:
            a = float(tg[il])
            b = float(tg[ir])
            if i == 0:
                a -= period
            if i == n - 1:
                b += period
        else:
            a = float(tg[max(i - 1, 0)])
            b = float(tg[min(i + 1, n - 1)])
        if b <= a:
            continue
        # coarse values only pick candidates; the reported extremum always
        # comes from fresh scalar evaluations (coarse vectorized passes are
        # allowed to be approximate, e.g. sampled support functions)
        if flat_cell:
            tt, vv = float(tg[i]), fs(float(tg[i]))
        else:
            tt, vv = golden_max(fs, a, b, iters)
            fi = fs(float(tg[i]))
            if fi > vv:
                tt, vv = float(tg[i]), fi
        if vv > best_v or (vv == best_v and tt < best_t):
            best_t, best_v, best_i = tt, vv, int(i)

    if best_t is None:
        best_i = int(np.argmax(g))
        best_t, best_v = float(tg[best_i]), float(g[best_i])
    il, ir = (best_i - 1) % n, (best_i + 1) % n
    trip = g[[il, best_i, ir]]
    err = float(abs(trip[0] - 2.0 * trip[1] + trip[2]) / 8.0) \
        if np.all(np.isfinite(trip)) else math.inf
    if periodic and best_t is not None:
        t0 = float(tg[0])
        best_t = (best_t - t0) % period + t0
    return ScanResult(float(best_t), sign * best_v, err)


def scan_extremum(f_vec: Callable[[np.ndarray], np.ndarray],
                  f_scalar: Callable[[float], float],
                  a: float, b: float, samples: int,
                  mode: str = "max", periodic: bool = True,
                  iters: int = 60) -> ScanResult:
    """Coarse vectorized scan of [a, b) (or [a, b] if not periodic) + refinement."""
    if periodic:
        t = a + (b - a) * np.arange(samples) / samples
    else:
        t = np.linspace(a, b, samples)
    fv = np.asarray(f_vec(t), dtype=float)
    return refine_extremum(f_scalar, t, fv, mode=mode, periodic=periodic,
                           period=(b - a) if periodic else None, iters=iters)
