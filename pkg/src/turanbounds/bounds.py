"""Lower (and one upper) bounds on the Markov factor of root-constrained
polynomials over convex domains, with applicability tracking.

Every bound is a pure formula in the geometric data (degree n, diameter d,
minimal width w, curvature minimum kappa, circularity radius R); constants
are kept exactly as classically stated (1/6, 1/(2e), 1/20, 0.0003, 600).
The Chebyshev min-max oracle provides an independent brute-force check of
the capacity-type product lower bound used for flat sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError, SearchBudgetError
from .geometry.domains import Disk, Ellipse, Interval, make_domain
from .geometry.functionals import (
    circularity_radius,
    curvature_min,
    diameter,
    flat_side_lengths,
    min_width,
    transfinite_diameter_info,
)

LOWER = "lower"
UPPER = "upper"

# Fixed preference order for equal-valued bounds in best_lower.
_TAG_ORDER = [
    "T1_disk",
    "T3_ellipse",
    "T10_curvature",
    "T4_circular",
    "T2_interval_LP",
    "T2_interval",
    "T8_sqrt_general",
    "T9_width",
]


@dataclass
class BoundResult:
    """A bound on ||p'||/||p|| with provenance and the inputs it consumed."""

    theorem: str
    value: float
    applicable: bool
    kind: str = LOWER
    inputs: dict = field(default_factory=dict)
    reason: str | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        out = {"theorem": self.theorem, "kind": self.kind,
               "applicable": self.applicable, "value": self.value,
               "inputs": dict(self.inputs)}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.note is not None:
            out["note"] = self.note
        return out


def _check_n(n: int):
    if not (isinstance(n, (int, np.integer)) and n >= 1):
        raise ParameterError(f"degree must be a positive integer, got {n}")


def bound_disk(n: int) -> BoundResult:
    """Sharp factor n/2 on the unit disk (attained by 1 + z^n)."""
    _check_n(n)
    return BoundResult("T1_disk", 0.5 * n, True, inputs={"n": n, "r": 1.0})


def bound_interval(n: int, variant: str = "turan", length: float = 2.0) -> BoundResult:
    """sqrt(n)/6 (variant 'turan') or sqrt(n)/(2e) (variant 'lp') on an
    interval, rescaled by 2/length from the length-2 statement."""
    _check_n(n)
    if length <= 0:
        raise ParameterError(f"interval length must be positive, got {length}")
    if variant == "turan":
        base = math.sqrt(n) / 6.0
        tag = "T2_interval"
    elif variant == "lp":
        base = math.sqrt(n) / (2.0 * math.e)
        tag = "T2_interval_LP"
    else:
        raise ParameterError(f"unknown interval bound variant {variant!r}")
    return BoundResult(tag, base * (2.0 / length), True,
                       inputs={"n": n, "L": length, "variant": variant})


def bound_circular(n: int, R: float) -> BoundResult:
    """n/(2R) when every boundary point admits an enclosing radius-R tangent disk."""
    _check_n(n)
    if not (R > 0) or math.isinf(R):
        return BoundResult("T4_circular", 0.0, False, inputs={"n": n, "R": R},
                           reason="domain is flat (no finite circularity radius)")
    return BoundResult("T4_circular", 0.5 * n / R, True, inputs={"n": n, "R": R})


def bound_curvature(n: int, kappa_min: float) -> BoundResult:
    """(kappa/2) n when boundary curvature stays above kappa almost everywhere."""
    _check_n(n)
    if not (kappa_min > 0):
        return BoundResult("T10_curvature", 0.0, False,
                           inputs={"n": n, "kappa": kappa_min},
                           reason="curvature minimum is zero")
    return BoundResult("T10_curvature", 0.5 * kappa_min * n, True,
                       inputs={"n": n, "kappa": kappa_min})


def bound_sqrt_general(n: int, d: float) -> BoundResult:
    """sqrt(n)/(20 d): valid for every compact convex set of diameter d."""
    _check_n(n)
    if not (d > 0):
        raise ParameterError(f"diameter must be positive, got {d}")
    return BoundResult("T8_sqrt_general", math.sqrt(n) / (20.0 * d), True,
                       inputs={"n": n, "d": d})


def bound_width(n: int, w: float, d: float) -> BoundResult:
    """0.0003 w n / d^2: order-n factor for every nondegenerate convex domain."""
    _check_n(n)
    if not (d > 0):
        raise ParameterError(f"diameter must be positive, got {d}")
    if not (w > 0):
        return BoundResult("T9_width", 0.0, False, inputs={"n": n, "w": w, "d": d},
                           reason="degenerate width")
    return BoundResult("T9_width", 0.0003 * w * n / (d * d), True,
                       inputs={"n": n, "w": w, "d": d})


def upper_existence(n: int, w: float, d: float) -> BoundResult:
    """Existence of p with M(p) <= 600 w n / d^2, available for n above the
    threshold n0 = 2 (d/(16w))^2 log(d/(16w)); n0 <= 0 means always on."""
    _check_n(n)
    if not (w > 0 and d > 0):
        return BoundResult("UPPER_existence", math.inf, False, kind=UPPER,
                           inputs={"n": n, "w": w, "d": d},
                           reason="degenerate width")
    ratio = d / (16.0 * w)
    n0 = 2.0 * ratio * ratio * math.log(ratio)
    inputs = {"n": n, "w": w, "d": d, "n0": n0}
    if n0 > 0 and n <= n0:
        return BoundResult("UPPER_existence", math.inf, False, kind=UPPER,
                           inputs=inputs,
                           reason=f"degree below threshold n0={n0:.6g}")
    return BoundResult("UPPER_existence", 600.0 * w * n / (d * d), True,
                       kind=UPPER, inputs=inputs)


# ---------------------------------------------------------------------------
# Bound collection per domain
# ---------------------------------------------------------------------------

def all_lower_bounds(K, n: int) -> list[BoundResult]:
    """Every lower bound evaluated on K (inapplicable ones carry a reason)."""
    K = make_domain(K)
    _check_n(n)
    out: list[BoundResult] = []
    if isinstance(K, Interval):
        L = K.length
        out.append(bound_interval(n, "turan", L))
        out.append(bound_interval(n, "lp", L))
        out.append(bound_sqrt_general(n, diameter(K)))
        out.append(bound_width(n, 0.0, diameter(K)))
        out.append(bound_circular(n, math.inf))
        return out
    d = diameter(K)
    w = min_width(K)
    kap = curvature_min(K)
    R = circularity_radius(K)
    if isinstance(K, Disk):
        if K.r == 1.0:
            out.append(bound_disk(n))
        else:
            out.append(BoundResult("T1_disk", 0.0, False, inputs={"n": n, "r": K.r},
                                   reason="stated for the unit disk; rescaled via T4"))
    if isinstance(K, Ellipse):
        b3 = BoundResult("T3_ellipse", 0.5 * K.b * n, True,
                         inputs={"n": n, "b": K.b})
        out.append(b3)
    out.append(bound_curvature(n, kap))
    out.append(bound_circular(n, R))
    out.append(bound_sqrt_general(n, d))
    out.append(bound_width(n, w, d))
    if getattr(K, "kind", "") == "square":
        out[-1].note = ("an order-n bound with an absolute (unspecified) constant "
                        "is known for the square; numeric value comes from "
                        "T8/T9 instead")
    return out


def best_lower(K, n: int) -> BoundResult:
    """Largest applicable lower bound (ties resolved in fixed provenance order)."""
    cands = [b for b in all_lower_bounds(K, n) if b.applicable]
    if not cands:
        raise ParameterError("no applicable lower bound for this domain")
    order = {tag: i for i, tag in enumerate(_TAG_ORDER)}
    return max(cands, key=lambda b: (b.value, -order.get(b.theorem, 99)))


def bounds_report(K, n: int) -> dict:
    """All bounds, the selected best lower bound, and the existence upper bound."""
    K = make_domain(K)
    lowers = all_lower_bounds(K, n)
    best = best_lower(K, n)
    if isinstance(K, Interval):
        upper = upper_existence(n, 0.0, diameter(K))
    else:
        upper = upper_existence(n, min_width(K), diameter(K))
    warnings = []
    if upper.applicable and best.value > upper.value:
        warnings.append(
            f"best lower bound {best.value:.6g} exceeds existence upper bound "
            f"{upper.value:.6g}; scan or geometry inconsistency")
    return {
        "domain": K.descriptor(),
        "n": n,
        "bounds": [b.to_dict() for b in lowers],
        "best_lower": best.to_dict(),
        "upper": upper.to_dict(),
        "warnings": warnings,
    }


# ---------------------------------------------------------------------------
# Piecewise-boundary eligibility (qualitative)
# ---------------------------------------------------------------------------

def erod_eligible(K) -> dict:
    """Qualitative check for the piecewise-analytic order-n criterion:
    convex vertex angles, every flat side shorter than a quarter of the
    transfinite diameter, and curvature bounded away from zero on curved
    arcs. No numeric bound value is produced."""
    K = make_domain(K)
    info = transfinite_diameter_info(K)
    delta = float(info["value"])
    sides = flat_side_lengths(K)
    limit = delta / 4.0
    flat_ok = all(s < limit for s in sides)
    # catalogue construction guarantees strict convexity at vertices
    vertex_ok = True
    if K.degenerate or K.has_flat_sides:
        kappa = 0.0
        curved_ok = True  # no curved arcs present
        has_curved = False
    else:
        kappa = curvature_min(K)
        curved_ok = kappa > 1e-12 / max(K.scale(), 1e-300)
        has_curved = True
    eligible = vertex_ok and flat_ok and curved_ok
    return {
        "domain": K.descriptor(),
        "eligible": bool(eligible),
        "transfinite_diameter": delta,
        "transfinite_method": info["method"],
        "conditions": {
            "vertex_angles_below_pi": {"ok": vertex_ok},
            "flat_sides_below_quarter_transfinite": {
                "ok": bool(flat_ok),
                "sides": sides,
                "limit": limit,
            },
            "curved_arc_curvature_positive": {
                "ok": bool(curved_ok),
                "kappa_min": kappa if has_curved else None,
            },
        },
    }


# ---------------------------------------------------------------------------
# Chebyshev min-max lemma and its brute-force oracle
# ---------------------------------------------------------------------------

def chebyshev_lower(J_length: float, k: int) -> float:
    """2 (|J|/4)^k: lower bound for min over k points w of max_J prod |z - w_j|."""
    if not (J_length > 0):
        raise ParameterError(f"interval length must be positive, got {J_length}")
    if not (isinstance(k, (int, np.integer)) and k >= 1):
        raise ParameterError(f"k must be a positive integer, got {k}")
    return 2.0 * (J_length / 4.0) ** k


@dataclass
class ChebyshevResult:
    value: float
    points: tuple
    bound: float
    k: int
    grid: int
    candidates: int


def chebyshev_minmax_bruteforce(J=(-1.0, 1.0), R_points=None, k: int = 1,
                                grid: int = 401) -> ChebyshevResult:
    """Exhaustive min over k-point multisets from R_points of
    max over a J-grid of prod_j |z - w_j|.

    Exact over the given grids: the k = 3 pass prunes candidate pairs with a
    sound lower bound (best possible completion by the pointwise-minimal
    factor) against an incumbent evaluated from a subsampled candidate set,
    which cannot change the exact minimum. k <= 3 enforced.
    """
    if not (isinstance(k, (int, np.integer)) and 1 <= k):
        raise ParameterError(f"k must be a positive integer, got {k}")
    if k > 3:
        raise SearchBudgetError(f"combinatorial budget allows k <= 3, got {k}")
    if grid < 3:
        raise ParameterError(f"need at least 3 grid points on J, got {grid}")
    u, v = complex(J[0]), complex(J[1])
    if u == v:
        raise ParameterError("J must be a nondegenerate interval")
    z = u + (v - u) * np.linspace(0.0, 1.0, grid)
    if R_points is None:
        R = z.copy()
    else:
        R = np.asarray(R_points, dtype=complex)
        if R.size == 0:
            raise ParameterError("R_points must be nonempty")
    mw = R.size
    with np.errstate(divide="ignore"):
        LD = np.log(np.abs(z[:, None] - R[None, :]))

    if k == 1:
        vals = LD.max(axis=0)
        j = int(np.argmin(vals))
        best, arg = float(vals[j]), (j,)
    elif k == 2:
        best, arg = math.inf, (0, 0)
        for i in range(mw):
            colmax = (LD[:, i:] + LD[:, i:i + 1]).max(axis=0)
            j = int(np.argmin(colmax))
            if colmax[j] < best:
                best, arg = float(colmax[j]), (i, i + j)
    else:
        # incumbent from the subsampled candidate set (still an exact tuple value)
        step = max(1, mw // 100)
        sub = np.arange(0, mw, step)
        LDs = LD[:, sub]
        best, arg = math.inf, (0, 0, 0)
        for a in range(len(sub)):
            pair = LDs[:, a:] + LDs[:, a:a + 1]
            for b_off in range(pair.shape[1]):
                colmax = (pair[:, b_off:b_off + 1] + LDs[:, a + b_off:]).max(axis=0)
                c_off = int(np.argmin(colmax))
                if colmax[c_off] < best:
                    best = float(colmax[c_off])
                    arg = (int(sub[a]), int(sub[a + b_off]),
                           int(sub[a + b_off + c_off]))
        # Sound pruning bound per pair: the third factor can suppress the
        # product near only one region of the scan grid, so min over w3 of
        # the max is at least min over w3 of the max over three mutually
        # separated scan rows (a subset of the scan points).
        sep = 0.35 * abs(v - u)
        zsep = np.abs(z[:, None] - z[None, :]) >= sep
        survivors = []
        for i in range(mw):
            P = LD[:, i:] + LD[:, i][:, None]  # (grid, pairs j >= i)
            nj = P.shape[1]
            cols = np.arange(nj)
            ia = P.argmax(axis=0)
            pa = P[ia, cols]
            m1 = np.where(zsep[:, ia], P, -np.inf)
            ib = m1.argmax(axis=0)
            pb = m1[ib, cols]
            vec = np.maximum(pa[:, None] + LD[ia, :], pb[:, None] + LD[ib, :])
            m2 = np.where(zsep[:, ib], m1, -np.inf)
            ic = m2.argmax(axis=0)
            pc = m2[ic, cols]
            with np.errstate(invalid="ignore"):
                third = np.where(np.isfinite(pc)[:, None],
                                 pc[:, None] + LD[ic, :], -np.inf)
            vec = np.maximum(vec, third)
            lb = vec.min(axis=1)
            js = np.flatnonzero(lb <= best + 1e-12)
            survivors.extend((float(lb[j]), i, i + int(j)) for j in js)
        survivors.sort()
        for lb, i, j in survivors:
            if lb > best + 1e-12:
                break
            p2 = LD[:, i] + LD[:, j]
            vals3 = (p2[:, None] + LD).max(axis=0)
            l = int(np.argmin(vals3))
            if vals3[l] < best:
                best, arg = float(vals3[l]), (i, j, l)

    return ChebyshevResult(value=float(math.exp(best)),
                           points=tuple(complex(R[i]) for i in arg),
                           bound=chebyshev_lower(abs(v - u), int(k)),
                           k=int(k), grid=int(grid), candidates=int(mw))
