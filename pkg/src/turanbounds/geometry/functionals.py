"""Geometric functionals of convex domains.

Diameter and minimal width come from dense angular sampling of the support
function plus golden-section refinement; curvature extrema, enclosing
tangent-disk radii and the pointwise lower-bound constant come from boundary
scans with the diagonal spliced in from the curvature limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import config
from ..errors import DegenerateDomainError, GeometryInconsistencyError, ParameterError
from ..scan import refine_extremum, scan_extremum
from .domains import (
    BoundaryPoint,
    ConvexDomain,
    Disk,
    Ellipse,
    Interval,
    LpBall,
    Polygon,
    boundary_point,
)

TWO_PI = 2.0 * math.pi


def _cached(K: ConvexDomain, key, fn):
    if key not in K._cache:
        K._cache[key] = fn()
    return K._cache[key]


# ---------------------------------------------------------------------------
# Diameter and minimal width
# ---------------------------------------------------------------------------

def _width_fn(K: ConvexDomain):
    def w_vec(theta):
        return np.asarray(K.support(theta), dtype=float) \
            + np.asarray(K.support(np.asarray(theta) + math.pi), dtype=float)

    def w_scalar(theta):
        return float(K.support(theta)) + float(K.support(theta + math.pi))

    return w_vec, w_scalar


def diameter(K: ConvexDomain, samples: int = 2048) -> float:
    """Largest extent over directions: max_theta h(theta) + h(theta + pi)."""
    def compute():
        w_vec, w_scalar = _width_fn(K)
        res = scan_extremum(w_vec, w_scalar, 0.0, math.pi, samples,
                            mode="max", periodic=True)
        val = res.value
        if isinstance(K, Polygon):
            # exact candidate: farthest vertex pair
            v = K.vertices
            val = max(val, float(np.max(np.abs(v[:, None] - v[None, :]))))
        return val
    return _cached(K, ("diameter", samples), compute)


def min_width(K: ConvexDomain, samples: int = 2048) -> float:
    """Smallest distance between parallel supporting lines (0 for the interval)."""
    if K.degenerate:
        return 0.0

    def compute():
        w_vec, w_scalar = _width_fn(K)
        res = scan_extremum(w_vec, w_scalar, 0.0, math.pi, samples,
                            mode="min", periodic=True)
        val = res.value
        if isinstance(K, Polygon):
            # candidate directions: the edge normals
            for j in range(len(K.vertices)):
                val = min(val, w_scalar(K.side_angles(j) + 0.5 * math.pi))
        return val
    return _cached(K, ("min_width", samples), compute)


# ---------------------------------------------------------------------------
# Curvature
# ---------------------------------------------------------------------------

def curvature_min(K: ConvexDomain, samples: int = config.GEOMETRY_SAMPLES) -> float:
    """Essential infimum of boundary curvature (vertices excluded); 0 on polygons."""
    if K.degenerate:
        raise DegenerateDomainError("curvature_min requires nonempty interior")
    if isinstance(K, Polygon):
        return 0.0
    if isinstance(K, Disk):
        return 1.0 / K.r
    if isinstance(K, Ellipse):
        return K.b
    if isinstance(K, LpBall) and K.p > 2.0:
        return 0.0  # curvature vanishes at the axis points

    def compute():
        t = np.arange(samples) / samples
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            fv = np.asarray(K.curvature(t), dtype=float)
        fv = np.where(np.isnan(fv), np.inf, fv)

        def f(x):
            v = float(K.curvature(np.mod(x, 1.0)))
            return np.inf if math.isnan(v) else v

        res = refine_extremum(f, t, fv, mode="min", periodic=True, period=1.0)
        return res.value
    return _cached(K, ("curvature_min", samples), compute)


def lp_curvature(p_exp: float, b: float, x: float) -> float:
    """Curvature of { |x|^p + |y/b|^p = 1 } at first-quadrant abscissa x.

    Graph form y(x) = b (1 - x^p)^(1/p):

        kappa(x) = (p-1) b x^(p-2) (1-x^p)^(1/p-2)
                   / (1 + b^2 x^(2p-2) (1-x^p)^(2/p-2))^(3/2)

    Endpoints are handled by their limits (infinite for p < 2, zero for
    p > 2, the ellipse values for p = 2).
    """
    if not (1.0 < p_exp < math.inf):
        raise ParameterError(f"exponent must satisfy 1 < p < inf, got {p_exp}")
    if not (0.0 < b <= 1.0):
        raise ParameterError(f"aspect must satisfy 0 < b <= 1, got {b}")
    if not (0.0 <= x <= 1.0):
        raise ParameterError(f"x must lie in [0, 1], got {x}")
    p = float(p_exp)
    if x in (0.0, 1.0):
        if p < 2.0:
            return math.inf
        if p > 2.0:
            return 0.0
        return b if x == 0.0 else 1.0 / (b * b)
    u = 1.0 - x ** p
    num = (p - 1.0) * b * x ** (p - 2.0) * u ** (1.0 / p - 2.0)
    den = (1.0 + b * b * x ** (2.0 * p - 2.0) * u ** (2.0 / p - 2.0)) ** 1.5
    return num / den


# ---------------------------------------------------------------------------
# Tangent angle profile and the subdifferential criterion
# ---------------------------------------------------------------------------

@dataclass
class TangentProfile:
    """Samples (s, alpha-, alpha+) of the tangent angle along arc length.

    Includes a closing row at s = perimeter whose angles are lifted by 2*pi;
    rows with s < perimeter describe one traversal.
    """

    s: np.ndarray
    alpha_minus: np.ndarray
    alpha_plus: np.ndarray

    def __iter__(self):
        yield from zip(self.s, self.alpha_minus, self.alpha_plus)

    def __len__(self) -> int:
        return len(self.s)

    @property
    def total_increase(self) -> float:
        return float(self.alpha_plus[-1] - self.alpha_plus[0])

    def jumps(self, tol: float = config.VERTEX_ANGLE_TOL) -> np.ndarray:
        d = self.alpha_plus[:-1] - self.alpha_minus[:-1]
        return d[d > tol]


def tangent_angle_profile(K: ConvexDomain, m: int) -> TangentProfile:
    """Monotone profile of the tangent direction; vertex jumps are exterior angles."""
    if K.degenerate:
        raise DegenerateDomainError("tangent profile requires a Jordan boundary")
    if m < 8:
        raise ParameterError(f"need m >= 8 samples, got {m}")
    L = K.perimeter()
    if isinstance(K, Polygon):
        nv = len(K.vertices)
        raw = np.array([K.side_angles(j) for j in range(nv)])
        A = np.empty(nv)
        A[0] = raw[0]
        for j in range(1, nv):
            A[j] = A[j - 1] + (raw[j] - raw[j - 1]) % TWO_PI
        ext0 = (raw[0] - raw[-1]) % TWO_PI
        sv = K.cum * L  # vertex arc positions, cum[-1] == 1
        rows = [(sv[0], A[0] - ext0, A[0])]
        per_side = max(2, m // nv)
        for j in range(nv):
            inner = np.linspace(sv[j], sv[j + 1], per_side + 2)[1:-1]
            rows.extend((s, A[j], A[j]) for s in inner)
            if j + 1 < nv:
                rows.append((sv[j + 1], A[j], A[j + 1]))
        rows.append((L, A[-1], A[0] + TWO_PI))
        arr = np.array(rows)
        return TangentProfile(arr[:, 0], arr[:, 1], arr[:, 2])
    s = np.arange(m + 1) * (L / m)
    t = np.asarray(K.param_at_arclength(s[:-1]), dtype=float)
    tan = np.asarray(K.tangent(t), dtype=complex)
    bad = ~np.isfinite(tan.real) | ~np.isfinite(tan.imag) | (np.abs(tan) == 0.0)
    for i in np.flatnonzero(bad):
        # degenerate parametrization speed: chord limit of the C^1 tangent
        h = 1e-7
        tan[i] = complex(K.point(t[i] + h)) - complex(K.point(t[i] - h))
    alpha = np.unwrap(np.angle(tan))
    alpha = np.concatenate((alpha, [alpha[0] + TWO_PI]))
    return TangentProfile(s, alpha.copy(), alpha.copy())


@dataclass
class SubdifferentialReport:
    ok: bool
    lam: float
    min_quotient: float
    worst_pair: tuple[float, float]


def check_subdifferential(K: ConvexDomain, lam: float, m: int = 512) -> SubdifferentialReport:
    """Check alpha(y) - alpha(x) >= lam * (y - x) over all sampled arc pairs.

    Equivalent to curvature >= lam almost everywhere; returns the pair
    minimizing the difference quotient.
    """
    if lam <= 0:
        raise ParameterError(f"lambda must be positive, got {lam}")
    prof = tangent_angle_profile(K, m)
    s, am, ap = prof.s[:-1], prof.alpha_minus[:-1], prof.alpha_plus[:-1]
    ds = s[None, :] - s[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        q = (am[None, :] - ap[:, None]) / ds
    q[ds <= 0] = np.inf
    flat = q.reshape(-1)
    k = int(np.argmin(flat))
    i, j = divmod(k, len(s))
    mq = float(flat[k])
    return SubdifferentialReport(ok=mq >= lam - 1e-12 * max(1.0, lam), lam=lam,
                                 min_quotient=mq, worst_pair=(float(s[i]), float(s[j])))


# ---------------------------------------------------------------------------
# Enclosing tangent disks and the pointwise constant
# ---------------------------------------------------------------------------

def _pair_scan(K: ConvexDomain, bp: BoundaryPoint, samples: int, band: float):
    """Shared boundary-pair data for r_needed / pointwise constant.

    Returns (s_off, t_off, dist2, denom, flat) over off-diagonal samples,
    where denom = <z - w, n> and flat means some far point has cos(alpha)
    numerically zero (no finite enclosing tangent disk at z).
    """
    L = K.perimeter()
    band_len = band * L
    s_all, t_all, w_all = K.boundary_samples_arclength(samples)
    dsr = np.abs(s_all - bp.s)
    ds = np.minimum(dsr, L - dsr)
    off = ds >= band_len
    zw = bp.position - w_all[off]
    dist = np.abs(zw)
    denom = np.real(np.conj(bp.normal) * zw)
    scale = K.scale()
    if np.any(denom < -1e-9 * scale):
        k = int(np.argmin(denom))
        raise GeometryInconsistencyError(
            f"normal at s={bp.s:.6g} fails to support the domain "
            f"(worst violation {float(denom.min()):.3e})")
    cosa = denom / np.maximum(dist, 1e-300)
    flat = bool(np.any(cosa <= 1e-12))
    return s_all[off], t_all[off], dist, denom, flat


def r_needed(K: ConvexDomain, bp: BoundaryPoint,
             samples: int = config.GEOMETRY_SAMPLES,
             band: float = config.DIAGONAL_BAND,
             refine: bool = True) -> float:
    """Minimal radius R such that the disk tangent at bp (inward) contains K.

    sup over boundary points w != z of |z - w|^2 / (2 <z - w, n>), with the
    diagonal limit spliced in from the curvature radius. +inf when the
    boundary is flat against the supporting line at z.
    """
    if K.degenerate:
        raise DegenerateDomainError("r_needed requires nonempty interior")
    _, t_off, dist, denom, flat = _pair_scan(K, bp, samples, band)
    if flat:
        return math.inf
    rho = None
    if bp.kappa is not None:
        rho = math.inf if bp.kappa == 0 else 1.0 / bp.kappa
        if rho == math.inf:
            return math.inf
    with np.errstate(divide="ignore"):
        ratios = dist * dist / (2.0 * denom)

    if refine:
        L = K.perimeter()
        band_len = band * L

        def f(t):
            t = np.mod(t, 1.0)
            dsr = abs(float(K.arclength(t)) - bp.s)
            if min(dsr, L - dsr) < band_len:
                return -math.inf  # keep refinement out of the diagonal band
            w = complex(K.point(t))
            d = bp.position - w
            den = (np.conj(bp.normal) * d).real
            if den <= 0.0:
                return -math.inf
            return abs(d) ** 2 / (2.0 * den)

        best = refine_extremum(f, t_off, ratios, mode="max", periodic=False).value
    else:
        best = float(np.max(ratios))
    if rho is not None:
        best = max(best, rho)
    return float(best)


def pointwise_turan_constant(K: ConvexDomain, bp: BoundaryPoint,
                             samples: int = config.GEOMETRY_SAMPLES,
                             band: float = config.DIAGONAL_BAND) -> float:
    """c(z) = inf over w of cos(alpha) / |z - w|, diagonal extension kappa/2.

    Every root in K contributes at least c(z) to Re(e^{i phi} p'/p) at z, so
    |p'(z)| >= n c(z) |p(z)|. Satisfies c(z) * 2 * r_needed(z) = 1.
    """
    if K.degenerate:
        raise DegenerateDomainError("pointwise constant requires nonempty interior")
    _, t_off, dist, denom, flat = _pair_scan(K, bp, samples, band)
    if flat:
        return 0.0
    vals = denom / (dist * dist)
    L = K.perimeter()
    band_len = band * L

    def f(t):
        t = np.mod(t, 1.0)
        dsr = abs(float(K.arclength(t)) - bp.s)
        if min(dsr, L - dsr) < band_len:
            return math.inf
        w = complex(K.point(t))
        d = bp.position - w
        den = (np.conj(bp.normal) * d).real
        if den <= 0.0:
            return math.inf
        return den / abs(d) ** 2

    res = refine_extremum(f, t_off, vals, mode="min", periodic=False)
    best = res.value
    if bp.kappa is not None:
        best = min(best, 0.5 * bp.kappa)
    return float(best)


def circularity_radius(K: ConvexDomain,
                       samples: int = config.GEOMETRY_SAMPLES,
                       outer_samples: int = 512) -> float:
    """Smallest R such that K is R-circular; +inf for flat domains.

    Supremum over boundary points z of r_needed(K, z). For smooth strictly
    convex domains this equals 1/curvature_min (rolling-ball identity); an
    enclosing tangent disk of radius R forces rho(z) <= R, so a vanishing
    curvature minimum already implies flatness.
    """
    if K.degenerate or K.has_flat_sides:
        return math.inf
    if curvature_min(K) <= 0.0:
        return math.inf

    def compute():
        def f_coarse(t):
            return r_needed(K, boundary_point(K, float(np.mod(t, 1.0))),
                            samples=samples, refine=False)

        def f(t):
            return r_needed(K, boundary_point(K, float(np.mod(t, 1.0))),
                            samples=samples)

        # offset grid keeps clear of parametrization-degenerate axis points
        t = (np.arange(outer_samples) + 0.5) / outer_samples
        fv = np.array([f_coarse(x) for x in t])
        if np.any(np.isposinf(fv)):
            return math.inf
        res = refine_extremum(f, t, fv, mode="max", periodic=True, period=1.0,
                              iters=40)
        return float(res.value)
    return _cached(K, ("circularity", samples, outer_samples), compute)


# ---------------------------------------------------------------------------
# Transfinite diameter
# ---------------------------------------------------------------------------

def _regular_polygon_transfinite(m: int, h: float) -> float:
    g = math.gamma
    return g(1.0 / m) / (math.sqrt(math.pi) * 2.0 ** (1.0 + 2.0 / m)
                         * g(0.5 + 1.0 / m)) * h


def fekete_estimate(K: ConvexDomain, n_points: int = 64, grid: int = 2048,
                    passes: int = 6) -> float:
    """Transfinite-diameter estimate from near-Fekete boundary points.

    Greedy point insertion followed by exchange passes on a fixed boundary
    grid; returns the (N-point) pairwise geometric mean distance. Converges
    from above roughly like N^(1/(N-1)), i.e. a few percent high at the
    default budget — an estimate, not a certified value.
    """
    _, z = K.boundary_samples(grid)
    n_points = min(n_points, grid // 4)

    def logsum(points):
        with np.errstate(divide="ignore"):
            s = np.log(np.abs(z[:, None] - np.asarray(points)[None, :])).sum(axis=1)
        return s

    with np.errstate(divide="ignore"):
        start = int(np.argmax(np.abs(z - z.mean())))
        chosen = [start]
        tot = np.log(np.abs(z - z[start]))
        for _ in range(n_points - 1):
            i = int(np.argmax(tot))
            chosen.append(i)
            with np.errstate(divide="ignore"):
                tot = tot + np.log(np.abs(z - z[i]))
    for _ in range(passes):
        moved = False
        for k in range(n_points):
            others = chosen[:k] + chosen[k + 1:]
            wo = logsum(z[others])
            i = int(np.argmax(wo))
            if i != chosen[k] and wo[i] > wo[chosen[k]] + 1e-12:
                chosen[k] = i
                moved = True
        if not moved:
            break
    pts = z[chosen]
    d = np.abs(pts[:, None] - pts[None, :])
    iu = np.triu_indices(n_points, 1)
    return float(np.exp(np.log(d[iu]).mean()))


def transfinite_diameter_info(K: ConvexDomain) -> dict:
    """Transfinite diameter with the provenance of the value."""
    if isinstance(K, Disk):
        return {"value": K.r, "method": "closed_form"}
    if isinstance(K, Interval):
        return {"value": K.length / 4.0, "method": "closed_form"}
    if isinstance(K, Polygon) and K.kind in ("square", "regular_polygon"):
        m = len(K.vertices)
        h = float(K.edge_len[0])
        return {"value": _regular_polygon_transfinite(m, h), "method": "closed_form"}
    if isinstance(K, Ellipse):
        # standard capacity of an ellipse with semi-axes (1, b); external fact
        return {"value": 0.5 * (1.0 + K.b), "method": "external_fact"}
    return {"value": _cached(K, "fekete", lambda: fekete_estimate(K)),
            "method": "fekete_estimate"}


def transfinite_diameter(K: ConvexDomain) -> float:
    return float(transfinite_diameter_info(K)["value"])


def flat_side_lengths(K: ConvexDomain) -> list[float]:
    """Lengths of straight boundary pieces (empty for strictly convex domains)."""
    if isinstance(K, Polygon):
        return [float(x) for x in K.edge_len]
    if isinstance(K, Interval):
        return [K.length]
    return []
