"""Planar convex domains with analytic boundary data.

Every domain is a compact convex subset of the plane whose boundary is a
closed Jordan curve parametrized counterclockwise by t in [0, 1). The
catalogue shapes (disk, ellipse, lp ball, polygon, interval) carry
closed-form position / tangent / curvature / support data; generic domains
wrap user callables or CSV boundary samples and differentiate numerically.

Points are represented as complex numbers throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import config
from ..errors import (
    DegenerateDomainError,
    DescriptorError,
    GeometryInconsistencyError,
    ParameterError,
)
from ..scan import golden_min

TWO_PI = 2.0 * math.pi


def _wrap01(t):
    return np.mod(t, 1.0)


@dataclass
class BoundaryPoint:
    """Evaluated boundary datum.

    kappa is None at polygon vertices (curvature undefined there); it may be
    0.0 on flat sides and +inf at cusp-like points of lp balls with p < 2.
    """

    position: complex
    s: float
    t: float
    alpha: float
    normal: complex
    kappa: float | None


class ConvexDomain:
    """Base class; subclasses implement the parametrization and exact queries."""

    kind: str = "generic"
    degenerate: bool = False   # interval only
    has_flat_sides: bool = False

    def __init__(self):
        self._cache: dict = {}

    # -- parametrization ---------------------------------------------------
    def point(self, t):
        raise NotImplementedError

    def tangent(self, t):
        """d(point)/dt; speed need not be unit."""
        raise NotImplementedError

    def curvature(self, t):
        raise NotImplementedError

    # -- exact set queries -------------------------------------------------
    def support(self, theta):
        """h(theta) = max over K of <x, (cos theta, sin theta)>."""
        raise NotImplementedError

    def outside_margin(self, w: complex) -> float:
        """<= 0 inside, otherwise roughly the distance to K (never less)."""
        raise NotImplementedError

    def contains(self, w: complex, tol: float = config.CONTAINS_TOL) -> bool:
        return self.outside_margin(w) <= tol

    def project(self, w: complex) -> complex:
        """Nearest point of K (catalogue shapes) or a boundary retraction."""
        raise NotImplementedError

    def interior_anchor(self) -> complex:
        return 0.0 + 0.0j

    def descriptor(self) -> str:
        raise NotImplementedError

    def vertex_ts(self) -> np.ndarray:
        return np.empty(0)

    def scale(self) -> float:
        """Length scale (~diameter) used for relative tolerances."""
        key = "scale"
        if key not in self._cache:
            _, z = self.boundary_samples(256)
            self._cache[key] = 2.0 * float(np.max(np.abs(z - z.mean())))
        return self._cache[key]

    # -- arc length ---------------------------------------------------------
    def _arc_table(self, m: int = 8192):
        # midpoint rule: robust to integrable speed singularities at grid nodes
        key = ("arc", m)
        if key not in self._cache:
            t = np.linspace(0.0, 1.0, m + 1)
            sp_mid = np.abs(self.tangent((np.arange(m) + 0.5) / m))
            s = np.concatenate(([0.0], np.cumsum(sp_mid / m)))
            self._cache[key] = (t, s)
        return self._cache[key]

    def perimeter(self) -> float:
        return float(self._arc_table()[1][-1])

    def arclength(self, t):
        tt, ss = self._arc_table()
        return np.interp(_wrap01(t), tt, ss)

    def param_at_arclength(self, s):
        tt, ss = self._arc_table()
        return np.interp(np.mod(s, ss[-1]), ss, tt)

    # -- cached boundary sampling -------------------------------------------
    def boundary_samples(self, m: int):
        key = ("bs", m)
        if key not in self._cache:
            t = np.arange(m) / m
            self._cache[key] = (t, self.point(t))
        return self._cache[key]

    def boundary_samples_arclength(self, m: int):
        key = ("bsa", m)
        if key not in self._cache:
            s = np.arange(m) * (self.perimeter() / m)
            t = self.param_at_arclength(s)
            self._cache[key] = (s, t, self.point(t))
        return self._cache[key]


class Disk(ConvexDomain):
    kind = "disk"

    def __init__(self, r: float):
        super().__init__()
        if not (r > 0.0 and math.isfinite(r)):
            raise ParameterError(f"disk radius must be positive, got {r}")
        self.r = float(r)

    def descriptor(self) -> str:
        return f"disk:r={self.r:g}"

    def point(self, t):
        return self.r * np.exp(2j * math.pi * np.asarray(t, dtype=float))

    def tangent(self, t):
        return 2j * math.pi * self.point(t)

    def curvature(self, t):
        return np.full_like(np.asarray(t, dtype=float), 1.0 / self.r)

    def support(self, theta):
        return np.full_like(np.asarray(theta, dtype=float), self.r)

    def outside_margin(self, w: complex) -> float:
        return abs(w) - self.r

    def project(self, w: complex) -> complex:
        a = abs(w)
        if a <= self.r:
            return w
        return w * (self.r / a)

    def perimeter(self) -> float:
        return TWO_PI * self.r

    def arclength(self, t):
        return TWO_PI * self.r * _wrap01(t)

    def param_at_arclength(self, s):
        return np.mod(np.asarray(s, dtype=float) / (TWO_PI * self.r), 1.0)


class Ellipse(ConvexDomain):
    """Axis-aligned ellipse with horizontal semi-axis 1 and vertical b <= 1."""

    kind = "ellipse"

    def __init__(self, b: float):
        super().__init__()
        if not (0.0 < b <= 1.0):
            raise ParameterError(f"ellipse parameter must satisfy 0 < b <= 1, got {b}")
        self.b = float(b)

    def descriptor(self) -> str:
        return f"ellipse:b={self.b:g}"

    def point(self, t):
        phi = TWO_PI * np.asarray(t, dtype=float)
        return np.cos(phi) + 1j * self.b * np.sin(phi)

    def tangent(self, t):
        phi = TWO_PI * np.asarray(t, dtype=float)
        return TWO_PI * (-np.sin(phi) + 1j * self.b * np.cos(phi))

    def curvature(self, t):
        phi = TWO_PI * np.asarray(t, dtype=float)
        s, c = np.sin(phi), np.cos(phi)
        return self.b / (s * s + self.b * self.b * c * c) ** 1.5

    def support(self, theta):
        th = np.asarray(theta, dtype=float)
        return np.hypot(np.cos(th), self.b * np.sin(th))

    def gauge(self, w: complex) -> float:
        return math.hypot(w.real, w.imag / self.b)

    def outside_margin(self, w: complex) -> float:
        g = self.gauge(w)
        if g <= 1.0:
            return (g - 1.0) * self.b  # inside: scaled, sign only matters
        return abs(w) * (g - 1.0) / g  # distance along the ray, >= true distance

    def project(self, w: complex) -> complex:
        if self.gauge(w) <= 1.0:
            return w
        # symmetry: solve in the closed first quadrant, where the squared
        # distance is unimodal along the boundary arc
        xa, ya, b = abs(w.real), abs(w.imag), self.b

        def d2(phi):
            return (math.cos(phi) - xa) ** 2 + (b * math.sin(phi) - ya) ** 2

        phi, _ = golden_min(d2, 0.0, 0.5 * math.pi, iters=52)
        px, py = math.cos(phi), b * math.sin(phi)
        return complex(math.copysign(px, w.real), math.copysign(py, w.imag))


class LpBall(ConvexDomain):
    """{ |x|^p + |y/b|^p <= 1 } for 1 < p < inf, 0 < b <= 1."""

    kind = "lp"

    def __init__(self, p_exp: float, b: float = 1.0):
        super().__init__()
        if not (1.0 < p_exp < math.inf):
            raise ParameterError(f"lp exponent must satisfy 1 < p < inf, got {p_exp}")
        if not (0.0 < b <= 1.0):
            raise ParameterError(f"lp parameter must satisfy 0 < b <= 1, got {b}")
        self.p = float(p_exp)
        self.b = float(b)
        self.q = self.p / (self.p - 1.0)

    def descriptor(self) -> str:
        return f"lp:p={self.p:g},b={self.b:g}"

    def point(self, t):
        phi = TWO_PI * np.asarray(t, dtype=float)
        a = 2.0 / self.p
        c, s = np.cos(phi), np.sin(phi)
        x = np.sign(c) * np.abs(c) ** a
        y = self.b * np.sign(s) * np.abs(s) ** a
        return x + 1j * y

    def tangent(self, t):
        # speed vanishes (p < 2) or blows up integrably (p > 2) at the axes
        phi = TWO_PI * np.asarray(t, dtype=float)
        a = 2.0 / self.p
        c, s = np.cos(phi), np.sin(phi)
        with np.errstate(divide="ignore", invalid="ignore"):
            dx = -a * np.abs(c) ** (a - 1.0) * s
            dy = self.b * a * np.abs(s) ** (a - 1.0) * c
        # assemble via components: 1j * inf would inject spurious nans
        out = np.empty(np.shape(phi), dtype=complex)
        out.real, out.imag = TWO_PI * dx, TWO_PI * dy
        return out if out.shape else complex(out)

    def curvature(self, t):
        """Closed form from the parametrization x = sgn(c)|c|^(2/p), y = b sgn(s)|s|^(2/p)."""
        phi = TWO_PI * np.asarray(t, dtype=float)
        a = 2.0 / self.p
        c, s = np.abs(np.cos(phi)), np.abs(np.sin(phi))
        axis = (c < 1e-14) | (s < 1e-14)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            num = (self.p - 1.0) * self.b * (c * s) ** (a - 1.0)
            den = (c ** (2 * a - 2) * s * s
                   + self.b * self.b * s ** (2 * a - 2) * c * c) ** 1.5
            k = num / den
        if self.p != 2.0:
            # axis limits: infinite for p < 2 ("vertices"), zero for p > 2;
            # the p == 2 formula is already finite on the axes
            k = np.where(axis, np.inf if self.p < 2.0 else 0.0, k)
        return k

    def support(self, theta):
        th = np.asarray(theta, dtype=float)
        return (np.abs(np.cos(th)) ** self.q
                + (self.b * np.abs(np.sin(th))) ** self.q) ** (1.0 / self.q)

    def gauge(self, w: complex) -> float:
        return (abs(w.real) ** self.p + abs(w.imag / self.b) ** self.p) ** (1.0 / self.p)

    def outside_margin(self, w: complex) -> float:
        g = self.gauge(w)
        if g <= 1.0:
            return (g - 1.0) * self.b
        return abs(w) * (g - 1.0) / g

    def project(self, w: complex) -> complex:
        if self.gauge(w) <= 1.0:
            return w
        xa, ya, b, a = abs(w.real), abs(w.imag), self.b, 2.0 / self.p

        def d2(phi):
            c, s = math.cos(phi), math.sin(phi)
            return (c ** a - xa) ** 2 + (b * s ** a - ya) ** 2

        phi, _ = golden_min(d2, 0.0, 0.5 * math.pi, iters=52)
        c, s = math.cos(phi), math.sin(phi)
        return complex(math.copysign(c ** a, w.real),
                       math.copysign(b * s ** a, w.imag))


class Polygon(ConvexDomain):
    """Convex polygon from ccw vertices; parametrized proportionally to arc length."""

    kind = "polygon"
    has_flat_sides = True

    def __init__(self, vertices, kind: str | None = None, label: str | None = None):
        super().__init__()
        v = np.asarray(vertices, dtype=complex)
        if len(v) < 3:
            raise ParameterError("polygon needs at least 3 vertices")
        edges = np.roll(v, -1) - v
        cross = np.imag(np.conj(edges) * np.roll(edges, -1))
        if np.any(cross <= 0):
            raise GeometryInconsistencyError("vertices must be strictly convex ccw")
        self.vertices = v
        self.edges = edges
        self.edge_len = np.abs(edges)
        self._perim = float(self.edge_len.sum())
        self.cum = np.concatenate(([0.0], np.cumsum(self.edge_len))) / self._perim
        if kind:
            self.kind = kind
        self._label = label

    def descriptor(self) -> str:
        return self._label or "polygon"

    def point(self, t):
        t = np.atleast_1d(_wrap01(t))
        j = np.clip(np.searchsorted(self.cum, t, side="right") - 1, 0,
                    len(self.vertices) - 1)
        frac = (t - self.cum[j]) / (self.cum[j + 1] - self.cum[j])
        z = self.vertices[j] + frac * self.edges[j]
        return z if z.shape != (1,) else complex(z[0])

    def tangent(self, t):
        t = np.atleast_1d(_wrap01(t))
        j = np.clip(np.searchsorted(self.cum, t, side="right") - 1, 0,
                    len(self.vertices) - 1)
        # uniform-speed parametrization: |tangent| == perimeter
        z = self.edges[j] / self.edge_len[j] * self._perim
        return z if z.shape != (1,) else complex(z[0])

    def curvature(self, t):
        return np.zeros_like(np.asarray(t, dtype=float))

    def support(self, theta):
        th = np.atleast_1d(np.asarray(theta, dtype=float))
        u = np.exp(1j * th)
        h = np.max(np.real(np.conj(u)[:, None] * self.vertices[None, :]), axis=1)
        return h if h.shape != (1,) else float(h[0])

    def outside_margin(self, w: complex) -> float:
        # max signed distance over the edge half-planes (= dist(w, K) outside)
        n = self.edges / self.edge_len * -1j  # outward normals (ccw)
        return float(np.max(np.real(np.conj(n) * (w - self.vertices))))

    def project(self, w: complex) -> complex:
        if self.outside_margin(w) <= 0.0:
            return w
        rel = w - self.vertices
        frac = np.clip(np.real(np.conj(self.edges) * rel) / self.edge_len ** 2,
                       0.0, 1.0)
        cand = self.vertices + frac * self.edges
        return complex(cand[np.argmin(np.abs(cand - w))])

    def perimeter(self) -> float:
        return self._perim

    def arclength(self, t):
        return _wrap01(t) * self._perim

    def param_at_arclength(self, s):
        return np.mod(np.asarray(s, dtype=float) / self._perim, 1.0)

    def vertex_ts(self) -> np.ndarray:
        return self.cum[:-1].copy()

    def interior_anchor(self) -> complex:
        return complex(self.vertices.mean())

    def side_angles(self, j: int) -> float:
        e = self.edges[j]
        return math.atan2(e.imag, e.real)


def square_domain() -> Polygon:
    """The square with diagonal [-1, 1] (vertices at 1, i, -1, -i)."""
    return Polygon([1, 1j, -1, -1j], kind="square", label="square")


def regular_polygon(m: int, h: float) -> Polygon:
    """Regular m-gon with side length h, centered at the origin."""
    if m < 3:
        raise ParameterError(f"polygon needs m >= 3 sides, got {m}")
    if not (h > 0):
        raise ParameterError(f"side length must be positive, got {h}")
    rc = h / (2.0 * math.sin(math.pi / m))
    v = rc * np.exp(2j * math.pi * np.arange(m) / m)
    poly = Polygon(v, kind="regular_polygon", label=f"polygon:m={m},h={h:g}")
    poly.m = m
    poly.h = float(h)
    return poly


class Interval(ConvexDomain):
    """Degenerate domain [-L/2, L/2] on the real axis (width 0).

    Admitted only by operations that treat the interval explicitly
    (sup-norm scans, interval bounds, transfinite diameter); everything
    requiring nonempty interior raises DegenerateDomainError.
    """

    kind = "interval"
    degenerate = True
    has_flat_sides = True

    def __init__(self, length: float):
        super().__init__()
        if not (length > 0 and math.isfinite(length)):
            raise ParameterError(f"interval length must be positive, got {length}")
        self.length = float(length)

    def descriptor(self) -> str:
        return f"interval:L={self.length:g}"

    def point(self, t):
        # non-periodic sweep of the segment; used by sup-norm scans
        x = (np.asarray(t, dtype=float) - 0.5) * self.length
        return x + 0j

    def tangent(self, t):
        raise DegenerateDomainError("interval has no Jordan boundary curve")

    def curvature(self, t):
        raise DegenerateDomainError("curvature undefined for the interval")

    def support(self, theta):
        return 0.5 * self.length * np.abs(np.cos(np.asarray(theta, dtype=float)))

    def outside_margin(self, w: complex) -> float:
        # exact distance to the segment; 0 on it (the interval has no interior)
        return math.hypot(max(abs(w.real) - 0.5 * self.length, 0.0), w.imag)

    def project(self, w: complex) -> complex:
        return complex(min(max(w.real, -0.5 * self.length), 0.5 * self.length), 0.0)

    def boundary_samples(self, m: int):
        key = ("bs", m)
        if key not in self._cache:
            t = np.linspace(0.0, 1.0, m)
            self._cache[key] = (t, self.point(t))
        return self._cache[key]


class GenericDomain(ConvexDomain):
    """Boundary given as callables; derivatives fall back to finite differences.

    point_fn must be vectorized over the parameter (period 1, ccw). When
    tangent/curvature callables are omitted they are approximated by central
    differences with steps FD_TANGENT_STEP (first derivative) and
    FD_CURVATURE_STEP (second derivative) in parameter units.
    """

    kind = "generic"

    def __init__(self, point_fn, tangent_fn=None, curvature_fn=None,
                 label: str = "generic", samples: int = 2048, validate: bool = True):
        super().__init__()
        self._point_fn = point_fn
        self._tangent_fn = tangent_fn
        self._curvature_fn = curvature_fn
        self._label = label
        self._m = int(samples)
        if validate:
            self._validate_convexity()

    @classmethod
    def from_csv(cls, path: str, label: str | None = None) -> "GenericDomain":
        """Boundary from a CSV of (t, x, y) samples, one header line, LF endings.

        One full ccw traversal without repeating the first point; a periodic
        cubic spline interpolates through the samples and supplies analytic
        derivatives.
        """
        from scipy.interpolate import CubicSpline

        data = np.loadtxt(path, delimiter=",", skiprows=1, dtype=float)
        if data.ndim != 2 or data.shape[1] < 3 or data.shape[0] < 8:
            raise DescriptorError(f"boundary file {path!r} must hold >= 8 rows of t,x,y")
        tv, xv, yv = data[:, 0], data[:, 1], data[:, 2]
        if np.any(np.diff(tv) <= 0):
            raise DescriptorError("boundary file parameter column must increase")
        gap = float(np.median(np.diff(tv)))
        t_ext = np.concatenate((tv, [tv[-1] + gap]))
        x_ext = np.concatenate((xv, [xv[0]]))
        y_ext = np.concatenate((yv, [yv[0]]))
        sx = CubicSpline(t_ext, x_ext, bc_type="periodic")
        sy = CubicSpline(t_ext, y_ext, bc_type="periodic")
        dsx, dsy = sx.derivative(), sy.derivative()
        d2x, d2y = dsx.derivative(), dsy.derivative()
        period = t_ext[-1] - t_ext[0]
        t0 = t_ext[0]

        def to_u(t):
            return t0 + np.mod(np.asarray(t, dtype=float), 1.0) * period

        def pf(t):
            u = to_u(t)
            return sx(u) + 1j * sy(u)

        def tf(t):
            u = to_u(t)
            return (dsx(u) + 1j * dsy(u)) * period

        def kf(t):
            u = to_u(t)
            d1 = dsx(u) + 1j * dsy(u)
            d2 = d2x(u) + 1j * d2y(u)
            sp = np.abs(d1)
            return np.imag(np.conj(d1) * d2) / sp ** 3

        return cls(pf, tf, kf, label=label or "generic:file")

    def descriptor(self) -> str:
        return self._label

    def point(self, t):
        return self._point_fn(np.asarray(t, dtype=float))

    def tangent(self, t):
        if self._tangent_fn is not None:
            return self._tangent_fn(np.asarray(t, dtype=float))
        h = config.FD_TANGENT_STEP
        t = np.asarray(t, dtype=float)
        return (self._point_fn(t + h) - self._point_fn(t - h)) / (2.0 * h)

    def curvature(self, t):
        if self._curvature_fn is not None:
            return self._curvature_fn(np.asarray(t, dtype=float))
        t = np.asarray(t, dtype=float)
        d1 = self.tangent(t)
        h = config.FD_CURVATURE_STEP
        if self._tangent_fn is not None:
            d2 = (self._tangent_fn(t + h) - self._tangent_fn(t - h)) / (2.0 * h)
        else:
            d2 = (self._point_fn(t + h) - 2.0 * self._point_fn(t)
                  + self._point_fn(t - h)) / (h * h)
        sp = np.abs(d1)
        return np.imag(np.conj(d1) * d2) / sp ** 3

    def interior_anchor(self) -> complex:
        key = "anchor"
        if key not in self._cache:
            _, z = self.boundary_samples(self._m)
            self._cache[key] = complex(z.mean())
        return self._cache[key]

    def _support_grid(self, m: int = 720):
        key = ("hgrid", m)
        if key not in self._cache:
            th = np.arange(m) * (TWO_PI / m)
            _, z = self.boundary_samples(self._m)
            h = np.max(np.real(np.exp(-1j * th)[:, None] * z[None, :]), axis=1)
            self._cache[key] = (th, h)
        return self._cache[key]

    def support(self, theta):
        """Support function from cached samples.

        Scalar queries are golden-refined on the underlying callable; array
        queries return the sample maximum (used for coarse basin scans whose
        extrema are re-refined through the scalar path).
        """
        if np.ndim(theta):
            th = np.asarray(theta, dtype=float)
            _, z = self.boundary_samples(self._m)
            u = np.exp(-1j * th)
            return np.max(np.real(u[:, None] * z[None, :]), axis=1)
        ts, z = self.boundary_samples(self._m)
        u = complex(math.cos(theta), math.sin(theta))
        proj = np.real(np.conj(u) * z)
        j = int(np.argmax(proj))

        def f(t):
            return -float(np.real(np.conj(u) * self._point_fn(np.mod(t, 1.0))))

        a, b = ts[j] - 1.0 / self._m, ts[j] + 1.0 / self._m
        _, fmin = golden_min(f, a, b, iters=50)
        return max(-fmin, float(proj[j]))

    def outside_margin(self, w: complex) -> float:
        th, h = self._support_grid()
        viol = np.real(np.exp(-1j * th) * w) - h
        return float(np.max(viol))

    def project(self, w: complex) -> complex:
        """Bisection along the ray from the interior anchor to w."""
        if self.outside_margin(w) <= 0.0:
            return w
        a = self.interior_anchor()
        lo, hi = 0.0, 1.0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if self.outside_margin(a + mid * (w - a)) <= 0.0:
                lo = mid
            else:
                hi = mid
        return a + lo * (w - a)

    def _validate_convexity(self, samples: int = 512):
        # ccw convexity <=> consecutive chord cross products all nonnegative
        _, z = self.boundary_samples(samples)
        e = np.roll(z, -1) - z
        cross = np.imag(np.conj(e) * np.roll(e, -1))
        lim = -1e-9 * float(np.max(np.abs(cross)))
        if np.any(cross < lim):
            worst = float(cross.min())
            raise GeometryInconsistencyError(
                f"boundary is not a ccw convex curve (worst chord turn {worst:.3e})")


def transform_domain(K: ConvexDomain, rotate: float = 0.0,
                     translate: complex = 0.0 + 0.0j,
                     scale: float = 1.0) -> GenericDomain:
    """Rigid motion + dilation of K as a generic domain (analytic callables)."""
    if K.degenerate:
        raise DegenerateDomainError("cannot transform the degenerate interval")
    if not (scale > 0):
        raise ParameterError(f"scale must be positive, got {scale}")
    rot = complex(math.cos(rotate), math.sin(rotate)) * scale

    def pf(t):
        return K.point(t) * rot + translate

    def tf(t):
        return K.tangent(t) * rot

    def kf(t):
        return K.curvature(t) / scale

    label = f"generic:{K.descriptor()}|rot={rotate:g},scale={scale:g}"
    return GenericDomain(pf, tf, kf, label=label, validate=False)


# ---------------------------------------------------------------------------
# Descriptor mini-language
# ---------------------------------------------------------------------------

_DESCRIPTOR_HELP = (
    "disk:r=<f> | ellipse:b=<f> | lp:p=<f>,b=<f> | square | "
    "polygon:m=<int>,h=<f> | interval:L=<f> | generic:file=<path>"
)


def _parse_kv(body: str, spec: dict[str, type], what: str) -> dict:
    out = {}
    if body:
        for item in body.split(","):
            if "=" not in item:
                raise DescriptorError(f"malformed {what} parameter {item!r}")
            k, v = item.split("=", 1)
            k = k.strip()
            if k not in spec:
                raise DescriptorError(f"unknown {what} parameter {k!r}")
            try:
                out[k] = spec[k](v)
            except ValueError as exc:
                raise DescriptorError(f"bad value for {what} parameter {k!r}: {v!r}") from exc
    return out


def make_domain(descriptor) -> ConvexDomain:
    """Build a domain from the descriptor mini-language (see _DESCRIPTOR_HELP)."""
    if isinstance(descriptor, ConvexDomain):
        return descriptor
    if not isinstance(descriptor, str):
        raise DescriptorError(f"descriptor must be a string, got {type(descriptor)!r}")
    text = descriptor.strip()
    head, _, body = text.partition(":")
    head = head.strip().lower()
    if head == "disk":
        kv = _parse_kv(body, {"r": float}, "disk")
        if "r" not in kv:
            raise DescriptorError("disk descriptor needs r=<f>")
        return Disk(kv["r"])
    if head == "ellipse":
        kv = _parse_kv(body, {"b": float}, "ellipse")
        if "b" not in kv:
            raise DescriptorError("ellipse descriptor needs b=<f>")
        return Ellipse(kv["b"])
    if head == "lp":
        kv = _parse_kv(body, {"p": float, "b": float}, "lp")
        if "p" not in kv:
            raise DescriptorError("lp descriptor needs p=<f>[,b=<f>]")
        return LpBall(kv["p"], kv.get("b", 1.0))
    if head == "square":
        if body:
            raise DescriptorError("square takes no parameters")
        return square_domain()
    if head == "polygon":
        kv = _parse_kv(body, {"m": int, "h": float}, "polygon")
        if "m" not in kv or "h" not in kv:
            raise DescriptorError("polygon descriptor needs m=<int>,h=<f>")
        return regular_polygon(kv["m"], kv["h"])
    if head == "interval":
        kv = _parse_kv(body, {"L": float}, "interval")
        if "L" not in kv:
            raise DescriptorError("interval descriptor needs L=<f>")
        return Interval(kv["L"])
    if head == "generic":
        kv = _parse_kv(body, {"file": str}, "generic")
        if "file" not in kv:
            raise DescriptorError("generic descriptor needs file=<path>")
        return GenericDomain.from_csv(kv["file"])
    raise DescriptorError(f"unknown domain kind {head!r}; expected one of: {_DESCRIPTOR_HELP}")


# ---------------------------------------------------------------------------
# Boundary point evaluation
# ---------------------------------------------------------------------------

def boundary_point(K: ConvexDomain, t: float) -> BoundaryPoint:
    """Evaluate position, arc length, tangent angle, outward normal, curvature.

    At a polygon vertex the tangent angle is the mid-angle of the adjacent
    sides and the curvature is reported as absent (None).
    """
    if K.degenerate:
        raise DegenerateDomainError("boundary_point requires nonempty interior")
    t = float(_wrap01(t))
    if isinstance(K, Polygon):
        vts = K.vertex_ts()
        near = np.flatnonzero(np.minimum(np.abs(vts - t), 1.0 - np.abs(vts - t)) < 1e-12)
        if near.size:
            j = int(near[0])
            a_prev = K.side_angles(j - 1 if j > 0 else len(K.vertices) - 1)
            a_next = K.side_angles(j)
            # unwrap so the jump is the (positive) exterior angle
            while a_next < a_prev:
                a_next += TWO_PI
            alpha = 0.5 * (a_prev + a_next)
            normal = complex(math.cos(alpha - 0.5 * math.pi),
                             math.sin(alpha - 0.5 * math.pi))
            return BoundaryPoint(position=complex(K.point(t)), s=float(K.arclength(t)),
                                 t=t, alpha=alpha, normal=normal, kappa=None)
    pos = complex(K.point(t))
    tan = complex(K.tangent(t))
    sp = abs(tan)
    if not (sp > 0 and math.isfinite(sp)):
        # parametrization speed degenerates (lp-ball axis points); the C^1
        # boundary still has a tangent direction: take the chord limit
        h = 1e-7
        tan = complex(K.point(t + h)) - complex(K.point(t - h))
        sp = abs(tan)
        if not (sp > 0 and math.isfinite(sp)):
            raise GeometryInconsistencyError(f"degenerate tangent at t={t}")
    alpha = math.atan2(tan.imag, tan.real)
    unit = tan / sp
    normal = unit * -1j  # outward for ccw traversal
    kap = float(K.curvature(t))
    return BoundaryPoint(position=pos, s=float(K.arclength(t)), t=t,
                         alpha=alpha, normal=normal, kappa=kap)
