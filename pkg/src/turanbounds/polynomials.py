"""Root-form polynomials, stable sup-norm evaluation and the Markov factor.

Polynomials are kept as a leading coefficient plus the multiset of roots;
all evaluation happens in log scale so that root pileups and high degrees
stay well conditioned. The extremal configurations of interest have roots
ON the boundary being scanned, so the derivative switches to a
leave-one-out log-sum-exp path within eps_root of any root.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import config
from .errors import NearRootError, ParameterError, RootContainmentError
from .geometry.domains import ConvexDomain, Interval
from .kernels import polyeval_boundary
from .scan import refine_extremum

# log value above which the linear sup-norm overflows a double
_OVERFLOW_LOG = math.log(np.finfo(float).max) - 1.0


@dataclass
class RootPolynomial:
    """p(z) = lead * prod_k (z - roots[k]); degree n = len(roots) >= 1."""

    lead: complex
    roots: np.ndarray

    def __post_init__(self):
        self.roots = np.atleast_1d(np.asarray(self.roots, dtype=complex))
        self.lead = complex(self.lead)
        if self.roots.size < 1:
            raise ParameterError("polynomial needs at least one root (degree >= 1)")
        if self.lead == 0:
            raise ParameterError("leading coefficient must be nonzero")

    @property
    def n(self) -> int:
        return int(self.roots.size)

    @property
    def eps_root(self) -> float:
        """Root-proximity switch: EPS_ROOT_FRACTION of the root-set diameter."""
        if self.roots.size == 1:
            return 0.0
        d = float(np.max(np.abs(self.roots[:, None] - self.roots[None, :])))
        return config.EPS_ROOT_FRACTION * d

    # -- JSON wire format ---------------------------------------------------
    def to_json(self) -> str:
        obj = {"lead": [self.lead.real, self.lead.imag],
               "roots": [[z.real, z.imag] for z in self.roots]}
        return json.dumps(obj)

    @classmethod
    def from_json(cls, text: str) -> "RootPolynomial":
        obj = json.loads(text)
        try:
            lead = complex(obj["lead"][0], obj["lead"][1])
            roots = [complex(r[0], r[1]) for r in obj["roots"]]
        except (KeyError, TypeError, IndexError) as exc:
            raise ParameterError(f"malformed polynomial JSON: {exc}") from exc
        return cls(lead, np.array(roots))

    @classmethod
    def from_file(cls, path: str) -> "RootPolynomial":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(fh.read())


def one_plus_zn(n: int, r: float = 1.0) -> RootPolynomial:
    """1 + (z/r)^n in root form: roots at the n-th roots of -r^n."""
    k = np.arange(n)
    return RootPolynomial(r ** (-float(n)),
                          r * np.exp(1j * math.pi * (2.0 * k + 1.0) / n))


def interval_power(m: int, half_length: float = 1.0) -> RootPolynomial:
    """(1 - (x/a)^2)^m as a degree-2m root polynomial with roots +-a."""
    a = half_length
    roots = np.concatenate((np.full(m, a, dtype=complex),
                            np.full(m, -a, dtype=complex)))
    return RootPolynomial((-1.0 / (a * a)) ** m, roots)


# ---------------------------------------------------------------------------
# Pointwise evaluation
# ---------------------------------------------------------------------------

def log_abs(p: RootPolynomial, z) -> float | np.ndarray:
    """log|p(z)|; exactly -inf at roots. Vectorized over z."""
    za = np.atleast_1d(np.asarray(z, dtype=complex))
    with np.errstate(divide="ignore"):
        out = math.log(abs(p.lead)) + np.log(
            np.abs(za[:, None] - p.roots[None, :])).sum(axis=1)
    return out if np.ndim(z) else float(out[0])


def log_deriv_sum(p: RootPolynomial, z: complex) -> complex:
    """S(z) = sum_k 1/(z - roots[k]), so |p'(z)| = |p(z)| |S(z)|.

    Raises NearRootError within eps_root of a root; abs_derivative falls back
    to the leave-one-out path there.
    """
    z = complex(z)
    d = z - p.roots
    mind = float(np.min(np.abs(d)))
    if mind <= p.eps_root or mind == 0.0:
        raise NearRootError(
            f"z within eps_root={p.eps_root:.3e} of a root; use abs_derivative")
    return complex(np.sum(1.0 / d))


def log_abs_derivative(p: RootPolynomial, z) -> float | np.ndarray:
    """log|p'(z)|, stable arbitrarily close to (and at) roots."""
    za = np.atleast_1d(np.asarray(z, dtype=complex))
    _, logdp = polyeval_boundary(za, p.roots, p.lead, p.eps_root)
    return logdp if np.ndim(z) else float(logdp[0])


def abs_derivative(p: RootPolynomial, z) -> float | np.ndarray:
    out = np.exp(log_abs_derivative(p, np.atleast_1d(np.asarray(z, dtype=complex))))
    return out if np.ndim(z) else float(out[0])


# ---------------------------------------------------------------------------
# Sup norms over a domain boundary
# ---------------------------------------------------------------------------

@dataclass
class SupNorm:
    """Sup-norm scan result in log and linear scale with argmax diagnostics."""

    log_value: float
    value: float
    overflow: bool
    arg_t: float
    arg_point: complex
    scan_error: float = field(default=0.0)


def _scan(p: RootPolynomial, K: ConvexDomain, budget: int, which: int) -> SupNorm:
    """which = 0 for log|p|, 1 for log|p'|; boundary grid + refinement."""
    t, z = K.boundary_samples(budget)
    vals = polyeval_boundary(z, p.roots, p.lead, p.eps_root)[which]
    periodic = not isinstance(K, Interval)

    def f(x):
        if periodic:
            x = np.mod(x, 1.0)
        else:
            x = min(max(x, 0.0), 1.0)
        zz = np.array([complex(K.point(x))])
        return float(polyeval_boundary(zz, p.roots, p.lead, p.eps_root)[which][0])

    res = refine_extremum(f, t, vals, mode="max", periodic=periodic,
                          period=1.0 if periodic else None)
    logv = res.value
    overflow = logv > _OVERFLOW_LOG
    return SupNorm(log_value=logv,
                   value=math.inf if overflow else math.exp(logv),
                   overflow=overflow,
                   arg_t=res.t,
                   arg_point=complex(K.point(res.t)),
                   scan_error=res.error_estimate)


def sup_norm(p: RootPolynomial, K: ConvexDomain,
             budget: int = config.SUPNORM_SAMPLES) -> SupNorm:
    """sup |p| over K via a boundary scan (the maximum principle puts the
    maximum on the boundary; the interval is swept directly)."""
    return _scan(p, K, budget, 0)


def sup_norm_derivative(p: RootPolynomial, K: ConvexDomain,
                        budget: int = config.SUPNORM_SAMPLES) -> SupNorm:
    return _scan(p, K, budget, 1)


def check_roots_in_domain(p: RootPolynomial, K: ConvexDomain,
                          tol: float | None = None,
                          warn_only: bool = False) -> list[dict]:
    """Verify p is admissible for K (all roots inside, boundary allowed)."""
    if tol is None:
        tol = max(config.CONTAINS_TOL, 1e-12 * K.scale())
    violations = []
    for z in p.roots:
        margin = K.outside_margin(complex(z))
        if margin > tol:
            violations.append({"root": complex(z), "margin": float(margin)})
    if violations and not warn_only:
        worst = max(violations, key=lambda v: v["margin"])
        raise RootContainmentError(worst["root"], K.descriptor(), worst["margin"])
    return violations


def markov_factor(p: RootPolynomial, K: ConvexDomain,
                  budget: int = config.SUPNORM_SAMPLES,
                  check_roots: bool = True, warn_only: bool = False) -> float:
    """M(p) = sup |p'| / sup |p| over K, computed in log scale."""
    if check_roots:
        check_roots_in_domain(p, K, warn_only=warn_only)
    num = sup_norm_derivative(p, K, budget)
    den = sup_norm(p, K, budget)
    return math.exp(num.log_value - den.log_value)


def markov_report(p: RootPolynomial, K: ConvexDomain,
                  budget: int = config.SUPNORM_SAMPLES,
                  warn_only: bool = True, tol: float | None = None) -> dict:
    """Markov factor with argmax diagnostics and scan-error estimates."""
    violations = check_roots_in_domain(p, K, tol=tol, warn_only=warn_only)
    num = sup_norm_derivative(p, K, budget)
    den = sup_norm(p, K, budget)
    m_log = num.log_value - den.log_value
    return {
        "domain": K.descriptor(),
        "n": p.n,
        "markov_factor": math.exp(m_log),
        "log_markov_factor": m_log,
        "sup_p": {"log": den.log_value, "value": den.value,
                  "overflow": den.overflow,
                  "argmax": [den.arg_point.real, den.arg_point.imag],
                  "scan_error": den.scan_error},
        "sup_dp": {"log": num.log_value, "value": num.value,
                   "overflow": num.overflow,
                   "argmax": [num.arg_point.real, num.arg_point.imag],
                   "scan_error": num.scan_error},
        "root_violations": [{"root": [v["root"].real, v["root"].imag],
                             "margin": v["margin"]} for v in violations],
    }
