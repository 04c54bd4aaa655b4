"""Derivative-free search for root configurations minimizing the Markov factor.

Multi-start Nelder-Mead over the 2n real root coordinates, every proposal
projected back into the domain. The objective is non-smooth where the
boundary argmax switches, so a simplex method is used instead of gradients.
Runs are deterministic for a fixed (domain, n, budget, seed): per-start
generators derive from the master seed by fixed splitting, and results merge
by (value, start index).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import config
from .bounds import BoundResult, best_lower, upper_existence
from .errors import DegenerateDomainError, SearchBudgetError
from .geometry.domains import ConvexDomain, Disk, Interval, make_domain
from .geometry.functionals import diameter, min_width
from .kernels import polyeval_boundary
from .polynomials import RootPolynomial, interval_power, markov_factor, one_plus_zn


@dataclass
class ExtremalReport:
    """Best found root configuration with its certified empirical factor."""

    domain: str
    n: int
    seed: int
    budget: int
    starts: int
    scan_samples: int
    evaluations: int
    roots: np.ndarray
    source: str
    m_hat: float
    m_hat_log: float
    best_lower: BoundResult
    ratio: float
    soundness_ok: bool
    witnesses: list = field(default_factory=list)
    trace: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "domain": self.domain,
            "n": self.n,
            "seed": self.seed,
            "budget": self.budget,
            "starts": self.starts,
            "scan_samples": self.scan_samples,
            "evaluations": self.evaluations,
            "roots": [[z.real, z.imag] for z in self.roots],
            "source": self.source,
            "m_hat": self.m_hat,
            "m_hat_log": self.m_hat_log,
            "best_lower": self.best_lower.to_dict(),
            "ratio": self.ratio,
            "soundness_ok": self.soundness_ok,
            "witnesses": [{"name": nm, "m": mv} for nm, mv in self.witnesses],
        }


def _project_roots(K: ConvexDomain, x: np.ndarray) -> np.ndarray:
    roots = x[0::2] + 1j * x[1::2]
    for i in range(roots.size):
        w = complex(roots[i])
        if K.outside_margin(w) > 0.0:
            roots[i] = K.project(w)
    return roots


class _Objective:
    """log M estimate on a fixed boundary grid (no refinement; re-certified later)."""

    def __init__(self, K: ConvexDomain, scan_samples: int):
        _, self.z = K.boundary_samples(scan_samples)
        self.K = K
        self.eps = config.EPS_ROOT_FRACTION * max(K.scale(), 1e-300)
        self.evals = 0

    def roots_value(self, roots: np.ndarray) -> float:
        self.evals += 1
        logp, logdp = polyeval_boundary(self.z, roots, 1.0, self.eps)
        return float(logdp.max() - logp.max())

    def __call__(self, x: np.ndarray) -> float:
        return self.roots_value(_project_roots(self.K, x))


def _nelder_mead(f, x0: np.ndarray, step: float, max_evals: int):
    """Deterministic Nelder-Mead; returns (best_x, best_f, evals, trace).

    trace holds (evaluation index, best value so far) at improvements.
    """
    dim = x0.size
    pts = [x0.astype(float)]
    for i in range(dim):
        e = x0.astype(float).copy()
        e[i] += step
        pts.append(e)
    simplex = np.array(pts)
    evals = 0
    trace: list[tuple[int, float]] = []
    best_f = math.inf
    best_x = simplex[0].copy()

    def ev(x):
        nonlocal evals, best_f, best_x
        v = f(x)
        evals += 1
        if v < best_f:
            best_f = v
            best_x = x.copy()
            trace.append((evals, v))
        return v

    fv = np.array([ev(p) for p in simplex])
    alpha, gamma, rho_c, sigma = 1.0, 2.0, 0.5, 0.5
    while evals < max_evals:
        order = np.argsort(fv, kind="stable")
        simplex = simplex[order]
        fv = fv[order]
        spread = float(np.max(np.abs(simplex[1:] - simplex[0])))
        if spread < 1e-12 * max(1.0, float(np.max(np.abs(simplex[0])))):
            break
        centroid = simplex[:-1].mean(axis=0)
        xr = centroid + alpha * (centroid - simplex[-1])
        fr = ev(xr)
        if fr < fv[0]:
            xe = centroid + gamma * (centroid - simplex[-1])
            fe = ev(xe)
            if fe < fr:
                simplex[-1], fv[-1] = xe, fe
            else:
                simplex[-1], fv[-1] = xr, fr
        elif fr < fv[-2]:
            simplex[-1], fv[-1] = xr, fr
        else:
            xc = centroid + rho_c * (simplex[-1] - centroid)
            fc = ev(xc)
            if fc < fv[-1]:
                simplex[-1], fv[-1] = xc, fc
            else:
                for i in range(1, len(simplex)):
                    if evals >= max_evals:
                        break
                    simplex[i] = simplex[0] + sigma * (simplex[i] - simplex[0])
                    fv[i] = ev(simplex[i])
    return best_x, best_f, evals, trace


def witness_configs(K: ConvexDomain, n: int) -> list[tuple[str, np.ndarray]]:
    """Known sharp/benchmark families, always seeded as starting points."""
    out: list[tuple[str, np.ndarray]] = []
    anchor = complex(K.interior_anchor())
    out.append(("center_power", np.full(n, anchor, dtype=complex)))
    if isinstance(K, Disk):
        out.append(("one_plus_zn", one_plus_zn(n, K.r).roots))
    if isinstance(K, Interval) and n % 2 == 0:
        out.append(("interval_power", interval_power(n // 2, K.length / 2.0).roots))
    return out


def search(K, n: int, budget: int = 20000, seed: int = 0, starts: int = 20,
           scan_samples: int = config.SEARCH_SCAN_SAMPLES,
           supnorm_budget: int = config.SUPNORM_SAMPLES,
           keep_trace: bool = False) -> ExtremalReport:
    """Minimize M(p) over degree-n root configurations in K.

    budget counts objective evaluations across all starts; witness families
    are always evaluated at full scan budget, so the reported m_hat never
    exceeds them.
    """
    K = make_domain(K)
    if K.degenerate and not isinstance(K, Interval):
        raise DegenerateDomainError("extremal search needs a scannable domain")
    if n < 1:
        raise SearchBudgetError(f"degree must be >= 1, got {n}")
    if budget < 100:
        raise SearchBudgetError(f"budget must be >= 100 evaluations, got {budget}")

    witnesses = witness_configs(K, n)
    starts = max(1, min(starts, budget // 100))
    d = diameter(K)

    # Starting configurations: witnesses, boundary rings, uniform fills.
    start_roots: list[np.ndarray] = [w for _, w in witnesses]
    k = 0
    while len(start_roots) < starts:
        rng = np.random.default_rng([seed, k])
        if k % 2 == 0:
            t = (np.arange(n) / n + rng.uniform(0.0, 1.0)) % 1.0
            pts = np.asarray(K.point(t), dtype=complex)
        else:
            _, zb = K.boundary_samples(64)
            re = rng.uniform(zb.real.min(), zb.real.max(), n)
            im = rng.uniform(zb.imag.min(), zb.imag.max(), n)
            pts = np.array([K.project(complex(a, b)) for a, b in zip(re, im)],
                           dtype=complex)
        start_roots.append(pts)
        k += 1
    start_roots = start_roots[:starts]

    per_start = budget // len(start_roots)
    step = 0.15 * d

    def run_start(idx_roots):
        idx, roots0 = idx_roots
        x0 = np.empty(2 * n)
        x0[0::2], x0[1::2] = roots0.real, roots0.imag
        local = _Objective(K, scan_samples)
        bx, bf, ev, tr = _nelder_mead(local, x0, step, per_start)
        return idx, bx, bf, ev, tr

    workers = max(1, int(os.environ.get(config.THREADS_ENV, "1") or "1"))
    items = list(enumerate(start_roots))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_start, items))
    else:
        results = [run_start(it) for it in items]
    results.sort(key=lambda r: (r[2], r[0]))
    evaluations = sum(r[3] for r in results)

    trace: list[tuple[int, float]] = []
    if keep_trace:
        offset = 0
        seen_best = math.inf
        for idx, _, _, ev, tr in sorted(results, key=lambda r: r[0]):
            for (i, v) in tr:
                if v < seen_best:
                    seen_best = v
                    trace.append((offset + i, v))
            offset += ev

    # Final certification at full scan budget: witnesses + the search best.
    candidates: list[tuple[str, np.ndarray]] = list(witnesses)
    best_idx, best_x, _, _, _ = results[0]
    candidates.append((f"search_start_{best_idx}", _project_roots(K, best_x.copy())))

    best_name, best_roots, best_m = None, None, math.inf
    witness_values = []
    for name, roots in candidates:
        p = RootPolynomial(1.0, roots)
        m = markov_factor(p, K, budget=supnorm_budget, check_roots=False)
        witness_values.append((name, m))
        if m < best_m:
            best_name, best_roots, best_m = name, roots, m

    lower = best_lower(K, n)
    ratio = best_m / lower.value if lower.value > 0 else math.inf
    report = ExtremalReport(
        domain=K.descriptor(), n=n, seed=seed, budget=budget,
        starts=len(start_roots), scan_samples=scan_samples,
        evaluations=evaluations, roots=np.asarray(best_roots),
        source=best_name, m_hat=best_m, m_hat_log=math.log(best_m),
        best_lower=lower, ratio=ratio,
        soundness_ok=ratio >= 1.0 - config.CERT_EPSILON,
        witnesses=witness_values, trace=trace)
    return report


@dataclass
class CertifyResult:
    passed: bool
    m_recertified: float
    lower_value: float
    lower_theorem: str
    margin_lower: float
    upper_value: float | None
    margin_upper: float | None
    soundness_violation: bool

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "m_recertified": self.m_recertified,
            "lower_value": self.lower_value,
            "lower_theorem": self.lower_theorem,
            "margin_lower": self.margin_lower,
            "upper_value": self.upper_value,
            "margin_upper": self.margin_upper,
            "soundness_violation": self.soundness_violation,
        }


def certify(K, n: int, report: ExtremalReport,
            budget_factor: float = 2.0) -> CertifyResult:
    """Recompute M(best roots) at an increased scan budget and compare against
    the theoretical sandwich. A lower-bound violation is reported, never
    auto-corrected."""
    K = make_domain(K)
    budget = int(budget_factor * config.SUPNORM_SAMPLES)
    p = RootPolynomial(1.0, report.roots)
    m = markov_factor(p, K, budget=budget, check_roots=False)
    lower = report.best_lower
    viol = m < lower.value * (1.0 - config.CERT_EPSILON)
    if isinstance(K, Interval):
        up = upper_existence(n, 0.0, diameter(K))
    else:
        up = upper_existence(n, min_width(K), diameter(K))
    m_up = None
    ok_up = True
    if up.applicable:
        m_up = up.value / m - 1.0
        ok_up = m <= up.value * (1.0 + config.CERT_EPSILON)
    return CertifyResult(
        passed=(not viol) and ok_up,
        m_recertified=m,
        lower_value=lower.value,
        lower_theorem=lower.theorem,
        margin_lower=m / lower.value - 1.0 if lower.value > 0 else math.inf,
        upper_value=up.value if up.applicable else None,
        margin_upper=m_up,
        soundness_violation=viol,
    )
