"""End-to-end acceptance battery.

Each criterion is a named callable returning a CriterionResult; the pytest
acceptance module and the CLI ``verify`` subcommand both run this battery.
Quick mode reduces search budgets only where the check does not depend on
them; stated tolerances are never loosened.
"""

from __future__ import annotations

import io
import math
import time
from contextlib import redirect_stdout
from dataclasses import dataclass, field

import numpy as np

from .bounds import (
    best_lower,
    bound_circular,
    bound_curvature,
    chebyshev_lower,
    chebyshev_minmax_bruteforce,
    upper_existence,
)
from .geometry import (
    boundary_point,
    circularity_radius,
    curvature_min,
    diameter,
    make_domain,
    min_width,
    pointwise_turan_constant,
    r_needed,
    tangent_angle_profile,
)
from .polynomials import RootPolynomial, interval_power, markov_factor, one_plus_zn
from .extremal import search


@dataclass
class CriterionResult:
    cid: int
    name: str
    passed: bool
    runtime: float
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.cid}: {self.name} ({self.runtime:.2f}s)"


def _result(cid, name, t0, passed, **details) -> CriterionResult:
    return CriterionResult(cid=cid, name=name, passed=bool(passed),
                           runtime=time.perf_counter() - t0, details=details)


def criterion_1_disk_sharpness(quick: bool = False) -> CriterionResult:
    """M(1 + z^n) on the unit disk equals n/2 within 1e-6 relative, < 1s each."""
    t0 = time.perf_counter()
    disk = make_domain("disk:r=1")
    rows = []
    ok = True
    for n in (2, 4, 8, 16):
        t1 = time.perf_counter()
        m = markov_factor(one_plus_zn(n), disk)
        dt = time.perf_counter() - t1
        rel = abs(m - 0.5 * n) / (0.5 * n)
        good = rel <= 1e-6 and dt < 1.0
        ok = ok and good
        rows.append({"n": n, "markov_factor": m, "rel_err": rel, "seconds": dt})
    return _result(1, "disk sharpness n/2", t0, ok, cases=rows)


def criterion_2_ellipse_chain(quick: bool = False) -> CriterionResult:
    """Curvature b, circularity 1/b, matching bounds (b/2)n, search >= bound."""
    t0 = time.perf_counter()
    n = 6
    budget = 4000 if quick else 20000
    rows = []
    ok = True
    for b in (0.25, 0.5, 0.9):
        t1 = time.perf_counter()
        K = make_domain(f"ellipse:b={b}")
        kap = curvature_min(K)
        R = circularity_radius(K)
        bc = bound_curvature(n, kap).value
        br = bound_circular(n, R).value
        target = 0.5 * b * n
        rep = search(K, n, budget=budget, seed=1)
        dt = time.perf_counter() - t1
        checks = {
            "kappa": abs(kap - b) <= 1e-8 * b,
            "circularity": abs(R - 1.0 / b) <= 1e-5 * (1.0 / b),
            "bound_curvature": abs(bc - target) <= 1e-6 * target,
            "bound_circular": abs(br - target) <= 1e-6 * target,
            "search_above_bound": rep.m_hat >= target * (1.0 - 1e-3),
            "runtime": dt < 30.0,
        }
        ok = ok and all(checks.values())
        rows.append({"b": b, "kappa_min": kap, "circularity_radius": R,
                     "bound_curvature": bc, "bound_circular": br,
                     "m_hat": rep.m_hat, "seconds": dt, "checks": checks})
    return _result(2, "ellipse bound chain", t0, ok, n=n, budget=budget, cases=rows)


def criterion_3_lp_curvature(quick: bool = False) -> CriterionResult:
    """Numeric curvature minimum of lp balls against the closed-form brackets."""
    t0 = time.perf_counter()
    rows = []
    ok = True
    for p in (1.2, 1.5, 1.8):
        K = make_domain(f"lp:p={p},b=1")
        kap = curvature_min(K)
        ref = (p - 1.0) * 2.0 ** (1.0 / p - 0.5)
        good = abs(kap - ref) <= 1e-4 * ref
        ok = ok and good
        rows.append({"p": p, "b": 1.0, "kappa_min": kap, "reference": ref,
                     "ok": good})
        for b in (0.25, 0.5):
            Kb = make_domain(f"lp:p={p},b={b}")
            kb = curvature_min(Kb)
            lo = (p - 1.0) * b * 2.0 ** (1.0 / p - 0.5)
            hi = (p - 1.0) * b * 2.0 ** (1.0 + 1.0 / p) / (1.0 + b * b) ** 1.5
            good = lo <= kb <= hi * (1.0 + 1e-4)
            ok = ok and good
            rows.append({"p": p, "b": b, "kappa_min": kb, "low": lo,
                         "high": hi, "ok": good})
    return _result(3, "lp-ball curvature minimum", t0, ok, cases=rows)


def criterion_4_chebyshev(quick: bool = False) -> CriterionResult:
    """Brute-force min-max on [-1, 1] within 0.02 of 2^(1-k) for k in 1..3."""
    t0 = time.perf_counter()
    grid = 401
    R = np.linspace(-1.0, 1.0, grid)
    rows = []
    ok = True
    for k in (1, 2, 3):
        res = chebyshev_minmax_bruteforce((-1.0, 1.0), R, k=k, grid=grid)
        target = 2.0 ** (1 - k)
        good = (target - 0.02 <= res.value <= target + 0.02
                and res.value >= chebyshev_lower(2.0, k) - 1e-12)
        ok = ok and good
        rows.append({"k": k, "value": res.value, "target": target,
                     "points": [w.real for w in res.points], "ok": good})
    dt = time.perf_counter() - t0
    ok = ok and dt < 10.0
    return _result(4, "Chebyshev min-max oracle", t0, ok, grid=grid, cases=rows,
                   seconds=dt)


def _random_roots_in(K, n: int, rng) -> np.ndarray:
    _, zb = K.boundary_samples(64)
    lo_r, hi_r = zb.real.min(), zb.real.max()
    lo_i, hi_i = zb.imag.min(), zb.imag.max()
    roots = []
    while len(roots) < n:
        w = complex(rng.uniform(lo_r, hi_r), rng.uniform(lo_i, hi_i))
        if K.outside_margin(w) <= 0.0:
            roots.append(w)
    return np.array(roots)


def criterion_5_soundness_sweep(quick: bool = False) -> CriterionResult:
    """best_lower <= markov_factor + 1e-6 for random admissible root sets."""
    t0 = time.perf_counter()
    per_domain = 40 if quick else 200
    domains = ["disk:r=1", "ellipse:b=0.5", "square", "lp:p=1.5,b=1"]
    rows = []
    ok = True
    rng = np.random.default_rng(20240817)
    for desc in domains:
        K = make_domain(desc)
        lowers = {n: best_lower(K, n).value for n in range(2, 13)}
        worst = -math.inf
        for i in range(per_domain):
            n = 2 + (i % 11)
            p = RootPolynomial(1.0, _random_roots_in(K, n, rng))
            m = markov_factor(p, K)
            gap = lowers[n] - m
            worst = max(worst, gap)
            if gap > 1e-6:
                ok = False
        rows.append({"domain": desc, "cases": per_domain,
                     "worst_gap": worst, "ok": worst <= 1e-6})
    return _result(5, "soundness sweep (random root sets)", t0, ok, cases=rows)


def criterion_6_interval_sqrt(quick: bool = False) -> CriterionResult:
    """(1 - x^2)^(n/2) witnesses: M >= sqrt(n)/6 and M/sqrt(n) <= 3."""
    t0 = time.perf_counter()
    K = make_domain("interval:L=2")
    rows = []
    ok = True
    for n in (16, 36, 64):
        p = interval_power(n // 2)
        m = markov_factor(p, K)
        good = m >= math.sqrt(n) / 6.0 - 1e-12 and m / math.sqrt(n) <= 3.0
        ok = ok and good
        rows.append({"n": n, "m": m, "lower": math.sqrt(n) / 6.0,
                     "normalized": m / math.sqrt(n), "ok": good})
    return _result(6, "interval sqrt(n) regime", t0, ok, cases=rows)


def criterion_7_square_sandwich(quick: bool = False) -> CriterionResult:
    """Square, n = 64: lower bounds <= searched m_hat <= existence upper bound."""
    t0 = time.perf_counter()
    K = make_domain("square")
    n = 64
    budget = 800 if quick else 2000
    lower = best_lower(K, n)
    rep = search(K, n, budget=budget, seed=3, starts=4)
    up = upper_existence(n, min_width(K), diameter(K))
    ok = (up.applicable
          and lower.value <= rep.m_hat * (1.0 + 1e-9) + 1e-9
          and rep.m_hat <= up.value)
    return _result(7, "square upper/lower sandwich", t0, ok,
                   n=n, lower=lower.to_dict(), m_hat=rep.m_hat,
                   upper=up.to_dict())


def criterion_8_identities(quick: bool = False) -> CriterionResult:
    """c(z) * 2 * r_needed(z) = 1 at 256 ellipse points; profile slope ~ curvature."""
    t0 = time.perf_counter()
    K = make_domain("ellipse:b=0.5")
    worst_identity = 0.0
    for i in range(256):
        bp = boundary_point(K, (i + 0.5) / 256.0)
        rn = r_needed(K, bp)
        c = pointwise_turan_constant(K, bp)
        worst_identity = max(worst_identity, abs(c * 2.0 * rn - 1.0))
    prof = tangent_angle_profile(K, 1000)
    ds = np.diff(prof.s)
    slopes = np.diff(prof.alpha_plus) / ds
    mid_t = K.param_at_arclength(prof.s[:-1] + 0.5 * ds)
    kap = np.asarray(K.curvature(mid_t), dtype=float)
    worst_slope = float(np.max(np.abs(slopes - kap) / kap))
    ok = worst_identity <= 1e-9 and worst_slope <= 1e-4
    return _result(8, "pointwise identities", t0, ok,
                   worst_identity=worst_identity, worst_slope_rel=worst_slope)


def criterion_9_determinism(quick: bool = False) -> CriterionResult:
    """Byte-identical JSON from two identical extremal CLI invocations."""
    t0 = time.perf_counter()
    from .cli import main

    argv = ["extremal", "disk:r=1", "--n", "4", "--seed", "7",
            "--budget", "5000"]
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(argv)
        if code != 0:
            return _result(9, "determinism", t0, False, exit_code=code)
        outs.append(buf.getvalue())
    ok = outs[0] == outs[1] and len(outs[0]) > 0
    return _result(9, "determinism of extremal reports", t0, ok,
                   bytes=len(outs[0].encode()))


CRITERIA = [
    (1, "disk sharpness n/2", criterion_1_disk_sharpness),
    (2, "ellipse bound chain", criterion_2_ellipse_chain),
    (3, "lp-ball curvature minimum", criterion_3_lp_curvature),
    (4, "Chebyshev min-max oracle", criterion_4_chebyshev),
    (5, "soundness sweep", criterion_5_soundness_sweep),
    (6, "interval sqrt(n) regime", criterion_6_interval_sqrt),
    (7, "square upper/lower sandwich", criterion_7_square_sandwich),
    (8, "pointwise identities", criterion_8_identities),
    (9, "determinism", criterion_9_determinism),
]


def run_all(quick: bool = False, only: list[int] | None = None,
            verbose: bool = True) -> list[CriterionResult]:
    results = []
    for cid, _, fn in CRITERIA:
        if only and cid not in only:
            continue
        res = fn(quick=quick)
        results.append(res)
        if verbose:
            print(res.line())
    return results
