#!/usr/bin/env python3
"""Benchmark: compiled kernel vs numpy fallback.

Times the polynomial boundary-evaluation kernel on representative workloads
(sup-norm scans and the extremal-search objective) for both backends and
checks that they agree. Run:

    python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import math
import time

import numpy as np

from turanbounds.geometry import make_domain
from turanbounds.kernels import available_backends


def time_it(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    repeats = 3 if args.quick else 7
    inner = 20 if args.quick else 100

    backends = available_backends()
    print(f"backends available: {', '.join(backends)}")
    if "compiled" not in backends:
        print("compiled extension not built; timing the fallback only")

    K = make_domain("ellipse:b=0.5")
    rng = np.random.default_rng(0)

    cases = [(1024, 4), (1024, 16), (8192, 8), (8192, 64)]
    print(f"\n{'case':>16} " + " ".join(f"{name:>12}" for name in backends)
          + f" {'speedup':>9} {'max|diff|':>10}")
    for m, n in cases:
        _, z = K.boundary_samples(m)
        roots = 0.5 * (rng.normal(size=n) + 1j * rng.normal(size=n))
        times = {}
        outs = {}
        for name, mod in backends.items():
            fn = lambda: mod.polyeval_boundary(z, roots, 1.0, 1e-12)
            outs[name] = mod.polyeval_boundary(z, roots, 1.0, 1e-12)
            times[name] = time_it(lambda: [fn() for _ in range(inner)],
                                  repeats) / inner
        diff = 0.0
        if len(outs) == 2:
            a, b = outs["fallback"], outs["compiled"]
            diff = max(float(np.max(np.abs(a[i] - b[i]))) for i in range(2))
        speed = (times["fallback"] / times["compiled"]
                 if "compiled" in times else float("nan"))
        print(f"{f'm={m},n={n}':>16} "
              + " ".join(f"{times[name]*1e6:>10.1f}us" for name in backends)
              + f" {speed:>8.2f}x {diff:>10.2e}")

    # end-to-end: one extremal-search objective evaluation
    import os

    print("\nend-to-end extremal search (ellipse b=0.5, n=6):")
    for name in backends:
        os.environ.pop("TURANBOUNDS_NO_EXT", None)
        if name == "fallback":
            os.environ["TURANBOUNDS_NO_EXT"] = "1"
        import importlib

        import turanbounds.kernels as km
        import turanbounds.polynomials as pm
        import turanbounds.extremal as ex

        importlib.reload(km)
        importlib.reload(pm)
        importlib.reload(ex)
        budget = 1000 if args.quick else 5000
        t0 = time.perf_counter()
        rep = ex.search(make_domain("ellipse:b=0.5"), 6, budget=budget, seed=0)
        dt = time.perf_counter() - t0
        print(f"  {name:>9}: {dt:.2f}s for {rep.evaluations} evaluations "
              f"(m_hat={rep.m_hat:.6f})")
    os.environ.pop("TURANBOUNDS_NO_EXT", None)


if __name__ == "__main__":
    main()
