"""Command-line front end.

Single binary with subcommands; JSON is the canonical machine format (fixed
key order, floats at 17 significant digits, so identical invocations are
byte-identical), the text renderer derives from it, and bound reports can be
flattened to CSV with one row per theorem.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import config
from .acceptance import run_all
from .bounds import bounds_report, chebyshev_lower, chebyshev_minmax_bruteforce, erod_eligible
from .errors import TuranBoundsError
from .extremal import certify, search
from .geometry import (
    check_subdifferential,
    circularity_radius,
    curvature_min,
    diameter,
    make_domain,
    min_width,
    transfinite_diameter_info,
)
from .polynomials import RootPolynomial, markov_report


# ---------------------------------------------------------------------------
# Deterministic rendering
# ---------------------------------------------------------------------------

def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(float(x), ".17g")


def render_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        import json as _json

        return _json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}  {render_json(str(k))}: {render_json(v, indent + 1)}'
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        items = [f"{pad}  {render_json(v, indent + 1)}" for v in seq]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot render {type(obj)!r}")


def render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list, tuple)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            if isinstance(v, (dict, list, tuple)) and v:
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(f"{pad}{_scalar_text(obj)}")
    return "\n".join(lines)


def _scalar_text(v) -> str:
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".12g")
    return str(v)


def _flatten_csv(rows: list[dict], columns: list[str]) -> str:
    out = [",".join(columns)]
    for row in rows:
        cells = []
        for c in columns:
            v = row.get(c, "")
            if isinstance(v, (float, np.floating)):
                cells.append(format(float(v), ".17g"))
            elif isinstance(v, dict):
                cells.append(";".join(
                    f"{k}={format(float(x), '.17g') if isinstance(x, (int, float, np.floating)) else x}"
                    for k, x in v.items()))
            else:
                cells.append(str(v))
        out.append(",".join(cells))
    return "\n".join(out)


def _emit(report: dict, args, csv_text: str | None = None) -> None:
    if args.format == "json":
        text = render_json(report)
    elif args.format == "csv":
        if csv_text is None:
            raise TuranBoundsError("this subcommand has no CSV rendering")
        text = csv_text
    else:
        text = render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_geometry(args) -> int:
    K = make_domain(args.domain)
    samples = args.samples or config.GEOMETRY_SAMPLES
    tf = transfinite_diameter_info(K)
    report = {
        "domain": K.descriptor(),
        "kind": K.kind,
        "degenerate": K.degenerate,
        "diameter": diameter(K),
        "min_width": min_width(K),
    }
    if K.degenerate:
        report["min_width_flag"] = "degenerate (interval)"
        report["kappa_min"] = None
        report["circularity_radius"] = "inf (flat)"
        report["subdifferential"] = None
    else:
        kap = curvature_min(K, samples=samples)
        R = circularity_radius(K, samples=samples)
        report["kappa_min"] = kap
        report["circularity_radius"] = R if math.isfinite(R) else "inf (flat)"
        sub = check_subdifferential(K, max(kap, 1e-9), m=min(512, samples))
        report["subdifferential"] = {
            "lambda_max": sub.min_quotient,
            "worst_pair_s": [sub.worst_pair[0], sub.worst_pair[1]],
        }
        report["perimeter"] = K.perimeter()
    report["transfinite_diameter"] = {"value": tf["value"], "method": tf["method"]}
    report["erod_eligible"] = erod_eligible(K)
    _emit(report, args)
    return 0


def cmd_bounds(args) -> int:
    rep = bounds_report(args.domain, args.n)
    rows = list(rep["bounds"]) + [rep["upper"]]
    csv_text = _flatten_csv(rows, ["theorem", "kind", "applicable", "value",
                                   "inputs", "reason"])
    _emit(rep, args, csv_text=csv_text)
    return 0


def cmd_markov(args) -> int:
    K = make_domain(args.domain)
    p = RootPolynomial.from_file(args.poly)
    rep = markov_report(p, K, budget=args.budget or config.SUPNORM_SAMPLES,
                        warn_only=args.allow_outside, tol=args.tol)
    if rep["root_violations"] and not args.allow_outside:
        worst = rep["root_violations"][0]
        raise TuranBoundsError(
            f"root {worst['root']} outside {K.descriptor()} "
            f"by {worst['margin']:.3e} (use --allow-outside to override)")
    _emit(rep, args)
    return 0


def cmd_extremal(args) -> int:
    K = make_domain(args.domain)
    rep = search(K, args.n, budget=args.budget or 20000, seed=args.seed,
                 starts=args.starts, keep_trace=bool(args.trace))
    out = rep.to_dict()
    if args.certify:
        out["certify"] = certify(K, args.n, rep).to_dict()
    if args.trace:
        rows = [{"evaluation": i, "best_m": math.exp(v)} for i, v in rep.trace]
        with open(args.trace, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(_flatten_csv(rows, ["evaluation", "best_m"]) + "\n")
    _emit(out, args)
    return 0 if rep.soundness_ok else 1


def cmd_chebyshev(args) -> int:
    grid = args.grid
    R = np.linspace(-1.0, 1.0, args.r_points) * (args.j_len / 2.0)
    rows = []
    for k in range(1, args.k + 1):
        res = chebyshev_minmax_bruteforce((-args.j_len / 2.0, args.j_len / 2.0),
                                          R, k=k, grid=grid)
        rows.append({
            "k": k,
            "bruteforce": res.value,
            "bound": chebyshev_lower(args.j_len, k),
            "ratio": res.value / chebyshev_lower(args.j_len, k),
            "points": [w.real for w in res.points],
        })
    report = {"J_length": args.j_len, "grid": grid, "candidates": args.r_points,
              "table": rows}
    csv_text = _flatten_csv(rows, ["k", "bruteforce", "bound", "ratio"])
    _emit(report, args, csv_text=csv_text)
    return 0


def cmd_verify(args) -> int:
    only = None
    if args.only:
        only = [int(x) for x in args.only.split(",") if x.strip()]
    results = run_all(quick=args.quick, only=only, verbose=(args.format == "text"))
    report = {
        "quick": args.quick,
        "criteria": [{"cid": r.cid, "name": r.name, "passed": r.passed,
                      "runtime_s": r.runtime} for r in results],
        "all_passed": all(r.passed for r in results),
    }
    if args.format != "text":
        _emit(report, args)
    return 0 if report["all_passed"] else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="turanbounds",
        description=("Geometric functionals of planar convex domains, lower "
                     "bounds on Markov factors of root-constrained "
                     "polynomials, and extremal root search."))
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, domain=True):
        if domain:
            p.add_argument("domain", help="domain descriptor, e.g. ellipse:b=0.5")
        p.add_argument("--format", choices=["json", "csv", "text"],
                       default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--tol", type=float, default=None)

    g = sub.add_parser("geometry", help="diameter, width, curvature, circularity")
    common(g)
    g.set_defaults(fn=cmd_geometry)

    b = sub.add_parser("bounds", help="all theorem bounds for a domain and degree")
    common(b)
    b.add_argument("--n", type=int, required=True)
    b.set_defaults(fn=cmd_bounds)

    m = sub.add_parser("markov", help="Markov factor of a polynomial file")
    common(m)
    m.add_argument("--poly", required=True, help="polynomial JSON file")
    m.add_argument("--allow-outside", action="store_true",
                   help="warn instead of failing on roots outside the domain")
    m.set_defaults(fn=cmd_markov)

    e = sub.add_parser("extremal", help="search for minimal Markov factors")
    common(e)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--starts", type=int, default=20)
    e.add_argument("--certify", action="store_true")
    e.add_argument("--trace", default=None, help="CSV trace output path")
    e.set_defaults(fn=cmd_extremal)

    c = sub.add_parser("chebyshev", help="brute-force min-max vs the capacity bound")
    common(c, domain=False)
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--grid", type=int, default=401)
    c.add_argument("--r-points", type=int, default=401)
    c.add_argument("--j-len", type=float, default=2.0)
    c.set_defaults(fn=cmd_chebyshev)

    v = sub.add_parser("verify", help="run the acceptance battery")
    common(v, domain=False)
    v.set_defaults(format="text")
    v.add_argument("--quick", action="store_true")
    v.add_argument("--only", default=None, help="comma-separated criterion ids")
    v.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except TuranBoundsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
