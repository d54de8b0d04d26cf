"""Command-line entry point: ``spectre {gen,analyze,bounds,sweep,reduce,certify}``.

Exit codes: 0 success, 1 domain error (bad parameters, failed checks on
input data), 2 usage error (argparse).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Callable, Sequence

from . import algebra, bounds, metrics, reduction, spectral, topologies
from .eigen import EigenError
from .graph import Graph, GraphError, degree_profile, read_edgelist, write_edgelist

__all__ = ["main", "build_parser", "METRICS"]

METRICS = ("spectrum", "rho2", "gap", "lambda", "ramanujan", "diameter", "bw-exact", "bw-fiedler", "iso", "bounds-check")
DEFAULT_METRICS = ("rho2", "gap", "diameter")

AUTOMORPHISMS: dict[str, Callable[[topologies.TopologySpec], list[list[int]]]] = {
    "butterfly": lambda s: topologies.butterfly_automorphisms(s.get_int("k"), s.get_int("s")),
    "datavortex": lambda s: topologies.data_vortex_automorphisms(s.get_int("a"), s.get_int("c")),
    "slimfly": lambda s: topologies.slimfly_translation_automorphisms(s.get_int("q")),
    "fattree": lambda s: topologies.fat_tree_automorphisms(s.get_int("levels")),
    "petersontorus": lambda s: topologies.peterson_torus_automorphisms(s.get_int("a"), s.get_int("b")),
}


class DomainError(Exception):
    pass


def _round(x):
    """Floats to 12 significant digits; non-finite values become strings."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            return "inf" if x > 0 else ("-inf" if x < 0 else "nan")
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {k: _round(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v) for v in x]
    if hasattr(x, "item"):  # numpy scalar
        return _round(x.item())
    return x


def dumps(obj) -> str:
    return json.dumps(_round(obj), sort_keys=True)


def _load_target(target: str) -> tuple[Graph, topologies.TopologySpec | None]:
    if os.path.exists(target):
        with open(target, encoding="utf-8") as fh:
            return read_edgelist(fh.read()), None
    spec = topologies.parse_spec(target)
    return spec.build(), spec


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = topologies.parse_spec(args.spec)
    g = spec.build()
    _write(write_edgelist(g), args.out)
    if args.automorphisms:
        if spec.family not in AUTOMORPHISMS:
            raise DomainError(f"no automorphism fixture for family {spec.family}")
        with open(args.automorphisms, "w", encoding="utf-8") as fh:
            json.dump(AUTOMORPHISMS[spec.family](spec), fh)
    return 0


def _bounds_check(g: Graph, report: dict) -> dict:
    """Evaluate every inequality that applies to ``g`` and record pass/fail."""
    checks: dict[str, dict] = {}
    prof = degree_profile(g)
    connected = metrics.is_connected(g)
    rho2 = spectral.algebraic_connectivity(g)
    n = g.n
    if connected:
        diam = metrics.diameter(g)
        lo = spectral.mckay_diameter_lower(n, rho2)
        hi = spectral.alon_milman_diameter_upper(n, prof.max, rho2)
        checks["diameter_mckay_alon_milman"] = {"lower": lo, "value": diam, "upper": hi, "pass": lo - 1e-9 <= diam <= hi}
    bw = None
    if n <= metrics.BISECTION_MAX_N and n >= 2:
        bw = metrics.bisection_exact(g).cut
        lo = spectral.fiedler_bw_lower(rho2, n)
        if n % 2:
            # rho2 n/4 assumes equal halves; odd n only guarantees rho2 |S| |V-S| / n
            lo = rho2 * (n // 2) * (n - n // 2) / n
        checks["bw_fiedler_lower"] = {"lower": lo, "value": bw, "pass": lo - 1e-9 <= bw}
    if prof.is_regular and connected and n >= 2:
        k = prof.regularity
        adj = spectral.adjacency_spectrum(g)
        lam2 = float(adj.descending[1])
        if bw is not None:
            up = spectral.cheeger_bw_upper(k, rho2, n)
            checks["bw_cheeger_upper"] = {"upper": up, "value": bw, "pass": bw <= up + 1e-9}
            fm = spectral.first_moment_bw_upper(k * n / 2, n)
            checks["bw_first_moment_upper"] = {"upper": fm, "value": bw, "pass": bw <= fm + 1e-9}
        if n <= metrics.ISO_MAX_N and lam2 < k:
            h = metrics.vertex_iso_number(g).value
            t = spectral.tanner_iso_lower(k, lam2)
            checks["iso_tanner_lower"] = {"lower": t, "value": h, "pass": t - 1e-9 <= h}
            u = spectral.lambda2_upper_from_h(k, h)
            checks["lambda2_from_iso_upper"] = {"upper": u, "value": lam2, "pass": lam2 <= u + 1e-9}
        if k >= 2 and connected:
            diam = metrics.diameter(g)
            if diam >= 1:
                lam = spectral.lambda_nontrivial(g, spectrum=adj)
                fl = spectral.alon_boppana_floor(int(k), diam)
                checks["alon_boppana_floor"] = {"lower": fl, "value": lam, "pass": fl - 1e-9 <= lam}
        checks["rho2_equals_k_minus_lambda2"] = {
            "value": rho2, "expected": k - lam2, "pass": abs(rho2 - (k - lam2)) <= 1e-8,
        }
    report["bounds_check"] = checks
    report["bounds_check_pass"] = all(c["pass"] for c in checks.values())
    return report


def cmd_analyze(args) -> int:
    g, spec = _load_target(args.target)
    wanted = [m.strip() for m in (args.metrics or ",".join(DEFAULT_METRICS)).split(",") if m.strip()]
    unknown = [m for m in wanted if m not in METRICS]
    if unknown:
        raise DomainError(f"unknown metric(s) {unknown}; choose from {', '.join(METRICS)}")
    out: dict = {"n": g.n, "m": g.m}
    if spec is not None:
        out["spec"] = spec.to_string()
    warnings: list[str] = []
    connected = metrics.is_connected(g)
    prof = degree_profile(g)
    for m in wanted:
        if m == "spectrum":
            out["spectrum"] = list(spectral.adjacency_spectrum(g).values)
        elif m == "rho2":
            if connected:
                out["rho2"] = spectral.algebraic_connectivity(g)
            else:
                out["rho2"] = 0.0
                warnings.append("graph is disconnected; rho2 is 0")
        elif m == "gap":
            d = spectral.adjacency_spectrum(g).descending
            out["gap"] = float(d[0] - d[1])
        elif m in ("lambda", "ramanujan"):
            if not (prof.is_regular and connected):
                warnings.append(f"{m} needs a connected regular graph")
                out[m] = None
                continue
            lam = spectral.lambda_nontrivial(g)
            out["lambda"] = lam
            if m == "ramanujan":
                k = prof.regularity
                out["ramanujan_bound"] = spectral.ramanujan_bound(k) if k >= 1 else None
                out["ramanujan"] = spectral.is_ramanujan(g) if k >= 2 else None
        elif m == "diameter":
            out["diameter"] = metrics.diameter(g)
        elif m == "bw-exact":
            r = metrics.bisection_exact(g)
            out["bw_exact"] = {"cut": r.cut, "side": list(r.side)}
        elif m == "bw-fiedler":
            r = metrics.bisection_fiedler(g)
            out["bw_fiedler"] = {"cut": r.cut, "side": list(r.side)}
        elif m == "iso":
            r = metrics.vertex_iso_number(g)
            out["iso"] = {"value": r.value, "fraction": f"{r.ratio.numerator}/{r.ratio.denominator}", "witness": list(r.witness)}
        elif m == "bounds-check":
            _bounds_check(g, out)
    if warnings:
        out["warnings"] = warnings
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
    print(dumps(out))
    if "bounds_check_pass" in out and not out["bounds_check_pass"]:
        return 1
    return 0


def cmd_bounds(args) -> int:
    print(dumps(bounds.table_row(topologies.parse_spec(args.spec)).to_dict()))
    return 0


def cmd_sweep(args) -> int:
    fams = [f for f in (args.families or "").split(",") if f.strip()]
    rows = bounds.sweep(fams or None, args.max_radix, args.max_nodes)
    if not rows:
        print("warning: no parameter points satisfy the filters", file=sys.stderr)
    _write(bounds.rows_to_csv(rows), args.out)
    return 0


def cmd_reduce(args) -> int:
    with open(args.graph, encoding="utf-8") as fh:
        g = read_edgelist(fh.read())
    with open(args.automorphisms, encoding="utf-8") as fh:
        perms = reduction.load_automorphisms(fh.read(), g)
    part = reduction.orbits(g.n, perms)
    q = reduction.quotient(g, part)
    sub = reduction.quotient_spectrum(q)
    full = spectral.adjacency_spectrum(g)
    ok = reduction.verify_containment(sub, full)
    if args.out:
        _write(q.to_edgelist(), args.out)
    print(dumps({
        "orbits": q.count,
        "orbit_sizes": list(q.sizes),
        "weights": q.weights.tolist(),
        "quotient_spectrum": list(sub.values),
        "contained": ok,
    }))
    return 0 if ok else 1


def cmd_certify(args) -> int:
    p, q = args.p, args.q
    for name, x in (("p", p), ("q", q)):
        if not algebra.is_prime(x):
            raise DomainError(f"{name}={x} is not prime")
    gens = algebra.lps_generators(p, q)
    g = topologies.lps_graph(p, q)
    prof = degree_profile(g)
    lam = spectral.lambda_nontrivial(g)
    bound = spectral.ramanujan_bound(prof.regularity)
    print(dumps({
        "p": p,
        "q": q,
        "group": gens.kind,
        "n": g.n,
        "k": int(prof.regularity),
        "lambda": lam,
        "bound": bound,
        "ramanujan": bool(lam <= bound + spectral.RAMANUJAN_SLACK),
        "bipartite": metrics.is_bipartite(g),
        "connected": metrics.is_connected(g),
    }))
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spectre", description="Spectral analysis of interconnect topologies.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a topology as an edge list")
    p.add_argument("spec", help="family:key=value,... e.g. torus:k=4,d=2")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--automorphisms", help="also write automorphism generators as JSON")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="spectral and combinatorial report as JSON")
    p.add_argument("target", help="edge-list path or topology spec")
    p.add_argument("--metrics", help=f"comma list from {','.join(METRICS)}")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="closed-form bounds row as JSON")
    p.add_argument("spec")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="bounds rows over parameter grids as CSV")
    p.add_argument("--families", help="comma list (default all)")
    p.add_argument("--max-radix", type=int, default=64)
    p.add_argument("--max-nodes", type=int, default=100_000)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reduce", help="orbit quotient and spectrum containment")
    p.add_argument("graph", help="edge-list path")
    p.add_argument("automorphisms", help="JSON array of permutation image arrays")
    p.add_argument("--out", help="write the quotient weights here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("certify", help="Ramanujan certificate for the LPS graph X^{p,q}")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_certify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, GraphError, EigenError, algebra.AlgebraError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
