"""Command-line interface: ``hypercut <command> [options]``.

Exit codes: 0 success, 1 failed audit, 2 parse or input error, 3 unmet
precondition, 4 size limit, 5 eigensolver non-convergence.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Optional

import numpy as np

from . import cheeger as ch
from . import generate
from . import hypergraph as hg
from . import spectral as sp
from .errors import HypercutError, InputError
from .io import format_hypergraph, parse_hypergraph, report_json, report_tsv

K_TOL = 1e-7


def _load(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    g = parse_hypergraph(data.decode("utf-8", errors="replace"))
    return g, hashlib.sha256(data).hexdigest()


def _base(g, digest) -> dict:
    comps = hg.connected_components(g)
    return {
        "input_sha256": digest,
        "index_base": 0,
        "n": g.n,
        "m": g.m,
        "k": hg.is_uniform(g),
        "connected": len(comps) == 1,
        "components": [sorted(c) for c in comps],
    }


def _cheeger_entry(report: ch.CheegerReport) -> dict:
    lower, upper = report.bounds_hold
    return {
        "h": report.h,
        "h_fraction": str(report.h),
        "witness": report.witness.members,
        "complement": report.witness.complement.members,
        "lower_bound": report.lower_bound,
        "gap": report.gap,
        "upper_bound": report.upper_bound,
        "bounds_hold": [lower, upper],
        "multiplicity": report.multiplicity,
    }


def info_report(g, digest="") -> dict:
    out = _base(g, digest)
    out.update(
        degrees=list(g.degrees),
        cardinalities=list(g.cardinalities),
        d=hg.is_regular(g),
        classical=g.is_classical,
        degree_assumption=hg.check_degree_assumption(g),
    )
    return out


def spectrum_report(g, digest="", eigenfunctions=False) -> dict:
    spec = sp.spectrum(g)
    out = _base(g, digest)
    out["eigenvalues"] = spec.values
    out["lambda_second"] = float(spec.values[-2]) if g.n > 1 else None
    if eigenfunctions:
        out["eigenfunctions"] = [spec.function(i) for i in range(g.n)]
    return out


def cheeger_report(g, digest="", spectral=False, limit=None, threads=1) -> dict:
    out = _base(g, digest)
    if not out["connected"]:
        raise ch.NotConnected(f"hypergraph has {len(out['components'])} connected components")
    methods = {}
    if spectral:
        cuts = ch.spectral_cut(g)
        out["lambda_second"] = cuts.sign.lambda_second
        methods["sign"] = _cheeger_entry(cuts.sign)
        methods["sweep"] = _cheeger_entry(cuts.sweep)
    else:
        exact = ch.cheeger_exact(g, limit=limit, threads=threads)
        out["lambda_second"] = exact.lambda_second
        methods["exact"] = _cheeger_entry(exact)
    out["methods"] = methods
    return out


def vertex_cut_report(g, digest="", spectral=False, limit=None, threads=1) -> dict:
    if spectral:
        rep = ch.vertex_cut(g)
    else:
        rep = ch.vertex_cheeger_exact(g, limit=limit, threads=threads)
    lower, upper = rep.bounds_hold
    out = _base(g, digest)
    out.update(
        d=rep.d,
        method=rep.method,
        h_star=rep.h_star,
        h_star_fraction=str(rep.h_star),
        witness_edges=list(rep.witness),
        lambda_second_dual=rep.lambda_second,
        lower_bound=rep.lower_bound,
        gap=rep.gap,
        upper_bound=rep.upper_bound,
        bounds_hold=[lower, upper],
    )
    return out


def _check(checks, name, passed, **detail):
    checks.append({"name": name, "passed": bool(passed), **detail})


def verify_report(g, digest="", limit=None) -> dict:
    """One-shot audit of the spectral and Cheeger invariants."""
    out = _base(g, digest)
    k = out["k"]
    if k is None:
        raise ch.NotUniform("hypergraph is not uniform")
    view = hg.classical(g)
    checks: list = []
    spec = sp.spectrum(view)
    lap = sp.normalized_laplacian(view).matrix
    residual = max(
        float(np.max(np.abs(lap @ spec.function(i) - spec.values[i] * spec.function(i))))
        / (1 + abs(spec.values[i]))
        for i in range(g.n)
    )
    _check(checks, "eigen_residuals", residual <= 1e-8, value=residual)
    _check(checks, "nonnegative_spectrum", spec.values[0] >= -1e-9, value=spec.values[0])
    at_k = int(np.sum(np.abs(spec.values - k) <= K_TOL))
    _check(
        checks, "multiplicity_of_k", at_k == len(out["components"]),
        eigenvalues_at_k=at_k, components=len(out["components"]),
    )
    out["eigenvalues"] = spec.values
    if out["connected"] and k >= 2 and g.n >= 2 and hg.check_degree_assumption(view):
        limit = ch.default_limit() if limit is None else limit
        pair = sp.second_largest_eigenpair(view, spec)
        out["lambda_second"] = pair.value
        cuts = ch.spectral_cut(view)
        out["methods"] = {"sign": _cheeger_entry(cuts.sign), "sweep": _cheeger_entry(cuts.sweep)}
        if g.n <= limit:
            exact = ch.cheeger_exact(view, limit=limit, pair=pair)
            out["methods"]["exact"] = _cheeger_entry(exact)
            lower, upper = exact.bounds_hold
            _check(checks, "lower_bound", lower, lower_bound=exact.lower_bound, gap=exact.gap)
            _check(checks, "upper_bound", upper, upper_bound=exact.upper_bound, gap=exact.gap)
            _check(
                checks, "exact_le_sweep_le_sign",
                exact.h <= cuts.sweep.h <= cuts.sign.h,
            )
            edges = [tuple(view.graph.edge_vertices(j)) for j in range(view.m)]
            simple = len({tuple(sorted(e)) for e in edges}) == len(edges)
            if k == 2 and simple:
                oracle_h = ch.graph_isoperimetric_constant(g.n, edges)
                _check(checks, "graph_cheeger_oracle", oracle_h == exact.h, oracle=oracle_h)
                lam2 = sp.graph_laplacian_lambda2(g.n, edges)
                _check(
                    checks, "graph_laplacian_oracle", abs((2 - pair.value) - lam2) <= 1e-9,
                    lambda2=lam2,
                )
    out["checks"] = checks
    out["all_passed"] = all(c["passed"] for c in checks)
    return out


def _compare_expectations(report: dict, expected: dict, tol=1e-9) -> list:
    failures = []
    for key, want in expected.items():
        got = report
        for part in key.split("."):
            if isinstance(got, dict) and part in got:
                got = got[part]
            elif isinstance(got, list) and part.isdigit() and int(part) < len(got):
                got = got[int(part)]
            else:
                got = None
                break
        got = json.loads(report_json({"v": got}))["v"]
        if isinstance(want, (int, float)) and not isinstance(want, bool) and isinstance(got, (int, float)):
            ok = abs(got - want) <= tol
        else:
            ok = got == want
        if not ok:
            failures.append({"key": key, "expected": want, "got": got})
    return failures


def _emit(report: dict, args, started: float):
    if args.timing:
        report["timing_seconds"] = time.perf_counter() - started
    text = report_tsv(report) if args.tsv else report_json(report)
    sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercut",
        description="Spectra and Cheeger cuts of uniform hypergraphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tsv", action="store_true", help="flat key/value table instead of JSON")
    common.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--limit", type=int, default=None, help="exhaustive-search size limit")
    search.add_argument("--threads", type=int, default=1)
    mode = search.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exhaustive search (default)")
    mode.add_argument("--spectral", action="store_true", help="sign and sweep cuts")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("info", parents=[common], help="structural summary")
    p.add_argument("path")
    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues of L")
    p.add_argument("path")
    p.add_argument("--eigenfunctions", action="store_true")
    p = sub.add_parser("cheeger", parents=[common, search], help="Cheeger constant and cuts")
    p.add_argument("path")
    p = sub.add_parser("vertex-cut", parents=[common, search], help="vertex Cheeger constant")
    p.add_argument("path")
    p = sub.add_parser("dual", help="write the dual hypergraph")
    p.add_argument("path")
    p.add_argument("--out", default=None)
    p = sub.add_parser("gen", help="random k-uniform hypergraph")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--out", default=None)
    p = sub.add_parser("verify", parents=[common], help="audit all invariants")
    p.add_argument("path")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--expect", default=None, help="JSON file of expected report values")
    return parser


def _run(args) -> int:
    started = time.perf_counter()
    if args.command == "gen":
        if not 1 <= args.k <= args.n or args.m < 1:
            raise InputError("need 1 <= k <= n and m >= 1")
        make = generate.random_connected_uniform if args.connected else generate.random_uniform
        g = make(args.n, args.k, args.m, seed=args.seed)
        text = format_hypergraph(g)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return 0

    g, digest = _load(args.path)
    if args.command == "info":
        _emit(info_report(g, digest), args, started)
    elif args.command == "spectrum":
        _emit(spectrum_report(g, digest, args.eigenfunctions), args, started)
    elif args.command == "cheeger":
        _emit(cheeger_report(g, digest, args.spectral, args.limit, args.threads), args, started)
    elif args.command == "vertex-cut":
        _emit(vertex_cut_report(g, digest, args.spectral, args.limit, args.threads), args, started)
    elif args.command == "dual":
        mapping = hg.dual(g)
        text = format_hypergraph(mapping.dual)
        if args.out:
            Path(args.out).write_text(text)
            table = {
                "index_base": 0,
                "vertex_to_dual_edge": list(mapping.vertex_to_dual_edge),
                "edge_to_dual_vertex": list(mapping.edge_to_dual_vertex),
            }
            Path(args.out + ".map.json").write_text(report_json(table))
        else:
            sys.stdout.write(text)
    elif args.command == "verify":
        report = verify_report(g, digest, args.limit)
        if args.expect:
            try:
                expected = json.loads(Path(args.expect).read_text())
            except (OSError, ValueError) as exc:
                raise InputError(f"cannot load expectations: {exc}") from exc
            report["expectation_failures"] = _compare_expectations(report, expected)
            report["all_passed"] = report["all_passed"] and not report["expectation_failures"]
        _emit(report, args, started)
        return 0 if report["all_passed"] else 1
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except HypercutError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
