"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog as catalog_mod
from .checks import failures
from .errors import StrangeDualityError
from .etaq import SAMPLE_TAUS, UpperHalfPoint, saito_identity_residual
from .frameshape import degree, parse_frame, saito_dual
from .lattice import (
    coxeter_element,
    coxeter_frame_of_root_system,
    determinant,
    parse_graph,
    signature,
    smith_invariants,
)
from .magicsquare import enumerate_duals, find_magic_squares
from .moonshine import label_of, search_collisions, search_sequences
from .suites import SUITES, run_suite
from .weights import WeightSystem

SUITE_NAMES = ["all", *SUITES]


class UsageError(Exception):
    pass


def _emit(args, text: str, doc) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def cmd_show(args) -> int:
    rec = catalog_mod.default_catalog().lookup(args.name)
    lines = [
        f"{rec.name} ({rec.family})",
        f"  weights   {rec.weights}",
        f"  Dol       {' '.join(map(str, rec.dol))}",
        f"  Gab       {' | '.join(str(g) for g in rec.gab_variants)}",
        f"  mu        {rec.mu}",
        f"  d         {rec.d}",
        f"  h         {rec.h}",
    ]
    if rec.frame is not None:
        lines.append(f"  frame     {rec.frame}")
    if rec.is_icis:
        lines += [
            f"  mu1       {rec.mu1}",
            f"  mu_flat   {rec.mu_flat}",
            f"  d_flat    {rec.d_flat}",
            f"  frame_flat {rec.frame_flat}",
            f"  frame(c)  {rec.frame_full}",
        ]
    lines.append(f"  dual      {', '.join(rec.duals)}")
    _emit(args, "\n".join(lines), rec.to_json())
    return 0


def cmd_dual(args) -> int:
    duals = [r.name for r in catalog_mod.default_catalog().dual_of(args.name)]
    _emit(args, "\n".join(duals), {"name": catalog_mod.normalize_name(args.name), "duals": duals})
    return 0


def cmd_frame_dual(args) -> int:
    shape = parse_frame(args.shape)
    dual = saito_dual(shape)
    _emit(args, str(dual), {"shape": str(shape), "order": shape.order, "dual": str(dual)})
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite)
    if args.list:
        _emit(args, "\n".join(c.name for c in checks), [c.name for c in checks])
        return 0
    bad = failures(checks)
    summary = f"{len(checks) - len(bad)}/{len(checks)} checks passed ({args.suite})"
    if args.format == "json":
        _emit(args, "", {"suite": args.suite, "total": len(checks), "failed": len(bad),
                         "checks": [c.to_json() for c in checks]})
    else:
        shown = checks if args.verbose else bad
        for c in shown:
            print(c.line())
        print(summary)
    return 1 if bad else 0


def cmd_kobayashi(args) -> int:
    weights = tuple(int(w) for w in args.weights.split(","))
    w = WeightSystem(weights, (args.degree,))
    if not w.is_reduced or not w.degrees_representable:
        raise UsageError(f"{w} is not a reduced weight system with representable degree")
    duals = enumerate_duals(w)
    doc = {"weights": str(w), "duals": [str(d) for d in duals]}
    lines = [f"W  = {w}"] + [f"W* = {d}" for d in duals]
    if args.all_squares:
        doc["squares"] = {}
        for d in duals:
            squares = find_magic_squares(w, d)
            doc["squares"][str(d)] = [s.to_json() for s in squares]
            lines.append(f"primitive squares for ({w}) x ({d}): {len(squares)}")
            for s in squares:
                lines += [str(s), ""]
    _emit(args, "\n".join(lines), doc)
    return 0


def cmd_moonshine(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    shapes = search_sequences(args.max_n)
    rows = [(s.order, str(s), label_of(s)) for s in shapes]
    doc = {
        "max_n": args.max_n,
        "count": len(rows),
        "shapes": [{"N": n, "shape": s, "label": lab} for n, s, lab in rows],
        "collisions": [list(c) for c in search_collisions(shapes)],
    }
    text = "\n".join(f"{n:4d}  {s:40s} {lab}" for n, s, lab in rows) + f"\n{len(rows)} shapes"
    _emit(args, text, doc)
    return 0


def cmd_lattice(args) -> int:
    lat = parse_graph(args.graph)
    if args.op == "det":
        value = determinant(lat)
        _emit(args, str(value), {"graph": args.graph, "det": value})
    elif args.op == "snf":
        inv = smith_invariants(lat)
        _emit(args, " ".join(map(str, inv)), {"graph": args.graph, "snf": inv})
    elif args.op == "sig":
        sig = signature(lat)
        _emit(args, "({}, {}, {})".format(*sig), {"graph": args.graph, "signature": list(sig)})
    else:
        rep = coxeter_element(lat)
        doc = {
            "graph": args.graph,
            "char_poly": list(rep.char_poly.coeffs),
            "frame": str(rep.frame) if rep.frame is not None else None,
            "order": rep.order,
        }
        text = f"char poly  {rep.char_poly}\nframe      {rep.frame}\norder      {rep.order}"
        _emit(args, text, doc)
    return 0


def cmd_coxeter_root(args) -> int:
    shape = coxeter_frame_of_root_system(args.symbols)
    _emit(args, str(shape), {"symbols": args.symbols, "frame": str(shape), "degree": degree(shape)})
    return 0


def cmd_eta_check(args) -> int:
    if args.shape:
        shape = parse_frame(args.shape)
        name = args.shape
    elif args.name:
        rec = catalog_mod.default_catalog().lookup(args.name)
        shape, name = rec.duality_frame, rec.name
    else:
        raise UsageError("give a catalog name or --shape")
    if args.tau:
        taus = [UpperHalfPoint.parse(args.tau)]
    else:
        taus = [UpperHalfPoint.of(t) for t in SAMPLE_TAUS]
    results = [(t, saito_identity_residual(shape, t)) for t in taus]
    worst = max(r for _, r in results)
    doc = {
        "name": name,
        "shape": str(shape),
        "residuals": [{"tau": [t.re, t.im], "residual": r} for t, r in results],
        "tol": args.tol,
        "ok": worst < args.tol,
    }
    text = "\n".join(f"tau = {t.re}+{t.im}i  residual {r:.3e}" for t, r in results)
    _emit(args, f"{name}: {shape}\n{text}", doc)
    return 0 if worst < args.tol else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="strange-duality", parents=[common],
                                     description="Strange duality of singularities: catalog, lattices and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", parents=[common], help="print a catalog record")
    p.add_argument("name")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("dual", parents=[common], help="print the dual singularity")
    p.add_argument("name")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("frame-dual", parents=[common], help="Saito dual of a Frame shape")
    p.add_argument("shape")
    p.set_defaults(func=cmd_frame_dual)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", choices=SUITE_NAMES)
    p.add_argument("--list", action="store_true", help="list check names without judging them")
    p.add_argument("-v", "--verbose", action="store_true", help="print passing checks too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kobayashi", parents=[common], help="dual weight systems via magic squares")
    p.add_argument("--weights", required=True, help="comma separated, e.g. 3,8,12")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--all-squares", action="store_true")
    p.add_argument("--json", dest="format", action="store_const", const="json")
    p.set_defaults(func=cmd_kobayashi)

    p = sub.add_parser("moonshine", parents=[common], help="search self-dual degree-24 Frame shapes")
    p.add_argument("--max-n", type=int, default=119)
    p.add_argument("--json", dest="format", action="store_const", const="json")
    p.set_defaults(func=cmd_moonshine)

    p = sub.add_parser("lattice", parents=[common], help="lattice invariants of a graph expression")
    p.add_argument("op", choices=["det", "snf", "sig", "coxeter"])
    p.add_argument("--graph", required=True, help="e.g. star:2,3,7+U, -E8, K3, K24, D4")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("coxeter-root", parents=[common], help="Coxeter Frame shape of a root system")
    p.add_argument("symbols", help="e.g. A11+D7+E6 or D6^4")
    p.set_defaults(func=cmd_coxeter_root)

    p = sub.add_parser("eta-check", parents=[common], help="residual of the eta identity")
    p.add_argument("name", nargs="?")
    p.add_argument("--shape")
    p.add_argument("--tau", help="re,im")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_eta_check)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "format", None):
        args.format = "text"
    try:
        return args.func(args)
    except (UsageError, StrangeDualityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
