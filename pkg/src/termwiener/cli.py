"""Command-line surface: compute, bounds, construct, fmax, enumerate, verify.

All commands print a single JSON object on stdout (verify prints one
summary line per check instead, with file outputs via --report/--csv/
--figures).  Exit codes: 0 success / all-pass, 1 any disagreement or
failed check, 2 usage error, 3 partial-only verification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from ._version import __version__
from .checks import CHECK_IDS, FaultInjection, cached_verify, clamp_range, verify_theorem
from .enumerate_trees import EnumFilter, all_trees, trees_matching
from .errors import TerminalWienerError
from .families import (
    construct_caterpillar,
    construct_delta3_optimal,
    construct_double_broom,
    construct_fig1,
    construct_starlike,
)
from .fopt import f_max_bruteforce, f_max_valley
from .report import emit_report, render_report_figures, summarize_exit_code
from .tree import format_tree, parse_tree
from .tw import tw_edgecut, tw_pairwise

USAGE_ERROR = 2


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except TerminalWienerError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return USAGE_ERROR


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tw", description=__doc__)
    parser.add_argument("--version", action="version", version=f"tw {__version__}")
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("compute", help="terminal Wiener index of a tree file")
    p.add_argument("tree_file")
    p.add_argument("--method", choices=("pairwise", "edgecut", "both"), default="both")
    p.set_defaults(handler=_cmd_compute)

    p = sub.add_parser("bounds", help="closed-form bound values as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("construct", help="build a named extremal family member")
    p.add_argument("family", choices=("starlike", "broom", "caterpillar", "fig1", "delta3"))
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--pos", type=int)
    p.add_argument("--x", help="comma-separated spine vector, e.g. 1,0,1")
    p.add_argument("--id", type=int, dest="tree_id", help="reference tree id 1..4")
    p.add_argument("-o", "--output", help="write the tree file here instead of stdout")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("fmax", help="maximize the split-product sum over arrangements")
    p.add_argument("--weights", required=True, help="comma-separated, e.g. 2,1,1")
    p.add_argument("--method", choices=("brute", "valley", "both"), default="both")
    p.add_argument("--cap", type=int, default=9, help="brute-force size cap")
    p.set_defaults(handler=_cmd_fmax)

    p = sub.add_parser("enumerate", help="stream unlabeled trees matching a filter")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--leaves", type=int)
    p.add_argument("--caterpillar-only", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--emit", metavar="DIR", help="write one tree file per class here")
    p.add_argument("--cap", type=int, default=20)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("verify", help="run verification campaigns")
    p.add_argument("check", help=f"one of: {', '.join(CHECK_IDS)}, or 'all'")
    p.add_argument("--n-max", type=int)
    p.add_argument("--jobs", type=int, default=int(os.environ.get("TW_JOBS", "1")))
    p.add_argument("--report", help="write the JSON report here ('all' writes a JSON array)")
    p.add_argument("--csv", help="write CSV rows here")
    p.add_argument("--figures", metavar="DIR", help="render one PNG per check here")
    p.add_argument("--cache", metavar="DIR", help="cache reports keyed by (check, range, version)")
    p.add_argument("--fault-index", type=int, help="corrupt the i-th value evaluation (tests the tester)")
    p.add_argument("--fault-delta", type=int, default=1)
    p.set_defaults(handler=_cmd_verify)

    return parser


def _read_tree(path: str):
    if path == "-":
        return parse_tree(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_tree(fh.read())


def _cmd_compute(args) -> int:
    tree = _read_tree(args.tree_file)
    if args.method == "pairwise":
        print(json.dumps({"method": "pairwise", "tw": tw_pairwise(tree)}))
        return 0
    if args.method == "edgecut":
        print(json.dumps({"method": "edgecut", "tw": tw_edgecut(tree)}))
        return 0
    pairwise = tw_pairwise(tree)
    edgecut = tw_edgecut(tree)
    agree = pairwise == edgecut
    print(json.dumps({"pairwise": pairwise, "edgecut": edgecut, "agree": agree}, sort_keys=True))
    return 0 if agree else 1


def _cmd_bounds(args) -> int:
    if args.d is None and args.max_degree is None:
        print(json.dumps({"error": "need --d and/or --max-degree"}), file=sys.stderr)
        return USAGE_ERROR
    out: dict = {"n": args.n}
    if args.d is not None:
        lb = bounds_mod.leaf_bounds(args.n, args.d)
        ub = bounds_mod.upper_bound_by_diameter(args.n, args.d)
        out["d"] = args.d
        out["leaf_bounds"] = {"l0": lb.l0, "l_max": lb.l_max}
        out["lower_bound_by_diameter"] = bounds_mod.lower_bound_by_diameter(args.n, args.d)
        out["upper_bound_by_diameter"] = {"value": ub.value, "asserted_valid": ub.asserted_valid}
    if args.max_degree is not None:
        if args.max_degree != 3:
            print(
                json.dumps({"error": "closed-form maximum available only for max degree 3"}),
                file=sys.stderr,
            )
            return USAGE_ERROR
        d3 = bounds_mod.delta3_max(args.n)
        out["max_degree"] = 3
        out["delta3_max"] = {"value": d3.value, "p": d3.p, "case": d3.case}
    print(json.dumps(out, sort_keys=True))
    return 0


def _cmd_construct(args) -> int:
    family = args.family
    if family == "starlike":
        _require(args, "n", "d")
        tree = construct_starlike(args.n, args.d)
    elif family == "broom":
        _require(args, "n", "d")
        tree = construct_double_broom(args.n, args.d, args.pos)
    elif family == "caterpillar":
        if not args.x:
            raise TerminalWienerError("caterpillar needs --x, e.g. --x 1,0,1")
        tree = construct_caterpillar(tuple(int(tok) for tok in args.x.split(",")))
    elif family == "fig1":
        if args.tree_id is None:
            raise TerminalWienerError("fig1 needs --id 1..4")
        tree = construct_fig1(args.tree_id)
    else:
        _require(args, "n")
        tree = construct_delta3_optimal(args.n)
    text = format_tree(tree)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_fmax(args) -> int:
    weights = tuple(int(tok) for tok in args.weights.split(","))
    out: dict = {"weights": sorted(weights, reverse=True)}
    brute = valley = None
    if args.method in ("brute", "both"):
        brute = f_max_bruteforce(weights, cap=args.cap)
        out["brute"] = {"value": brute.value, "argmax": sorted(map(list, brute.argmax))}
    if args.method in ("valley", "both"):
        valley = f_max_valley(weights)
        out["valley"] = {"value": valley.value, "argmax": sorted(map(list, valley.argmax))}
    if brute and valley:
        out["agree"] = brute.value == valley.value
    print(json.dumps(out, sort_keys=True))
    return 0


def _cmd_enumerate(args) -> int:
    filt = EnumFilter(
        n=args.n,
        diameter=args.d,
        max_degree=args.max_degree,
        leaf_count=args.leaves,
        caterpillar_only=args.caterpillar_only,
    )
    unfiltered = args.d is None and args.max_degree is None and args.leaves is None and not args.caterpillar_only
    stream = all_trees(args.n, cap=args.cap) if unfiltered else trees_matching(filt, cap=args.cap)
    count = 0
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)
    for tree in stream:
        if args.emit:
            path = os.path.join(args.emit, f"tree_{count:06d}.txt")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(format_tree(tree))
        count += 1
    print(json.dumps({"n": args.n, "count": count, "emitted": args.emit}, sort_keys=True))
    return 0


def _cmd_verify(args) -> int:
    run_all = args.check == "all"
    checks = list(CHECK_IDS) if run_all else [args.check]
    fault = None
    if args.fault_index is not None:
        fault = FaultInjection(index=args.fault_index, delta=args.fault_delta)
    reports = []
    for check in checks:
        n_max = clamp_range(check, args.n_max) if run_all else args.n_max
        if fault is not None:
            report = verify_theorem(check, n_max=n_max, jobs=args.jobs, fault=fault)
        else:
            report = cached_verify(check, n_max=n_max, jobs=args.jobs, cache_dir=args.cache)
        reports.append(report)
        scanned = sum(report.counts.values())
        print(
            f"{report.check_id}: {report.status}  rows={len(report.rows)} "
            f"scanned={scanned} time={report.wall_time_s:.2f}s"
        )
        for cex in report.counterexamples[:5]:
            print(f"  counterexample: {json.dumps(cex, sort_keys=True)}")
    if args.report:
        if len(reports) == 1:
            emit_report(reports[0], "json", args.report)
        else:
            with open(args.report, "w", encoding="utf-8") as fh:
                json.dump([r.to_dict() for r in reports], fh, sort_keys=True, indent=2)
                fh.write("\n")
    if args.csv:
        from .report import report_to_csv

        with open(args.csv, "w", encoding="utf-8") as fh:
            header_written = False
            for report in reports:
                text = report_to_csv(report)
                fh.write(text if not header_written else text.split("\n", 1)[1])
                header_written = True
    if args.figures:
        for report in reports:
            render_report_figures(report, args.figures)
    return summarize_exit_code(reports)


def _require(args, *names: str) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise TerminalWienerError(f"{args.family} needs --" + ", --".join(missing))


if __name__ == "__main__":
    sys.exit(main())
