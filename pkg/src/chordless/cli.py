"""Command-line front end.

Subcommands: ``paths``, ``cycles``, ``verify``, ``bench`` and ``gen``.
Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Vertex ids on the command line and in the output are 0-based, also for
DIMACS input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

import numpy as np

from . import verify as _verify
from .bruteforce import MAX_N
from .generators import FAMILIES, FamilySpec
from .graph import Graph
from .io import GraphFormatError, read_graph, write_edge_list
from .listing import EnumStats, list_chordless_cycles, list_st_paths

STATS_KEYS = (
    "n", "m", "solutions", "leaves", "branching_nodes", "unary_nodes", "max_depth",
    "nongood_scans_max", "oracle", "wall_ms", "delay_p50_us", "delay_p95_us", "delay_max_us",
)


class UsageError(Exception):
    pass


def stats_json(g: Graph, stats: EnumStats) -> dict:
    delays = np.asarray(stats.delays_us, dtype=float)
    if delays.size:
        p50, p95 = (float(x) for x in np.percentile(delays, [50, 95]))
        dmax = float(delays.max())
    else:
        p50 = p95 = dmax = 0.0
    return {
        "n": g.n,
        "m": g.m,
        "solutions": stats.solutions,
        "leaves": stats.leaves,
        "branching_nodes": stats.branching_nodes,
        "unary_nodes": stats.unary_nodes,
        "max_depth": stats.max_depth,
        "nongood_scans_max": stats.nongood_scans_max,
        "oracle": stats.oracle.as_dict(),
        "wall_ms": round(stats.wall_ms, 3),
        "delay_p50_us": round(p50, 3),
        "delay_p95_us": round(p95, 3),
        "delay_max_us": round(dmax, 3),
    }


def _load(path: str, fmt: str) -> Graph:
    try:
        return read_graph(path, fmt)
    except GraphFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None
    except (OSError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write_json(obj, dest: str | None) -> None:
    if dest is None:
        return
    text = json.dumps(obj, indent=2) + "\n"
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def _printer(stream: bool, buffer: list):
    if stream:
        def sink(sol):
            print(" ".join(map(str, sol)))
        return sink
    return buffer.append


def cmd_paths(args) -> int:
    g = _load(args.input, args.format)
    for x in (args.s, args.t):
        if not g.is_alive(x):
            raise UsageError(f"vertex {x} out of range (n={g.n})")
    if args.s == args.t:
        raise UsageError("s and t must differ")
    found: list[list[int]] = []
    stats = list_st_paths(g, args.s, args.t, _printer(args.stream, found), oracle=args.oracle)
    for p in sorted(found):
        print(" ".join(map(str, p)))
    _write_json(stats_json(g, stats), args.stats_out)
    return 0


def cmd_cycles(args) -> int:
    g = _load(args.input, args.format)
    if args.min_length < 3:
        raise UsageError("--min-length must be at least 3")
    found: list[list[int]] = []
    if args.count_only:
        sink = lambda c: None  # noqa: E731
    else:
        sink = _printer(args.stream, found)
    stats = list_chordless_cycles(g, sink, min_len=args.min_length, oracle=args.oracle)
    if args.count_only:
        print(stats.emitted)
    for c in sorted(found):
        print(" ".join(map(str, c)))
    _write_json(stats_json(g, stats), args.stats_out)
    return 0


def _family_spec(args) -> FamilySpec:
    params = {}
    for key in ("n", "m", "r", "seed"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if args.family == "gnm":
        params.setdefault("seed", 0)
    return FamilySpec(args.family, params)


def cmd_verify(args) -> int:
    if args.input is not None:
        graphs = [(args.input, _load(args.input, args.format))]
    elif args.family is not None:
        try:
            if args.family == "gnm":
                base = _family_spec(args)
                graphs = []
                for k in range(args.seeds):
                    spec = FamilySpec("gnm", {**base.params, "seed": base.params["seed"] + k})
                    graphs.append((f"gnm n={spec.params['n']} m={spec.params['m']} seed={spec.params['seed']}",
                                   spec.build()))
            else:
                spec = _family_spec(args)
                graphs = [(f"{spec.family} {spec.params}", spec.build())]
        except (KeyError, ValueError) as exc:
            raise UsageError(f"bad family parameters: {exc}") from None
    else:
        raise UsageError("verify needs an input file or --family")
    for label, g in graphs:
        if g.n > args.max_n:
            raise UsageError(f"{label}: n={g.n} exceeds --max-n {args.max_n}")
    rng = random.Random(args.cleanup_seed)
    failed = 0
    for label, g in graphs:
        errors = _verify.verify_graph(g, args.oracle, cleanup_cases=args.cleanup_cases, rng=rng)
        if errors:
            failed += 1
            print(f"FAIL {label}")
            for e in errors[:20]:
                print(f"  {e}")
            print("  reproducer edge list:")
            for line in _verify.reproducer(g).splitlines():
                print(f"    {line}")
    print(f"{len(graphs) - failed}/{len(graphs)} instances passed")
    return 1 if failed else 0


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_bench(args) -> int:
    reports = []
    if args.family == "bipartite-path":
        if not args.r_list:
            raise UsageError("bipartite-path needs --r-list")
        specs = [FamilySpec("bipartite-path", {"r": r}) for r in args.r_list]
    else:
        specs = [_family_spec(args)]
    for spec in specs:
        try:
            g = spec.build()
        except (KeyError, ValueError) as exc:
            raise UsageError(f"bad family parameters: {exc}") from None
        t0 = time.perf_counter()
        if spec.family == "bipartite-path":
            r = spec.params["r"]
            stats = list_st_paths(g, 0, r - 1, oracle=args.oracle)
        else:
            stats = list_chordless_cycles(g, oracle=args.oracle)
        elapsed = time.perf_counter() - t0
        report = {
            "family": spec.family,
            "params": dict(spec.params),
            "oracle_impl": args.oracle,
            "stats": stats_json(g, stats),
            "nongood_scans_per_solution": stats.nongood_scans_per_solution,
        }
        reports.append(report)
        print(f"{spec.family} {spec.params} n={g.n} m={g.m} solutions={stats.solutions} "
              f"nongood_max={stats.nongood_scans_max} 2n={2 * g.n} time={elapsed:.3f}s")
    _write_json(reports, args.report_out)
    return 0


def cmd_gen(args) -> int:
    try:
        g = _family_spec(args).build()
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad family parameters: {exc}") from None
    write_edge_list(g, args.output if args.output and args.output != "-" else sys.stdout)
    return 0


def _add_family_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--family", choices=FAMILIES, required=required)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--seed", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chordless", description="List chordless st-paths and cycles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="edge list or DIMACS file")
        p.add_argument("--format", choices=("auto", "edgelist", "dimacs"), default="auto")
        p.add_argument("--oracle", choices=("fast", "reference"), default="fast")

    def output_mode(p):
        p.add_argument("--stats-out", metavar="FILE", help="write stats JSON ('-' for stdout)")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--sorted", dest="stream", action="store_false", help="buffer and sort (default)")
        mode.add_argument("--stream", dest="stream", action="store_true", help="print as found")
        p.set_defaults(stream=False)

    p = sub.add_parser("paths", help="list chordless s-t paths")
    common(p)
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    output_mode(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("cycles", help="list chordless cycles")
    common(p)
    p.add_argument("--min-length", type=int, default=3)
    p.add_argument("--count-only", action="store_true")
    output_mode(p)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("verify", help="check the lister against brute force")
    p.add_argument("input", nargs="?")
    p.add_argument("--format", choices=("auto", "edgelist", "dimacs"), default="auto")
    p.add_argument("--oracle", choices=("fast", "reference"), default="fast")
    _add_family_args(p, required=False)
    p.add_argument("--seeds", type=int, default=1, help="number of consecutive gnm seeds")
    p.add_argument("--max-n", type=int, default=MAX_N)
    p.add_argument("--cleanup-cases", type=int, default=3)
    p.add_argument("--cleanup-seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run instrumented enumerations on a family")
    p.add_argument("--oracle", choices=("fast", "reference"), default="fast")
    _add_family_args(p, required=True)
    p.add_argument("--r-list", type=_parse_int_list)
    p.add_argument("--report-out", metavar="FILE")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    _add_family_args(p, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"chordless {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
