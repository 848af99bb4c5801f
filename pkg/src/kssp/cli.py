"""Command line front end.

Subcommands: ``gen`` writes seeded grid instances, ``solve`` prints the
k cheapest simple paths of one instance, ``bench`` runs timed solver
sweeps into CSV, ``report`` aggregates such a CSV. Node ids on the
command line and in path output are 0-based (DIMACS file ids minus
one).

Exit codes of ``solve``: 0 all k paths found, 1 aborted by a limit,
2 bad usage or input, 3 fewer than k paths exist, 4 cross-check
mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .bench import ALGORITHMS, bench_graph, bench_grid, read_rows, summarize, write_rows, write_summary
from .dimacs import DimacsError, dump_dimacs, format_path_line, load_dimacs
from .engine import COMPLETE, SolveLimitExceeded, SolveOptions, k_shortest_paths
from .graph import Graph, GraphError
from .gridgen import gen_grid, sample_pairs
from .oracles import enumerate_simple_paths, yen_k_shortest
from .rng import SplitMix64

BRUTE_NODE_LIMIT = 14


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _parse_grid(text: str) -> tuple[int, int]:
    rows, sep, cols = text.partition("x")
    if not sep or not rows.isdigit() or not cols.isdigit():
        raise ValueError(f"grid must look like ROWSxCOLS, got {text!r}")
    return int(rows), int(cols)


def _load_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    if args.graph is not None and args.grid is not None:
        raise ValueError("give either --graph or --grid, not both")
    if args.graph is not None:
        with open(args.graph) as f:
            g = load_dimacs(f)
        name = os.path.splitext(os.path.basename(args.graph))[0]
        return g, name
    if args.grid is not None:
        rows, cols = _parse_grid(args.grid)
        return gen_grid(rows, cols, seed=args.seed), f"grid{rows}x{cols}"
    raise ValueError("one of --graph or --grid is required")


def cmd_gen(args: argparse.Namespace) -> int:
    rows, cols = _parse_grid(args.grid)
    os.makedirs(args.out, exist_ok=True)
    master = SplitMix64(args.seed)
    cost_seeds = [master.next_u64() for _ in range(args.costs)]
    pair_seeds = [master.next_u64() for _ in range(args.costs)]
    entries = []
    for ci in range(args.costs):
        g = gen_grid(rows, cols, args.cost_low, args.cost_high, seed=cost_seeds[ci])
        filename = f"grid{rows}x{cols}-c{ci}.gr"
        with open(os.path.join(args.out, filename), "w") as f:
            dump_dimacs(g, f)
        pair_rng = SplitMix64(pair_seeds[ci])
        pairs = sample_pairs(pair_rng, g.node_count, args.pairs)
        entries.append(
            {
                "file": filename,
                "cost_seed": cost_seeds[ci],
                "pairs": [[s, t] for s, t in pairs],
            }
        )
    manifest = {
        "rows": rows,
        "cols": cols,
        "costs": args.costs,
        "pairs": args.pairs,
        "seed": args.seed,
        "cost_low": args.cost_low,
        "cost_high": args.cost_high,
        "instances": entries,
    }
    with open(os.path.join(args.out, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")
    _note(f"wrote {args.costs} instance(s) and manifest.json to {args.out}")
    return 0


def _print_paths(g: Graph, report) -> None:
    for rec in report.records:
        print(format_path_line(g, rec.path))


def cmd_solve(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args)
    s, t, k = args.source, args.target, args.k

    if args.algo == "brute":
        if g.node_count > BRUTE_NODE_LIMIT:
            raise ValueError(
                f"brute force is limited to {BRUTE_NODE_LIMIT} nodes, graph has {g.node_count}"
            )
        paths = enumerate_simple_paths(g, s, t, max_paths=k)
        for p in paths:
            print(format_path_line(g, p))
        _note(f"brute force: {len(paths)} of {k} requested paths")
        return 0 if len(paths) == k else 3

    opts = SolveOptions(
        guided=not args.unguided,
        prune_queue_max=not args.no_prune_max,
        prune_queue_min=not args.no_prune_min,
        timeout_s=args.timeout_s,
        label_budget=args.label_budget,
        validate=args.validate,
    )
    try:
        if args.algo in ("deviation", "both"):
            report = k_shortest_paths(g, s, t, k, opts)
        else:
            report = yen_k_shortest(
                g, s, t, k, accelerated=args.algo == "yen-accelerated", timeout_s=args.timeout_s
            )
        if args.algo == "both":
            reference = yen_k_shortest(g, s, t, k, timeout_s=args.timeout_s)
            if report.costs != reference.costs:
                _note("cross-check mismatch between solvers:")
                _note(f"  deviation: {report.costs}")
                _note(f"  yen:       {reference.costs}")
                return 4
            _note("cross-check: yen agrees")
    except SolveLimitExceeded as exc:
        _print_paths(g, exc.report)
        _note(f"aborted ({exc.kind}): {len(exc.report.records)} of {k} paths found")
        return 1

    if args.check:
        if g.node_count > BRUTE_NODE_LIMIT:
            _note(f"check skipped: graph has more than {BRUTE_NODE_LIMIT} nodes")
        else:
            expected = [p.cost for p in enumerate_simple_paths(g, s, t, max_paths=k)]
            if report.costs != expected:
                _print_paths(g, report)
                _note("cross-check mismatch against exhaustive enumeration:")
                _note(f"  solver:     {report.costs}")
                _note(f"  exhaustive: {expected}")
                return 4
            _note("cross-check: exhaustive enumeration agrees")

    _print_paths(g, report)
    st = report.stats
    _note(
        f"{len(report.records)} of {k} paths, status {report.status}, "
        f"{st.queries_attempted} queries ({st.queries_failed} failed), "
        f"{st.wall_time_s:.6f}s"
    )
    return 0 if report.status == COMPLETE else 3


def cmd_bench(args: argparse.Namespace) -> int:
    algorithms = args.algo or ["deviation"]
    if args.grid is not None and args.graph is None:
        rows_n, cols_n = _parse_grid(args.grid)
        rows = bench_grid(
            rows_n,
            cols_n,
            args.costs,
            args.pairs,
            args.k,
            args.seed,
            algorithms,
            timeout_s=args.timeout_s,
            label_budget=args.label_budget,
        )
    else:
        g, name = _load_graph(args)
        rows = bench_graph(
            g,
            name,
            args.pairs,
            args.k,
            args.seed,
            algorithms,
            timeout_s=args.timeout_s,
            label_budget=args.label_budget,
        )
    if args.csv is not None:
        write_rows(args.csv, rows)
        _note(f"wrote {len(rows)} row(s) to {args.csv}")
    else:
        write_rows(sys.stdout, rows)
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    rows = read_rows(args.csv)
    write_summary(sys.stdout, summarize(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kssp", description="k shortest simple paths toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write seeded grid instances to a directory")
    p.add_argument("--grid", required=True, metavar="RxC", help="grid shape, e.g. 100x100")
    p.add_argument("--costs", type=int, default=1, help="number of cost draws")
    p.add_argument("--pairs", type=int, default=0, help="query pairs per instance in the manifest")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cost-low", type=float, default=0.0)
    p.add_argument("--cost-high", type=float, default=10.0)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="print the k cheapest simple paths of one instance")
    p.add_argument("--graph", help="DIMACS shortest path file")
    p.add_argument("--grid", metavar="RxC", help="generate a grid instead of reading a file")
    p.add_argument("--seed", type=int, default=0, help="seed for --grid")
    p.add_argument("-s", "--source", type=int, required=True, help="0-based node id")
    p.add_argument("-t", "--target", type=int, required=True, help="0-based node id")
    p.add_argument("-k", "--k", type=int, default=1)
    p.add_argument(
        "--algo",
        choices=("deviation", "yen", "yen-accelerated", "brute", "both"),
        default="deviation",
    )
    p.add_argument(
        "--check",
        action="store_true",
        help="compare against exhaustive enumeration (small graphs only)",
    )
    p.add_argument(
        "--unguided",
        action="store_true",
        help="order queries by plain cost instead of the reverse-distance potential",
    )
    p.add_argument("--no-prune-max", action="store_true", help="disable the query cost cap")
    p.add_argument("--no-prune-min", action="store_true", help="disable early queue drain")
    p.add_argument("--timeout-s", type=float, default=None)
    p.add_argument("--label-budget", type=int, default=None)
    p.add_argument("--validate", action="store_true", help="run structural self-checks")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run solver sweeps and emit CSV rows")
    p.add_argument("--graph", help="DIMACS shortest path file")
    p.add_argument("--grid", metavar="RxC", help="benchmark seeded grids")
    p.add_argument("--costs", type=int, default=1, help="cost draws per grid shape")
    p.add_argument("--pairs", type=int, default=1, help="query pairs per instance")
    p.add_argument("-k", "--k", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--algo",
        action="append",
        choices=ALGORITHMS,
        help="repeatable; default: deviation",
    )
    p.add_argument("--timeout-s", type=float, default=None)
    p.add_argument("--label-budget", type=int, default=None)
    p.add_argument("--csv", help="output path; stdout when omitted")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("report", help="aggregate a bench CSV per algorithm and k")
    p.add_argument("--csv", required=True, help="input CSV from bench")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DimacsError, GraphError, OSError, ValueError) as exc:
        _note(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
