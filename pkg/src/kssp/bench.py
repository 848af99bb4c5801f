"""Benchmark runs over seeded instances, with CSV output and summaries.

Instance generation is fully determined by the master seed: the grid
cost seeds are drawn first, then one pair seed per grid, so adding more
query pairs never changes which grids are built. Rows identify their
instance as ``grid<R>x<C>-c<i>-p<j>`` (cost draw i, pair draw j) or
``<name>-p<j>`` for a fixed input graph.
"""
from __future__ import annotations

import csv
from dataclasses import asdict, dataclass, fields
from math import exp, fsum, log
from typing import IO, Iterable, Sequence

from .engine import COMPLETE, SolveLimitExceeded, SolveOptions, SolveReport, k_shortest_paths
from .graph import Graph
from .gridgen import gen_grid, sample_pairs
from .oracles import yen_k_shortest
from .rng import SplitMix64

ALGORITHMS = ("deviation", "yen", "yen-accelerated")


@dataclass
class ResultRow:
    instance: str
    algorithm: str
    k: int
    solved: bool
    paths: int
    kth_cost: float | None
    queries: int
    queries_failed: int
    iter_success_mean: float | None
    iter_failed_mean: float | None
    time_s: float


def run_algorithm(
    g: Graph,
    s: int,
    t: int,
    k: int,
    algorithm: str,
    *,
    timeout_s: float | None = None,
    label_budget: int | None = None,
) -> SolveReport:
    """Run one solver; limit violations come back as an aborted report."""
    try:
        if algorithm == "deviation":
            opts = SolveOptions(timeout_s=timeout_s, label_budget=label_budget)
            return k_shortest_paths(g, s, t, k, opts)
        if algorithm == "yen":
            return yen_k_shortest(g, s, t, k, timeout_s=timeout_s)
        if algorithm == "yen-accelerated":
            return yen_k_shortest(g, s, t, k, accelerated=True, timeout_s=timeout_s)
    except SolveLimitExceeded as exc:
        return exc.report
    raise ValueError(f"unknown algorithm: {algorithm!r}")


def row_from_report(instance: str, algorithm: str, k: int, report: SolveReport) -> ResultRow:
    st = report.stats
    return ResultRow(
        instance=instance,
        algorithm=algorithm,
        k=k,
        solved=report.status == COMPLETE,
        paths=len(report.records),
        kth_cost=report.records[-1].path.cost if report.records else None,
        queries=st.queries_attempted,
        queries_failed=st.queries_failed,
        iter_success_mean=st.mean_success_iterations,
        iter_failed_mean=st.mean_failed_iterations,
        time_s=st.wall_time_s,
    )


def bench_graph(
    g: Graph,
    name: str,
    pairs: int,
    k: int,
    seed: int,
    algorithms: Sequence[str] = ("deviation",),
    *,
    timeout_s: float | None = None,
    label_budget: int | None = None,
) -> list[ResultRow]:
    rng = SplitMix64(seed)
    rows: list[ResultRow] = []
    for pi, (s, t) in enumerate(sample_pairs(rng, g.node_count, pairs)):
        for algorithm in algorithms:
            report = run_algorithm(
                g, s, t, k, algorithm, timeout_s=timeout_s, label_budget=label_budget
            )
            rows.append(row_from_report(f"{name}-p{pi}", algorithm, k, report))
    return rows


def bench_grid(
    rows_n: int,
    cols_n: int,
    costs: int,
    pairs: int,
    k: int,
    seed: int,
    algorithms: Sequence[str] = ("deviation",),
    *,
    timeout_s: float | None = None,
    label_budget: int | None = None,
) -> list[ResultRow]:
    master = SplitMix64(seed)
    cost_seeds = [master.next_u64() for _ in range(costs)]
    pair_seeds = [master.next_u64() for _ in range(costs)]
    out: list[ResultRow] = []
    for ci in range(costs):
        g = gen_grid(rows_n, cols_n, seed=cost_seeds[ci])
        pair_rng = SplitMix64(pair_seeds[ci])
        for pi, (s, t) in enumerate(sample_pairs(pair_rng, g.node_count, pairs)):
            for algorithm in algorithms:
                report = run_algorithm(
                    g, s, t, k, algorithm, timeout_s=timeout_s, label_budget=label_budget
                )
                out.append(
                    row_from_report(
                        f"grid{rows_n}x{cols_n}-c{ci}-p{pi}", algorithm, k, report
                    )
                )
    return out


def geometric_mean(values: Iterable[float | None]) -> float | None:
    """Geometric mean over the positive entries, None when there are none.

    Zero, negative and missing entries carry no usable signal for a
    multiplicative average and are left out rather than clamped.
    """
    logs = [log(v) for v in values if v is not None and v > 0]
    if not logs:
        return None
    return exp(fsum(logs) / len(logs))


def summarize(rows: Iterable[ResultRow]) -> list[dict[str, object]]:
    """Aggregate rows per (algorithm, k) with geometric means."""
    groups: dict[tuple[str, int], list[ResultRow]] = {}
    for row in rows:
        groups.setdefault((row.algorithm, row.k), []).append(row)
    out: list[dict[str, object]] = []
    for (algorithm, k), members in sorted(groups.items()):
        out.append(
            {
                "algorithm": algorithm,
                "k": k,
                "instances": len(members),
                "solved": sum(1 for r in members if r.solved),
                "geomean_time_s": geometric_mean(r.time_s for r in members),
                "geomean_iter_success": geometric_mean(
                    r.iter_success_mean for r in members
                ),
                "geomean_iter_failed": geometric_mean(
                    r.iter_failed_mean for r in members
                ),
            }
        )
    return out


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_rows(dest: str | IO[str], rows: Iterable[ResultRow]) -> None:
    names = [f.name for f in fields(ResultRow)]
    if isinstance(dest, str):
        with open(dest, "w", newline="") as f:
            write_rows(f, rows)
        return
    writer = csv.writer(dest)
    writer.writerow(names)
    for row in rows:
        writer.writerow([_cell(v) for v in asdict(row).values()])


def read_rows(src: str | IO[str]) -> list[ResultRow]:
    if isinstance(src, str):
        with open(src, newline="") as f:
            return read_rows(f)
    out = []
    for raw in csv.DictReader(src):
        out.append(
            ResultRow(
                instance=raw["instance"],
                algorithm=raw["algorithm"],
                k=int(raw["k"]),
                solved=raw["solved"] == "true",
                paths=int(raw["paths"]),
                kth_cost=float(raw["kth_cost"]) if raw["kth_cost"] else None,
                queries=int(raw["queries"]),
                queries_failed=int(raw["queries_failed"]),
                iter_success_mean=(
                    float(raw["iter_success_mean"]) if raw["iter_success_mean"] else None
                ),
                iter_failed_mean=(
                    float(raw["iter_failed_mean"]) if raw["iter_failed_mean"] else None
                ),
                time_s=float(raw["time_s"]),
            )
        )
    return out


def write_summary(dest: str | IO[str], summary: list[dict[str, object]]) -> None:
    names = [
        "algorithm",
        "k",
        "instances",
        "solved",
        "geomean_time_s",
        "geomean_iter_success",
        "geomean_iter_failed",
    ]
    if isinstance(dest, str):
        with open(dest, "w", newline="") as f:
            write_summary(f, summary)
        return
    writer = csv.writer(dest)
    writer.writerow(names)
    for entry in summary:
        writer.writerow([_cell(entry[name]) for name in names])
