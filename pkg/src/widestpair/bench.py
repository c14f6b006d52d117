"""Benchmark harness: all ordered pairs, bandwidth sweeps, CSV reports.

For each maximum-bandwidth value in the sweep, link capacities are
redrawn with the configured seed and every selected algorithm runs over
all ordered (source, dest) pairs. Reported per algorithm: pairs found,
summed wall time, and (when the oracle runs) the total and average
combined-bandwidth shortfall against the oracle.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from pathlib import Path

from .exact import DEFAULT_PATH_CAP, optimal_pair_bruteforce
from .graph import Graph, assign_random_bandwidths
from .mba import mba_pair
from .mlbdp import mlbdp_full

ALGORITHMS = ("mlbdp", "mba", "oracle")
DEFAULT_SWEEP = (10, 20, 50, 100, 200, 500, 1000, 2000, 5000)
MISS_POLICIES = ("full", "zero")
CSV_COLUMNS = ("max_bw", "algo", "pairs_found", "wall_time_ms", "diff_total", "diff_avg")
PLOT_METRICS = ("pairs_found", "wall_time_ms", "diff_total", "diff_avg")


@dataclass
class RunConfig:
    """One benchmark request.

    sweep None means the graph's own bandwidths are used unchanged (one
    report row labeled "fixed"). miss_policy controls how a pair the
    oracle finds but a heuristic misses enters diff_total: "full" adds
    the whole oracle combined bandwidth, "zero" ignores the miss.
    """

    graph: Graph
    label: str = "topology"
    sweep: tuple[int, ...] | None = DEFAULT_SWEEP
    seed: int = 1
    algos: tuple[str, ...] = ALGORITHMS
    miss_policy: str = "full"
    path_cap: int = DEFAULT_PATH_CAP
    out_dir: str | None = None

    def __post_init__(self) -> None:
        for a in self.algos:
            if a not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {a!r}; choose from {ALGORITHMS}")
        if not self.algos:
            raise ValueError("no algorithms selected")
        if self.sweep is not None:
            if not self.sweep:
                raise ValueError("empty sweep")
            for v in self.sweep:
                if v < 1:
                    raise ValueError(f"sweep values must be >= 1, got {v}")
        if self.miss_policy not in MISS_POLICIES:
            raise ValueError(f"unknown miss policy {self.miss_policy!r}")


@dataclass
class AlgoRow:
    algo: str
    pairs_found: int
    wall_time_ms: float
    diff_total: int | None = None
    diff_avg: float | None = None


@dataclass
class SweepRow:
    max_bw: int | None  # None: bandwidths taken from the input as-is
    feasible_pairs: int | None  # ordered pairs for which the oracle found a pair
    algos: list[AlgoRow]


@dataclass
class BenchmarkReport:
    seed: int
    label: str
    miss_policy: str
    rows: list[SweepRow] = field(default_factory=list)


def _ordered_pairs(n: int):
    for s in range(n):
        for d in range(n):
            if d != s:
                yield s, d


def _run_row(cfg: RunConfig, g: Graph, max_bw: int | None) -> SweepRow:
    combined: dict[str, dict[tuple[int, int], int]] = {}
    times: dict[str, float] = {}
    for algo in cfg.algos:
        found: dict[tuple[int, int], int] = {}
        elapsed = 0.0
        if algo == "mlbdp":
            for s in range(g.n):
                t0 = time.perf_counter()
                res = mlbdp_full(g, s)
                elapsed += time.perf_counter() - t0
                for d, r in res.items():
                    found[(s, d)] = r.combined
        elif algo == "mba":
            for s, d in _ordered_pairs(g.n):
                t0 = time.perf_counter()
                pair = mba_pair(g, s, d)
                elapsed += time.perf_counter() - t0
                if pair is not None:
                    found[(s, d)] = pair.combined
        else:
            for s, d in _ordered_pairs(g.n):
                t0 = time.perf_counter()
                res = optimal_pair_bruteforce(g, s, d, cfg.path_cap)
                elapsed += time.perf_counter() - t0
                if res is not None:
                    found[(s, d)] = res[1]
        combined[algo] = found
        times[algo] = elapsed * 1000.0

    # the oracle is exact, so no heuristic may ever beat it; the two
    # heuristics are not ordered against each other in general
    oracle = combined.get("oracle")
    if oracle is not None:
        for algo in cfg.algos:
            if algo == "oracle":
                continue
            for key, val in combined[algo].items():
                assert key in oracle and oracle[key] >= val, (
                    f"{algo} beat the oracle at {key}: {val} > {oracle.get(key)}"
                )

    feasible = len(oracle) if oracle is not None else None
    rows = []
    for algo in cfg.algos:
        diff_total = diff_avg = None
        if oracle is not None and algo != "oracle":
            diff_total = 0
            for key, oc in oracle.items():
                hc = combined[algo].get(key)
                if hc is None:
                    diff_total += oc if cfg.miss_policy == "full" else 0
                else:
                    diff_total += oc - hc
            diff_avg = diff_total / feasible if feasible else 0.0
        rows.append(AlgoRow(algo, len(combined[algo]), times[algo], diff_total, diff_avg))
    return SweepRow(max_bw, feasible, rows)


def run_benchmark(cfg: RunConfig) -> BenchmarkReport:
    """Run every selected algorithm over all ordered pairs per sweep value.

    Deterministic apart from the wall-time fields.
    """
    report = BenchmarkReport(cfg.seed, cfg.label, cfg.miss_policy)
    values: list[int | None] = list(cfg.sweep) if cfg.sweep is not None else [None]
    for max_bw in values:
        g = cfg.graph if max_bw is None else assign_random_bandwidths(cfg.graph, max_bw, cfg.seed)
        report.rows.append(_run_row(cfg, g, max_bw))
    return report


def render_report_csv(report: BenchmarkReport) -> str:
    """CSV text: two '#' header lines, column header, one row per
    (sweep value, algorithm). diff cells are empty without an oracle."""
    buf = io.StringIO()
    buf.write(f"# seed={report.seed} topology={report.label} miss_policy={report.miss_policy}\n")
    buf.write(
        "# miss_policy full: a pair the oracle finds but a heuristic misses adds "
        "the full oracle combined bandwidth to diff_total; zero: misses add nothing\n"
    )
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        bw_txt = "fixed" if row.max_bw is None else row.max_bw
        for a in row.algos:
            writer.writerow(
                [
                    bw_txt,
                    a.algo,
                    a.pairs_found,
                    f"{a.wall_time_ms:.3f}",
                    "" if a.diff_total is None else a.diff_total,
                    "" if a.diff_avg is None else f"{a.diff_avg:.4f}",
                ]
            )
    return buf.getvalue()


def write_report_csv(report: BenchmarkReport, path: str | Path) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(render_report_csv(report))
    return out


def write_plot_data(report: BenchmarkReport, out_dir: str | Path) -> list[Path]:
    """One x/y series file per metric: column 1 is max_bw, then one
    column per algorithm (nan where a value is absent)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    algos = [a.algo for a in report.rows[0].algos] if report.rows else []
    paths = []
    for metric in PLOT_METRICS:
        lines = ["# max_bw " + " ".join(algos)]
        for row in report.rows:
            cells = ["fixed" if row.max_bw is None else str(row.max_bw)]
            for a in row.algos:
                val = getattr(a, metric)
                if val is None:
                    cells.append("nan")
                elif isinstance(val, float):
                    cells.append(f"{val:.4f}")
                else:
                    cells.append(str(val))
            lines.append(" ".join(cells))
        p = out / f"{metric}.dat"
        p.write_text("\n".join(lines) + "\n")
        paths.append(p)
    return paths
