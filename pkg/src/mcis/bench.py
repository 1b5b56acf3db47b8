"""Instance runner and batch benchmark harness.

``run_instance`` parses one graph pair, solves it under one rule
configuration and flattens everything a results table needs into an
:class:`InstanceReport`. ``run_batch`` maps that over a manifest of pairs
times a set of configurations, in parallel across processes, then writes
per-run JSON lines plus aggregate CSVs: cumulative solved-over-time curves,
per-configuration comparisons (speedups where both solved, incumbent-size
deltas where neither did) and the share of instances where symmetry rules
out-pruned the bound.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from time import perf_counter

from .graph import Graph, parse_edgelist, parse_lad
from .solver import SolverConfig, solve

FORMATS = ("lad", "edgelist")

# geometric-ish grid for the cumulative solved curves, in seconds
_CURVE_STEPS = (1, 2, 5)


@dataclass
class InstanceReport:
    instance: str
    config: str
    incumbent_size: int
    completed: bool
    wall_time: float
    branches: int
    bound_prunes: int
    var_sym_prunes: int
    val_sym_prunes: int
    time_to_best: float
    branches_to_best: int
    sym_to_bound_ratio: float
    mapping: list = field(default_factory=list)
    error: str | None = None


def load_graph(path: str | Path, fmt: str = "lad", directed: bool = False, loops: bool = False) -> Graph:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    if fmt == "lad" and directed:
        raise ValueError("the lad format is undirected only")
    text = Path(path).read_text()
    if fmt == "lad":
        return parse_lad(text)
    return parse_edgelist(text, directed=directed, allow_loops=loops)


def run_instance(
    g_path: str | Path,
    h_path: str | Path,
    config: SolverConfig,
    fmt: str = "lad",
    directed: bool = False,
    loops: bool = False,
    instance_id: str | None = None,
) -> InstanceReport:
    """Solve one pair and report every counter as a flat record.

    Wall time wraps the whole solve, including the interchangeability-class
    computation. Parse and validation errors propagate to the caller.
    """
    g = load_graph(g_path, fmt, directed, loops)
    h = load_graph(h_path, fmt, directed, loops)
    t0 = perf_counter()
    sol = solve(g, h, config)
    wall = perf_counter() - t0
    st = sol.stats
    if instance_id is None:
        instance_id = f"{g_path}:{h_path}"
    return InstanceReport(
        instance=str(instance_id),
        config=config.name,
        incumbent_size=st.incumbent_size,
        completed=st.completed,
        wall_time=wall,
        branches=st.branches,
        bound_prunes=st.bound_prunes,
        var_sym_prunes=st.var_sym_prunes,
        val_sym_prunes=st.val_sym_prunes,
        time_to_best=st.time_to_best,
        branches_to_best=st.branches_to_best,
        sym_to_bound_ratio=100.0 * (st.var_sym_prunes + st.val_sym_prunes) / max(st.bound_prunes, 1),
        mapping=[[g.display_name(v), h.display_name(u)] for v, u in sol.mapping],
    )


def read_manifest(path: str | Path) -> list[tuple[str, str]]:
    """Pairs of graph paths, one per line, resolved against the manifest dir.

    Blank lines and lines starting with ``#`` are skipped.
    """
    mpath = Path(path)
    base = mpath.parent
    pairs = []
    for i, raw in enumerate(mpath.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ValueError(f"{mpath}:{i}: expected two paths per line")
        pairs.append((str(base / toks[0]), str(base / toks[1])))
    return pairs


def _run_task(task) -> dict:
    g_path, h_path, cfg_name, timeout, fmt, directed, loops, instance_id = task
    config = SolverConfig.from_name(cfg_name, timeout=timeout)
    try:
        report = run_instance(g_path, h_path, config, fmt, directed, loops, instance_id)
    except Exception as exc:  # recorded, the batch keeps going
        return asdict(
            InstanceReport(
                instance=str(instance_id),
                config=cfg_name,
                incumbent_size=0,
                completed=False,
                wall_time=0.0,
                branches=0,
                bound_prunes=0,
                var_sym_prunes=0,
                val_sym_prunes=0,
                time_to_best=0.0,
                branches_to_best=0,
                sym_to_bound_ratio=0.0,
                error=f"{type(exc).__name__}: {exc}",
            )
        )
    return asdict(report)


def _curve_bounds(timeout: float) -> list[float]:
    bounds = []
    scale = 0.001
    while scale <= timeout:
        for step in _CURVE_STEPS:
            b = step * scale
            if b >= timeout:
                break
            bounds.append(b)
        scale *= 10
    bounds.append(timeout)
    return bounds


def aggregate_reports(reports: list[dict], configs: list[str], timeout: float) -> dict:
    """Summary statistics over per-run report dicts.

    The first configuration is the candidate; every other one serves as a
    baseline for speedup (both solved) and incumbent-delta (neither solved)
    comparisons. Errored runs count as unsolved and are excluded from the
    pairwise rows.
    """
    by_config: dict[str, dict[str, dict]] = {c: {} for c in configs}
    for rep in reports:
        if rep["config"] in by_config:
            by_config[rep["config"]][rep["instance"]] = rep

    bounds = _curve_bounds(timeout)
    curves = {}
    per_config = {}
    for c in configs:
        runs = list(by_config[c].values())
        solved = [r for r in runs if r["completed"] and not r["error"]]
        curves[c] = [sum(1 for r in solved if r["wall_time"] <= b) for b in bounds]
        high_sym = [
            r
            for r in runs
            if not r["error"] and (r["var_sym_prunes"] + r["val_sym_prunes"]) > r["bound_prunes"]
        ]
        per_config[c] = {
            "runs": len(runs),
            "errors": sum(1 for r in runs if r["error"]),
            "solved": len(solved),
            "high_sym_pruning_pct": 100.0 * len(high_sym) / len(runs) if runs else 0.0,
        }

    comparisons = []
    candidate = configs[0]
    for baseline in configs[1:]:
        speedups = []
        deltas = []
        for inst, a in by_config[candidate].items():
            b = by_config[baseline].get(inst)
            if b is None or a["error"] or b["error"]:
                continue
            if a["completed"] and b["completed"]:
                speedups.append(b["wall_time"] / max(a["wall_time"], 1e-9))
            elif not a["completed"] and not b["completed"]:
                deltas.append(a["incumbent_size"] - b["incumbent_size"])
        comparisons.append(
            {
                "candidate": candidate,
                "baseline": baseline,
                "co_solved": len(speedups),
                "mean_speedup": sum(speedups) / len(speedups) if speedups else 0.0,
                "max_speedup": max(speedups) if speedups else 0.0,
                "co_unsolved": len(deltas),
                "mean_delta": sum(deltas) / len(deltas) if deltas else 0.0,
                "deltas": deltas,
            }
        )

    return {
        "configs": list(configs),
        "timeout": timeout,
        "curve_bounds": bounds,
        "curves": curves,
        "per_config": per_config,
        "comparisons": comparisons,
    }


def run_batch(
    manifest_path: str | Path,
    configs: list[str] | None = None,
    jobs: int | None = None,
    out_dir: str | Path = "bench_out",
    timeout: float = 1800.0,
    fmt: str = "lad",
    directed: bool = False,
    loops: bool = False,
) -> dict:
    """Run every manifest pair under every configuration and write results.

    Produces ``reports.jsonl``, ``summary.json``, ``cumulative.csv`` and
    ``comparison.csv`` under ``out_dir``. Reports keep manifest order
    regardless of worker scheduling. Returns the summary dict.
    """
    if configs is None:
        configs = ["dual", "none"]
    for c in configs:
        if c not in ("none", "var", "val", "dual"):
            raise ValueError(f"unknown config name {c!r}")
    if jobs is None:
        jobs = os.cpu_count() or 1

    pairs = read_manifest(manifest_path)
    tasks = []
    for i, (g_path, h_path) in enumerate(pairs):
        for cfg_name in configs:
            tasks.append((g_path, h_path, cfg_name, timeout, fmt, directed, loops, f"{i:04d}:{Path(g_path).name}:{Path(h_path).name}"))

    if jobs <= 1 or len(tasks) <= 1:
        reports = [_run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_task, tasks))

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "reports.jsonl", "w") as f:
        for rep in reports:
            f.write(json.dumps(rep) + "\n")

    summary = aggregate_reports(reports, configs, timeout)
    with open(out / "summary.json", "w") as f:
        json.dump(summary, f, indent=2)

    with open(out / "cumulative.csv", "w") as f:
        f.write("time_bound_s," + ",".join(f"solved_{c}" for c in configs) + "\n")
        if reports:
            for i, b in enumerate(summary["curve_bounds"]):
                f.write(f"{b:g}," + ",".join(str(summary["curves"][c][i]) for c in configs) + "\n")

    with open(out / "comparison.csv", "w") as f:
        f.write(
            "candidate,baseline,co_solved,mean_speedup,max_speedup,co_unsolved,mean_delta\n"
        )
        rows = summary["comparisons"] if reports else []
        for row in rows:
            f.write(
                f"{row['candidate']},{row['baseline']},{row['co_solved']},"
                f"{row['mean_speedup']:g},{row['max_speedup']:g},"
                f"{row['co_unsolved']},{row['mean_delta']:g}\n"
            )

    return summary
