"""Replicated parameter sweeps with deterministic parallel execution.

Work is a pool over (cell, replicate) tasks; every task's generator is
derived from the master seed and its own (cell, replicate) key, and results
merge by key, so output files are byte-identical no matter how many workers
ran or how they were scheduled.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from multiprocessing import Pool

import numpy as np

from .process import ProcessConfig, StopRule, run
from .rng import split_seed


@dataclass(frozen=True)
class SweepConfig:
    n_list: tuple[int, ...]
    c_grid: tuple[float, ...]
    mode: str = "step"  # target t = c*n/2 ("step") or m0 = c*n/2 ("accepted")
    replicates: int = 1
    seed: int = 0
    graph_class: str = "planar"
    jobs: int = 0  # 0 = all cores

    def cells(self) -> list[tuple[int, float]]:
        return [(n, c) for n in self.n_list for c in self.c_grid]

    def validate(self) -> None:
        if self.replicates < 1:
            raise ValueError("need at least one replicate")
        if not self.n_list or not self.c_grid:
            raise ValueError("grids must be non-empty")
        if self.mode not in ("step", "accepted"):
            raise ValueError(f"unknown sweep mode {self.mode!r}")


def _one_task(args):
    (cell_idx, rep_idx, n, c, mode, graph_class, master_seed) = args
    target = int(round(c * n / 2))
    stop = StopRule.at_step(target) if mode == "step" else StopRule.at_accepted(target)
    cfg = ProcessConfig(
        n=n,
        graph_class=graph_class,
        stop=stop,
        seed=split_seed(master_seed, cell_idx, rep_idx),
        snapshot_cap=0,
    )
    try:
        trace = run(cfg)
    except Exception as exc:  # propagate per-cell, do not abort the sweep
        return (cell_idx, rep_idx, None, repr(exc))
    t, m, r, giant, _ = trace.rows[-1]
    return (cell_idx, rep_idx, (t, m, r, giant), None)


SWEEP_HEADER = (
    "seed,class,n,mode,c,target,replicates,"
    "m_mean,m_std,m_q10,m_q50,m_q90,"
    "r_mean,r_std,r_q10,r_q50,r_q90,"
    "giant_mean,giant_std,giant_q10,giant_q50,giant_q90,"
    "S_mean,S_std,errors"
)


def _fmt(x: float) -> str:
    return format(float(x), ".10g")


@dataclass
class SweepResult:
    config: SweepConfig
    rows: list[str] = field(default_factory=list)  # formatted CSV data rows
    raw: dict = field(default_factory=dict)  # (cell, rep) -> (t, m, r, giant)

    def to_csv(self) -> str:
        return "\n".join([SWEEP_HEADER, *self.rows]) + "\n"


def run_sweep(cfg: SweepConfig) -> SweepResult:
    cfg.validate()
    cells = cfg.cells()
    tasks = [
        (ci, ri, n, c, cfg.mode, cfg.graph_class, cfg.seed)
        for ci, (n, c) in enumerate(cells)
        for ri in range(cfg.replicates)
    ]
    jobs = cfg.jobs if cfg.jobs > 0 else (os.cpu_count() or 1)
    jobs = min(jobs, len(tasks))
    results: dict[tuple[int, int], tuple] = {}
    errors: dict[tuple[int, int], str] = {}
    if jobs <= 1:
        outputs = map(_one_task, tasks)
    else:
        pool = Pool(processes=jobs)
        try:
            outputs = pool.map(_one_task, tasks, chunksize=1)
        finally:
            pool.close()
            pool.join()
    for ci, ri, payload, err in outputs:
        if err is None:
            results[(ci, ri)] = payload
        else:
            errors[(ci, ri)] = err

    out = SweepResult(config=cfg)
    out.raw = results
    for ci, (n, c) in enumerate(cells):
        reps = [results[(ci, ri)] for ri in range(cfg.replicates) if (ci, ri) in results]
        n_err = sum(1 for ri in range(cfg.replicates) if (ci, ri) in errors)
        target = int(round(c * n / 2))
        if not reps:
            row = [
                str(cfg.seed), cfg.graph_class, str(n), cfg.mode, _fmt(c),
                str(target), str(cfg.replicates),
            ] + [""] * 17 + [str(n_err)]
            out.rows.append(",".join(row))
            continue
        ts = np.array([x[0] for x in reps], dtype=float)
        ms = np.array([x[1] for x in reps], dtype=float)
        rs = np.array([x[2] for x in reps], dtype=float)
        gs = np.array([x[3] for x in reps], dtype=float)

        def stats(xs: np.ndarray) -> list[str]:
            q10, q50, q90 = np.percentile(xs, [10, 50, 90])
            return [_fmt(xs.mean()), _fmt(xs.std()), _fmt(q10), _fmt(q50), _fmt(q90)]

        row = [
            str(cfg.seed), cfg.graph_class, str(n), cfg.mode, _fmt(c),
            str(target), str(cfg.replicates),
            *stats(ms), *stats(rs), *stats(gs),
            _fmt(ts.mean()), _fmt(ts.std()), str(n_err),
        ]
        out.rows.append(",".join(row))
    return out
