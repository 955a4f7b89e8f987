"""Figure rendering for the CLI report paths.

Every renderer takes already-computed rows and writes one PNG next to the
CSV; nothing here feeds back into the computations.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .analytic import predictions, predictions_by_accepted


def plot_analytic(points, path) -> str:
    """Acceptance/rejection fractions and giant-component curves."""
    cs = np.array([p.c for p in points])
    fs = np.array([p.f for p in points])
    betas = np.array([p.beta for p in points])
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.6, 3.8))
    ax1.plot(cs, fs / cs, label="accepted fraction", color="tab:blue")
    ax1.plot(cs, 1 - fs / cs, "--", label="rejected fraction", color="tab:red")
    ax1.set_xlabel("query density c (t = cn/2)")
    ax1.set_ylabel("fraction of queries")
    ax1.set_ylim(0, 1.02)
    ax1.legend(frameon=False)
    ax2.plot(cs, betas, label="largest component / n", color="tab:green")
    acc = [c for c in cs if 1.001 < c < 1.999]
    if acc:
        pts = [predictions_by_accepted(c) for c in acc]
        ax2.plot(acc, [p.giant_fraction for p in pts], color="tab:purple",
                 label="giant at m0 = cn/2")
        ax2.plot(acc, [p.uniform_giant_fraction for p in pts], ":",
                 color="tab:gray", label="uniform graph, c - 1")
    ax2.set_xlabel("density c")
    ax2.set_ylabel("fraction of vertices")
    ax2.set_ylim(0, 1.02)
    ax2.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)


def plot_trace(trace, path) -> str:
    """One run: accepted, rejected, giant (and companion excess) over time."""
    rows = trace.rows
    ts = np.array([r[0] for r in rows])
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(ts, [r[1] for r in rows], label="accepted m(t)", color="tab:blue")
    ax.plot(ts, [r[2] for r in rows], label="rejected r(t)", color="tab:red")
    ax.plot(ts, [r[3] for r in rows], label="largest component", color="tab:green")
    if rows and rows[-1][4] is not None:
        ax.plot(ts, [r[4] for r in rows], "--", color="tab:gray",
                label="companion excess")
    ax.set_xlabel("step t")
    ax.set_ylabel("count")
    ax.set_title(f"{trace.graph_class}, n={trace.n}, seed={trace.seed}")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)


def plot_sweep(result, path) -> str:
    """Sweep means against the analytic curves, one marker set per n."""
    cfg = result.config
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    grid = np.linspace(max(1.02, min(cfg.c_grid) * 0.9), max(cfg.c_grid) * 1.05, 120)
    if cfg.mode == "step":
        ax.plot(grid, [(c - predictions(c).f) / 2 for c in grid], color="tab:gray",
                label="(c - f(c))/2")
    else:
        lo = [c for c in grid if 1.001 < c < 1.999]
        ax.plot(lo, [predictions_by_accepted(c).giant_fraction for c in lo],
                color="tab:gray", label="giant fraction at m0 = cn/2")
    for n in cfg.n_list:
        xs, ys = [], []
        for ci, (cell_n, c) in enumerate(cfg.cells()):
            if cell_n != n:
                continue
            reps = [result.raw[(ci, ri)] for ri in range(cfg.replicates)
                    if (ci, ri) in result.raw]
            if not reps:
                continue
            xs.append(c)
            if cfg.mode == "step":
                ys.append(np.mean([r[2] for r in reps]) / (n / 2))
            else:
                ys.append(np.mean([r[3] for r in reps]) / n)
        ax.plot(xs, ys, "o", label=f"n={n}")
    ax.set_xlabel("density c")
    ax.set_ylabel("rejected per n/2" if cfg.mode == "step" else "giant fraction")
    ax.set_title(f"{cfg.graph_class}, {cfg.replicates} replicates")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)


def plot_census(rows, n, path) -> str:
    """Forbidden-edge density against the predicted square of the survival
    probability; rows are (seed, t, forbidden, addable, m) tuples."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    cs = sorted({2 * t / n for (_s, t, _f, _a, _m) in rows})
    grid = np.linspace(max(1.02, min(cs) * 0.9), max(cs) * 1.08, 100)
    ax.plot(grid, [predictions(c).forbidden_density for c in grid],
            color="tab:gray", label="predicted density")
    by_c: dict[float, list[float]] = {}
    for _seed, t, forb, _add, _m in rows:
        by_c.setdefault(2 * t / n, []).append(forb / (n * n / 2))
    xs = sorted(by_c)
    ax.plot(xs, [float(np.mean(by_c[c])) for c in xs], "o", label="measured")
    ax.set_xlabel("query density c")
    ax.set_ylabel("forbidden edges per n^2/2")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)
