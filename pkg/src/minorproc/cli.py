"""Command-line front end: curve emission, runs, sweeps, censuses, the
decomposition diagnostic, and the invariant suite.  CSV is the output
contract; --plot renders a PNG next to the delimited file.

Exit codes: 0 success, 1 invariant failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .analytic import predictions
from .constraints import get_oracle
from .errors import DomainError, GraphError, InfeasibleStopError, SizeLimitError
from .graphs import (
    Graph,
    largest_component,
    max_degree,
    pendant_tree_decomposition,
    write_edge_list,
)
from .process import (
    ProcessConfig,
    StopRule,
    classify_queries,
    pair_count,
    run,
    run_with_engine,
    _census,
)
from .rng import split_seed
from .structure import WeightedGraph, weighted_decomposition
from .sweep import SweepConfig, run_sweep

ANALYTIC_HEADER = (
    "c,beta,f,f_prime,rejected_per_vertex,rejected_fraction,"
    "forbidden_density,giant_fraction,uniform_giant_fraction"
)
CENSUS_HEADER = "seed,class,n,t,forbidden,addable,m"
CLASSIFY_HEADER = (
    "seed,class,n,t_lo,t_hi,inside_rejected,inside_accepted,"
    "outside_rejected,outside_accepted"
)

FORBIDDEN_N_CAP = 4000


def _fmt(x: float) -> str:
    return format(float(x), ".10g")


def _write(out: str | None, text: str) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _plot_path(out: str | None) -> str:
    if out is None or out == "-":
        return "minorproc.png"
    stem, _dot, _ext = out.rpartition(".")
    return (stem or out) + ".png"


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x)


def _parse_float_list(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(",") if x)


def cmd_analytic(args) -> int:
    if not (1.0 < args.c_min < args.c_max):
        raise DomainError("need 1 < c-min < c-max")
    lines = [ANALYTIC_HEADER]
    points = []
    c = args.c_min
    while c <= args.c_max + 1e-12:
        p = predictions(c)
        points.append(p)
        lines.append(
            ",".join(
                _fmt(x)
                for x in (
                    p.c, p.beta, p.f, p.f_prime, p.rejected_per_vertex,
                    p.rejected_fraction, p.forbidden_density,
                    p.giant_fraction_process, p.uniform_giant_fraction,
                )
            )
        )
        c += args.step
    _write(args.out, "\n".join(lines) + "\n")
    if args.plot:
        from .plots import plot_analytic

        print(f"figure: {plot_analytic(points, _plot_path(args.out))}", file=sys.stderr)
    return 0


def _stop_from_args(args, n: int) -> StopRule:
    given = [args.steps is not None, args.accepted is not None, args.all_queried]
    if sum(given) > 1:
        raise DomainError("choose one of --steps / --accepted / --all")
    if args.steps is not None:
        return StopRule.at_step(args.steps)
    if args.accepted is not None:
        return StopRule.at_accepted(args.accepted)
    return StopRule.all_queried()


def cmd_run(args) -> int:
    stop = _stop_from_args(args, args.n)
    marks = _parse_int_list(args.checkpoints) if args.checkpoints else ()
    cfg = ProcessConfig(
        n=args.n,
        graph_class=args.graph_class,
        stop=stop,
        seed=args.seed,
        checkpoints=marks,
        checkpoints_by=args.checkpoints_by,
        track_er=args.track_er,
    )
    trace = run(cfg)
    _write(args.out, trace.to_csv())
    if args.dump_graph:
        write_edge_list(trace.final_graph(), args.dump_graph)
    if args.plot:
        from .plots import plot_trace

        print(f"figure: {plot_trace(trace, _plot_path(args.out))}", file=sys.stderr)
    return 0


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        n_list=_parse_int_list(args.n),
        c_grid=_parse_float_list(args.c),
        mode=args.mode,
        replicates=args.replicates,
        seed=args.seed,
        graph_class=args.graph_class,
        jobs=args.jobs,
    )
    result = run_sweep(cfg)
    _write(args.out, result.to_csv())
    if args.plot:
        from .plots import plot_sweep

        print(f"figure: {plot_sweep(result, _plot_path(args.out))}", file=sys.stderr)
    return 0


def cmd_forbidden(args) -> int:
    if args.n > FORBIDDEN_N_CAP:
        raise SizeLimitError(
            f"census is O(n^2); capped at n={FORBIDDEN_N_CAP}, got {args.n}"
        )
    marks = sorted(set(_parse_int_list(args.t)))
    if not marks:
        raise DomainError("need at least one census step via --t")
    if marks[-1] > pair_count(args.n):
        raise DomainError(f"census step {marks[-1]} exceeds the pair count")
    rows = []
    lines = [CENSUS_HEADER]
    for rep in range(args.replicates):
        seed = split_seed(args.seed, rep) if args.replicates > 1 else args.seed
        for t in marks:
            cfg = ProcessConfig(
                n=args.n,
                graph_class=args.graph_class,
                stop=StopRule.at_step(t),
                seed=seed,
            )
            trace, engine = run_with_engine(cfg)
            g = trace.final_graph()
            forbidden, addable = _census(engine, g)
            rows.append((seed, t, forbidden, addable, trace.accepted))
            lines.append(
                f"{seed},{trace.graph_class},{args.n},{t},{forbidden},{addable},{trace.accepted}"
            )
    _write(args.out, "\n".join(lines) + "\n")
    if args.plot:
        from .plots import plot_census

        print(
            f"figure: {plot_census(rows, args.n, _plot_path(args.out))}",
            file=sys.stderr,
        )
    return 0


def cmd_classify(args) -> int:
    cfg = ProcessConfig(
        n=args.n, graph_class=args.graph_class, stop=StopRule.at_step(args.t_hi),
        seed=args.seed,
    )
    counts = classify_queries(cfg, (args.t_lo, args.t_hi))
    lines = [
        CLASSIFY_HEADER,
        f"{args.seed},{get_oracle(args.graph_class).name},{args.n},"
        f"{counts.t_lo},{counts.t_hi},{counts.inside_rejected},"
        f"{counts.inside_accepted},{counts.outside_rejected},{counts.outside_accepted}",
    ]
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_decompose(args) -> int:
    """Replay of the proof's giant-component decomposition on a real run:
    pendant trees weight the 2-core of the giant, which is then cut into
    parts of comparable weight.  A demonstration at desk scale, not a
    verification of the proof's exact intermediate object."""
    n = args.n
    s = args.s if args.s is not None else int(round(n ** 0.8))
    t = n // 2 + s
    cfg = ProcessConfig(
        n=n, graph_class=args.graph_class, stop=StopRule.at_step(t), seed=args.seed
    )
    trace = run(cfg)
    g = trace.final_graph()
    comp, size = largest_component(g)
    sub = Graph(n, [e for e in g.edges if e[0] in set(comp)])
    forest = None
    lines = [f"# class={args.graph_class} n={n} t={t} giant={size}"]
    try:
        forest = pendant_tree_decomposition(_induced(sub, comp))
    except GraphError as exc:
        lines.append(f"# giant has no 2-core ({exc}); nothing to decompose")
        _write(args.out, "\n".join(lines) + "\n")
        return 0
    weights = {x: float(len(tree)) for x, tree in forest.tree_of.items()}
    core = forest.core
    core_vertices = sorted(weights)
    delta = max(len(core.adj[x]) for x in core_vertices)
    max_w = max(weights.values())
    a = args.a if args.a is not None else max(max_w, s / (3 * args.ell))
    # the decomposition runs on the 2-core with pendant-tree weights
    relabel = {x: i + 1 for i, x in enumerate(core_vertices)}
    core_g = Graph(len(core_vertices))
    for u, v in core.edges:
        core_g.add_edge(relabel[u], relabel[v])
    wg = WeightedGraph(core_g, {relabel[x]: weights[x] for x in core_vertices})
    dec = weighted_decomposition(wg, a, delta, max_w)
    back = {i: x for x, i in relabel.items()}
    lines.append(
        f"# a={_fmt(a)} delta={delta} max_weight={_fmt(max_w)} "
        f"bounds=[{_fmt(a)},{_fmt(a * delta + max_w)}] parts={len(dec.parts)} "
        f"leftover={_fmt(dec.leftover_weight)}"
    )
    for part, w in zip(dec.parts, dec.part_weights):
        expanded = sorted(
            x for p in part for x in forest.tree_of[back[p]]
        )
        lines.append(f"# part_weight={_fmt(w)}")
        lines.append(" ".join(str(x) for x in expanded))
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def _induced(g: Graph, comp: list[int]) -> Graph:
    relabel = {x: i + 1 for i, x in enumerate(sorted(comp))}
    out = Graph(len(comp))
    cset = set(comp)
    for u, v in g.edges:
        if u in cset and v in cset:
            out.add_edge(relabel[u], relabel[v])
    return out


def cmd_verify(args) -> int:
    from .verify import run_verify

    classes = tuple(args.graph_class.split(",")) if args.graph_class else (
        "cactus", "outerplanar", "series_parallel", "planar",
    )
    ok, results = run_verify(
        classes=classes, seed=args.seed, equivalence_n=args.equivalence_n
    )
    report = "\n".join(r.line() for r in results) + "\n"
    _write(args.out, report)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="minorproc",
        description="Constrained random graph process for minor-closed classes",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, with_class=True):
        p.add_argument("--seed", type=int, default=0, help="64-bit master seed")
        p.add_argument("--out", default=None, help="output path ('-' = stdout)")
        if with_class:
            p.add_argument(
                "--class",
                dest="graph_class",
                default="planar",
                choices=["cactus", "outerplanar", "series-parallel",
                         "series_parallel", "planar", "none"],
            )

    p = sub.add_parser("analytic", help="emit the prediction curves on a c grid")
    p.add_argument("--c-min", type=float, default=1.05)
    p.add_argument("--c-max", type=float, default=6.0)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--plot", action="store_true")
    common(p, with_class=False)
    p.set_defaults(func=cmd_analytic)

    p = sub.add_parser("run", help="one seeded process run, trace CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--steps", type=int, default=None, help="stop after t queries")
    p.add_argument("--accepted", type=int, default=None, help="stop after m0 accepts")
    p.add_argument("--all", dest="all_queried", action="store_true",
                   help="query every pair")
    p.add_argument("--checkpoints", default="", help="comma-separated marks")
    p.add_argument("--checkpoints-by", choices=["step", "accepted"], default="step")
    p.add_argument("--track-er", action="store_true",
                   help="maintain the unconstrained companion graph")
    p.add_argument("--dump-graph", default=None, help="write final edge list here")
    p.add_argument("--plot", action="store_true")
    common(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("sweep", help="replicated (n, c) sweep, aggregated CSV")
    p.add_argument("--n", required=True, help="comma-separated vertex counts")
    p.add_argument("--c", required=True, help="comma-separated densities")
    p.add_argument("--mode", choices=["step", "accepted"], default="step")
    p.add_argument("--replicates", type=int, default=1)
    p.add_argument("--jobs", type=int, default=0, help="0 = all cores")
    p.add_argument("--plot", action="store_true")
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("forbidden", help="forbidden/addable census after a run")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True, help="comma-separated census steps")
    p.add_argument("--replicates", type=int, default=1)
    p.add_argument("--plot", action="store_true")
    common(p)
    p.set_defaults(func=cmd_forbidden)

    p = sub.add_parser("classify", help="giant-membership vs verdict in a window")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t-lo", type=int, required=True)
    p.add_argument("--t-hi", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="weighted decomposition of the giant")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=None, help="offset: t = n/2 + s")
    p.add_argument("--ell", type=int, default=5, help="clique order for a = s/(3*ell)")
    p.add_argument("--a", type=float, default=None, help="explicit weight threshold")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="deterministic invariant suite")
    p.add_argument("--equivalence-n", type=int, default=6,
                   help="exhaustive oracle/minor check up to this order")
    p.add_argument("--class", dest="graph_class", default=None,
                   help="comma-separated class list (default: all four)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, GraphError, InfeasibleStopError, SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
