"""The constrained random graph process and its derived observables.

A run draws the edges of K_n in uniform random order, accepts each edge iff
the class oracle allows it, and records checkpointed statistics.  Also here:
the query count until m0 acceptances, the random greedy variant, the
forbidden/addable census, and the giant-membership query classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constraints import ConstraintOracle, get_oracle
from .engine import MembershipEngine
from .errors import GraphError, InfeasibleStopError, SizeLimitError
from .graphs import Graph
from .rng import split_rng

_PERM_CAP = 1 << 21  # largest pair count we are willing to materialize


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_from_index(k: int) -> tuple[int, int]:
    """Unrank a linear index over unordered pairs into 1-based (u, v), u < v."""
    v = (1 + math.isqrt(1 + 8 * k)) // 2
    u = k - v * (v - 1) // 2
    return u + 1, v + 1


def max_class_edges(class_name: str, n: int) -> int:
    """Largest edge count any graph of the class attains on n vertices."""
    name = class_name.replace("-", "_").lower()
    full = pair_count(n)
    if name in ("none", "unconstrained"):
        return full
    if name == "planar":
        return full if n < 3 else 3 * n - 6
    if name in ("series_parallel", "outerplanar"):
        return max(0, 2 * n - 3) if n >= 2 else 0
    if name == "cactus":
        return 3 * (n - 1) // 2
    raise ValueError(f"unknown graph class {class_name!r}")


@dataclass(frozen=True)
class StopRule:
    """One of: at_step(t), at_accepted(m0), all_queried()."""

    kind: str  # "step" | "accepted" | "all"
    value: int = 0

    @staticmethod
    def at_step(t: int) -> "StopRule":
        return StopRule("step", t)

    @staticmethod
    def at_accepted(m0: int) -> "StopRule":
        return StopRule("accepted", m0)

    @staticmethod
    def all_queried() -> "StopRule":
        return StopRule("all", 0)


@dataclass(frozen=True)
class ProcessConfig:
    n: int
    graph_class: str = "planar"
    stop: StopRule = StopRule("all", 0)
    seed: int = 0
    checkpoints: tuple[int, ...] = ()
    checkpoints_by: str = "step"  # or "accepted"
    track_er: bool = False
    snapshot_cap: int = 10_000

    def validate(self) -> None:
        if self.n < 1:
            raise GraphError(f"need at least one vertex, got n={self.n}")
        N = pair_count(self.n)
        if self.stop.kind == "step":
            if not (0 <= self.stop.value <= N):
                raise InfeasibleStopError(
                    f"step bound {self.stop.value} outside [0, {N}]"
                )
        elif self.stop.kind == "accepted":
            cap = max_class_edges(self.graph_class, self.n)
            if not (0 <= self.stop.value <= cap):
                raise InfeasibleStopError(
                    f"class {self.graph_class} on {self.n} vertices caps at "
                    f"{cap} edges; cannot accept {self.stop.value}"
                )
        elif self.stop.kind != "all":
            raise ValueError(f"unknown stop rule {self.stop.kind!r}")
        if self.checkpoints_by not in ("step", "accepted"):
            raise ValueError(f"bad checkpoints_by {self.checkpoints_by!r}")
        if list(self.checkpoints) != sorted(self.checkpoints):
            raise ValueError("checkpoints must be ascending")


class EdgeStream:
    """Uniform random ordering of the pairs of K_n, emitted lazily.

    Lazy mode draws pair indices in batches and skips repeats with a seen
    set; permutation mode materializes a full shuffle.  Desk-scale runs stop
    at t = O(n) << N, so lazy is the default and permutation is reserved for
    streams that will consume most of the deck.
    """

    def __init__(self, n: int, rng: np.random.Generator, expected_stop: int):
        self.n = n
        self.N = pair_count(n)
        self.rng = rng
        self.emitted = 0
        if expected_stop > self.N // 2:
            if self.N > _PERM_CAP:
                raise SizeLimitError(
                    f"full permutation of {self.N} pairs exceeds the desk-scale "
                    f"cap {_PERM_CAP}; lower n or the stop point"
                )
            self._perm = rng.permutation(self.N)
            self._seen = None
        else:
            self._perm = None
            self._seen: set[int] | None = set()
            self._batch: list[int] = []

    def next_pair(self) -> tuple[int, int]:
        if self.emitted >= self.N:
            raise StopIteration("every pair has been queried")
        if self._perm is not None:
            k = int(self._perm[self.emitted])
            self.emitted += 1
            return pair_from_index(k)
        seen = self._seen
        batch = self._batch
        while True:
            if not batch:
                batch.extend(self.rng.integers(0, self.N, size=1024).tolist())
                batch.reverse()  # pop from the tail in draw order
                self._batch = batch
            k = batch.pop()
            if k not in seen:
                seen.add(k)
                self.emitted += 1
                return pair_from_index(k)


class _ErTracker:
    """Unconstrained companion graph: components and excess in O(alpha)."""

    __slots__ = ("n", "parent", "size", "is_tree", "n_tree", "m")

    def __init__(self, n: int):
        self.n = n
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.is_tree = [True] * (n + 1)
        self.n_tree = n
        self.m = 0

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def add_edge(self, u: int, v: int) -> None:
        self.m += 1
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            if self.is_tree[ru]:
                self.is_tree[ru] = False
                self.n_tree -= 1
            return
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        merged_tree = self.is_tree[ru] and self.is_tree[rv]
        self.n_tree -= self.is_tree[ru] + self.is_tree[rv] - merged_tree
        self.parent[rv] = ru
        self.size[ru] += self.size[rv]
        self.is_tree[ru] = merged_tree

    def excess(self) -> int:
        return self.m - self.n + self.n_tree

    def partition_signature(self) -> list[int]:
        labels: dict[int, int] = {}
        sig = []
        for v in range(1, self.n + 1):
            r = self.find(v)
            sig.append(labels.setdefault(r, len(labels)))
        return sig


@dataclass
class ProcessTrace:
    """Checkpointed time series of one run plus the final state."""

    n: int
    graph_class: str
    seed: int
    rows: list[tuple] = field(default_factory=list)  # (t, m, r, giant, er_excess)
    er_partition_mismatches: list[int] = field(default_factory=list)
    steps: int = 0
    accepted: int = 0
    stop_kind: str = "all"
    final_edges: list[tuple[int, int]] | None = None

    @property
    def steps_until_stop(self) -> int:
        return self.steps

    def final_graph(self) -> Graph:
        if self.final_edges is None:
            raise SizeLimitError("run exceeded snapshot cap; no graph stored")
        return Graph(self.n, self.final_edges)

    def graph_at(self, m: int) -> Graph:
        """Process graph after its first m acceptances."""
        if self.final_edges is None:
            raise SizeLimitError("run exceeded snapshot cap; no graph stored")
        return Graph(self.n, self.final_edges[:m])

    CSV_HEADER = "seed,class,n,t,m,r,giant,er_excess"

    def to_csv(self) -> str:
        lines = [self.CSV_HEADER]
        for t, m, r, giant, er in self.rows:
            er_s = "" if er is None else str(er)
            lines.append(
                f"{self.seed},{self.graph_class},{self.n},{t},{m},{r},{giant},{er_s}"
            )
        return "\n".join(lines) + "\n"


def run(cfg: ProcessConfig, query_hook=None) -> ProcessTrace:
    """Execute one seeded run; bit-identical for identical configs.

    query_hook, when given, is called as hook(t, u, v, accepted, engine)
    before the checkpoint bookkeeping of step t (after the decision).
    """
    trace, _engine = run_with_engine(cfg, query_hook)
    return trace


def run_with_engine(cfg: ProcessConfig, query_hook=None):
    cfg.validate()
    oracle = get_oracle(cfg.graph_class)
    rng = split_rng(cfg.seed)
    n = cfg.n
    N = pair_count(n)
    stop = cfg.stop
    if stop.kind == "step":
        expected = stop.value
    elif stop.kind == "all":
        expected = N
    else:
        expected = min(N, max(stop.value * 4, 1024))  # lazy unless tiny deck
        if N <= _PERM_CAP // 4:
            expected = N
    stream = EdgeStream(n, rng, expected)
    engine = MembershipEngine(n, oracle)
    er = _ErTracker(n) if cfg.track_er else None
    keep_edges = n <= cfg.snapshot_cap
    edges: list[tuple[int, int]] | None = [] if keep_edges else None

    trace = ProcessTrace(n=n, graph_class=oracle.name, seed=cfg.seed,
                         stop_kind=stop.kind)
    marks = list(cfg.checkpoints)
    next_mark = marks[0] if marks else None
    mark_i = 0
    by_accepted = cfg.checkpoints_by == "accepted"

    def record(t: int) -> None:
        er_x = er.excess() if er is not None else None
        trace.rows.append((t, engine.m, t - engine.m, engine.giant_size(), er_x))
        if er is not None and engine.partition_signature() != er.partition_signature():
            trace.er_partition_mismatches.append(t)

    t = 0
    target_step = stop.value if stop.kind == "step" else (N if stop.kind == "all" else None)
    target_m = stop.value if stop.kind == "accepted" else None
    while True:
        if target_step is not None and t >= target_step:
            break
        if target_m is not None and engine.m >= target_m:
            break
        if t >= N:
            break
        u, v = stream.next_pair()
        t += 1
        accepted = engine.offer(u, v)
        if er is not None:
            er.add_edge(u, v)
        if accepted and keep_edges:
            edges.append((u, v) if u < v else (v, u))
        if query_hook is not None:
            query_hook(t, u, v, accepted, engine)
        if next_mark is not None:
            current = engine.m if by_accepted else t
            while next_mark is not None and current >= next_mark:
                record(t)
                mark_i += 1
                next_mark = marks[mark_i] if mark_i < len(marks) else None
    if not trace.rows or trace.rows[-1][0] != t:
        record(t)
    trace.steps = t
    trace.accepted = engine.m
    trace.final_edges = edges
    return trace, engine


def steps_until_accepted(cfg: ProcessConfig) -> int:
    """Queries needed until the configured number of acceptances."""
    if cfg.stop.kind != "accepted":
        raise ValueError("steps_until_accepted needs an at_accepted stop rule")
    return run(cfg).steps


def random_greedy(n: int, graph_class: str, m0: int, seed: int) -> Graph:
    """Repeatedly add an edge chosen uniformly among the currently addable
    non-edges, m0 times.  Uses rejection sampling against the membership
    engine, falling back to exact enumeration when the deck runs thin."""
    oracle = get_oracle(graph_class)
    cap = max_class_edges(graph_class, n)
    if not (0 <= m0 <= cap):
        raise InfeasibleStopError(
            f"class {graph_class} on {n} vertices caps at {cap} edges"
        )
    rng = split_rng(seed)
    engine = MembershipEngine(n, oracle)
    N = pair_count(n)
    present: set[int] = set()
    g = Graph(n)
    attempts_cap = 64
    while g.m() < m0:
        placed = False
        for _ in range(attempts_cap):
            k = int(rng.integers(0, N))
            if k in present:
                continue
            u, v = pair_from_index(k)
            if engine.would_allow(u, v):
                engine.insert(u, v)
                present.add(k)
                g.add_edge(u, v)
                placed = True
                break
        if placed:
            continue
        addable = [
            k
            for k in range(N)
            if k not in present and engine.would_allow(*pair_from_index(k))
        ]
        if not addable:
            raise InfeasibleStopError(
                f"no addable edge remains after {g.m()} of {m0} additions"
            )
        k = addable[int(rng.integers(0, len(addable)))]
        u, v = pair_from_index(k)
        engine.insert(u, v)
        present.add(k)
        g.add_edge(u, v)
    return g


def count_forbidden_addable(
    g: Graph, oracle: ConstraintOracle
) -> tuple[int, int]:
    """Exact census of forbidden and addable non-edges of a member graph."""
    engine = MembershipEngine(g.n, oracle)
    for u, v in g.edges:
        engine.insert(u, v)
    return _census(engine, g)


def _census(engine: MembershipEngine, g: Graph) -> tuple[int, int]:
    n = g.n
    d_min = engine.d_min
    roots = [0] * (n + 1)
    for x in range(1, n + 1):
        roots[x] = engine.find(x)
    # components where every internal addition is auto-accepted
    easy = [False] * (n + 1)
    for r in set(roots[1:]):
        easy[r] = d_min is None or (
            engine.medges[r] + 1 - engine.size[r] < d_min
        )
    forbidden = 0
    addable = 0
    for u in range(1, n + 1):
        adj_u = g.adj[u]
        ru = roots[u]
        for v in range(u + 1, n + 1):
            if v in adj_u:
                continue
            if roots[v] != ru or easy[ru]:
                addable += 1
            elif engine._evaluate(u, v, ru):
                addable += 1
            else:
                forbidden += 1
    return forbidden, addable


@dataclass
class ClassifyCounts:
    """2x2 census of queries in a step window: giant membership x verdict."""

    t_lo: int
    t_hi: int
    inside_rejected: int = 0
    inside_accepted: int = 0
    outside_rejected: int = 0
    outside_accepted: int = 0

    @property
    def total(self) -> int:
        return (
            self.inside_rejected
            + self.inside_accepted
            + self.outside_rejected
            + self.outside_accepted
        )


def classify_queries(cfg: ProcessConfig, window: tuple[int, int]) -> ClassifyCounts:
    """Run to the window's end, tallying (inside-giant?, accepted?) for each
    queried edge inside the window.  Giant membership is evaluated against
    the largest component just before the query (ties by smallest minimum
    vertex label)."""
    t_lo, t_hi = window
    N = pair_count(cfg.n)
    if not (1 <= t_lo <= t_hi <= N):
        raise ValueError(f"window {window} outside [1, {N}]")
    counts = ClassifyCounts(t_lo=t_lo, t_hi=t_hi)
    # dedicated loop: giant membership must be read before each decision,
    # which the post-decision query hook of run() cannot provide
    cfg = ProcessConfig(
        n=cfg.n,
        graph_class=cfg.graph_class,
        stop=StopRule.at_step(t_hi),
        seed=cfg.seed,
        checkpoints=(),
        track_er=False,
        snapshot_cap=0,
    )
    cfg.validate()
    oracle = get_oracle(cfg.graph_class)
    rng = split_rng(cfg.seed)
    stream = EdgeStream(cfg.n, rng, t_hi)
    engine = MembershipEngine(cfg.n, oracle)
    for t in range(1, t_hi + 1):
        u, v = stream.next_pair()
        if t >= t_lo:
            inside = engine.in_giant(u) and engine.in_giant(v)
            accepted = engine.offer(u, v)
            if inside and accepted:
                counts.inside_accepted += 1
            elif inside:
                counts.inside_rejected += 1
            elif accepted:
                counts.outside_accepted += 1
            else:
                counts.outside_rejected += 1
        else:
            engine.offer(u, v)
    return counts
