"""Membership oracles for the implemented minor-closed classes.

Each tester consumes a labeled multigraph edge list [(a, b, cap), ...] where
cap is 1 for a real edge and 2 for a suppressed path of length >= 2 (loops
always carry cap 2 and stand for cycles).  On plain graphs every cap is 1, so
the same testers back both the from-scratch oracle and the incremental
engine's kernel views.

  cactus           every block is a single edge or a cycle
  series_parallel  reduces to nothing under loop/parallel/degree-<=2 reduction
  outerplanar      capped subdivision plus an apex vertex passes planarity
  planar           left-right criterion on the simplified graph
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable

from .errors import GraphError
from .graphs import (
    ComponentTracker,
    Graph,
    complete_bipartite,
    complete_graph,
    diamond_graph,
    tracker_for,
)
from .planarity import is_planar

LabeledEdges = list  # [(a, b, cap), ...]


def passes_planar(edges: LabeledEdges) -> bool:
    return is_planar([(a, b) for a, b, _ in edges])


def passes_series_parallel(edges: LabeledEdges) -> bool:
    """No K4 minor: worklist reduction by pendant removal, suppression and
    parallel merging; anything left at the end has minimum degree 3."""
    adj: dict[int, set[int]] = {}
    for a, b, _ in edges:
        if a == b:
            continue
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    queue = deque(v for v, nb in adj.items() if len(nb) <= 2)
    while queue:
        u = queue.popleft()
        nb = adj.get(u)
        if nb is None or len(nb) > 2:
            continue
        if len(nb) == 0:
            del adj[u]
            continue
        if len(nb) == 1:
            (a,) = nb
            adj[a].discard(u)
            del adj[u]
            if len(adj[a]) <= 2:
                queue.append(a)
            continue
        a, b = nb
        adj[a].discard(u)
        adj[b].discard(u)
        del adj[u]
        if b not in adj[a]:
            adj[a].add(b)
            adj[b].add(a)
        if len(adj[a]) <= 2:
            queue.append(a)
        if len(adj[b]) <= 2:
            queue.append(b)
    return not adj


def passes_cactus(edges: LabeledEdges) -> bool:
    """Every block is a single edge or a chordless cycle.

    A block is a cycle iff every vertex in it has block-degree exactly 2, so
    parallel pairs count as cycles (two internally disjoint paths) and a
    triple of parallels fails.  Loops are cycle blocks of their own and are
    skipped.  Iterative biconnected-component walk keyed by edge ids so that
    parallel edges stay distinct.
    """
    adj: dict[int, list[tuple[int, int]]] = {}
    pairs: list[tuple[int, int]] = []
    for a, b, _ in edges:
        if a == b:
            continue
        eid = len(pairs)
        pairs.append((a, b))
        adj.setdefault(a, []).append((b, eid))
        adj.setdefault(b, []).append((a, eid))

    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    estack: list[int] = []
    counter = 0

    def block_ok(eids: list[int]) -> bool:
        if len(eids) == 1:
            return True
        deg: dict[int, int] = {}
        for eid in eids:
            a, b = pairs[eid]
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        return all(d == 2 for d in deg.values())

    for start in adj:
        if start in disc:
            continue
        disc[start] = low[start] = counter
        counter += 1
        frames = [(start, -1, iter(adj[start]))]
        while frames:
            v, peid, it = frames[-1]
            advanced = False
            for w, eid in it:
                if eid == peid:
                    continue
                if w not in disc:
                    estack.append(eid)
                    disc[w] = low[w] = counter
                    counter += 1
                    frames.append((w, eid, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            frames.pop()
            if frames:
                u = frames[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        eid = estack.pop()
                        block.append(eid)
                        if eid == peid:
                            break
                    if not block_ok(block):
                        return False
    return True


def passes_outerplanar(edges: LabeledEdges) -> bool:
    """Apex construction: the graph is outerplanar iff adding one vertex
    adjacent to everything stays planar.  Caps matter here: a suppressed
    path forces an interior vertex onto the outer face, so cap-2 edges get
    one subdivision point and loops (cycles) get two."""
    verts: set[int] = set()
    for a, b, _ in edges:
        verts.add(a)
        verts.add(b)
    if not verts:
        return True
    fresh = max(verts) + 1
    out = []
    for a, b, cap in edges:
        if a == b:
            out.extend([(a, fresh), (fresh, fresh + 1), (fresh + 1, a)])
            verts.update((fresh, fresh + 1))
            fresh += 2
        elif cap >= 2:
            out.extend([(a, fresh), (fresh, b)])
            verts.add(fresh)
            fresh += 1
        else:
            out.append((a, b))
    apex = fresh
    return is_planar(out + [(apex, x) for x in verts])


def _always(_edges: LabeledEdges) -> bool:
    return True


@dataclass(frozen=True)
class ConstraintOracle:
    """Decides whether adding one edge keeps a graph inside the class.

    excess_threshold is the smallest value of m - v over the class's
    forbidden minors: a connected graph whose excess stays below it cannot
    contain any of them, so such additions are accepted without a class
    test.  None means the class is unconstrained.
    """

    name: str
    excess_threshold: int | None
    forbidden_minors: tuple[Graph, ...]
    tester: Callable[[LabeledEdges], bool]

    def membership(self, g: Graph) -> bool:
        """Whole-graph class test, from scratch."""
        return self.tester([(u, v, 1) for u, v in g.edges])

    def allows(
        self,
        g: Graph,
        u: int,
        v: int,
        tracker: ComponentTracker | None = None,
    ) -> bool:
        """Would g + (u,v) still belong to the class?  Component-local:
        different components and tree components accept immediately; small
        post-addition excess accepts without a class test; otherwise the
        merged component alone is tested."""
        if g.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) already present")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if self.excess_threshold is None:
            return True
        if tracker is None:
            tracker = tracker_for(g)
        ru, rv = tracker.find(u), tracker.find(v)
        if ru != rv:
            return True
        if tracker.edge_count[ru] == tracker.size[ru] - 1:
            return True  # tree component
        if tracker.edge_count[ru] + 1 - tracker.size[ru] < self.excess_threshold:
            return True
        # full test on the merged component plus the candidate edge
        comp = {u}
        q = deque([u])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if y not in comp:
                    comp.add(y)
                    q.append(y)
        sub = [(a, b, 1) for a in comp for b in g.adj[a] if a < b]
        sub.append((u, v, 1))
        return self.tester(sub)


_ORACLES = {
    "cactus": lambda: ConstraintOracle(
        "cactus", 1, (diamond_graph(),), passes_cactus
    ),
    "outerplanar": lambda: ConstraintOracle(
        "outerplanar", 1, (complete_graph(4), complete_bipartite(2, 3)),
        passes_outerplanar,
    ),
    "series_parallel": lambda: ConstraintOracle(
        "series_parallel", 2, (complete_graph(4),), passes_series_parallel
    ),
    "planar": lambda: ConstraintOracle(
        "planar", 3, (complete_graph(5), complete_bipartite(3, 3)), passes_planar
    ),
    "none": lambda: ConstraintOracle("none", None, (), _always),
}

CLASS_NAMES = ("cactus", "outerplanar", "series_parallel", "planar", "none")


def get_oracle(name: str) -> ConstraintOracle:
    key = name.replace("-", "_").lower()
    if key in ("unconstrained",):
        key = "none"
    if key not in _ORACLES:
        raise ValueError(f"unknown graph class {name!r}; choose from {CLASS_NAMES}")
    return _ORACLES[key]()


@dataclass
class AxiomReport:
    """Outcome of checking the class axioms on a graph sample.

    `violations` maps axiom letter to human-readable failures; axiom (a)
    (the class excludes some graph) is reported separately because the
    unconstrained baseline fails it by design.
    """

    oracle_name: str
    violations: dict[str, list[str]]
    rejects_something: bool

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def lines(self) -> list[str]:
        out = []
        for axiom in sorted(self.violations):
            for msg in self.violations[axiom]:
                out.append(f"axiom ({axiom}): {msg}")
        if not self.rejects_something:
            out.append("axiom (a): every sampled graph was accepted")
        return out


def axiom_check(oracle: ConstraintOracle, sample: list[Graph], rng) -> AxiomReport:
    """Verify the class axioms on a sample of small graphs.

    (a) some graph is rejected        (b) edgeless graphs are members
    (c) isomorphism invariance        (d) closed under deletion/contraction
    (e) cross-component additions accepted
    (f) additions inside tree components accepted
    """
    from .graphs import contract_edge, relabeled  # cycle-free local import

    bad: dict[str, list[str]] = {k: [] for k in "bcdef"}
    # (a): the sample may be all-sparse, so also probe small complete graphs
    rejects = any(not oracle.membership(g) for g in sample) or any(
        not oracle.membership(complete_graph(k)) for k in (5, 6)
    )

    for k in (0, 1, 4, 8):
        if not oracle.membership(Graph(k)):
            bad["b"].append(f"edgeless graph on {k} vertices rejected")

    for gi, g in enumerate(sample):
        member = oracle.membership(g)
        # (c) relabeling invariance
        for _ in range(3):
            p = list(range(1, g.n + 1))
            rng.shuffle(p)
            perm = {i + 1: p[i] for i in range(g.n)}
            if oracle.membership(relabeled(g, perm)) != member:
                bad["c"].append(f"sample {gi}: membership changed under relabeling")
                break
        if not member:
            continue
        # (d) minor closure on members
        for u, v in g.edges:
            smaller = Graph(g.n, [e for e in g.edges if e != (u, v)])
            if not oracle.membership(smaller):
                bad["d"].append(f"sample {gi}: deleting ({u},{v}) left the class")
                break
            if g.n > 1 and not oracle.membership(contract_edge(g, u, v)):
                bad["d"].append(f"sample {gi}: contracting ({u},{v}) left the class")
                break
        # (e) cross-component additions
        comps = g.components()
        if len(comps) >= 2:
            u, v = comps[0][0], comps[1][0]
            if not oracle.allows(g, u, v):
                bad["e"].append(f"sample {gi}: cross-component edge rejected")
        # (f) additions inside a tree component
        tracker = tracker_for(g)
        for comp in comps:
            if len(comp) < 3 or not tracker.is_tree_component(comp[0]):
                continue
            u = comp[0]
            v = next((x for x in comp[1:] if not g.has_edge(u, x)), None)
            if v is not None and not oracle.allows(g, u, v, tracker):
                bad["f"].append(f"sample {gi}: tree-component edge ({u},{v}) rejected")
            break
    return AxiomReport(oracle.name, bad, rejects)
