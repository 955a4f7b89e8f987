"""Left-right planarity criterion, iterative, O(n + m).

Two passes over a DFS forest: the first orients edges and computes lowpoints
and nesting depths, the second processes outgoing edges in nesting order and
maintains a stack of conflict pairs of back-edge intervals; the graph is
planar iff no pair ever needs a back edge on both sides.

Input is an edge list over arbitrary integer labels; parallel edges and
self-loops are tolerated (loops dropped, parallels collapsed) since neither
affects planarity.
"""

from __future__ import annotations


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self):
        return self.low is None and self.high is None


class _ConflictPair:
    __slots__ = ("L", "R")

    def __init__(self, left=None, right=None):
        self.L = left if left is not None else _Interval()
        self.R = right if right is not None else _Interval()

    def swap(self):
        self.L, self.R = self.R, self.L


def is_planar(edges, n_hint: int | None = None) -> bool:
    """Planarity of the simple graph underlying `edges` (pairs of int labels)."""
    # normalize: relabel vertices 0..n-1, drop loops, collapse parallels
    index: dict[int, int] = {}
    simple = set()
    for u, v in edges:
        if u == v:
            continue
        iu = index.setdefault(u, len(index))
        iv = index.setdefault(v, len(index))
        simple.add((iu, iv) if iu < iv else (iv, iu))
    n = len(index)
    m = len(simple)
    if n <= 4 or m <= 8:
        # K5 needs 5 vertices and K3,3 needs 9 edges
        return True
    if m > 3 * n - 6:
        return False

    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in simple:
        adj[u].append(v)
        adj[v].append(u)

    NONE = -1
    height = [NONE] * n
    # directed edges encoded as u*n+v
    lowpt: dict[int, int] = {}
    lowpt2: dict[int, int] = {}
    nesting: dict[int, int] = {}
    parent_edge = [NONE] * n  # encoded edge into each vertex, or -1
    oriented: set[int] = set()

    roots = []

    def finish_edge(eid: int, src: int) -> None:
        nd = 2 * lowpt[eid]
        if lowpt2[eid] < height[src]:
            nd += 1  # chordal
        nesting[eid] = nd
        pe = parent_edge[src]
        if pe == NONE:
            return
        le, l2e = lowpt[pe], lowpt2[pe]
        lv = lowpt[eid]
        if lv < le:
            lowpt2[pe] = min(le, lowpt2[eid])
            lowpt[pe] = lv
        elif lv > le:
            lowpt2[pe] = min(l2e, lv)
        else:
            lowpt2[pe] = min(l2e, lowpt2[eid])

    # --- phase 1: orientation -------------------------------------------
    for s in range(n):
        if height[s] != NONE:
            continue
        roots.append(s)
        height[s] = 0
        stack = [(s, iter(adj[s]))]
        while stack:
            v, it = stack[-1]
            descended = False
            for w in it:
                eid = v * n + w
                if eid in oriented or (w * n + v) in oriented:
                    continue
                oriented.add(eid)
                lowpt[eid] = height[v]
                lowpt2[eid] = height[v]
                if height[w] == NONE:
                    parent_edge[w] = eid
                    height[w] = height[v] + 1
                    stack.append((w, iter(adj[w])))
                    descended = True
                    break
                lowpt[eid] = height[w]  # back edge
                finish_edge(eid, v)
            if not descended:
                stack.pop()
                if stack:
                    finish_edge(parent_edge[v], stack[-1][0])

    # --- phase 2: test ----------------------------------------------------
    # outgoing oriented edges per vertex, sorted by nesting depth
    ordered: list[list[int]] = [[] for _ in range(n)]
    for eid in oriented:
        ordered[eid // n].append(eid)
    for v in range(n):
        ordered[v].sort(key=nesting.__getitem__)

    S: list[_ConflictPair] = []
    stack_bottom: dict[int, int] = {}
    lowpt_edge: dict[int, int] = {}
    ref: dict[int, int] = {}

    def conflicting(interval: _Interval, b: int) -> bool:
        return interval.high is not None and lowpt[interval.high] > lowpt[b]

    def lowest(pair: _ConflictPair) -> int:
        if pair.L.empty():
            return lowpt[pair.R.low]
        if pair.R.empty():
            return lowpt[pair.L.low]
        return min(lowpt[pair.L.low], lowpt[pair.R.low])

    def add_constraints(ei: int, e: int) -> bool:
        P = _ConflictPair()
        # merge return edges of ei into P.R
        while True:
            Q = S.pop()
            if not Q.L.empty():
                Q.swap()
            if not Q.L.empty():
                return False
            if lowpt[Q.R.low] > lowpt[e]:
                if P.R.empty():
                    P.R.high = Q.R.high
                else:
                    ref[P.R.low] = Q.R.high
                P.R.low = Q.R.low
            else:
                ref[Q.R.low] = lowpt_edge[e]
            if len(S) == stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into P.L
        while S and (conflicting(S[-1].L, ei) or conflicting(S[-1].R, ei)):
            Q = S.pop()
            if conflicting(Q.R, ei):
                Q.swap()
            if conflicting(Q.R, ei):
                return False
            ref[P.R.low] = Q.R.high
            if Q.R.low is not None:
                P.R.low = Q.R.low
            if P.L.empty():
                P.L.high = Q.L.high
            else:
                ref[P.L.low] = Q.L.high
            P.L.low = Q.L.low
        if not (P.L.empty() and P.R.empty()):
            S.append(P)
        return True

    def remove_back_edges(e: int) -> None:
        u = e // n
        # whole pairs returning exactly to u are done; fully trimmed pairs
        # are dropped outright
        while S:
            top = S[-1]
            if top.L.empty() and top.R.empty():
                S.pop()
            elif lowest(top) == height[u]:
                S.pop()
            else:
                break
        if S:
            P = S.pop()
            while P.L.high is not None and P.L.high % n == u:
                P.L.high = ref.get(P.L.high)
            if P.L.high is None and P.L.low is not None:
                ref[P.L.low] = P.R.low
                P.L.low = None
            while P.R.high is not None and P.R.high % n == u:
                P.R.high = ref.get(P.R.high)
            if P.R.high is None and P.R.low is not None:
                ref[P.R.low] = P.L.low
                P.R.low = None
            S.append(P)
        if lowpt[e] < height[u]:  # e has a return edge
            hl = S[-1].L.high
            hr = S[-1].R.high
            if hl is not None and (hr is None or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    for s in roots:
        # frame: [vertex, outgoing list, index, waiting-on-child flag]
        frames = [[s, ordered[s], 0, False]]
        while frames:
            fr = frames[-1]
            v, out, i, waiting = fr
            if i < len(out):
                ei = out[i]
                w = ei % n
                if not waiting:
                    stack_bottom[ei] = len(S)
                    if parent_edge[w] == ei:  # tree edge: descend first
                        fr[3] = True
                        frames.append([w, ordered[w], 0, False])
                        continue
                    lowpt_edge[ei] = ei
                    S.append(_ConflictPair(right=_Interval(ei, ei)))
                else:
                    fr[3] = False  # child subtree finished
                if lowpt[ei] < height[v]:  # ei has a return edge
                    e = parent_edge[v]
                    if i == 0:
                        lowpt_edge[e] = lowpt_edge[ei]
                    elif not add_constraints(ei, e):
                        return False
                fr[2] += 1
            else:
                frames.pop()
                e = parent_edge[v]
                if e != NONE:
                    remove_back_edges(e)
    return True


def is_outerplanar(edges) -> bool:
    """Outerplanarity via an apex vertex adjacent to every vertex."""
    verts = set()
    clean = []
    for u, v in edges:
        if u != v:
            clean.append((u, v))
            verts.add(u)
            verts.add(v)
    if not verts:
        return True
    apex = max(verts) + 1
    return is_planar(clean + [(apex, x) for x in verts])
