"""Incremental membership engine: the per-run hot path of the process.

Answering "is G + (u,v) still in the class?" from scratch costs a class test
on the whole merged component, which is ruinous once a giant component
exists.  This engine exploits two structural facts instead:

* Membership of a component depends only on its 2-core, and the 2-core is
  determined up to homeomorphism by a small multigraph (the *kernel*): its
  suppressed cycle skeleton, with path lengths remembered only as 1 or >=2.
  The kernel grows by O(1) per accepted cycle edge, and the process accepts
  very few of those, so class tests run on a multigraph of a few dozen edges
  no matter how large the component is.

* Between kernel changes the verdict for a query is a function of where the
  two endpoints attach to the kernel, so verdicts are cached by attachment
  class, and almost every query inside the giant is a dict hit.

Every vertex outside the 2-core keeps a parent pointer along the unique path
toward its component's core (or toward an arbitrary tree root while the
component is still a forest).  Accepted edges maintain the pointers, the
core flags, and the kernel; rejected edges change nothing.

Equivalence with the from-scratch oracle is a tested property, not an
assumption (see tests/test_engine.py).
"""

from __future__ import annotations

import numpy as np

from .constraints import ConstraintOracle
from .fastplanar import HAVE_NUMBA, planar_edge_arrays
from .fastsp import sp_edge_arrays

_VERT = (-1, -1)  # corepos sentinel: vertex is a kernel vertex


class _Kernel:
    """Cycle skeleton of one component: eid -> (a, b, interior path a->b).

    acache holds verdicts valid only for the current kernel version; rcache
    holds rejections, which stay valid forever: the graph only grows, the
    class is minor-closed, and a position key can only describe attachment
    points that existed unchanged when the rejection was recorded.

    For the array-backed class tests the kernel also carries its edge rows
    incrementally (compact vertex ids in vid, one row per non-loop edge,
    or the capped subdivision for the outerplanar mode), so preparing a new
    kernel version costs one numpy conversion instead of a rebuild.
    """

    __slots__ = (
        "edges",
        "acache",
        "rcache",
        "aux",
        "vid",
        "next_idx",
        "rows_u",
        "rows_v",
        "row_eid",
        "row_of",
    )

    def __init__(self):
        self.edges: dict[int, tuple[int, int, list[int]]] = {}
        self.acache: dict = {}
        self.rcache: dict = {}
        self.aux = None
        self.vid: dict[int, int] = {}
        self.next_idx = 0
        self.rows_u: list[int] = []
        self.rows_v: list[int] = []
        self.row_eid: list[int] = []
        self.row_of: dict[int, list[int]] = {}

    def invalidate(self) -> None:
        self.acache.clear()
        self.aux = None

    def idx(self, vertex: int) -> int:
        i = self.vid.get(vertex)
        if i is None:
            i = self.vid[vertex] = self.next_idx
            self.next_idx += 1
        return i

    def add_rows(self, eid: int, a: int, b: int, interior, subdivide: bool) -> None:
        ia = self.idx(a)
        ib = self.idx(b)
        if a == b:
            self.row_of[eid] = []  # loops are blocks of their own
            return
        rows = []
        if subdivide and interior:
            mid = self.next_idx
            self.next_idx += 1
            rows.append(len(self.rows_u))
            self.rows_u.append(ia)
            self.rows_v.append(mid)
            self.row_eid.append(eid)
            rows.append(len(self.rows_u))
            self.rows_u.append(mid)
            self.rows_v.append(ib)
            self.row_eid.append(eid)
        else:
            rows.append(len(self.rows_u))
            self.rows_u.append(ia)
            self.rows_v.append(ib)
            self.row_eid.append(eid)
        self.row_of[eid] = rows

    def remove_rows(self, eid: int) -> None:
        rows = self.row_of.pop(eid, None)
        if not rows:
            return
        ru, rv, reid = self.rows_u, self.rows_v, self.row_eid
        targets = list(rows)
        while targets:
            r = targets.pop()
            last = len(ru) - 1
            if r != last:
                moved = reid[last]
                ru[r] = ru[last]
                rv[r] = rv[last]
                reid[r] = moved
                if moved == eid:
                    targets[targets.index(last)] = r
                else:
                    owner = self.row_of[moved]
                    owner[owner.index(last)] = r
            ru.pop()
            rv.pop()
            reid.pop()


class _Aux:
    """Per-kernel-version prepared state for fast query evaluation."""

    __slots__ = (
        "bcomp",
        "bridge_ids",
        "vid",
        "nv",
        "eu",
        "ev",
        "row_of",
        "pair_rows",
        "dup_count",
    )

    def __init__(self, kern: _Kernel, arrays_kind: str | None):
        edges = kern.edges
        # bridge analysis on the kernel multigraph: iterative DFS with edge
        # ids so parallel edges are never bridges; loops are never bridges
        adj: dict[int, list[tuple[int, int]]] = {}
        for eid, (a, b, _interior) in edges.items():
            if a == b:
                adj.setdefault(a, [])
                continue
            adj.setdefault(a, []).append((b, eid))
            adj.setdefault(b, []).append((a, eid))
        bridges: set[int] = set()
        disc: dict[int, int] = {}
        low: dict[int, int] = {}
        counter = 0
        for s in adj:
            if s in disc:
                continue
            disc[s] = low[s] = counter
            counter += 1
            frames = [(s, -1, iter(adj[s]))]
            while frames:
                v, peid, it = frames[-1]
                advanced = False
                for w, eid in it:
                    if eid == peid:
                        continue
                    if w not in disc:
                        disc[w] = low[w] = counter
                        counter += 1
                        frames.append((w, eid, iter(adj[w])))
                        advanced = True
                        break
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                if advanced:
                    continue
                frames.pop()
                if frames:
                    u2 = frames[-1][0]
                    if low[v] < low[u2]:
                        low[u2] = low[v]
                    if low[v] > disc[u2]:
                        bridges.add(peid)
        # connected components of the bridge forest
        bcomp: dict[int, int] = {}
        cid = 0
        for s in adj:
            if s in bcomp:
                continue
            stack = [s]
            bcomp[s] = cid
            while stack:
                v = stack.pop()
                for w, eid in adj[v]:
                    if eid in bridges and w not in bcomp:
                        bcomp[w] = cid
                        stack.append(w)
            cid += 1
        self.bcomp = bcomp
        self.bridge_ids = bridges
        if arrays_kind is None:
            self.vid = None
            return
        # flat arrays of the non-loop kernel edges for the numba testers;
        # loops are blocks of their own and never affect the verdicts here.
        # outerplanar pre-subdivides cap-2 edges so suppressed interior
        # vertices keep their forced seat on the outer face.
        vid: dict[int, int] = {}
        for a, b, _interior in edges.values():
            vid.setdefault(a, len(vid))
            vid.setdefault(b, len(vid))
        nv = len(vid)
        eu: list[int] = []
        ev: list[int] = []
        row_of: dict[int, tuple[int, ...]] = {}
        pair_rows: dict[tuple[int, int], int] = {}
        dup_count: dict[tuple[int, int], int] = {}
        subdivide = arrays_kind == "outer"
        for eid, (a, b, interior) in edges.items():
            if a == b:
                row_of[eid] = ()
                continue
            ia, ib = vid[a], vid[b]
            if subdivide and interior:
                row_of[eid] = (len(eu), len(eu) + 1)
                eu.append(ia)
                ev.append(nv)
                eu.append(nv)
                ev.append(ib)
                nv += 1
                continue
            # the planarity arrays must stay simple; parallel connections are
            # verdict-neutral for planarity and K4-freeness, so collapse them
            pair = (ia, ib) if ia < ib else (ib, ia)
            if not subdivide and pair in pair_rows:
                row_of[eid] = ()
                dup_count[pair] = dup_count.get(pair, 0) + 1
                continue
            pair_rows[pair] = len(eu)
            row_of[eid] = (len(eu),)
            eu.append(ia)
            ev.append(ib)
        self.vid = vid
        self.nv = nv
        self.eu = np.array(eu, dtype=np.int64)
        self.ev = np.array(ev, dtype=np.int64)
        self.row_of = row_of
        self.pair_rows = pair_rows
        self.dup_count = dup_count


class MembershipEngine:
    """Incremental accept/reject decisions for one evolving graph."""

    def __init__(self, n: int, oracle: ConstraintOracle):
        self.n = n
        self.oracle = oracle
        self.d_min = oracle.excess_threshold
        self.tester = oracle.tester
        self.kind = oracle.name
        if HAVE_NUMBA and self.kind in ("planar", "series_parallel"):
            self._arrays_kind = "plain"
        elif HAVE_NUMBA and self.kind == "outerplanar":
            self._arrays_kind = "outer"
        else:
            self._arrays_kind = None
        self._use_arrays = self._arrays_kind is not None
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.medges = [0] * (n + 1)
        self.minlabel = list(range(n + 1))
        self.up = [0] * (n + 1)  # 0 = no parent (tree root); stale on core vertices
        self.corepos: dict[int, tuple[int, int]] = {}
        self.kernels: dict[int, _Kernel] = {}
        self._next_eid = 0
        self.m = 0
        # current largest component: (size, minlabel, representative vertex)
        self._giant = (1, 1, 1) if n >= 1 else (0, 0, 0)

    # ---- union-find ------------------------------------------------------

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def same_component(self, u: int, v: int) -> bool:
        return self.find(u) == self.find(v)

    def giant_size(self) -> int:
        return self._giant[0]

    def in_giant(self, u: int) -> bool:
        return self.find(u) == self.find(self._giant[2])

    def partition_signature(self) -> list[int]:
        labels: dict[int, int] = {}
        sig = []
        for v in range(1, self.n + 1):
            r = self.find(v)
            sig.append(labels.setdefault(r, len(labels)))
        return sig

    # ---- public queries ----------------------------------------------------

    def offer(self, u: int, v: int) -> bool:
        """Decide the queried edge and apply it when accepted."""
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            self._merge(u, v, ru, rv)
            return True
        d_min = self.d_min
        if d_min is None:
            self.medges[ru] += 1
            self.m += 1
            return True
        if self.medges[ru] + 1 - self.size[ru] < d_min:
            self._commit_cycle_edge(u, v, ru)
            return True
        if self._evaluate(u, v, ru):
            self._commit_cycle_edge(u, v, ru)
            return True
        return False

    def would_allow(self, u: int, v: int) -> bool:
        """Decide without mutating; used by censuses and the greedy sampler."""
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            return True
        if self.d_min is None:
            return True
        if self.medges[ru] + 1 - self.size[ru] < self.d_min:
            return True
        return self._evaluate(u, v, ru)

    def insert(self, u: int, v: int) -> None:
        """Apply an edge known to keep the graph in the class (no test)."""
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            self._merge(u, v, ru, rv)
        elif self.d_min is None:
            self.medges[ru] += 1
            self.m += 1
        else:
            self._commit_cycle_edge(u, v, ru)

    # ---- pointer walks -----------------------------------------------------

    def _anchor(self, x: int) -> tuple[int, int]:
        """Nearest core vertex above x and the hop distance to it."""
        corepos = self.corepos
        up = self.up
        d = 0
        while x not in corepos:
            x = up[x]
            d += 1
        return x, d

    def _path_to_core(self, x: int) -> list[int]:
        corepos = self.corepos
        up = self.up
        path = [x]
        while x not in corepos:
            x = up[x]
            path.append(x)
        return path

    def _path_to_tree_root(self, x: int) -> list[int]:
        up = self.up
        path = [x]
        while up[x]:
            x = up[x]
            path.append(x)
        return path

    def _reroot_tree(self, x: int) -> None:
        """Make x the root of its (coreless) component by reversing the chain
        from x to the old root; other pointers keep working because every
        walk eventually meets the reversed chain."""
        prev = 0
        cur = x
        up = self.up
        while cur:
            nxt = up[cur]
            up[cur] = prev
            prev = cur
            cur = nxt

    # ---- maintenance on accepted edges --------------------------------------

    def _merge(self, u: int, v: int, ru: int, rv: int) -> None:
        ka = self.kernels.get(ru)
        kb = self.kernels.get(rv)
        if self.d_min is not None:
            if ka is not None and kb is not None:
                self._bridge_cores(u, v, ka, kb)
            elif ka is not None:
                self._reroot_tree(v)
                self.up[v] = u
            elif kb is not None:
                self._reroot_tree(u)
                self.up[u] = v
            else:
                self._reroot_tree(v)
                self.up[v] = u
        # union by size
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        self.size[ru] += self.size[rv]
        self.medges[ru] += self.medges[rv] + 1
        if self.minlabel[rv] < self.minlabel[ru]:
            self.minlabel[ru] = self.minlabel[rv]
        kmerged = ka if ka is not None else kb
        if kmerged is not None:
            self.kernels.pop(ru, None)
            self.kernels.pop(rv, None)
            self.kernels[ru] = kmerged
        self.m += 1
        s, ml = self.size[ru], self.minlabel[ru]
        gs, gml, _ = self._giant
        if s > gs or (s == gs and ml < gml):
            self._giant = (s, ml, ru)

    def _bridge_cores(self, u: int, v: int, ka: _Kernel, kb: _Kernel) -> None:
        """Accepted edge between two cored components: the whole path between
        the cores (through the new edge) joins the merged 2-core."""
        pu = self._path_to_core(u)
        pv = self._path_to_core(v)
        au, av = pu[-1], pv[-1]
        self._materialize(ka, au)
        self._materialize(kb, av)
        ka.edges.update(kb.edges)
        ka.rcache.update(kb.rcache)
        interior = pu[-2::-1] + pv[:-1]
        self._new_edge(ka, au, av, interior)
        ka.invalidate()

    def _commit_cycle_edge(self, u: int, v: int, root: int) -> None:
        """Accepted edge inside one component; grows the 2-core."""
        kern = self.kernels.get(root)
        if kern is None:
            self._first_cycle(u, v, root)
        else:
            pu = self._path_to_core(u)
            pv = self._path_to_core(v)
            au, av = pu[-1], pv[-1]
            if au != av:
                self._materialize(kern, au)
                self._materialize(kern, av)
                interior = pu[-2::-1] + pv[:-1]
                self._new_edge(kern, au, av, interior)
            else:
                i, j = len(pu) - 1, len(pv) - 1
                while i > 0 and j > 0 and pu[i - 1] == pv[j - 1]:
                    i -= 1
                    j -= 1
                w = pu[i]
                cycle_interior = pu[i - 1 :: -1] if i else []
                cycle_interior = cycle_interior + pv[:j]
                self._materialize(kern, au)
                if w == au:
                    self._new_edge(kern, au, au, cycle_interior)
                else:
                    self.corepos[w] = _VERT
                    self._new_edge(kern, w, au, pu[i + 1 : -1])
                    self._new_edge(kern, w, w, cycle_interior)
            kern.invalidate()
        self.medges[root] += 1
        self.m += 1

    def _first_cycle(self, u: int, v: int, root: int) -> None:
        pu = self._path_to_tree_root(u)
        pv = self._path_to_tree_root(v)
        i, j = len(pu) - 1, len(pv) - 1
        while i > 0 and j > 0 and pu[i - 1] == pv[j - 1]:
            i -= 1
            j -= 1
        w = pu[i]
        cycle_interior = (pu[i - 1 :: -1] if i else []) + pv[:j]
        kern = _Kernel()
        self.corepos[w] = _VERT
        self._new_edge(kern, w, w, cycle_interior)
        self.kernels[root] = kern
        # the old root's chain must now lead back down to the new core
        chain = pu[i:]
        for t in range(len(chain) - 1, 0, -1):
            self.up[chain[t]] = chain[t - 1]

    def _new_edge(self, kern: _Kernel, a: int, b: int, interior: list[int]) -> None:
        eid = self._next_eid
        self._next_eid += 1
        kern.edges[eid] = (a, b, interior)
        corepos = self.corepos
        for idx, x in enumerate(interior):
            corepos[x] = (eid, idx)

    def _materialize(self, kern: _Kernel, a: int) -> None:
        """Promote a core vertex sitting inside a suppressed path to a kernel
        vertex by splitting its kernel edge at that point."""
        pos = self.corepos[a]
        if pos is _VERT or pos == _VERT:
            return
        eid, idx = pos
        va, vb, interior = kern.edges.pop(eid)
        self.corepos[a] = _VERT
        self._new_edge(kern, va, a, interior[:idx])
        self._new_edge(kern, a, vb, interior[idx + 1 :])

    # ---- evaluation ----------------------------------------------------------

    def _posclass(self, a: int, kern: _Kernel):
        pos = self.corepos[a]
        if pos == _VERT:
            return ("v", a)
        eid, idx = pos
        left = 1 if idx == 0 else 2
        right = 1 if idx == len(kern.edges[eid][2]) - 1 else 2
        return ("e", eid, left, right)

    def _bridge_comp(self, kern: _Kernel, aux: _Aux, pos) -> int:
        """Bridge-forest component of an attachment point; -1 when the point
        sits inside a cycle block."""
        if pos == _VERT:
            return -2  # caller resolves kernel vertices directly
        eid, _idx = pos
        if eid in aux.bridge_ids:
            return aux.bcomp[kern.edges[eid][0]]
        return -1

    def _evaluate(self, u: int, v: int, root: int) -> bool:
        kern = self.kernels[root]
        au, du = self._anchor(u)
        av, dv = self._anchor(v)
        if au == av:
            # the new cycle and its connector attach to the core at a single
            # vertex, forming fresh blocks; every implemented class is closed
            # under attaching edge and cycle blocks at a cut vertex
            return True
        aux = kern.aux
        if aux is None:
            aux = kern.aux = _Aux(kern, self._arrays_kind)
        pos_u = self.corepos[au]
        pos_v = self.corepos[av]
        bu = aux.bcomp[au] if pos_u == _VERT else self._bridge_comp(kern, aux, pos_u)
        bv = aux.bcomp[av] if pos_v == _VERT else self._bridge_comp(kern, aux, pos_v)
        if bu >= 0 and bu == bv:
            # every kernel edge between the attachment points is a bridge:
            # the merged block is one cycle, legal in every class
            return True
        if self.kind == "cactus":
            # exact converse: the merged block strictly contains a cycle block
            return False
        cap_new = 1 if (du == 0 and dv == 0) else 2
        if pos_u != _VERT and pos_v != _VERT and pos_u[0] == pos_v[0]:
            i, j = pos_u[1], pos_v[1]
            if i > j:
                i, j = j, i
            key = ("ee", pos_u[0], i, j, cap_new)
        else:
            pa, pb = self._posclass(au, kern), self._posclass(av, kern)
            if pb < pa:
                pa, pb = pb, pa
            key = ("xy", pa, pb, cap_new)
        if key in kern.rcache:
            return False
        verdict = kern.acache.get(key)
        if verdict is None:
            verdict = self._full_test(kern, aux, au, av, pos_u, pos_v, cap_new)
            if verdict:
                kern.acache[key] = True
            else:
                kern.rcache[key] = False
        return verdict

    def _full_test(
        self, kern: _Kernel, aux: _Aux, au: int, av: int, pos_u, pos_v, cap_new: int
    ) -> bool:
        if not self._use_arrays:
            return self.tester(self._view(kern, (au, av), [(au, av, cap_new)]))
        vid = aux.vid
        nv = aux.nv
        kind = self.kind
        plain = kind != "outerplanar"
        fresh: dict[tuple, int] = {}
        splits: dict[int, list[int]] = {}
        for pos in (pos_u, pos_v):
            if pos != _VERT:
                splits.setdefault(pos[0], []).append(pos[1])
        add: list[tuple[int, int, int]] = []  # (i, j, cap)
        drop_rows: list[int] = []
        readd_pairs: list[tuple[int, int]] = []
        if plain:
            # duplicates that are themselves split no longer count as spares
            spare: dict[tuple[int, int], int] = {}
            for eid in splits:
                a, b, _ = kern.edges[eid]
                ia, ib = vid[a], vid[b]
                pair = (ia, ib) if ia < ib else (ib, ia)
                if pair not in spare:
                    spare[pair] = aux.dup_count.get(pair, 0)
                if not aux.row_of[eid]:
                    spare[pair] -= 1
        for eid, idxs in splits.items():
            a, b, interior = kern.edges[eid]
            rows = aux.row_of[eid]
            drop_rows.extend(rows)
            if plain and rows:
                # a dropped row may have stood in for collapsed parallels
                ia, ib = vid[a], vid[b]
                pair = (ia, ib) if ia < ib else (ib, ia)
                if spare.get(pair, 0) >= 1:
                    readd_pairs.append(pair)
            prev_idx = -1
            prev_vi = vid[a]
            for i2 in sorted(set(idxs)):
                vi = fresh.setdefault((eid, i2), nv + len(fresh))
                add.append((prev_vi, vi, 1 if i2 - prev_idx == 1 else 2))
                prev_idx, prev_vi = i2, vi
            add.append(
                (prev_vi, vid[b], 1 if len(interior) - prev_idx == 1 else 2)
            )
        iu = vid[au] if pos_u == _VERT else fresh[(pos_u[0], pos_u[1])]
        iv = vid[av] if pos_v == _VERT else fresh[(pos_v[0], pos_v[1])]
        add.append((iu, iv, cap_new))
        nv += len(fresh)
        if plain:
            # keep the arrays simple: skip additions whose pair survives
            dropped = set(drop_rows)
            present = set(readd_pairs)
            deduped = [(p[0], p[1], 1) for p in readd_pairs]
            for i, j, cap in add:
                pair = (i, j) if i < j else (j, i)
                row = aux.pair_rows.get(pair)
                if (row is not None and row not in dropped) or pair in present:
                    continue
                present.add(pair)
                deduped.append((i, j, cap))
            add = deduped
        else:
            # subdivide cap-2 additions (base rows are pre-subdivided)
            rows2 = []
            for i, j, cap in add:
                if cap >= 2:
                    rows2.append((i, nv))
                    rows2.append((nv, j))
                    nv += 1
                else:
                    rows2.append((i, j))
            add = rows2
        base_n = len(aux.eu)
        extra = len(add)
        fan = nv if kind == "outerplanar" else 0
        eu2 = np.empty(base_n + extra + fan, dtype=np.int64)
        ev2 = np.empty(base_n + extra + fan, dtype=np.int64)
        eu2[:base_n] = aux.eu
        ev2[:base_n] = aux.ev
        slots = drop_rows + list(range(base_n, base_n + extra - len(drop_rows)))
        for k, row in enumerate(add):
            r = slots[k]
            eu2[r] = row[0]
            ev2[r] = row[1]
        used = base_n + extra - len(drop_rows)
        if kind == "planar":
            return planar_edge_arrays(nv, eu2[:used], ev2[:used])
        if kind == "series_parallel":
            return sp_edge_arrays(nv, eu2[:used], ev2[:used])
        # outerplanar: apex vertex adjacent to every vertex, stale ones included
        apex = nv
        eu2[used : used + fan] = apex
        ev2[used : used + fan] = np.arange(fan, dtype=np.int64)
        return planar_edge_arrays(apex + 1, eu2[: used + fan], ev2[: used + fan])

    def _view(self, kern: _Kernel, split_at: tuple, delta: list) -> list:
        """Labeled multigraph edge list for the kernel with the given anchors
        split in (without mutating) plus the delta of the candidate edge."""
        splits: dict[int, list[int]] = {}
        for a in split_at:
            pos = self.corepos[a]
            if pos != _VERT:
                splits.setdefault(pos[0], []).append(pos[1])
        view = list(delta)
        for eid, (a, b, interior) in kern.edges.items():
            cuts = splits.get(eid)
            if not cuts:
                view.append((a, b, 2 if interior else 1))
                continue
            prev_vertex, prev_idx = a, -1
            for idx in sorted(cuts):
                x = interior[idx]
                view.append((prev_vertex, x, 1 if idx - prev_idx == 1 else 2))
                prev_vertex, prev_idx = x, idx
            view.append((prev_vertex, b, 1 if len(interior) - prev_idx == 1 else 2))
        return view

    # ---- debugging support -----------------------------------------------------

    def expanded_core_edges(self) -> set[frozenset]:
        """Every 2-core edge implied by the kernels (for integrity tests)."""
        out = set()
        for kern in set(self.kernels.values()):
            for a, b, interior in kern.edges.values():
                chain = [a, *interior, b]
                for x, y in zip(chain, chain[1:]):
                    out.add(frozenset((x, y)))
        return out
