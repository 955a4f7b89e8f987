"""Brute-force minor containment for small graphs.

Branches over single edge contractions and vertex deletions with a
subgraph-embedding shortcut, memoized on compactly relabeled adjacency masks.
Exponential in general; the public entry enforces the small-input cap.  This
is the independent oracle the class testers are validated against, so it must
stay free of any planarity/reduction machinery.
"""

from __future__ import annotations

from .errors import SizeLimitError
from .graphs import Graph

MAX_MINOR_VERTICES = 10

_memo: dict[tuple, bool] = {}


def _to_masks(g: Graph) -> tuple[int, ...]:
    """Adjacency bitmasks over 0-based labels, isolated vertices dropped."""
    live = [x for x in range(1, g.n + 1) if g.adj[x]]
    pos = {x: i for i, x in enumerate(live)}
    masks = [0] * len(live)
    for u, v in g.edges:
        masks[pos[u]] |= 1 << pos[v]
        masks[pos[v]] |= 1 << pos[u]
    return tuple(masks)


def _delete_vertex(adj: tuple[int, ...], k: int) -> tuple[int, ...]:
    low = (1 << k) - 1
    out = []
    for i, a in enumerate(adj):
        if i == k:
            continue
        out.append((a & low) | ((a >> (k + 1)) << k))
    return tuple(out)


def _contract(adj: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    """Contract edge (a, b) into a, then drop b (a < b); simplifies loops."""
    merged = list(adj)
    merged[a] = (adj[a] | adj[b]) & ~((1 << a) | (1 << b))
    for i in range(len(adj)):
        if i != a and i != b and (adj[i] >> b) & 1:
            merged[i] |= 1 << a
    return _delete_vertex(tuple(merged), b)


def _degree(mask: int) -> int:
    return bin(mask).count("1")


def _subgraph_embeds(hadj: tuple[int, ...], gadj: tuple[int, ...]) -> bool:
    """Does H embed into G as a subgraph (injective, edges preserved)?"""
    nh, ng = len(hadj), len(gadj)
    if nh > ng:
        return False
    hdeg = [_degree(a) for a in hadj]
    gdeg = [_degree(a) for a in gadj]
    order = sorted(range(nh), key=lambda i: -hdeg[i])
    assign = [-1] * nh
    used = 0

    def place(k: int) -> bool:
        nonlocal used
        if k == nh:
            return True
        h = order[k]
        need = hadj[h]
        for gcand in range(ng):
            bit = 1 << gcand
            if used & bit or gdeg[gcand] < hdeg[h]:
                continue
            ok = True
            for prev in order[:k]:
                if (need >> prev) & 1 and not (gadj[gcand] >> assign[prev]) & 1:
                    ok = False
                    break
            if ok:
                assign[h] = gcand
                used |= bit
                if place(k + 1):
                    return True
                used &= ~bit
                assign[h] = -1
        return False

    return place(0)


def _has_minor(gadj: tuple[int, ...], hadj: tuple[int, ...]) -> bool:
    ng, nh = len(gadj), len(hadj)
    mg = sum(_degree(a) for a in gadj) // 2
    mh = sum(_degree(a) for a in hadj) // 2
    if ng < nh or mg < mh:
        return False
    key = (gadj, hadj)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    if _subgraph_embeds(hadj, gadj):
        _memo[key] = True
        return True
    result = False
    if ng > nh:
        # contractions first: they densify and hit the embedding shortcut sooner
        for a in range(ng):
            rest = gadj[a] >> (a + 1)
            b = a + 1
            while rest:
                if rest & 1 and _has_minor(_contract(gadj, a, b), hadj):
                    result = True
                    break
                rest >>= 1
                b += 1
            if result:
                break
        if not result:
            for k in range(ng):
                if _has_minor(_delete_vertex(gadj, k), hadj):
                    result = True
                    break
    _memo[key] = result
    return result


def has_minor(g: Graph, h: Graph) -> bool:
    """True iff h is a minor of g.  Enforces v(g) <= 10 (exponential search)."""
    if g.n > MAX_MINOR_VERTICES:
        raise SizeLimitError(
            f"minor search capped at {MAX_MINOR_VERTICES} vertices, got {g.n}"
        )
    if h.n > g.n:
        return False
    hadj = _to_masks(h)
    if not hadj:
        return True
    gadj = _to_masks(g)
    spares = h.n - len(hadj)  # isolated vertices of h need unused hosts in g
    spares -= g.n - len(gadj)  # isolated vertices of g serve them for free
    if spares <= 0:
        return _has_minor(gadj, hadj)

    def with_spares(adj: tuple[int, ...], k: int) -> bool:
        if k == 0:
            return _has_minor(adj, hadj)
        if len(adj) - len(hadj) < k:
            return False
        return any(with_spares(_delete_vertex(adj, v), k - 1) for v in range(len(adj)))

    return with_spares(gadj, spares)


def is_minor_free(g: Graph, minors: tuple[Graph, ...]) -> bool:
    return not any(has_minor(g, h) for h in minors)
