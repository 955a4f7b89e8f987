"""Array-based series-parallel (K4-minor-free) reduction for the hot loop.

Worklist reduction: drop loops, remove degree-<=1 vertices, suppress
degree-2 vertices merging parallels as they arise.  Empty at the fixpoint
iff no K4 minor.  Linked-list adjacency with lazy deletion keeps it
dict-free for numba.

Input is a multigraph with 0-based labels; loops and parallels are
simplified away up front (neither affects K4-minor-freeness), and parallels
created later by the reduction itself are merged on the fly.
"""

from __future__ import annotations

import numpy as np

from .fastplanar import _simplify

try:
    from numba import njit

    HAVE_NUMBA = True
except Exception:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True)
def _sp_reduce(nv: int, eu: np.ndarray, ev: np.ndarray) -> bool:
    ne = eu.shape[0]
    if ne == 0 or nv == 0:
        return True
    # suppression adds at most one edge per removed vertex: 2*ne slots suffice
    cap_e = 2 * ne + 4
    e_a = np.empty(cap_e, dtype=np.int64)
    e_b = np.empty(cap_e, dtype=np.int64)
    e_alive = np.zeros(cap_e, dtype=np.uint8)
    # linked incidence: slot per (edge, endpoint)
    cap_s = 2 * cap_e
    s_edge = np.empty(cap_s, dtype=np.int64)
    s_next = np.empty(cap_s, dtype=np.int64)
    head = np.full(nv, -1, dtype=np.int64)
    deg = np.zeros(nv, dtype=np.int64)
    n_edges = 0
    n_slots = 0
    for i in range(ne):
        a, b = eu[i], ev[i]
        if a == b:
            continue
        e_a[n_edges] = a
        e_b[n_edges] = b
        e_alive[n_edges] = 1
        s_edge[n_slots] = n_edges
        s_next[n_slots] = head[a]
        head[a] = n_slots
        n_slots += 1
        s_edge[n_slots] = n_edges
        s_next[n_slots] = head[b]
        head[b] = n_slots
        n_slots += 1
        deg[a] += 1
        deg[b] += 1
        n_edges += 1

    alive_edges = n_edges
    stack = np.empty(nv + 2 * cap_e + 8, dtype=np.int64)
    sp = 0
    for v in range(nv):
        if deg[v] <= 2:
            stack[sp] = v
            sp += 1

    while sp > 0:
        sp -= 1
        u = stack[sp]
        if deg[u] > 2 or (deg[u] == 0 and head[u] == -1):
            continue
        # collect live incident edges of u (compacting the list as we go)
        e1 = -1
        e2 = -1
        slot = head[u]
        prev = -1
        while slot != -1:
            e = s_edge[slot]
            if e_alive[e] == 1:
                if e1 == -1:
                    e1 = e
                elif e2 == -1:
                    e2 = e
                else:
                    break  # degree grew back somehow; bail out of collection
                prev = slot
                slot = s_next[slot]
            else:
                nxt = s_next[slot]
                if prev == -1:
                    head[u] = nxt
                else:
                    s_next[prev] = nxt
                slot = nxt
        if deg[u] == 0:
            head[u] = -1
            continue
        if deg[u] == 1:
            a = e_a[e1] if e_b[e1] == u else e_b[e1]
            e_alive[e1] = 0
            alive_edges -= 1
            deg[u] = 0
            deg[a] -= 1
            if deg[a] <= 2:
                stack[sp] = a
                sp += 1
            continue
        # degree 2: suppress u
        a = e_a[e1] if e_b[e1] == u else e_b[e1]
        b = e_a[e2] if e_b[e2] == u else e_b[e2]
        e_alive[e1] = 0
        e_alive[e2] = 0
        alive_edges -= 2
        deg[u] = 0
        if a == b:
            # the two edges were parallel through u: their merge is a loop
            deg[a] -= 2
            if deg[a] <= 2:
                stack[sp] = a
                sp += 1
            continue
        # is there already an a-b edge? scan the sparser endpoint
        probe = a if deg[a] <= deg[b] else b
        other = b if probe == a else a
        slot = head[probe]
        prev = -1
        found = False
        while slot != -1:
            e = s_edge[slot]
            if e_alive[e] == 0:
                nxt = s_next[slot]
                if prev == -1:
                    head[probe] = nxt
                else:
                    s_next[prev] = nxt
                slot = nxt
                continue
            w = e_a[e] if e_b[e] == probe else e_b[e]
            if w == other:
                found = True
                break
            prev = slot
            slot = s_next[slot]
        if found:
            # parallel merge: a-b exists, so the new edge collapses into it
            deg[a] -= 1
            deg[b] -= 1
            if deg[a] <= 2:
                stack[sp] = a
                sp += 1
            if deg[b] <= 2:
                stack[sp] = b
                sp += 1
        else:
            e_a[n_edges] = a
            e_b[n_edges] = b
            e_alive[n_edges] = 1
            s_edge[n_slots] = n_edges
            s_next[n_slots] = head[a]
            head[a] = n_slots
            n_slots += 1
            s_edge[n_slots] = n_edges
            s_next[n_slots] = head[b]
            head[b] = n_slots
            n_slots += 1
            n_edges += 1
            alive_edges += 1
            # degrees of a and b are unchanged: -1 for the removed, +1 new
            if deg[a] <= 2:
                stack[sp] = a
                sp += 1
            if deg[b] <= 2:
                stack[sp] = b
                sp += 1
    return alive_edges == 0


def sp_edge_arrays(nv: int, eu: np.ndarray, ev: np.ndarray) -> bool:
    """K4-minor-freeness of the multigraph given as index arrays."""
    eu2, ev2 = _simplify(nv, eu, ev)
    return bool(_sp_reduce(nv, eu2, ev2))
