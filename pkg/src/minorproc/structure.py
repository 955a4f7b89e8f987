"""Executable proof machinery: weighted connected decomposition and the
weighted clique-free edge bound with its brute-force partner.

The decomposition cuts a connected vertex-weighted graph into connected
parts of weight between a and a*Delta + M by repeatedly slicing off the
lightest BFS-descendant set of weight >= a.  The bound states that any
K_l-free subgraph of a weighted complete graph misses at least
S/2 * (S/(l-1) - M) of the total edge weight.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import DomainError, GraphError, SizeLimitError
from .graphs import Graph


@dataclass
class WeightedGraph:
    """Connected graph with positive vertex weights (1-based, like Graph)."""

    base: Graph
    weight: dict[int, float]

    def __post_init__(self):
        for x in range(1, self.base.n + 1):
            w = self.weight.get(x)
            if w is None or w <= 0:
                raise DomainError(f"vertex {x} needs a positive weight, got {w}")

    def total_weight(self) -> float:
        return sum(self.weight.values())

    def max_weight(self) -> float:
        return max(self.weight.values())


@dataclass
class Decomposition:
    """Disjoint connected parts with weights in [a, a*Delta + M]; whatever
    remains uncut weighs less than a."""

    parts: list[list[int]] = field(default_factory=list)
    part_weights: list[float] = field(default_factory=list)
    leftover_weight: float = 0.0
    a: float = 0.0
    upper: float = 0.0


def weighted_decomposition(
    h: WeightedGraph, a: float, delta: int, max_w: float
) -> Decomposition:
    """Cut a connected weighted graph into connected parts of bounded weight.

    BFS from the lowest-label vertex, children visited in label order;
    descendant weights W(x) are accumulated, the vertex z minimizing
    (W(z), z) among those with W(z) >= a is cut off with its subtree, and
    the remainder is processed the same way.  Root and tie choices are fixed
    so outputs are reproducible.
    """
    g = h.base
    if a <= 0:
        raise DomainError(f"part weight threshold must be positive, got {a}")
    if g.n == 0 or len(g.components()) != 1:
        raise GraphError("decomposition needs a nonempty connected graph")
    if max(len(g.adj[x]) for x in range(1, g.n + 1)) > delta:
        raise DomainError("maximum degree exceeds the stated bound")
    if h.max_weight() > max_w:
        raise DomainError("maximum weight exceeds the stated bound")

    weight = h.weight
    alive = [False] + [True] * g.n
    remaining = set(range(1, g.n + 1))
    out = Decomposition(a=a, upper=a * delta + max_w)

    while remaining:
        root = min(remaining)
        # BFS tree over the remaining vertices, children in label order
        parent = {root: 0}
        order = [root]
        q = deque([root])
        while q:
            x = q.popleft()
            for y in sorted(g.adj[x]):
                if alive[y] and y not in parent:
                    parent[y] = x
                    order.append(y)
                    q.append(y)
        subtree_w = {x: float(weight[x]) for x in order}
        for x in reversed(order):
            if parent[x]:
                subtree_w[parent[x]] += subtree_w[x]
        if subtree_w[root] < a:
            out.leftover_weight += subtree_w[root]
            break
        z = min((x for x in order if subtree_w[x] >= a), key=lambda x: (subtree_w[x], x))
        # collect z with all its BFS descendants
        children: dict[int, list[int]] = {}
        for x in order:
            if parent[x]:
                children.setdefault(parent[x], []).append(x)
        part = []
        stack = [z]
        while stack:
            x = stack.pop()
            part.append(x)
            stack.extend(children.get(x, ()))
        part.sort()
        out.parts.append(part)
        out.part_weights.append(subtree_w[z])
        for x in part:
            alive[x] = False
            remaining.discard(x)
    return out


def turan_lower_bound(weights: list[float], ell: int) -> float:
    """Guaranteed edge-weight gap of K_l-free subgraphs: S/2 * (S/(l-1) - M)."""
    if ell < 2:
        raise DomainError(f"clique order must be at least 2, got {ell}")
    if not weights:
        raise DomainError("need at least one weight")
    s = sum(weights)
    return s / 2.0 * (s / (ell - 1) - max(weights))


def total_edge_weight(weights: list[float]) -> float:
    """Edge weight of the complete graph: sum over pairs of w(x)*w(y)."""
    s = sum(weights)
    sq = sum(w * w for w in weights)
    return (s * s - sq) / 2.0


def bruteforce_max_weight_clique_free(weights: list[float], ell: int) -> float:
    """Exact maximum edge weight of a K_l-free subgraph of weighted K_n.

    Clique-free subgraph maximization collapses to maximizing the crossing
    weight of a partition into at most l-1 classes, enumerated here via
    restricted-growth strings; n <= 8 enforced.
    """
    n = len(weights)
    if n > 8:
        raise SizeLimitError(f"brute force capped at 8 vertices, got {n}")
    if ell < 2:
        raise DomainError(f"clique order must be at least 2, got {ell}")
    if n == 0:
        raise DomainError("need at least one weight")
    k = ell - 1
    best = 0.0
    assignment = [0] * n

    def rec(i: int, used: int) -> None:
        nonlocal best
        if i == n:
            sums = [0.0] * used
            for x in range(n):
                sums[assignment[x]] += weights[x]
            total = sum(sums)
            cross = (total * total - sum(s * s for s in sums)) / 2.0
            if cross > best:
                best = cross
            return
        for c in range(min(used + 1, k)):
            assignment[i] = c
            rec(i + 1, max(used, c + 1))

    rec(0, 0)
    return best


def maximizing_partition(weights: list[float], ell: int) -> list[int]:
    """A partition attaining the brute-force maximum (same enumeration)."""
    n = len(weights)
    if n > 8:
        raise SizeLimitError(f"brute force capped at 8 vertices, got {n}")
    k = ell - 1
    best = -1.0
    best_assign = [0] * n
    assignment = [0] * n

    def rec(i: int, used: int) -> None:
        nonlocal best, best_assign
        if i == n:
            sums = [0.0] * used
            for x in range(n):
                sums[assignment[x]] += weights[x]
            total = sum(sums)
            cross = (total * total - sum(s * s for s in sums)) / 2.0
            if cross > best:
                best = cross
                best_assign = assignment.copy()
            return
        for c in range(min(used + 1, k)):
            assignment[i] = c
            rec(i + 1, max(used, c + 1))

    rec(0, 0)
    return best_assign
