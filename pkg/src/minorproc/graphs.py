"""Simple labeled graphs plus the structural functionals the analysis needs:
excess, 2-core, largest component, maximum degree, pendant-tree decomposition.

Vertices are labeled 1..n throughout; serialized edge lists are 1-based with
u < v on every line.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import GraphError


class Graph:
    """Mutable simple undirected graph on vertex set {1, .., n}."""

    __slots__ = ("n", "adj", "edges")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n + 1)]
        self.edges: list[tuple[int, int]] = []
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            raise GraphError(f"edge ({u},{v}) outside vertex range 1..{self.n}")
        if v in self.adj[u]:
            raise GraphError(f"duplicate edge ({u},{v})")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.edges.append((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def copy(self) -> "Graph":
        return Graph(self.n, self.edges)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, by smallest member."""
        seen = [False] * (self.n + 1)
        out = []
        for s in range(1, self.n + 1):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            q = deque([s])
            while q:
                x = q.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        q.append(y)
            comp.sort()
            out.append(comp)
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m()})"


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    g = Graph(a + b)
    for u in range(1, a + 1):
        for v in range(a + 1, a + b + 1):
            g.add_edge(u, v)
    return g


def cycle_graph(n: int) -> Graph:
    g = Graph(n)
    for i in range(1, n):
        g.add_edge(i, i + 1)
    if n >= 3:
        g.add_edge(n, 1)
    return g


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def diamond_graph() -> Graph:
    """K4 minus one edge; the forbidden minor of cactus graphs."""
    return Graph(4, [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


class ComponentTracker:
    """Union-find over 1..n with per-component vertex and edge counts.

    Union by size with path compression; supports the accept shortcuts
    (different components, tree component) and component excess in O(alpha).
    """

    __slots__ = ("n", "parent", "size", "edge_count", "n_components", "n_tree_components")

    def __init__(self, n: int):
        self.n = n
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.edge_count = [0] * (n + 1)
        self.n_components = n
        self.n_tree_components = n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def add_edge(self, u: int, v: int) -> None:
        """Record edge (u,v): merge components or bump an internal edge count."""
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            was_tree = self.edge_count[ru] == self.size[ru] - 1
            self.edge_count[ru] += 1
            if was_tree:
                self.n_tree_components -= 1
            return
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        tu = self.edge_count[ru] == self.size[ru] - 1
        tv = self.edge_count[rv] == self.size[rv] - 1
        self.parent[rv] = ru
        self.size[ru] += self.size[rv]
        self.edge_count[ru] += self.edge_count[rv] + 1
        self.n_components -= 1
        # merged component is a tree iff both halves were trees
        self.n_tree_components -= (tu + tv) - (tu and tv)

    def component_size(self, u: int) -> int:
        return self.size[self.find(u)]

    def component_edges(self, u: int) -> int:
        return self.edge_count[self.find(u)]

    def same_component(self, u: int, v: int) -> bool:
        return self.find(u) == self.find(v)

    def is_tree_component(self, u: int) -> bool:
        r = self.find(u)
        return self.edge_count[r] == self.size[r] - 1

    def excess(self) -> int:
        """Total edges minus vertices plus tree components (>= 0)."""
        m = sum(self.edge_count[r] for r in self.roots())
        return m - self.n + self.n_tree_components

    def roots(self) -> list[int]:
        return [x for x in range(1, self.n + 1) if self.parent[x] == x]

    def partition_signature(self) -> list[int]:
        """Canonical component labels: vertices map to first-seen indices."""
        labels = {}
        sig = []
        for v in range(1, self.n + 1):
            r = self.find(v)
            sig.append(labels.setdefault(r, len(labels)))
        return sig


def tracker_for(g: Graph) -> ComponentTracker:
    t = ComponentTracker(g.n)
    for u, v in g.edges:
        t.add_edge(u, v)
    return t


def excess(g: Graph) -> int:
    """m - n + (number of tree components); zero exactly on forests."""
    n_tree = 0
    for comp in g.components():
        m_comp = sum(len(g.adj[x]) for x in comp) // 2
        if m_comp == len(comp) - 1:
            n_tree += 1
    return g.m() - g.n + n_tree


def two_core(g: Graph) -> Graph:
    """Maximal subgraph of minimum degree >= 2, by queue peeling in O(n+m).

    Returned on the same vertex set; removed vertices are isolated.
    """
    deg = [len(g.adj[x]) for x in range(g.n + 1)]
    alive = [True] * (g.n + 1)
    q = deque(x for x in range(1, g.n + 1) if deg[x] <= 1)
    while q:
        x = q.popleft()
        if not alive[x]:
            continue
        alive[x] = False
        for y in g.adj[x]:
            if alive[y]:
                deg[y] -= 1
                if deg[y] <= 1:
                    q.append(y)
    core = Graph(g.n)
    for u, v in g.edges:
        if alive[u] and alive[v]:
            core.add_edge(u, v)
    return core


def core_vertices(g: Graph) -> set[int]:
    c = two_core(g)
    return {x for x in range(1, g.n + 1) if c.adj[x]}


@dataclass
class PendantForest:
    """2-core of a component plus the tree hanging off each core vertex.

    tree_of[x] is the sorted vertex list of the tree component containing x
    after the core edges are removed; weights are the tree orders.
    """

    core: Graph
    tree_of: dict[int, list[int]] = field(default_factory=dict)

    def weight(self, x: int) -> int:
        return len(self.tree_of[x])


def pendant_tree_decomposition(g: Graph) -> PendantForest:
    """Split a connected non-tree graph into its 2-core and pendant trees."""
    if g.n == 0 or len(g.components()) != 1:
        raise GraphError("pendant decomposition needs a connected graph")
    core = two_core(g)
    in_core = {x for x in range(1, g.n + 1) if core.adj[x]}
    if not in_core:
        raise GraphError("graph is a tree; it has no 2-core")
    # Forest = g minus core edges; walk outward from each core vertex.  Core
    # vertices are pre-marked, so each walk stays inside one pendant tree.
    tree_of: dict[int, list[int]] = {}
    seen = [False] * (g.n + 1)
    for x in in_core:
        seen[x] = True
    for x in sorted(in_core):
        tree = [x]
        q = deque([x])
        while q:
            a = q.popleft()
            for b in g.adj[a]:
                if not seen[b]:
                    seen[b] = True
                    tree.append(b)
                    q.append(b)
        tree.sort()
        tree_of[x] = tree
    return PendantForest(core=core, tree_of=tree_of)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract (u,v) into u, simplify, and relabel compactly to 1..n-1."""
    if not g.has_edge(u, v):
        raise GraphError(f"cannot contract missing edge ({u},{v})")
    relabel = {}
    for x in range(1, g.n + 1):
        if x != v:
            relabel[x] = len(relabel) + 1
    relabel[v] = relabel[u]
    out = Graph(g.n - 1)
    for a, b in g.edges:
        ra, rb = relabel[a], relabel[b]
        if ra != rb and not out.has_edge(ra, rb):
            out.add_edge(ra, rb)
    return out


def relabeled(g: Graph, perm: dict[int, int]) -> Graph:
    """Isomorphic copy under the given 1..n permutation."""
    out = Graph(g.n)
    for u, v in g.edges:
        out.add_edge(perm[u], perm[v])
    return out


def largest_component(g: Graph) -> tuple[list[int], int]:
    """Largest component; ties broken by smallest minimum vertex label."""
    best: list[int] = []
    for comp in g.components():
        if len(comp) > len(best):
            best = comp
    return best, len(best)


def max_degree(g: Graph) -> int:
    return max((len(g.adj[x]) for x in range(1, g.n + 1)), default=0)


def write_edge_list(g: Graph, path) -> None:
    """Text format: header 'n m', then one 'u v' line per edge, 1-based, u < v."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{g.n} {g.m()}\n")
        for u, v in sorted(g.edges):
            fh.write(f"{u} {v}\n")


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise GraphError(f"malformed edge list header in {path}")
        n, m = int(header[0]), int(header[1])
        g = Graph(n)
        for line in fh:
            line = line.strip()
            if not line:
                continue
            u, v = map(int, line.split())
            g.add_edge(u, v)
        if g.m() != m:
            raise GraphError(f"edge list {path} declares {m} edges, has {g.m()}")
    return g
