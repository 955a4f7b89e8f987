"""Graph representation and structural functionals."""

import itertools
import random

import pytest

from minorproc.errors import GraphError
from minorproc.graphs import (
    ComponentTracker,
    Graph,
    complete_graph,
    cycle_graph,
    excess,
    largest_component,
    max_degree,
    path_graph,
    pendant_tree_decomposition,
    read_edge_list,
    tracker_for,
    two_core,
    write_edge_list,
)


def test_add_edge_merges_components():
    g = Graph(4)
    t = ComponentTracker(4)
    g.add_edge(1, 2)
    t.add_edge(1, 2)
    assert t.component_size(1) == 2
    assert t.component_edges(2) == 1
    assert t.is_tree_component(1)


def test_add_edge_closes_cycle():
    g = Graph(3, [(1, 2), (2, 3)])
    t = tracker_for(g)
    assert t.is_tree_component(1)
    g.add_edge(1, 3)
    t.add_edge(1, 3)
    assert t.component_edges(1) == 3 == t.component_size(1)
    assert not t.is_tree_component(2)


def test_add_edge_errors():
    g = Graph(3, [(1, 2)])
    with pytest.raises(GraphError):
        g.add_edge(1, 1)
    with pytest.raises(GraphError):
        g.add_edge(2, 1)
    with pytest.raises(GraphError):
        g.add_edge(0, 2)


def test_excess_examples():
    assert excess(path_graph(6)) == 0  # any forest
    triangle_plus_isolated = Graph(4, [(1, 2), (2, 3), (1, 3)])
    assert excess(triangle_plus_isolated) == 0  # m=3, n=4, one tree component
    assert excess(complete_graph(4)) == 2  # 6 - 4 + 0


def test_excess_increment_dichotomy():
    # +1 exactly when the edge lands inside a non-tree component
    rng = random.Random(7)
    g = Graph(12)
    t = tracker_for(g)
    pairs = list(itertools.combinations(range(1, 13), 2))
    rng.shuffle(pairs)
    for u, v in pairs[:40]:
        before = excess(g)
        inside_nontree = t.same_component(u, v) and not t.is_tree_component(u)
        g.add_edge(u, v)
        t.add_edge(u, v)
        assert excess(g) == before + (1 if inside_nontree else 0)
        assert t.excess() == excess(g)


def test_two_core_examples():
    assert two_core(path_graph(5)).m() == 0  # trees peel away entirely
    c5 = cycle_graph(5)
    assert sorted(two_core(c5).edges) == sorted(c5.edges)
    g = Graph(6, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6)])
    core = two_core(g)
    assert sorted(core.edges) == [(1, 2), (1, 3), (2, 3)]


def test_two_core_idempotent_and_monotone():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(2, 30)
        g = Graph(n)
        for u, v in itertools.combinations(range(1, n + 1), 2):
            if rng.random() < 0.12:
                g.add_edge(u, v)
        core = two_core(g)
        again = two_core(core)
        assert sorted(core.edges) == sorted(again.edges)
        assert set(core.edges) <= set(g.edges)
        # deleting a degree-<=1 vertex first never changes the result
        low = next(
            (x for x in range(1, n + 1) if len(g.adj[x]) <= 1), None
        )
        if low is not None:
            pruned = Graph(n, [e for e in g.edges if low not in e])
            assert sorted(two_core(pruned).edges) == sorted(core.edges)


def test_pendant_decomposition_cycle():
    forest = pendant_tree_decomposition(cycle_graph(5))
    assert all(forest.tree_of[x] == [x] for x in forest.tree_of)
    assert sum(forest.weight(x) for x in forest.tree_of) == 5


def test_pendant_decomposition_triangle_with_tail():
    g = Graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
    forest = pendant_tree_decomposition(g)
    assert forest.tree_of[3] == [3, 4]
    assert forest.tree_of[1] == [1]
    assert forest.tree_of[2] == [2]


def test_pendant_decomposition_partitions_vertices():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(3, 40)
        g = Graph(n)
        for v in range(2, n + 1):
            g.add_edge(rng.randint(1, v - 1), v)
        added = 0
        while added == 0:
            u, v = rng.randint(1, n), rng.randint(1, n)
            if u != v and not g.has_edge(u, v):
                g.add_edge(u, v)
                added += 1
        forest = pendant_tree_decomposition(g)
        seen = sorted(x for tree in forest.tree_of.values() for x in tree)
        assert seen == list(range(1, n + 1))


def test_pendant_decomposition_rejects_trees():
    with pytest.raises(GraphError):
        pendant_tree_decomposition(path_graph(4))
    with pytest.raises(GraphError):
        pendant_tree_decomposition(Graph(4, [(1, 2)]))  # disconnected


def test_largest_component_and_ties():
    g = Graph(5)
    assert largest_component(g)[1] == 1
    two_triangles = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    comp, size = largest_component(two_triangles)
    assert size == 3
    assert comp == [1, 2, 3]  # tie broken by smallest minimum label


def test_max_degree():
    star = Graph(8, [(1, k) for k in range(2, 9)])
    assert max_degree(star) == 7
    assert max_degree(Graph(3)) == 0


def test_tracker_matches_bfs_partition():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(2, 50)
        g = Graph(n)
        t = ComponentTracker(n)
        for u, v in itertools.combinations(range(1, n + 1), 2):
            if rng.random() < 0.05:
                g.add_edge(u, v)
                t.add_edge(u, v)
        comps = {frozenset(c) for c in g.components()}
        by_root: dict[int, set] = {}
        for x in range(1, n + 1):
            by_root.setdefault(t.find(x), set()).add(x)
        assert {frozenset(c) for c in by_root.values()} == comps
        assert t.n_components == len(comps)


def test_edge_list_round_trip(tmp_path):
    g = Graph(6, [(1, 2), (5, 2), (3, 6)])
    path = tmp_path / "g.edges"
    write_edge_list(g, path)
    text = path.read_text().splitlines()
    assert text[0] == "6 3"
    assert all(int(a) < int(b) for a, b in (line.split() for line in text[1:]))
    h = read_edge_list(path)
    assert h.n == g.n and sorted(h.edges) == sorted(g.edges)
