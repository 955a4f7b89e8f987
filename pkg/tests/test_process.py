"""Process runs, stop rules, the greedy variant, and the censuses."""

import itertools

import pytest

from minorproc.constraints import get_oracle
from minorproc.errors import InfeasibleStopError
from minorproc.graphs import Graph, complete_graph
from minorproc.process import (
    EdgeStream,
    ProcessConfig,
    StopRule,
    classify_queries,
    count_forbidden_addable,
    max_class_edges,
    pair_count,
    pair_from_index,
    random_greedy,
    run,
    steps_until_accepted,
)
from minorproc.rng import split_rng


def test_pair_unranking_is_a_bijection():
    n = 9
    seen = {pair_from_index(k) for k in range(pair_count(n))}
    assert seen == {(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)}


def test_edge_stream_emits_each_pair_once():
    for expected_stop in (4, 40):  # lazy and permutation modes
        rng = split_rng(5)
        stream = EdgeStream(9, rng, expected_stop)
        pairs = [stream.next_pair() for _ in range(pair_count(9))]
        assert len(set(pairs)) == len(pairs) == pair_count(9)
        with pytest.raises(StopIteration):
            stream.next_pair()


def test_triangle_all_accepted():
    cfg = ProcessConfig(n=3, graph_class="planar", stop=StopRule.all_queried(), seed=1)
    trace = run(cfg)
    assert trace.accepted == 3
    assert trace.rows[-1][2] == 0


def test_planar_saturation_is_a_triangulation():
    # every planar-saturated graph on 6 vertices has exactly 3n-6 = 12 edges
    for seed in range(8):
        cfg = ProcessConfig(n=6, graph_class="planar", stop=StopRule.all_queried(), seed=seed)
        trace = run(cfg)
        assert trace.accepted == 12


def test_unconstrained_accepts_everything():
    cfg = ProcessConfig(n=40, graph_class="none", stop=StopRule.at_step(300), seed=3)
    trace = run(cfg)
    assert trace.accepted == 300
    assert all(row[2] == 0 for row in trace.rows)


def test_first_edge_always_accepted():
    for cls in ("cactus", "outerplanar", "series_parallel", "planar", "none"):
        for seed in (0, 1, 2):
            cfg = ProcessConfig(n=12, graph_class=cls, stop=StopRule.at_accepted(1), seed=seed)
            assert steps_until_accepted(cfg) == 1


def test_spanning_needs_at_least_n_minus_1_queries():
    cfg = ProcessConfig(n=30, graph_class="cactus", stop=StopRule.at_accepted(29), seed=9)
    assert steps_until_accepted(cfg) >= 29


def test_infeasible_stops():
    cases = [
        ("planar", 50, 3 * 50 - 6 + 1),
        ("series_parallel", 50, 2 * 50 - 3 + 1),
        ("outerplanar", 50, 2 * 50 - 3 + 1),
        ("cactus", 50, 3 * 49 // 2 + 1),
    ]
    for cls, n, m0 in cases:
        cfg = ProcessConfig(n=n, graph_class=cls, stop=StopRule.at_accepted(m0))
        with pytest.raises(InfeasibleStopError):
            run(cfg)
        ok = ProcessConfig(n=n, graph_class=cls, stop=StopRule.at_accepted(m0 - 1))
        ok.validate()


def test_max_class_edges_small_n():
    assert max_class_edges("planar", 2) == 1
    assert max_class_edges("outerplanar", 2) == 1
    assert max_class_edges("cactus", 3) == 3
    assert max_class_edges("none", 5) == 10


def test_determinism_bit_identical():
    cfg = ProcessConfig(
        n=300, graph_class="planar", stop=StopRule.at_step(900), seed=123,
        checkpoints=(300, 600), track_er=True,
    )
    assert run(cfg).to_csv() == run(cfg).to_csv()
    other = ProcessConfig(
        n=300, graph_class="planar", stop=StopRule.at_step(900), seed=124,
        checkpoints=(300, 600), track_er=True,
    )
    assert run(other).to_csv() != run(cfg).to_csv()


def test_checkpoints_by_accepted():
    cfg = ProcessConfig(
        n=100, graph_class="planar", stop=StopRule.at_accepted(80), seed=7,
        checkpoints=(20, 40, 60), checkpoints_by="accepted",
    )
    trace = run(cfg)
    marks = [row[1] for row in trace.rows[:3]]
    assert marks == [20, 40, 60]
    assert trace.rows[-1][1] == 80


def test_lemma_bounds_at_small_scale():
    # rejected count below companion excess; identical partitions
    for cls in ("cactus", "planar"):
        cfg = ProcessConfig(
            n=400, graph_class=cls, stop=StopRule.at_step(1200), seed=11,
            checkpoints=tuple(range(100, 1201, 100)), track_er=True,
        )
        trace = run(cfg)
        assert all(row[2] <= row[4] for row in trace.rows)
        assert trace.er_partition_mismatches == []
        assert all(row[0] == row[1] + row[2] for row in trace.rows)


def test_membership_at_checkpoints():
    cfg = ProcessConfig(
        n=150, graph_class="outerplanar", stop=StopRule.at_step(600), seed=2,
        checkpoints=(150, 300, 450),
    )
    trace = run(cfg)
    oracle = get_oracle("outerplanar")
    for row in trace.rows:
        assert oracle.membership(trace.graph_at(row[1]))


def test_greedy_single_edge():
    g = random_greedy(6, "planar", 1, seed=4)
    assert g.m() == 1


def test_greedy_stays_in_class():
    for cls in ("cactus", "outerplanar", "series_parallel", "planar"):
        g = random_greedy(25, cls, 30, seed=8)
        assert g.m() == 30
        assert get_oracle(cls).membership(g)


def test_greedy_exhausts_with_error():
    with pytest.raises(InfeasibleStopError):
        random_greedy(4, "planar", 7, seed=1)


def _isomorphism_type_2_edges(g: Graph) -> str:
    (a, b), (c, d) = g.edges
    return "disjoint" if len({a, b, c, d}) == 4 else "path"


def test_greedy_matches_accepted_graph_distribution():
    """A(5,2) and the greedy variant both put mass 1/3 on two disjoint edges
    and 2/3 on a path; chi-square at significance 1e-3 (critical 10.828)."""
    trials = 100_000
    counts = {"greedy": [0, 0], "process": [0, 0]}
    for i in range(trials):
        g = random_greedy(5, "planar", 2, seed=i)
        counts["greedy"][_isomorphism_type_2_edges(g) == "path"] += 1
    for i in range(trials):
        cfg = ProcessConfig(
            n=5, graph_class="planar", stop=StopRule.at_accepted(2), seed=i,
        )
        trace = run(cfg)
        counts["process"][_isomorphism_type_2_edges(trace.final_graph()) == "path"] += 1
    for kind, (n_disjoint, n_path) in counts.items():
        exp_disjoint, exp_path = trials / 3, 2 * trials / 3
        chi2 = (n_disjoint - exp_disjoint) ** 2 / exp_disjoint
        chi2 += (n_path - exp_path) ** 2 / exp_path
        assert chi2 < 10.828, f"{kind}: chi2={chi2} counts={counts[kind]}"


def test_census_empty_graph():
    for cls in ("cactus", "outerplanar", "series_parallel", "planar"):
        forbidden, addable = count_forbidden_addable(Graph(8), get_oracle(cls))
        assert forbidden == 0
        assert addable == pair_count(8)


def test_census_forest():
    g = Graph(9, [(1, 2), (2, 3), (4, 5), (6, 7), (7, 8)])
    for cls in ("cactus", "planar"):
        forbidden, addable = count_forbidden_addable(g, get_oracle(cls))
        assert forbidden == 0
        assert addable + g.m() == pair_count(9)


def test_census_octahedron():
    # the octahedron is a triangulation: all 3 non-edges are forbidden
    non_edges = [(1, 2), (3, 4), (5, 6)]
    g = Graph(6)
    for u, v in itertools.combinations(range(1, 7), 2):
        if (u, v) not in non_edges:
            g.add_edge(u, v)
    forbidden, addable = count_forbidden_addable(g, get_oracle("planar"))
    assert (forbidden, addable) == (3, 0)


def test_census_identity():
    cfg = ProcessConfig(n=60, graph_class="planar", stop=StopRule.at_step(90), seed=3)
    trace = run(cfg)
    g = trace.final_graph()
    forbidden, addable = count_forbidden_addable(g, get_oracle("planar"))
    assert forbidden + addable + g.m() == pair_count(60)


def test_census_monotone_in_t():
    prev = -1
    for t in (100, 200, 400, 800):
        cfg = ProcessConfig(n=200, graph_class="planar", stop=StopRule.at_step(t), seed=6)
        trace = run(cfg)
        forbidden, _ = count_forbidden_addable(trace.final_graph(), get_oracle("planar"))
        assert forbidden >= prev
        prev = forbidden


def test_classify_unconstrained_accepts_all():
    cfg = ProcessConfig(n=50, graph_class="none", stop=StopRule.at_step(200), seed=5)
    counts = classify_queries(cfg, (1, 200))
    assert counts.inside_rejected == 0
    assert counts.outside_rejected == 0
    assert counts.total == 200


def test_classify_window_totals():
    cfg = ProcessConfig(n=300, graph_class="planar", stop=StopRule.at_step(600), seed=5)
    counts = classify_queries(cfg, (101, 600))
    assert counts.total == 500
