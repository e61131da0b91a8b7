import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from pathbench import (Graph, bellman_ford, default_delta, delta_stepping,
                       dijkstra, oracle_sssp, reconstruct_path, relax)
from tests.util import delta_choices, inf, random_graph

ALL_RUNNERS = [
    ("dijkstra", lambda g, s: dijkstra(g, s)),
    ("bf", lambda g, s: bellman_ford(g, s)),
    ("bf-yen", lambda g, s: bellman_ford(g, s, mode="yen")),
    ("bf-yen-random", lambda g, s: bellman_ford(g, s, mode="yen-random", seed=3)),
    ("delta", lambda g, s: delta_stepping(g, s, default_delta(g))),
]


# --- relax / reconstruct ---------------------------------------------------

def test_relax_improves():
    dist, pred = [0.0, inf], [None, None]
    assert relax(1, 2, 7.0, dist, pred) is True
    assert dist == [0.0, 7.0]
    assert pred == [None, 1]


def test_relax_keeps_better_value():
    dist, pred = [0.0, 2.0, 1.0, inf], [None, 1, 1, None]
    assert relax(2, 3, 1.0, dist, pred) is False
    assert dist == [0.0, 2.0, 1.0, inf]
    assert pred[2] == 1


def test_relax_from_unreached_source_is_noop():
    dist, pred = [inf, 0.0], [None, None]
    assert relax(1, 2, 3.0, dist, pred) is False
    assert dist == [inf, 0.0]


def test_reconstruct_single_edge():
    assert reconstruct_path(1, 2, [None, 1]) == [1, 2]


def test_reconstruct_trivial():
    assert reconstruct_path(1, 1, [None, None]) == [1]


def test_reconstruct_broken_chain():
    with pytest.raises(ValueError, match="broken predecessor"):
        reconstruct_path(1, 3, [None, 1, None])


def test_reconstruct_cycle_detected():
    with pytest.raises(ValueError):
        reconstruct_path(1, 3, [None, 3, 2])


# --- dijkstra ---------------------------------------------------------------

def test_dijkstra_two_route(two_route):
    res = dijkstra(two_route.graph, 1, 4)
    assert res.dist == [0.0, 2.0, 1.0, 2.0]
    assert res.path == [1, 3, 4]


def test_dijkstra_unreachable(two_route):
    res = dijkstra(two_route.graph, 4, 1)
    assert res.dist[0] == inf
    assert res.path is None
    assert res.pred[0] is None


def test_dijkstra_without_target(two_route):
    res = dijkstra(two_route.graph, 1)
    assert res.path is None
    assert res.dist == [0.0, 2.0, 1.0, 2.0]


def test_dijkstra_tie_pops_smaller_vertex_first():
    # Both 1-2-4 and 1-3-4 weigh 2; popping 2 before 3 pins pred[4] = 2.
    g = Graph(4, [(1, 2, 1.0, 0), (1, 3, 1.0, 0), (2, 4, 1.0, 0), (3, 4, 1.0, 0)])
    assert dijkstra(g, 1, 4).path == [1, 2, 4]


def test_dijkstra_early_break_settles_target():
    rng = random.Random(60)
    for _ in range(30):
        n = rng.randint(2, 40)
        g = random_graph(rng, n, rng.randint(1, 4 * n))
        s, t = rng.sample(range(1, n + 1), 2)
        assert dijkstra(g, s, t).dist[t - 1] == dijkstra(g, s).dist[t - 1]


# --- bellman-ford -----------------------------------------------------------

def test_bf_modes_two_route(two_route):
    for mode, seed in [("naive", None), ("yen", None), ("yen-random", 11)]:
        res = bellman_ford(two_route.graph, 1, mode=mode, seed=seed)
        assert res.dist == [0.0, 2.0, 1.0, 2.0]


def test_bf_loop_pair(loop_pair):
    assert bellman_ford(loop_pair, 1).dist == [0.0, 1.0, 2.0, 2.0, 2.0]
    assert bellman_ford(loop_pair, 1, mode="yen").dist == [0.0, 1.0, 2.0, 2.0, 2.0]
    res = bellman_ford(loop_pair, 1, mode="yen-random", seed=42)
    assert res.dist == [0.0, 1.0, 2.0, 2.0, 2.0]


def test_bf_rejects_bad_mode(two_route):
    with pytest.raises(ValueError, match="unknown mode"):
        bellman_ford(two_route.graph, 1, mode="speedy")


def test_bf_yen_random_requires_seed(two_route):
    with pytest.raises(ValueError, match="seed"):
        bellman_ford(two_route.graph, 1, mode="yen-random")


def test_bf_naive_examines_every_edge_each_pass(two_route):
    res = bellman_ford(two_route.graph, 1)
    assert res.relax_attempts == (4 - 1) * 4


def test_bf_yen_never_works_harder_than_naive():
    rng = random.Random(61)
    graphs = [random_graph(rng, rng.randint(2, 30), rng.randint(1, 60))
              for _ in range(40)]
    for g in graphs:
        s = rng.randint(1, g.n)
        naive = bellman_ford(g, s)
        yen = bellman_ford(g, s, mode="yen")
        assert yen.relax_attempts <= naive.relax_attempts
        assert yen.dist == naive.dist


def test_bf_yen_random_seed_invariant_distances(loop_pair):
    baseline = bellman_ford(loop_pair, 1).dist
    for seed in range(6):
        assert bellman_ford(loop_pair, 1, mode="yen-random", seed=seed).dist == baseline


# --- delta stepping ---------------------------------------------------------

def test_delta_two_route(two_route):
    for width in (1.0, 2.0, 25.0):
        assert delta_stepping(two_route.graph, 1, width).dist == [0.0, 2.0, 1.0, 2.0]


def test_delta_rejects_nonpositive_width(two_route):
    for width in (0.0, -1.0):
        with pytest.raises(ValueError, match="positive"):
            delta_stepping(two_route.graph, 1, width)


def test_delta_zero_weight_cycle_terminates():
    g = Graph(3, [(1, 2, 0.0, 0), (2, 1, 0.0, 0), (2, 3, 0.0, 0)])
    assert delta_stepping(g, 1, 1.0).dist == [0.0, 0.0, 0.0]


def test_default_delta(two_route):
    assert default_delta(two_route.graph) == 2.0  # mean 1.25 rounded up
    assert default_delta(Graph(3, [])) == 1.0
    assert default_delta(Graph(2, [(1, 2, 0.0, 0)])) == 1.0  # floor of 1 keeps it valid


# --- cross-algorithm and oracle properties ----------------------------------

def test_all_algorithms_match_oracle():
    rng = random.Random(62)
    for _ in range(40):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.randint(0, 3 * n))
        s = rng.randint(1, n)
        expected = oracle_sssp(g, s)
        for name, run in ALL_RUNNERS:
            assert run(g, s).dist == expected, name


def test_distances_agree_across_delta_widths():
    rng = random.Random(63)
    for _ in range(25):
        n = rng.randint(2, 50)
        g = random_graph(rng, n, rng.randint(1, 5 * n))
        s = rng.randint(1, n)
        expected = dijkstra(g, s).dist
        for width in delta_choices(g):
            assert delta_stepping(g, s, width).dist == expected


def _check_pred_consistency(g, res, s):
    by_pair = {(u, v): w for u, v, w, _ in g.edges}
    for v in range(1, g.n + 1):
        if v == s:
            assert res.dist[v - 1] == 0.0
            assert res.pred[v - 1] is None
            continue
        p = res.pred[v - 1]
        if res.dist[v - 1] == inf:
            assert p is None
        else:
            assert p is not None
            assert res.dist[v - 1] == res.dist[p - 1] + by_pair[(p, v)]


def test_predecessor_edges_are_tight():
    rng = random.Random(64)
    for _ in range(25):
        n = rng.randint(1, 30)
        g = random_graph(rng, n, rng.randint(0, 4 * n))
        s = rng.randint(1, n)
        for name, run in ALL_RUNNERS:
            _check_pred_consistency(g, run(g, s), s)


def test_no_edge_is_improvable_after_termination():
    rng = random.Random(65)
    for _ in range(25):
        n = rng.randint(1, 30)
        g = random_graph(rng, n, rng.randint(0, 4 * n))
        s = rng.randint(1, n)
        for name, run in ALL_RUNNERS:
            dist = run(g, s).dist
            for u, v, w, _ in g.edges:
                assert dist[v - 1] <= dist[u - 1] + w


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(0, 20), st.integers(0, 10 ** 6))
def test_reported_path_weight_matches_distance(n, m, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, m)
    s, t = rng.sample(range(1, n + 1), 2)
    res = dijkstra(g, s, t)
    if res.dist[t - 1] == inf:
        assert res.path is None
        return
    by_pair = {(u, v): w for u, v, w, _ in g.edges}
    assert res.path[0] == s and res.path[-1] == t
    total = sum(by_pair[(a, b)] for a, b in zip(res.path, res.path[1:]))
    assert total == res.dist[t - 1]


def test_phase_timings_invariants(two_route):
    for name, run in ALL_RUNNERS:
        tm = run(two_route.graph, 1).timings
        assert tm.preprocessing_ns >= 0
        assert tm.computation_ns >= 0
        assert tm.total_ns >= tm.preprocessing_ns
        assert tm.total_ns >= tm.computation_ns


def test_source_out_of_range(two_route):
    for name, run in ALL_RUNNERS:
        with pytest.raises(ValueError):
            run(two_route.graph, 0)
        with pytest.raises(ValueError):
            run(two_route.graph, 5)


def test_single_vertex_graph():
    g = Graph(1, [])
    for name, run in ALL_RUNNERS:
        res = run(g, 1)
        assert res.dist == [0.0]
        assert res.pred == [None]


def test_math_inf_is_used_for_unreachable(one_edge):
    res = bellman_ford(one_edge.graph, 2)
    assert res.dist == [math.inf, 0.0]
