"""Brute-force reference answers for the fast algorithms.

Everything here enumerates paths or walks exhaustively, so the inputs
are capped to toy sizes.  None of the production relaxation code is
reused; the point is an independent cross-check.
"""

from __future__ import annotations

import math

from .graph import Graph, ProblemInstance

MAX_PATH_VERTICES = 12   # simple-path enumeration cap
MAX_WALK_VERTICES = 10   # walk enumeration cap
MAX_WALK_EDGES = 8


def _check_vertex(g: Graph, s: int):
    if not (1 <= s <= g.n):
        raise ValueError(f"vertex {s} out of range 1..{g.n}")


def oracle_sssp(g: Graph, s: int):
    """Exact distances from s via exhaustive simple-path enumeration.

    Returns a length-n list, dist[v - 1] = min weight over simple
    s -> v paths (+inf when unreachable).  No pruning: every simple
    path is walked, which is why n is capped.
    """
    if g.n > MAX_PATH_VERTICES:
        raise ValueError(f"oracle_sssp capped at n <= {MAX_PATH_VERTICES}, got {g.n}")
    _check_vertex(g, s)
    best = [math.inf] * g.n
    best[s - 1] = 0.0
    on_path = [False] * (g.n + 1)
    on_path[s] = True

    def walk(u, weight):
        for v, w, _ in g.out_edges(u):
            if on_path[v]:
                continue
            total = weight + w
            if total < best[v - 1]:
                best[v - 1] = total
            on_path[v] = True
            walk(v, total)
            on_path[v] = False

    walk(s, 0.0)
    return best


def oracle_csp(inst: ProblemInstance, s: int, t: int):
    """Cheapest s -> t simple path with delay sum <= bound.

    Returns (weight, delay); (inf, None) when no feasible path exists.
    Among minimum-weight feasible paths the smallest delay is reported.
    """
    g = inst.graph
    if g.n > MAX_PATH_VERTICES:
        raise ValueError(f"oracle_csp capped at n <= {MAX_PATH_VERTICES}, got {g.n}")
    _check_vertex(g, s)
    _check_vertex(g, t)
    best_weight = math.inf
    best_delay = None
    on_path = [False] * (g.n + 1)
    on_path[s] = True

    def walk(u, weight, delay):
        nonlocal best_weight, best_delay
        for v, w, d in g.out_edges(u):
            if on_path[v]:
                continue
            nd = delay + d
            if nd > inst.bound:
                continue
            nw = weight + w
            if v == t:
                if nw < best_weight or (nw == best_weight and
                                        (best_delay is None or nd < best_delay)):
                    best_weight = nw
                    best_delay = nd
                continue  # t is a sink for simple-path purposes here
            on_path[v] = True
            walk(v, nw, nd)
            on_path[v] = False

    if s != t:
        walk(s, 0.0, 0)
    else:
        best_weight, best_delay = 0.0, 0
    return best_weight, best_delay


def oracle_ksp(g: Graph, s: int, k: int):
    """Weights of the k cheapest non-empty walks from s with <= k edges.

    Enumerates every walk of 1..k edges (revisits allowed), sorts the
    weights and returns the k smallest.  Valid as a reference because
    the fast enumerator never emits a path longer than k edges.
    """
    if g.n > MAX_WALK_VERTICES:
        raise ValueError(f"oracle_ksp capped at n <= {MAX_WALK_VERTICES}, got {g.n}")
    if k > MAX_WALK_EDGES:
        raise ValueError(f"oracle_ksp capped at k <= {MAX_WALK_EDGES}, got {k}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    _check_vertex(g, s)
    weights = []
    stack = [(s, 0, 0.0)]
    while stack:
        u, depth, weight = stack.pop()
        for v, w, _ in g.out_edges(u):
            total = weight + w
            weights.append(total)
            if depth + 1 < k:
                stack.append((v, depth + 1, total))
    weights.sort()
    return weights[:k]
