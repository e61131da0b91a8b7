"""Single-source shortest paths on non-negative weights.

Four interchangeable solvers: binary-heap Dijkstra with lazy deletion,
textbook Bellman-Ford, Bellman-Ford with the two-sweep edge partition
(optionally under a random vertex permutation), and delta-stepping.
All of them report the same three wall-clock phases measured with a
monotonic clock:

  preprocessing_ns  array allocation, edge partitioning, permutation
                    draw, light/heavy split
  computation_ns    the main loop
  total_ns          everything, including path reconstruction

so total_ns >= preprocessing_ns and total_ns >= computation_ns always
hold.  The inner loops compare and assign directly instead of calling
relax(); the helper stays public for callers and tests but a function
call per edge examination is too slow for the benchmark budget.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from heapq import heappop, heappush

from .graph import Graph

inf = math.inf

BF_MODES = ("naive", "yen", "yen-random")


@dataclass(frozen=True)
class PhaseTimings:
    preprocessing_ns: int
    computation_ns: int
    total_ns: int


@dataclass
class SsspResult:
    """dist and pred are indexed by vertex - 1; pred holds 1-based ids.

    path is filled only when a target was requested and reached.
    relax_attempts counts edge examinations in the main loop.
    """

    dist: list
    pred: list
    path: list | None
    timings: PhaseTimings
    relax_attempts: int = 0


def _check_vertex(g: Graph, v: int):
    if not (1 <= v <= g.n):
        raise ValueError(f"vertex {v} out of range 1..{g.n}")


def relax(u: int, v: int, w: float, dist, pred) -> bool:
    """Relax edge (u, v) of weight w; strict improvement only."""
    nd = dist[u - 1] + w
    if nd < dist[v - 1]:
        dist[v - 1] = nd
        pred[v - 1] = u
        return True
    return False


def reconstruct_path(s: int, t: int, pred):
    """Walk pred from t back to s and return [s, ..., t].

    pred must encode a tree containing both vertices; a missing or
    cyclic chain raises ValueError because it signals an inconsistent
    caller-side state, not an unreachable vertex.
    """
    path = [t]
    v = t
    steps = 0
    while v != s:
        p = pred[v - 1]
        if p is None or steps > len(pred):
            raise ValueError(f"broken predecessor chain from {t} back to {s}")
        path.append(p)
        v = p
        steps += 1
    path.reverse()
    return path


def default_delta(g: Graph) -> float:
    """Bucket width used when no explicit delta is given: max(1, ceil(mean w))."""
    if g.m == 0:
        return 1.0
    mean = sum(e[2] for e in g.edges) / g.m
    return float(max(1, math.ceil(mean)))


def dijkstra(g: Graph, s: int, t: int | None = None) -> SsspResult:
    """Heap Dijkstra with lazy deletion.

    Stale heap entries (popped distance larger than the current dist)
    are skipped; equal entries are processed.  Ties pop the smaller
    vertex id first.  With a target the loop stops the first time t is
    popped, so only vertices settled up to that point carry final
    distances.
    """
    _check_vertex(g, s)
    if t is not None:
        _check_vertex(g, t)
    t0 = time.perf_counter_ns()
    n = g.n
    dist = [inf] * n
    pred = [None] * n
    dist[s - 1] = 0.0
    heap = [(0.0, s)]
    adj = g.adj
    attempts = 0
    t1 = time.perf_counter_ns()
    while heap:
        du, u = heappop(heap)
        if du > dist[u - 1]:
            continue
        if u == t:
            break
        out = adj[u - 1]
        attempts += len(out)
        for v, w, _ in out:
            nd = du + w
            if nd < dist[v - 1]:
                dist[v - 1] = nd
                pred[v - 1] = u
                heappush(heap, (nd, v))
    t2 = time.perf_counter_ns()
    path = None
    if t is not None and dist[t - 1] < inf:
        path = reconstruct_path(s, t, pred)
    t3 = time.perf_counter_ns()
    return SsspResult(dist, pred, path,
                      PhaseTimings(t1 - t0, t2 - t1, t3 - t0), attempts)


def bellman_ford(g: Graph, s: int, mode: str = "naive",
                 seed: int | None = None, t: int | None = None) -> SsspResult:
    """Bellman-Ford in one of three modes.

    naive       exactly n - 1 passes over the full edge list, no exit test.
    yen         edges split into a rank-increasing half swept in ascending
                vertex order and a rank-decreasing half swept descending;
                only vertices whose distance changed in the current or the
                previous full pass have their out-edges examined, and the
                loop stops after the first pass with no relaxation.
    yen-random  same sweep with vertex ranks drawn from a seeded random
                permutation (seed is required).

    t never changes what is computed, it only selects the reported path.
    """
    if mode not in BF_MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {BF_MODES}")
    if mode == "yen-random" and seed is None:
        raise ValueError("yen-random mode requires a seed")
    _check_vertex(g, s)
    if t is not None:
        _check_vertex(g, t)

    t0 = time.perf_counter_ns()
    n = g.n
    dist = [inf] * n
    pred = [None] * n
    dist[s - 1] = 0.0
    attempts = 0

    if mode == "naive":
        triples = [(u - 1, v - 1, w) for u, v, w, _ in g.edges]
        m = len(triples)
        t1 = time.perf_counter_ns()
        for _ in range(n - 1):
            attempts += m
            for ui, vi, w in triples:
                nd = dist[ui] + w
                if nd < dist[vi]:
                    dist[vi] = nd
                    pred[vi] = ui + 1
        t2 = time.perf_counter_ns()
    else:
        order = list(range(n))
        if mode == "yen-random":
            random.Random(seed).shuffle(order)
        rank = [0] * n
        for r, u0 in enumerate(order):
            rank[u0] = r
        up = [[] for _ in range(n)]    # rank-increasing edges, swept ascending
        down = [[] for _ in range(n)]  # rank-decreasing edges, swept descending
        for u, v, w, _ in g.edges:
            u0, v0 = u - 1, v - 1
            (up[u0] if rank[u0] < rank[v0] else down[u0]).append((v0, w))
        to_relax = [False] * n
        queued = [False] * n
        queued[s - 1] = True
        t1 = time.perf_counter_ns()
        # A vertex is swept while flagged in either array: queued marks a
        # distance change in the current half-pass, to_relax carries the
        # previous half-pass over.  Improvements always land on vertices
        # later in the running sweep (rank-increasing edges under an
        # ascending sweep and vice versa), so a change is consumed by the
        # same half for one edge class and by the hand-off for the other.
        while True:
            improved = False
            for u0 in order:
                if (to_relax[u0] or queued[u0]) and up[u0]:
                    du = dist[u0]
                    attempts += len(up[u0])
                    for v0, w in up[u0]:
                        if du + w < dist[v0]:
                            dist[v0] = du + w
                            pred[v0] = u0 + 1
                            queued[v0] = True
                            improved = True
            to_relax, queued = queued, [False] * n
            for idx in range(n - 1, -1, -1):
                u0 = order[idx]
                if (to_relax[u0] or queued[u0]) and down[u0]:
                    du = dist[u0]
                    attempts += len(down[u0])
                    for v0, w in down[u0]:
                        if du + w < dist[v0]:
                            dist[v0] = du + w
                            pred[v0] = u0 + 1
                            queued[v0] = True
                            improved = True
            to_relax, queued = queued, [False] * n
            if not improved:
                break
        t2 = time.perf_counter_ns()

    path = None
    if t is not None and dist[t - 1] < inf:
        path = reconstruct_path(s, t, pred)
    t3 = time.perf_counter_ns()
    return SsspResult(dist, pred, path,
                      PhaseTimings(t1 - t0, t2 - t1, t3 - t0), attempts)


def delta_stepping(g: Graph, s: int, delta: float,
                   t: int | None = None) -> SsspResult:
    """Delta-stepping with light/heavy edge classes.

    Buckets map floor(dist/delta) to a duplicate-free vertex set.  The
    smallest bucket is drained over light edges (w <= delta) until it
    stops refilling, then the heavy edges of everything drained are
    relaxed once and the bucket key is dropped.  A vertex is moved
    between buckets only on strict improvement, which is what lets
    zero-weight edges terminate.  t only selects the reported path.
    """
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    _check_vertex(g, s)
    if t is not None:
        _check_vertex(g, t)

    t0 = time.perf_counter_ns()
    n = g.n
    dist = [inf] * n
    pred = [None] * n
    light = [[] for _ in range(n)]
    heavy = [[] for _ in range(n)]
    for u0 in range(n):
        for v, w, _ in g.adj[u0]:
            (light[u0] if w <= delta else heavy[u0]).append((v - 1, w))
    dist[s - 1] = 0.0
    buckets = {0: {s - 1}}
    attempts = 0
    t1 = time.perf_counter_ns()

    def relax_requests(u0, edges):
        nonlocal attempts
        du = dist[u0]
        attempts += len(edges)
        for v0, w in edges:
            nd = du + w
            if nd < dist[v0]:
                old = dist[v0]
                if old < inf:
                    old_idx = math.floor(old / delta)
                    members = buckets.get(old_idx)
                    if members is not None:
                        members.discard(v0)
                        if not members:
                            del buckets[old_idx]
                dist[v0] = nd
                pred[v0] = u0 + 1
                buckets.setdefault(math.floor(nd / delta), set()).add(v0)

    while buckets:
        i = min(buckets)
        drained = set()
        while True:
            batch = buckets.pop(i, None)
            if not batch:
                break
            drained |= batch
            for u0 in batch:
                relax_requests(u0, light[u0])
        for u0 in drained:
            relax_requests(u0, heavy[u0])
    t2 = time.perf_counter_ns()

    path = None
    if t is not None and dist[t - 1] < inf:
        path = reconstruct_path(s, t, pred)
    t3 = time.perf_counter_ns()
    return SsspResult(dist, pred, path,
                      PhaseTimings(t1 - t0, t2 - t1, t3 - t0), attempts)
