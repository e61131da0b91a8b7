"""Cheapest paths under a delay budget.

Each edge consumes an integer delay; a query asks for the cheapest
s -> t path whose delay sum stays within the instance bound b.  Two
solvers are provided and agree on weights:

* csp_bellman_ford fills an n x (b + 1) matrix with budget semantics,
  dist[v][l] = cheapest weight over paths of delay <= l.  Columns are
  filled in ascending l so zero-delay edges propagate within a column.
* csp_dijkstra runs a label-setting search over (vertex, consumed
  delay) states.  Its matrix has exact-delay semantics, dist[v][l] =
  cheapest weight over paths of delay exactly l, and it stops at the
  first pop of the target.

The heap orders labels as (distance, delay, vertex).  Ordering by
distance first is what makes the first popped target label the
cheapest feasible one; a delay-first order would return the fastest
path instead of the cheapest (see the ordering gadget in the tests).

Both solvers require s != t.  Callers that want cheapest non-empty
closed walks route through graph.augment_source first.

Timing phases follow the sssp convention: matrix allocation is
preprocessing, the main loop is computation, path reconstruction is
only in the total.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from heapq import heappop, heappush

from .graph import Graph, ProblemInstance
from .sssp import PhaseTimings

inf = math.inf


@dataclass
class CspMatrix:
    """Budget-semantics DP table, dist[v - 1][l] for l in 0..b."""

    dist: list
    pred: list


@dataclass
class CspLabels:
    """Exact-delay table discovered by the label search."""

    dist: list
    pred: list


@dataclass
class CspResult:
    weight: float
    delay: int | None
    path: list | None
    timings: PhaseTimings


def _check_endpoints(g: Graph, s: int, t: int):
    for v in (s, t):
        if not (1 <= v <= g.n):
            raise ValueError(f"vertex {v} out of range 1..{g.n}")
    if s == t:
        raise ValueError(
            "source equals target; apply augment_source and query the split vertex"
        )


def csp_reconstruct(pred, s: int, t: int, level: int):
    """Follow (vertex, level) pairs from (t, level) back to s.

    Works on both matrix kinds since each stores (vertex, level)
    predecessor pairs.  A break in the chain raises ValueError.
    """
    path = [t]
    v, l = t, level
    cap = len(pred) * len(pred[0]) + 1 if pred and pred[0] else 1
    steps = 0
    while True:
        entry = pred[v - 1][l]
        if entry is None:
            if v == s:
                break
            raise ValueError(f"broken predecessor chain at vertex {v}, level {l}")
        v, l = entry
        path.append(v)
        steps += 1
        if steps > cap:
            raise ValueError("predecessor chain does not terminate")
    path.reverse()
    return path


def _alloc_budget(g: Graph, b: int, s: int):
    n = g.n
    dist = [[inf] * (b + 1) for _ in range(n)]
    pred = [[None] * (b + 1) for _ in range(n)]
    dist[s - 1] = [0.0] * (b + 1)
    quads = [(u - 1, v - 1, w, d) for u, v, w, d in g.edges]
    return dist, pred, quads


def _fill_budget(dist, pred, quads, b: int, n: int):
    # Ascending columns; within one column the recursion is re-applied
    # until stable (at most n - 1 times, the re-applications only move
    # weight along zero-delay edges).
    for l in range(b + 1):
        usable = [(u0, v0, w, l - d) for u0, v0, w, d in quads if d <= l]
        for _ in range(n - 1):
            changed = False
            for u0, v0, w, lp in usable:
                cand = dist[u0][lp] + w
                if cand < dist[v0][l]:
                    dist[v0][l] = cand
                    pred[v0][l] = (u0 + 1, lp)
                    changed = True
            if not changed:
                break


def budget_matrix(inst: ProblemInstance, s: int) -> CspMatrix:
    """The full DP table for source s, mainly for inspection and tests."""
    g = inst.graph
    if not (1 <= s <= g.n):
        raise ValueError(f"vertex {s} out of range 1..{g.n}")
    dist, pred, quads = _alloc_budget(g, inst.bound, s)
    _fill_budget(dist, pred, quads, inst.bound, g.n)
    return CspMatrix(dist, pred)


def csp_bellman_ford(inst: ProblemInstance, s: int, t: int) -> CspResult:
    """Budget DP solver.

    Returns the cheapest feasible weight, the smallest delay achieving
    it, and one such path; (inf, None, None) when nothing feasible.
    """
    g = inst.graph
    b = inst.bound
    _check_endpoints(g, s, t)
    t0 = time.perf_counter_ns()
    dist, pred, quads = _alloc_budget(g, b, s)
    t1 = time.perf_counter_ns()
    _fill_budget(dist, pred, quads, b, g.n)
    t2 = time.perf_counter_ns()
    weight = dist[t - 1][b]
    if weight == inf:
        delay, path = None, None
    else:
        row = dist[t - 1]
        delay = next(l for l in range(b + 1) if row[l] == weight)
        path = csp_reconstruct(pred, s, t, delay)
    t3 = time.perf_counter_ns()
    return CspResult(weight, delay, path, PhaseTimings(t1 - t0, t2 - t1, t3 - t0))


def _alloc_labels(g: Graph, b: int, s: int):
    n = g.n
    dist = [[inf] * (b + 1) for _ in range(n)]
    pred = [[None] * (b + 1) for _ in range(n)]
    dist[s - 1][0] = 0.0
    return dist, pred


def _run_labels(dist, pred, g: Graph, b: int, s: int, t: int | None):
    """Label-setting loop; returns the popped (weight, delay) of t or None.

    With t=None the search runs to exhaustion, filling the exact-delay
    table completely.
    """
    adj = g.adj
    heap = [(0.0, 0, s)]
    while heap:
        dw, l, u = heappop(heap)
        if u == t:
            return dw, l
        if dw > dist[u - 1][l]:
            continue
        for v, w, d in adj[u - 1]:
            nl = l + d
            if nl > b:
                continue
            nw = dw + w
            if nw < dist[v - 1][nl]:
                dist[v - 1][nl] = nw
                pred[v - 1][nl] = (u, l)
                heappush(heap, (nw, nl, v))
    return None


def exact_delay_labels(inst: ProblemInstance, s: int) -> CspLabels:
    """Exhaustive label search from s, mainly for inspection and tests."""
    g = inst.graph
    if not (1 <= s <= g.n):
        raise ValueError(f"vertex {s} out of range 1..{g.n}")
    dist, pred = _alloc_labels(g, inst.bound, s)
    _run_labels(dist, pred, g, inst.bound, s, None)
    return CspLabels(dist, pred)


def csp_dijkstra(inst: ProblemInstance, s: int, t: int) -> CspResult:
    """Label-setting solver; stops at the first pop of the target.

    Labels pop cheapest-first, ties by smaller delay then smaller
    vertex id, so the returned delay is the smallest one among the
    cheapest feasible paths, matching csp_bellman_ford.
    """
    g = inst.graph
    b = inst.bound
    _check_endpoints(g, s, t)
    t0 = time.perf_counter_ns()
    dist, pred = _alloc_labels(g, b, s)
    t1 = time.perf_counter_ns()
    found = _run_labels(dist, pred, g, b, s, t)
    t2 = time.perf_counter_ns()
    if found is None:
        weight, delay, path = inf, None, None
    else:
        weight, delay = found
        path = csp_reconstruct(pred, s, t, delay)
    t3 = time.perf_counter_ns()
    return CspResult(weight, delay, path, PhaseTimings(t1 - t0, t2 - t1, t3 - t0))
