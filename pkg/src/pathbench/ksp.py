"""Best-first enumeration of the k cheapest walks from a source.

Walks, not simple paths: revisiting vertices is allowed, so a graph
with a cycle has infinitely many candidates and the enumeration is
driven purely by a frontier of prefixes ordered by weight.  Each pop
extends one step along every out-edge; a popped prefix with at least
one edge is emitted.  Emitted weights are therefore non-decreasing,
the vertex sequences are pairwise distinct, and without a target
filter the i-th emitted walk has at most i <= k edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from heapq import heappop, heappush

from .graph import Graph


@dataclass(frozen=True)
class WeightedPath:
    weight: float
    vertices: tuple

    def edge_count(self) -> int:
        return len(self.vertices) - 1


def _can_reach(g: Graph, t: int):
    """Vertices with some walk to t, via reverse BFS."""
    radj = [[] for _ in range(g.n)]
    for u, v, _, _ in g.edges:
        radj[v - 1].append(u)
    seen = {t}
    queue = deque([t])
    while queue:
        v = queue.popleft()
        for u in radj[v - 1]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def k_shortest_paths(g: Graph, s: int, k: int, target: int | None = None):
    """The k cheapest non-empty walks leaving s, cheapest first.

    Ties pop the lexicographically smaller vertex sequence first.  With
    a target, only walks ending there are emitted (and counted), while
    every popped prefix is still extended; prefixes that cannot reach
    the target any more are dropped, which changes nothing about the
    output but keeps the frontier finite when the target sits off the
    cycles.  Fewer than k walks may exist, in which case the list is
    short.  k = 0 is a usage error, not an empty result.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not (1 <= s <= g.n):
        raise ValueError(f"vertex {s} out of range 1..{g.n}")
    if target is not None and not (1 <= target <= g.n):
        raise ValueError(f"vertex {target} out of range 1..{g.n}")

    allowed = _can_reach(g, target) if target is not None else None
    emitted = []
    heap = [(0.0, (s,))]
    while heap and len(emitted) < k:
        weight, verts = heappop(heap)
        if len(verts) > 1 and (target is None or verts[-1] == target):
            emitted.append(WeightedPath(weight, verts))
        for v, w, _ in g.out_edges(verts[-1]):
            if allowed is None or v in allowed:
                heappush(heap, (weight + w, verts + (v,)))
    return emitted
