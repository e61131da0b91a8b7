"""Directed weighted graphs with per-edge integer delays.

Vertices are numbered 1..n.  Every edge carries a non-negative float
weight and a non-negative integer delay; the delay only matters for the
constrained problems, plain shortest-path code ignores it.  Public
arrays elsewhere in the package (dist, pred) are indexed by vertex - 1.
"""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Raised when a graph file or edge set violates the format rules."""


class Graph:
    """Immutable adjacency-list digraph.

    adj[u - 1] is a tuple of (v, weight, delay) out-edges of u in
    insertion (file) order.  edges is the flat (u, v, weight, delay)
    list in the same order.  Self-loops and duplicate (u, v) pairs are
    rejected at construction time.
    """

    __slots__ = ("n", "m", "adj", "edges")

    def __init__(self, n, edge_list):
        if n < 0:
            raise GraphFormatError(f"vertex count must be >= 0, got {n}")
        seen = set()
        per_vertex = [[] for _ in range(n)]
        flat = []
        for u, v, w, d in edge_list:
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise GraphFormatError(f"self-loop on vertex {u}")
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            w = float(w)
            d = int(d)
            if w < 0:
                raise GraphFormatError(f"negative weight on edge ({u}, {v})")
            if d < 0:
                raise GraphFormatError(f"negative delay on edge ({u}, {v})")
            seen.add((u, v))
            per_vertex[u - 1].append((v, w, d))
            flat.append((u, v, w, d))
        self.n = n
        self.m = len(flat)
        self.adj = tuple(tuple(out) for out in per_vertex)
        self.edges = tuple(flat)

    def out_edges(self, u: int):
        """Out-edges of u as ((v, weight, delay), ...)."""
        return self.adj[u - 1]

    def in_neighbors(self, v: int):
        """Vertices u with an edge (u, v), derived by scanning all edges."""
        return tuple(u for u, head, _, _ in self.edges if head == v)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class ProblemInstance:
    """A graph together with the delay bound used by constrained queries."""

    __slots__ = ("graph", "bound")

    def __init__(self, graph: Graph, bound: int = 0):
        bound = int(bound)
        if bound < 0:
            raise GraphFormatError(f"delay bound must be >= 0, got {bound}")
        self.graph = graph
        self.bound = bound

    def __eq__(self, other):
        if not isinstance(other, ProblemInstance):
            return NotImplemented
        return self.graph == other.graph and self.bound == other.bound

    def __repr__(self):
        return f"ProblemInstance(graph={self.graph!r}, bound={self.bound})"


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(
            f"line {lineno}: non-numeric {what} {token!r}"
        ) from None


def _parse_float(token: str, lineno: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise GraphFormatError(
            f"line {lineno}: non-numeric {what} {token!r}"
        ) from None
    if value != value:  # NaN
        raise GraphFormatError(f"line {lineno}: {what} may not be NaN")
    return value


def parse_graph(text: str) -> ProblemInstance:
    """Parse the plain-text graph format.

    First content line is ``n m b`` (b optional, defaults to 0), followed
    by exactly m lines ``u v w d`` (d optional, defaults to 0).  Blank
    lines and lines starting with ``#`` are ignored.  Vertices are
    1-indexed.  Errors mention the offending physical line number.
    """
    header = None
    header_line = 0
    edges = []
    edge_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line.split()
            header_line = lineno
        else:
            edges.append(line.split())
            edge_lines.append(lineno)

    if header is None:
        raise GraphFormatError("line 1: missing header")
    if len(header) not in (2, 3):
        raise GraphFormatError(
            f"line {header_line}: malformed header, expected 'n m' or 'n m b'"
        )
    n = _parse_int(header[0], header_line, "vertex count")
    m = _parse_int(header[1], header_line, "edge count")
    b = _parse_int(header[2], header_line, "delay bound") if len(header) == 3 else 0
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {header_line}: malformed header, counts must be >= 0")
    if b < 0:
        raise GraphFormatError(f"line {header_line}: negative delay bound {b}")
    if len(edges) != m:
        raise GraphFormatError(
            f"header declares {m} edges but file has {len(edges)} edge lines"
        )

    seen = set()
    parsed = []
    for tokens, lineno in zip(edges, edge_lines):
        if len(tokens) not in (3, 4):
            raise GraphFormatError(
                f"line {lineno}: expected 'u v w' or 'u v w d', got {len(tokens)} fields"
            )
        u = _parse_int(tokens[0], lineno, "vertex id")
        v = _parse_int(tokens[1], lineno, "vertex id")
        w = _parse_float(tokens[2], lineno, "weight")
        d = _parse_int(tokens[3], lineno, "delay") if len(tokens) == 4 else 0
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 1..{n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop on vertex {u}")
        if w < 0:
            raise GraphFormatError(f"line {lineno}: negative weight {tokens[2]}")
        if d < 0:
            raise GraphFormatError(f"line {lineno}: negative delay {tokens[3]}")
        if (u, v) in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        parsed.append((u, v, w, d))

    return ProblemInstance(Graph(n, parsed), b)


def serialize_instance(inst: ProblemInstance) -> str:
    """Inverse of parse_graph; re-parsing the output yields an equal instance."""
    g = inst.graph
    lines = [f"{g.n} {g.m} {inst.bound}"]
    for u, v, w, d in g.edges:
        lines.append(f"{u} {v} {w!r} {d}")
    return "\n".join(lines) + "\n"


def augment_source(g: Graph, s: int):
    """Split s into (s, s') so closed walks through s become plain paths.

    Returns (g', s') where s' = n + 1 collects every edge that pointed at
    s; all other edges, weights and delays are untouched.  A shortest
    s -> s' path in g' is a cheapest non-empty closed walk through s in g.
    """
    if not (1 <= s <= g.n):
        raise ValueError(f"vertex {s} out of range 1..{g.n}")
    s_prime = g.n + 1
    moved = [(u, s_prime if v == s else v, w, d) for u, v, w, d in g.edges]
    return Graph(g.n + 1, moved), s_prime
