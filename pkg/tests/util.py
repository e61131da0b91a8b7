"""Seeded generators shared by the test modules."""

import math

from pathbench import Graph, ProblemInstance

inf = math.inf


def random_graph(rng, n, m, max_weight=20, max_delay=0):
    """Random digraph, no self-loops or duplicates, integer-valued weights.

    The (u, v) pairs are drawn without replacement by sampling slot
    indices, so m is honoured exactly (capped at n * (n - 1)).
    """
    m = min(m, n * (n - 1))
    slots = rng.sample(range(n * (n - 1)), m) if n > 1 else []
    edges = []
    for idx in slots:
        u0, off = divmod(idx, n - 1)
        v0 = off if off < u0 else off + 1
        edges.append((u0 + 1, v0 + 1, float(rng.randint(0, max_weight)),
                      rng.randint(0, max_delay)))
    return Graph(n, edges)


def random_instance(rng, max_n=10, max_delay=3, max_bound=10):
    n = rng.randint(2, max_n)
    m = rng.randint(1, min(3 * n, n * (n - 1)))
    g = random_graph(rng, n, m, max_delay=max_delay)
    return ProblemInstance(g, rng.randint(0, max_bound))


def delta_choices(g):
    """The bucket widths exercised by the agreement checks."""
    if g.m == 0:
        return (1.0,)
    weights = [e[2] for e in g.edges]
    mean = sum(weights) / len(weights)
    return (1.0, mean if mean > 0 else 1.0, max(weights) + 1.0)
