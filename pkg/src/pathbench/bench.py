"""Timing protocol: sampled vertex pairs, repeated runs, CSV output.

A benchmark samples a set of distinct vertices, then times every
ordered pair (source != target) for a fixed number of runs per pair
and per algorithm.  Algorithms run strictly one after another, never
interleaved, so their timings do not disturb each other.  Task 1 is
plain shortest paths, task 2 the delay-constrained variant.

The CSV schema is fixed:

  algorithm,source,target,run,preprocessing_ns,computation_ns,total_ns,path_weight,path_delay

Timings are integers (nanoseconds).  An unreachable pair still gets
timed and recorded, with the literal weight ``inf``.  path_delay is
empty outside task 2.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from pathlib import Path

from .csp import csp_bellman_ford, csp_dijkstra
from .graph import ProblemInstance, parse_graph
from .sssp import bellman_ford, default_delta, delta_stepping, dijkstra

CSV_COLUMNS = ("algorithm", "source", "target", "run",
               "preprocessing_ns", "computation_ns", "total_ns",
               "path_weight", "path_delay")

TASK1_ALGORITHMS = ("dijkstra", "bf", "bf-yen", "bf-yen-random", "delta")
TASK2_ALGORITHMS = ("csp-dijkstra", "csp-bellman-ford")

# The four variants compared by default on task 1; bf-yen-random is
# opt-in via the algorithms field.
TASK1_DEFAULT = ("dijkstra", "bf", "bf-yen", "delta")
TASK2_DEFAULT = TASK2_ALGORITHMS


@dataclass
class BenchConfig:
    graph: str
    task: int
    out: str
    sample_size: int = 30
    runs: int = 50
    seed: int = 0
    algorithms: tuple | None = None   # None picks the task default
    delta: float | None = None        # None picks default_delta(g)
    bound: int | None = None          # None keeps the file bound


@dataclass(frozen=True)
class TimingRecord:
    algorithm: str
    source: int
    target: int
    run: int
    preprocessing_ns: int
    computation_ns: int
    total_ns: int
    path_weight: float
    path_delay: int | None = None


def sample_vertices(n: int, count: int, seed: int):
    """count distinct vertices drawn uniformly without replacement."""
    if count < 0:
        raise ValueError(f"sample size must be >= 0, got {count}")
    if count > n:
        raise ValueError(f"cannot sample {count} distinct vertices from {n}")
    return random.Random(seed).sample(range(1, n + 1), count)


def _task1_runner(name, g, cfg):
    if name == "dijkstra":
        return lambda s, t: dijkstra(g, s, t)
    if name == "bf":
        return lambda s, t: bellman_ford(g, s)
    if name == "bf-yen":
        return lambda s, t: bellman_ford(g, s, mode="yen")
    if name == "bf-yen-random":
        return lambda s, t: bellman_ford(g, s, mode="yen-random", seed=cfg.seed)
    width = cfg.delta if cfg.delta is not None else default_delta(g)
    return lambda s, t: delta_stepping(g, s, width)


def run_benchmark(cfg: BenchConfig):
    """Execute the protocol and write cfg.out; returns the records.

    Row count is exactly len(sample) * (len(sample) - 1) * runs per
    algorithm, in (algorithm, source, target, run) loop order.
    """
    if cfg.task not in (1, 2):
        raise ValueError(f"task must be 1 or 2, got {cfg.task}")
    if cfg.runs < 1:
        raise ValueError(f"runs must be >= 1, got {cfg.runs}")
    inst = parse_graph(Path(cfg.graph).read_text())
    g = inst.graph
    known = TASK1_ALGORITHMS if cfg.task == 1 else TASK2_ALGORITHMS
    names = tuple(cfg.algorithms) if cfg.algorithms else (
        TASK1_DEFAULT if cfg.task == 1 else TASK2_DEFAULT)
    for name in names:
        if name not in known:
            raise ValueError(f"unknown task {cfg.task} algorithm {name!r}")

    vertices = sample_vertices(g.n, cfg.sample_size, cfg.seed)
    records = []
    if cfg.task == 1:
        for name in names:
            runner = _task1_runner(name, g, cfg)
            for s in vertices:
                for t in vertices:
                    if s == t:
                        continue
                    for run in range(cfg.runs):
                        res = runner(s, t)
                        tm = res.timings
                        records.append(TimingRecord(
                            name, s, t, run,
                            tm.preprocessing_ns, tm.computation_ns, tm.total_ns,
                            res.dist[t - 1]))
    else:
        bound = cfg.bound if cfg.bound is not None else inst.bound
        work = ProblemInstance(g, bound)
        for name in names:
            solver = csp_dijkstra if name == "csp-dijkstra" else csp_bellman_ford
            for s in vertices:
                for t in vertices:
                    if s == t:
                        continue
                    for run in range(cfg.runs):
                        res = solver(work, s, t)
                        tm = res.timings
                        records.append(TimingRecord(
                            name, s, t, run,
                            tm.preprocessing_ns, tm.computation_ns, tm.total_ns,
                            res.weight, res.delay))

    write_csv(records, cfg.out)
    return records


def write_csv(records, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow((
                r.algorithm, r.source, r.target, r.run,
                r.preprocessing_ns, r.computation_ns, r.total_ns,
                repr(r.path_weight),
                "" if r.path_delay is None else r.path_delay,
            ))
