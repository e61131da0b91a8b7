"""Command line front end.

Four public subcommands: sssp, csp, ksp and bench.  The first three
answer one query and print a stable line-oriented report (weight,
path, delay where it applies, then the phase timings); bench writes
the timing CSV.  Asking for source == target is answered on the
augmented graph, where the split vertex stands in for arriving back
at the source, so the reported path closes the walk.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .bench import BenchConfig, run_benchmark
from .csp import csp_bellman_ford, csp_dijkstra
from .graph import GraphFormatError, ProblemInstance, augment_source, parse_graph
from .ksp import k_shortest_paths
from .oracle import oracle_csp, oracle_ksp, oracle_sssp
from .sssp import bellman_ford, default_delta, delta_stepping, dijkstra

inf = float("inf")


def _fmt(x: float) -> str:
    return f"{x:g}"


def _load(path):
    return parse_graph(Path(path).read_text())


def _print_timings(tm):
    print(f"preprocessing_ns {tm.preprocessing_ns}")
    print(f"computation_ns {tm.computation_ns}")
    print(f"total_ns {tm.total_ns}")


def _cmd_sssp(args) -> int:
    inst = _load(args.graph)
    g = inst.graph
    s, t = args.source, args.target
    closed = t is not None and t == s
    if closed:
        g, t = augment_source(g, s)

    if args.algo == "dijkstra":
        res = dijkstra(g, s, t)
    elif args.algo in ("bf", "bf-yen"):
        mode = "naive" if args.algo == "bf" else "yen"
        res = bellman_ford(g, s, mode=mode, t=t)
    elif args.algo == "bf-yen-random":
        res = bellman_ford(g, s, mode="yen-random", seed=args.seed, t=t)
    else:
        width = args.delta if args.delta is not None else default_delta(g)
        res = delta_stepping(g, s, width, t=t)

    if t is None:
        print("dist " + " ".join(_fmt(d) for d in res.dist))
    elif res.dist[t - 1] == inf:
        print("unreachable")
    else:
        print(f"weight {_fmt(res.dist[t - 1])}")
        path = list(res.path)
        if closed:
            path[-1] = s  # split vertex stands in for the source
        print("path " + " ".join(str(v) for v in path))
    _print_timings(res.timings)
    return 0


def _cmd_csp(args) -> int:
    inst = _load(args.graph)
    g = inst.graph
    s, t = args.source, args.target
    closed = t == s
    if closed:
        g, t = augment_source(g, s)
    bound = args.bound if args.bound is not None else inst.bound
    work = ProblemInstance(g, bound)

    solver = csp_dijkstra if args.algo == "dijkstra" else csp_bellman_ford
    res = solver(work, s, t)
    if res.weight == inf:
        print("unreachable")
    else:
        print(f"weight {_fmt(res.weight)}")
        print(f"delay {res.delay}")
        path = list(res.path)
        if closed:
            path[-1] = s
        print("path " + " ".join(str(v) for v in path))
    _print_timings(res.timings)
    return 0


def _cmd_ksp(args) -> int:
    inst = _load(args.graph)
    t0 = time.perf_counter_ns()
    paths = k_shortest_paths(inst.graph, args.source, args.k, args.target)
    elapsed = time.perf_counter_ns() - t0
    for p in paths:
        print(f"weight {_fmt(p.weight)} path " + " ".join(str(v) for v in p.vertices))
    if len(paths) < args.k:
        noun = "path exists" if len(paths) == 1 else "paths exist"
        print(f"warning: only {len(paths)} {noun}, {args.k} requested",
              file=sys.stderr)
    print(f"total_ns {elapsed}")
    return 0


def _cmd_bench(args) -> int:
    algorithms = tuple(a for a in args.algos.split(",") if a) if args.algos else None
    cfg = BenchConfig(graph=args.graph, task=args.task, out=args.out,
                      sample_size=args.sample, runs=args.runs, seed=args.seed,
                      algorithms=algorithms, delta=args.delta, bound=args.bound)
    records = run_benchmark(cfg)
    names = sorted({r.algorithm for r in records})
    print(f"wrote {len(records)} records for {len(names)} algorithms to {args.out}")
    return 0


def _cmd_oracle(args) -> int:
    # Debugging helper: brute-force answers on toy graphs.
    inst = _load(args.graph)
    if args.k is not None:
        weights = oracle_ksp(inst.graph, args.source, args.k)
        print("weights " + " ".join(_fmt(w) for w in weights))
    elif args.target is not None:
        bound = args.bound if args.bound is not None else inst.bound
        weight, delay = oracle_csp(ProblemInstance(inst.graph, bound),
                                   args.source, args.target)
        if weight == inf:
            print("unreachable")
        else:
            print(f"weight {_fmt(weight)}")
            print(f"delay {delay}")
    else:
        dist = oracle_sssp(inst.graph, args.source)
        print("dist " + " ".join(_fmt(d) for d in dist))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathbench",
        description="Shortest paths, delay-constrained paths, k cheapest walks, "
                    "and a timing benchmark over a simple edge-list format.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="{sssp,csp,ksp,bench}")

    p = sub.add_parser("sssp", help="single-source shortest paths")
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--source", required=True, type=int)
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--algo", required=True,
                   choices=["dijkstra", "bf", "bf-yen", "bf-yen-random", "delta"])
    p.add_argument("--seed", type=int, default=0,
                   help="permutation seed for bf-yen-random (default 0)")
    p.add_argument("--delta", type=float, default=None,
                   help="bucket width for delta (default max(1, ceil(mean weight)))")
    p.set_defaults(func=_cmd_sssp)

    p = sub.add_parser("csp", help="cheapest path under a delay bound")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True, type=int)
    p.add_argument("--target", required=True, type=int)
    p.add_argument("--bound", type=int, default=None,
                   help="delay bound (default: bound from the graph file)")
    p.add_argument("--algo", required=True, choices=["dijkstra", "bellman-ford"])
    p.set_defaults(func=_cmd_csp)

    p = sub.add_parser("ksp", help="k cheapest walks from a source")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--target", type=int, default=None)
    p.set_defaults(func=_cmd_ksp)

    p = sub.add_parser("bench", help="run the timing protocol, write a CSV")
    p.add_argument("--graph", required=True)
    p.add_argument("--task", required=True, type=int, choices=[1, 2],
                   help="1 = shortest paths, 2 = delay-constrained")
    p.add_argument("--sample", type=int, default=30)
    p.add_argument("--runs", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--algos", default=None,
                   help="comma-separated algorithm subset (default: task set)")
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("oracle")  # undocumented, brute force on toy inputs
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True, type=int)
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
