"""Shortest-path toolbox: plain, delay-constrained, and k cheapest walks."""

from .bench import (BenchConfig, TimingRecord, run_benchmark, sample_vertices,
                    write_csv)
from .csp import (CspLabels, CspMatrix, CspResult, budget_matrix,
                  csp_bellman_ford, csp_dijkstra, csp_reconstruct,
                  exact_delay_labels)
from .graph import (Graph, GraphFormatError, ProblemInstance, augment_source,
                    parse_graph, serialize_instance)
from .ksp import WeightedPath, k_shortest_paths
from .oracle import oracle_csp, oracle_ksp, oracle_sssp
from .sssp import (PhaseTimings, SsspResult, bellman_ford, default_delta,
                   delta_stepping, dijkstra, reconstruct_path, relax)

__version__ = "0.1.0"

__all__ = [
    "BenchConfig", "TimingRecord", "run_benchmark", "sample_vertices", "write_csv",
    "CspLabels", "CspMatrix", "CspResult", "budget_matrix",
    "csp_bellman_ford", "csp_dijkstra", "csp_reconstruct", "exact_delay_labels",
    "Graph", "GraphFormatError", "ProblemInstance", "augment_source",
    "parse_graph", "serialize_instance",
    "WeightedPath", "k_shortest_paths",
    "oracle_csp", "oracle_ksp", "oracle_sssp",
    "PhaseTimings", "SsspResult", "bellman_ford", "default_delta",
    "delta_stepping", "dijkstra", "reconstruct_path", "relax",
]
