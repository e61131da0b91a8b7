#!/usr/bin/env python3
"""Render benchmark CSVs as line plots or per-algorithm heatmaps.

Consumes only the CSV written by `pathbench bench`:

  algorithm,source,target,run,preprocessing_ns,computation_ns,total_ns,path_weight,path_delay

Two kinds of figure:

* line: mean of the chosen metric against path weight, one curve per
  algorithm.  Rows with infinite weight (unreachable pairs) are left
  out.  Weights are grouped exactly, no binning.
* heatmap: one source x target matrix per algorithm, cell = mean over
  runs converted to microseconds.  The diagonal is never timed and is
  masked grey.  Rows and columns follow the order vertices first
  appear in the file, i.e. the benchmark's sampling order, and each
  map gets its own colour scale.

Everything plotted is a pure function of the CSV contents.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from statistics import fmean

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

METRICS = ("preprocessing", "computation", "total")
KINDS = ("line", "heatmap")

REQUIRED_COLUMNS = ("algorithm", "source", "target", "run",
                    "preprocessing_ns", "computation_ns", "total_ns",
                    "path_weight", "path_delay")


class PlotError(ValueError):
    """Bad input CSV or nothing to draw."""


@dataclass
class PlotJob:
    csv_path: str
    metric: str      # preprocessing | computation | total
    kind: str        # line | heatmap
    out_dir: str


def read_records(path):
    """Parse the benchmark CSV into dicts with typed fields.

    Raises PlotError for a missing header, missing columns, an empty
    body, or a body with no finite-weight row (nothing the line plot
    could show; the same gate keeps degenerate heatmap inputs out).
    """
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise PlotError(f"{path}: empty file, expected a benchmark CSV")
        missing = [c for c in REQUIRED_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise PlotError(f"{path}: missing columns: {', '.join(missing)}")
        records = []
        for row in reader:
            records.append({
                "algorithm": row["algorithm"],
                "source": int(row["source"]),
                "target": int(row["target"]),
                "preprocessing_ns": int(row["preprocessing_ns"]),
                "computation_ns": int(row["computation_ns"]),
                "total_ns": int(row["total_ns"]),
                "path_weight": float(row["path_weight"]),
            })
    if not records:
        raise PlotError(f"{path}: no data rows")
    if all(math.isinf(r["path_weight"]) for r in records):
        raise PlotError(f"{path}: nothing to plot, every path weight is inf")
    return records


def algorithm_names(records):
    """Algorithms in first-appearance order, names taken verbatim."""
    return list(dict.fromkeys(r["algorithm"] for r in records))


def vertex_order(records):
    """Sampled vertices in the order the benchmark introduced them."""
    order = {}
    for r in records:
        order.setdefault(r["source"])
        order.setdefault(r["target"])
    return list(order)


def line_series(records, metric):
    """{algorithm: [(weight, mean ns), ...]} with ascending weights."""
    col = metric + "_ns"
    grouped = {}
    for r in records:
        if math.isinf(r["path_weight"]):
            continue
        grouped.setdefault(r["algorithm"], {}) \
               .setdefault(r["path_weight"], []).append(r[col])
    return {
        algo: sorted((w, fmean(vals)) for w, vals in by_weight.items())
        for algo, by_weight in grouped.items()
    }


def heatmap_matrix(records, metric, algorithm, order):
    """Masked source x target matrix of mean microseconds.

    Cells with no record (the diagonal, or pairs outside the sample)
    come back masked.
    """
    col = metric + "_ns"
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    sums = np.zeros((n, n))
    counts = np.zeros((n, n))
    for r in records:
        if r["algorithm"] != algorithm:
            continue
        i, j = index[r["source"]], index[r["target"]]
        sums[i, j] += r[col]
        counts[i, j] += 1
    with np.errstate(invalid="ignore"):
        cells = sums / counts / 1000.0   # ns -> us
    return np.ma.masked_array(cells, counts == 0)


def render_line(job: PlotJob):
    """Write one line plot; returns the written path."""
    records = read_records(job.csv_path)
    series = line_series(records, job.metric)
    out = Path(job.out_dir) / f"{job.metric}_line.png"
    out.parent.mkdir(parents=True, exist_ok=True)

    fig, ax = plt.subplots(figsize=(8, 5))
    for algo in algorithm_names(records):
        if algo not in series:
            continue
        xs = [w for w, _ in series[algo]]
        ys = [m for _, m in series[algo]]
        ax.plot(xs, ys, marker="o", label=algo)
    ax.set_xlabel("path weight")
    ax.set_ylabel(f"mean {job.metric} time (ns)")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(out)
    plt.close(fig)
    return out


def render_heatmaps(job: PlotJob):
    """Write one heatmap per algorithm; returns the written paths."""
    records = read_records(job.csv_path)
    order = vertex_order(records)
    out_dir = Path(job.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    written = []
    for algo in algorithm_names(records):
        matrix = heatmap_matrix(records, job.metric, algo, order)
        fig, ax = plt.subplots(figsize=(7, 6))
        cmap = plt.get_cmap("viridis").copy()
        cmap.set_bad("0.75")   # untimed cells, including the diagonal
        image = ax.imshow(matrix, cmap=cmap)
        fig.colorbar(image, ax=ax, label=f"mean {job.metric} time (us)")
        ticks = range(len(order))
        ax.set_xticks(ticks, [str(v) for v in order], fontsize=6, rotation=90)
        ax.set_yticks(ticks, [str(v) for v in order], fontsize=6)
        ax.set_xlabel("target")
        ax.set_ylabel("source")
        ax.set_title(algo)
        fig.tight_layout()
        out = out_dir / f"{job.metric}_heatmap_{algo}.png"
        fig.savefig(out)
        plt.close(fig)
        written.append(out)
    return written


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="Plot a pathbench benchmark CSV.")
    parser.add_argument("--csv", required=True, help="benchmark CSV path")
    parser.add_argument("--metric", required=True, choices=METRICS)
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument("--out-dir", required=True)
    args = parser.parse_args(argv)

    job = PlotJob(args.csv, args.metric, args.kind, args.out_dir)
    try:
        if job.kind == "line":
            paths = [render_line(job)]
        else:
            paths = render_heatmaps(job)
    except (PlotError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for p in paths:
        print(f"wrote {p}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
