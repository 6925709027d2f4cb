"""Figure rendering for benchmark output.

Companion to the CSV: the same records, drawn.  All functions write files
and return their paths; nothing is shown interactively.
"""

from __future__ import annotations

import math
from collections import defaultdict
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import BenchRecord


def save_comparison_curves(records: Sequence[BenchRecord], path: Path) -> Path:
    """Average comparisons per point against n, one line per algorithm."""
    series: dict[tuple[str, str, int], list[tuple[int, float]]] = defaultdict(list)
    for r in records:
        series[(r.algorithm, r.distribution, r.d)].append(
            (r.n, r.avg_scalar_comparisons_per_point)
        )
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for (algo, dist, d), pts in sorted(series.items()):
        pts.sort()
        ax.plot(
            [n for n, _ in pts],
            [v for _, v in pts],
            marker="o",
            label=f"{algo} ({dist}, d={d})",
        )
    ax.set_xscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("avg scalar comparisons per point")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_dominated_ratio_curves(records: Sequence[BenchRecord], path: Path) -> Path:
    """Total tree-search calls over n*log2(n) against log2(n).

    Rows whose algorithm never touches the tree (all-zero call counts) are
    left out.
    """
    series: dict[tuple[str, str, int], list[tuple[float, float]]] = defaultdict(list)
    for r in records:
        if r.avg_dominated_calls == 0 or r.n < 2:
            continue
        ratio = r.avg_dominated_calls / (r.n * math.log2(r.n))
        series[(r.algorithm, r.distribution, r.d)].append((math.log2(r.n), ratio))
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for (algo, dist, d), pts in sorted(series.items()):
        pts.sort()
        ax.plot(
            [x for x, _ in pts],
            [y for _, y in pts],
            marker="s",
            label=f"{algo} ({dist}, d={d})",
        )
    ax.set_xlabel("log2 n")
    ax.set_ylabel("tree-search calls / (n log2 n)")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_bench_figures(records: Sequence[BenchRecord], out_dir: Path) -> list[Path]:
    """Render the standard figure set into a directory; returns the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = [
        save_comparison_curves(records, out_dir / "comparisons_per_point.png"),
        save_dominated_ratio_curves(records, out_dir / "tree_call_ratio.png"),
    ]
    return paths
