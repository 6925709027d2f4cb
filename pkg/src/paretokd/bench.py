"""Seeded benchmark harness: sample, run, average, emit CSV rows.

Every trial draws one sample and feeds the identical point list to every
requested algorithm, so per-trial comparisons are paired.  The generator is
PCG64 seeded from (seed, trial_index); a fixed spec and seed reproduces the
CSV byte for byte.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, TextIO

import numpy as np

from .algorithms import (
    MaximaConfig,
    _two_phase,
    list_maxima,
    online_maxima,
)
from .points import CostCounter, Point, naive_maxima

DISTRIBUTION_KINDS = ("hypercube", "simplex-solid", "simplex-surface")


@dataclass(frozen=True)
class Distribution:
    """A sampling model: which shape, and how many coordinates."""

    kind: str
    dim: int

    def __post_init__(self) -> None:
        if self.kind not in DISTRIBUTION_KINDS:
            raise ValueError(
                f"unknown distribution {self.kind!r}, expected one of {DISTRIBUTION_KINDS}"
            )
        if self.dim < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dim}")


def generate(dist: Distribution, n: int, seed: int, trial: int = 0) -> list[Point]:
    """Draw n indexed points; (seed, trial) fully determines the sample.

    The solid simplex uses d+1 unit exponentials normalized by their total
    (the last coordinate dropped), the surface d exponentials normalized,
    so surface points satisfy sum(x) == 1 up to rounding.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    rng = np.random.default_rng([seed, trial])
    d = dist.dim
    if dist.kind == "hypercube":
        arr = rng.random((n, d))
    elif dist.kind == "simplex-solid":
        e = rng.standard_exponential((n, d + 1))
        arr = e[:, :d] / e.sum(axis=1, keepdims=True)
    else:
        e = rng.standard_exponential((n, d))
        arr = e / e.sum(axis=1, keepdims=True)
    return [Point(tuple(row), i) for i, row in enumerate(arr.tolist())]


# Each runner returns (maxima, phase-one record count or None when the
# algorithm has no record stream to speak of).
Runner = Callable[[Sequence[Point], CostCounter], tuple[list[Point], Optional[int]]]


def _naive_runner(pts: Sequence[Point], c: CostCounter) -> tuple[list[Point], Optional[int]]:
    return naive_maxima(pts, c), None


def _list_runner(mtf: bool) -> Runner:
    def run(pts: Sequence[Point], c: CostCounter) -> tuple[list[Point], Optional[int]]:
        inserted = 0

        def observe(kind: str, _p: Point) -> None:
            nonlocal inserted
            if kind == "insert":
                inserted += 1

        out = list_maxima(pts, move_to_front=mtf, counter=c, observer=observe)
        return out, inserted

    return run


def _two_phase_runner(config: MaximaConfig) -> Runner:
    def run(pts: Sequence[Point], c: CostCounter) -> tuple[list[Point], Optional[int]]:
        maxima, nrec = _two_phase(pts, config, c)
        return maxima, nrec

    return run


def _online_runner(pts: Sequence[Point], c: CostCounter) -> tuple[list[Point], Optional[int]]:
    inserted = 0

    def observe(kind: str, _p: Point) -> None:
        nonlocal inserted
        if kind == "insert":
            inserted += 1

    out = online_maxima(pts, c, observer=observe)
    return out, inserted


_ALGORITHMS: dict[str, Runner] = {
    "naive": _naive_runner,
    "list": _list_runner(False),
    "list-mtf": _list_runner(True),
    "2phase": _two_phase_runner(MaximaConfig()),
    "2phase-prune": _two_phase_runner(MaximaConfig(prune_fraction=10)),
    "2phase-sieve": _two_phase_runner(MaximaConfig(use_sieve=True)),
    "2phase-prune-sieve": _two_phase_runner(
        MaximaConfig(use_sieve=True, prune_fraction=10)
    ),
    "online": _online_runner,
}

ALGORITHM_IDS = tuple(_ALGORITHMS)


def run_algorithm(
    algo: str, pts: Sequence[Point], counter: CostCounter
) -> tuple[list[Point], Optional[int]]:
    """Run one algorithm by id; unknown ids raise ValueError listing them."""
    try:
        runner = _ALGORITHMS[algo]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {algo!r}, expected one of {ALGORITHM_IDS}"
        ) from None
    return runner(pts, counter)


@dataclass(frozen=True)
class ExperimentSpec:
    distribution: Distribution
    n: int
    trials: int
    algorithms: tuple[str, ...]
    seed: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not self.algorithms:
            raise ValueError("at least one algorithm id is required")
        for a in self.algorithms:
            if a not in _ALGORITHMS:
                raise ValueError(
                    f"unknown algorithm {a!r}, expected one of {ALGORITHM_IDS}"
                )


@dataclass(frozen=True)
class BenchRecord:
    """One CSV row: averages over all trials of one algorithm on one spec."""

    algorithm: str
    distribution: str
    d: int
    n: int
    trials: int
    avg_scalar_comparisons_per_point: float
    avg_dominated_calls: float
    avg_maxima: float
    avg_records: Optional[float]
    seed: int


def run_experiment(spec: ExperimentSpec) -> list[BenchRecord]:
    """All trials for all algorithms; one averaged record per algorithm.

    Comparisons are averaged per point (total over trials divided by
    n * trials); dominated calls, maxima, and records are per-trial means.
    """
    sums = {
        a: {"scal": 0, "dom": 0, "maxima": 0, "recs": 0, "has_recs": True}
        for a in spec.algorithms
    }
    for t in range(spec.trials):
        pts = generate(spec.distribution, spec.n, spec.seed, t)
        for a in spec.algorithms:
            counter = CostCounter()
            maxima, nrec = _ALGORITHMS[a](pts, counter)
            acc = sums[a]
            acc["scal"] += counter.scalar_comparisons
            acc["dom"] += counter.dominated_calls
            acc["maxima"] += len(maxima)
            if nrec is None:
                acc["has_recs"] = False
            else:
                acc["recs"] += nrec
    out = []
    for a in spec.algorithms:
        acc = sums[a]
        out.append(
            BenchRecord(
                algorithm=a,
                distribution=spec.distribution.kind,
                d=spec.distribution.dim,
                n=spec.n,
                trials=spec.trials,
                avg_scalar_comparisons_per_point=acc["scal"] / (spec.n * spec.trials),
                avg_dominated_calls=acc["dom"] / spec.trials,
                avg_maxima=acc["maxima"] / spec.trials,
                avg_records=acc["recs"] / spec.trials if acc["has_recs"] else None,
                seed=spec.seed,
            )
        )
    return out


CSV_FIELDS = (
    "algorithm",
    "distribution",
    "d",
    "n",
    "trials",
    "avg_scalar_comparisons_per_point",
    "avg_dominated_calls",
    "avg_maxima",
    "avg_records",
    "seed",
)


def write_csv(records: Sequence[BenchRecord], stream: TextIO) -> None:
    """Write records with a fixed header and fixed two-decimal formatting."""
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow(
            [
                r.algorithm,
                r.distribution,
                r.d,
                r.n,
                r.trials,
                f"{r.avg_scalar_comparisons_per_point:.2f}",
                f"{r.avg_dominated_calls:.2f}",
                f"{r.avg_maxima:.2f}",
                "" if r.avg_records is None else f"{r.avg_records:.2f}",
                r.seed,
            ]
        )
