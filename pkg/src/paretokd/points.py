"""Dominance primitives shared by every algorithm in the package.

A point p dominates a point q when p - q is nonnegative in every coordinate
and positive in at least one.  Equal points never dominate each other, so
duplicated maxima all survive.  Comparisons scan coordinates in index order
and stop as soon as the outcome is settled; every coordinate pair examined
adds one to ``CostCounter.scalar_comparisons``.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Iterable, NamedTuple, Optional, Sequence


class Point(NamedTuple):
    """An immutable point: coordinate tuple plus its arrival index."""

    coords: tuple[float, ...]
    index: int

    @property
    def dim(self) -> int:
        return len(self.coords)


class CostCounter:
    """Mutable tally of comparison work done by an algorithm run.

    ``scalar_comparisons`` counts coordinate pairs examined (early exit
    included), ``dominated_calls`` counts entries into the tree search
    procedure.  Counters only ever increase.
    """

    __slots__ = ("scalar_comparisons", "dominated_calls")

    def __init__(self) -> None:
        self.scalar_comparisons = 0
        self.dominated_calls = 0

    def __repr__(self) -> str:
        return (
            f"CostCounter(scalar_comparisons={self.scalar_comparisons}, "
            f"dominated_calls={self.dominated_calls})"
        )


class DominanceOutcome(Enum):
    FIRST_DOMINATES = "first"
    SECOND_DOMINATES = "second"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal"


def _dominates_scan(a: Sequence[float], b: Sequence[float]) -> tuple[bool, int]:
    # Raw scan: does a dominate b?  Returns the verdict and the number of
    # coordinate pairs examined before the outcome was settled.
    gt = False
    k = 0
    for x, y in zip(a, b):
        k += 1
        if x < y:
            return False, k
        if x > y:
            gt = True
    return gt, k


def dominates(p: Point, q: Point, counter: Optional[CostCounter] = None) -> bool:
    """True iff ``p`` dominates ``q``."""
    if len(p.coords) != len(q.coords):
        raise ValueError(
            f"dimension mismatch: {len(p.coords)} vs {len(q.coords)}"
        )
    verdict, k = _dominates_scan(p.coords, q.coords)
    if counter is not None:
        counter.scalar_comparisons += k
    return verdict


def compare(p: Point, q: Point, counter: Optional[CostCounter] = None) -> DominanceOutcome:
    """Classify an ordered pair in one scan.

    Stops as soon as disagreement in both directions proves the pair
    incomparable; the result is always consistent with two ``dominates``
    calls, but only coordinates actually examined are counted.
    """
    if len(p.coords) != len(q.coords):
        raise ValueError(
            f"dimension mismatch: {len(p.coords)} vs {len(q.coords)}"
        )
    gt = False
    lt = False
    k = 0
    for x, y in zip(p.coords, q.coords):
        k += 1
        if x > y:
            gt = True
            if lt:
                break
        elif x < y:
            lt = True
            if gt:
                break
    if counter is not None:
        counter.scalar_comparisons += k
    if gt and lt:
        return DominanceOutcome.INCOMPARABLE
    if gt:
        return DominanceOutcome.FIRST_DOMINATES
    if lt:
        return DominanceOutcome.SECOND_DOMINATES
    return DominanceOutcome.EQUAL


def naive_maxima(points: Sequence[Point], counter: Optional[CostCounter] = None) -> list[Point]:
    """Maxima by the quadratic double loop, in input order.

    Each candidate scans the whole input and is dropped at the first
    dominator found.  Self-comparison is performed (and counted) like any
    other; it can never dominate.
    """
    pts = list(points)
    out: list[Point] = []
    scal = 0
    for p in pts:
        pc = p.coords
        dominated = False
        for q in pts:
            qc = q.coords
            # inline scan: does q dominate p?
            gt = False
            ge = True
            for x, y in zip(qc, pc):
                scal += 1
                if x < y:
                    ge = False
                    break
                if x > y:
                    gt = True
            if ge and gt:
                dominated = True
                break
        if not dominated:
            out.append(p)
    if counter is not None:
        counter.scalar_comparisons += scal
    return out


def points_from_rows(rows: Iterable[Sequence[float]]) -> list[Point]:
    """Build indexed points from coordinate rows, validating on ingestion.

    Rows must be nonempty, share one dimensionality, and contain only finite
    values; violations raise ValueError naming the offending row (1-based).
    """
    out: list[Point] = []
    dim: Optional[int] = None
    for i, row in enumerate(rows):
        coords = tuple(float(c) for c in row)
        if dim is None:
            dim = len(coords)
            if dim == 0:
                raise ValueError("row 1: empty point")
        elif len(coords) != dim:
            raise ValueError(
                f"row {i + 1}: expected {dim} coordinates, got {len(coords)}"
            )
        for c in coords:
            if not math.isfinite(c):
                raise ValueError(f"row {i + 1}: non-finite coordinate {c!r}")
        out.append(Point(coords, i))
    return out
