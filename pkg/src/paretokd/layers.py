"""Maximal layers: partition a point set by repeated maxima extraction.

Layer 1 is the maxima of the whole set, layer k the maxima of what is left
after removing layers 1..k-1.  Equivalently, a point's layer index is one
plus the longest dominance chain above it, so all methods here must agree
on the exact partition.  Layers store point indices, not copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .points import CostCounter, DominanceOutcome, Point, compare, naive_maxima
from .algorithms import two_phase_maxima


@dataclass(frozen=True)
class LayerPartition:
    """Ordered layers, each a tuple of point indices sorted ascending."""

    layers: tuple[tuple[int, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.layers)

    def layer_of(self, index: int) -> int:
        """1-based layer index of the point with the given arrival index."""
        for k, layer in enumerate(self.layers, start=1):
            if index in layer:
                return k
        raise KeyError(f"point index {index} is in no layer")


def peel_layers(
    points: Sequence[Point],
    engine: str = "maxima",
    counter: Optional[CostCounter] = None,
) -> LayerPartition:
    """Peel layers by running a maxima algorithm on the shrinking remainder.

    ``engine`` selects the extractor: "maxima" uses the two-phase tree
    method and reverses the remainder's order between rounds (the survivors
    come out newest first, so reversal keeps the stream well conditioned);
    "naive" uses the quadratic scan and preserves order.
    """
    if engine not in ("maxima", "naive"):
        raise ValueError(f"unknown engine {engine!r}, expected 'maxima' or 'naive'")
    remaining = list(points)
    layers: list[tuple[int, ...]] = []
    while remaining:
        if engine == "maxima":
            layer = two_phase_maxima(remaining, counter=counter)
        else:
            layer = naive_maxima(remaining, counter)
        taken = set(layer)
        layers.append(tuple(sorted(p.index for p in layer)))
        rest = [p for p in remaining if p not in taken]
        if engine == "maxima":
            rest.reverse()
        remaining = rest
    return LayerPartition(tuple(layers))


def deb_layers(
    points: Sequence[Point], counter: Optional[CostCounter] = None
) -> LayerPartition:
    """Layers by dominator counting: compare all pairs once, then unwind.

    Every point tracks how many points dominate it and which points it
    dominates; stripping the zero-count points layer by layer and
    decrementing their victims' counts yields the same partition as
    peeling.
    """
    pts = list(points)
    n = len(pts)
    dominated_by = [0] * n
    victims: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        pi = pts[i]
        for j in range(i + 1, n):
            outcome = compare(pi, pts[j], counter)
            if outcome is DominanceOutcome.FIRST_DOMINATES:
                victims[i].append(j)
                dominated_by[j] += 1
            elif outcome is DominanceOutcome.SECOND_DOMINATES:
                victims[j].append(i)
                dominated_by[i] += 1
    current = [i for i in range(n) if dominated_by[i] == 0]
    layers: list[tuple[int, ...]] = []
    while current:
        layers.append(tuple(sorted(pts[i].index for i in current)))
        nxt: list[int] = []
        for i in current:
            for j in victims[i]:
                dominated_by[j] -= 1
                if dominated_by[j] == 0:
                    nxt.append(j)
        current = nxt
    return LayerPartition(tuple(layers))
