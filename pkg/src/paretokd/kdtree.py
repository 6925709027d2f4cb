"""k-d tree with per-subtree bounding vectors for dominance search.

Every node keeps ``upper``, the componentwise maximum of all points in its
subtree, maintained incrementally along each insertion path.  A subtree can
contain a dominator of a query point only if ``upper`` itself dominates the
query, which is what lets the search skip almost everything.  Trees built
with ``track_lower=True`` additionally maintain the componentwise minimum,
required by ``delete_dominated`` (the online algorithm's pruning walk).

Layout follows the classic discriminator-cycling scheme: the root splits on
coordinate 1 (1-based), a child splits on the next coordinate modulo the
dimension.  A point whose discriminator coordinate ties the node's goes
right, so duplicates are reachable.

Deletion never restructures the tree: nodes are only marked.  Marked points
still participate in dominance queries, which stays correct because anything
a marked point dominates is transitively dominated by whatever killed it.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .points import CostCounter, Point


class KdNode:
    __slots__ = ("point", "disc", "left", "right", "upper", "lower", "marked")

    def __init__(self, point: Point, disc: int, track_lower: bool) -> None:
        self.point = point
        self.disc = disc  # 1-based coordinate this node splits on
        self.left: Optional[KdNode] = None
        self.right: Optional[KdNode] = None
        self.upper = list(point.coords)
        self.lower = list(point.coords) if track_lower else None
        self.marked = False


class KdTree:
    """Dominance-search index over points of one fixed dimension."""

    __slots__ = ("root", "dim", "track_lower")

    def __init__(self, dim: int, track_lower: bool = False) -> None:
        if dim < 1:
            raise ValueError(f"dimension must be >= 1, got {dim}")
        self.root: Optional[KdNode] = None
        self.dim = dim
        self.track_lower = track_lower

    @classmethod
    def from_points(
        cls,
        points: Iterable[Point],
        dim: Optional[int] = None,
        track_lower: bool = False,
        counter: Optional[CostCounter] = None,
    ) -> "KdTree":
        """Fresh tree built by inserting the points in the given order."""
        pts = list(points)
        if dim is None:
            if not pts:
                raise ValueError("cannot infer dimension from an empty sequence")
            dim = len(pts[0].coords)
        tree = cls(dim, track_lower)
        for p in pts:
            tree.insert(p, counter)
        return tree

    def insert(self, p: Point, counter: Optional[CostCounter] = None) -> None:
        """Insert ``p``, updating the bounding vectors along the path.

        Counts one scalar comparison per level descended (the discriminator
        test); bound maintenance is not counted.
        """
        coords = p.coords
        if len(coords) != self.dim:
            raise ValueError(
                f"dimension mismatch: tree is {self.dim}-d, point is {len(coords)}-d"
            )
        if self.root is None:
            self.root = KdNode(p, 1, self.track_lower)
            return
        d = self.dim
        track_lower = self.track_lower
        node = self.root
        levels = 0
        while True:
            upper = node.upper
            for i, c in enumerate(coords):
                if c > upper[i]:
                    upper[i] = c
            if track_lower:
                lower = node.lower
                for i, c in enumerate(coords):
                    if c < lower[i]:
                        lower[i] = c
            disc = node.disc
            levels += 1
            if coords[disc - 1] >= node.point.coords[disc - 1]:
                child = node.right
                if child is None:
                    node.right = KdNode(p, disc % d + 1, track_lower)
                    break
            else:
                child = node.left
                if child is None:
                    node.left = KdNode(p, disc % d + 1, track_lower)
                    break
            node = child
        if counter is not None:
            counter.scalar_comparisons += levels

    def is_dominated(self, p: Point, counter: Optional[CostCounter] = None) -> bool:
        """True iff some stored point (marked or not) dominates ``p``.

        Descends into a child only when the child's upper vector dominates
        the query, and stops at the first dominator found.
        """
        return self.is_dominated_coords(p.coords, counter)

    def is_dominated_coords(
        self, coords: tuple[float, ...], counter: Optional[CostCounter] = None
    ) -> bool:
        """``is_dominated`` for a raw coordinate tuple (no Point needed)."""
        if self.root is None:
            return False
        return _search(self.root, coords, counter)

    def delete_dominated(
        self,
        p: Point,
        live: set[Point],
        counter: Optional[CostCounter] = None,
    ) -> None:
        """Mark every unmarked point dominated by ``p`` and drop it from ``live``.

        Only trees built with ``track_lower=True`` can prune this walk; calling
        without lower bounds is a contract violation.
        """
        if not self.track_lower:
            raise ValueError("delete_dominated requires a tree with track_lower=True")
        if self.root is not None:
            _delete(self.root, p.coords, live, counter)


def _search(node: KdNode, qc: tuple[float, ...], counter: Optional[CostCounter]) -> bool:
    # One dominated_calls tick per entry, root call included.
    scal = 0

    # Does the node's own point dominate the query?
    gt = False
    dom = True
    for x, y in zip(node.point.coords, qc):
        scal += 1
        if x < y:
            dom = False
            break
        if x > y:
            gt = True
    if counter is not None:
        counter.dominated_calls += 1
        counter.scalar_comparisons += scal
    if dom and gt:
        return True

    for child in (node.left, node.right):
        if child is None:
            continue
        # Visit only if the child's upper vector dominates the query.
        gt = False
        dom = True
        k = 0
        for x, y in zip(child.upper, qc):
            k += 1
            if x < y:
                dom = False
                break
            if x > y:
                gt = True
        if counter is not None:
            counter.scalar_comparisons += k
        if dom and gt and _search(child, qc, counter):
            return True
    return False


def _delete(
    node: KdNode,
    pc: tuple[float, ...],
    live: set[Point],
    counter: Optional[CostCounter],
) -> None:
    # Does pc dominate the node's point?
    gt = False
    dom = True
    k = 0
    for x, y in zip(pc, node.point.coords):
        k += 1
        if x < y:
            dom = False
            break
        if x > y:
            gt = True
    if counter is not None:
        counter.scalar_comparisons += k
    if dom and gt and not node.marked:
        node.marked = True
        live.discard(node.point)

    for child in (node.left, node.right):
        if child is None:
            continue
        # A subtree can hold dominated points only if pc dominates its
        # lower vector.
        gt = False
        dom = True
        k = 0
        for x, y in zip(pc, child.lower):
            k += 1
            if x < y:
                dom = False
                break
            if x > y:
                gt = True
        if counter is not None:
            counter.scalar_comparisons += k
        if dom and gt:
            _delete(child, pc, live, counter)
