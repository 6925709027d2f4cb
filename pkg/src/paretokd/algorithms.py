"""Maxima algorithms: streaming records, the two-phase tree method with
optional sieve and prune, the online (delete-on-arrival) variant, and the
scanning-list baselines.

The two-phase method rests on one identity: the maxima of a sequence are
the records of the reversed record sequence.  Phase 1 streams the input and
keeps every point not dominated by an earlier one (the records), indexed in
a k-d tree; Phase 2 replays those records backwards through a fresh tree,
and what survives is exactly the maxima, emitted newest first.

Two accelerators bolt onto Phase 1.  The sieve remembers a seen point of
maximal L1 norm and discards arrivals it dominates before the tree is even
consulted.  Prune rebuilds the tree once, mid-stream, keeping only records
that are still undominated; survivors are restored to arrival order so the
reversal identity continues to hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .kdtree import KdTree
from .points import CostCounter, Point

Observer = Callable[[str, Point], None]


@dataclass(frozen=True)
class MaximaConfig:
    """Switches for the two-phase run.

    ``prune_fraction`` triggers the one-time rebuild when the stream index
    reaches n // prune_fraction; ``prune_power`` when it reaches
    floor(n ** prune_power).  At most one may be set.
    """

    use_sieve: bool = False
    prune_fraction: Optional[int] = None
    prune_power: Optional[float] = None

    def __post_init__(self) -> None:
        if self.prune_fraction is not None and self.prune_power is not None:
            raise ValueError("set at most one of prune_fraction and prune_power")
        if self.prune_fraction is not None and self.prune_fraction < 2:
            raise ValueError(f"prune_fraction must be >= 2, got {self.prune_fraction}")
        if self.prune_power is not None and not 0.0 < self.prune_power < 1.0:
            raise ValueError(f"prune_power must lie in (0, 1), got {self.prune_power}")

    def prune_index(self, n: int) -> Optional[int]:
        """Stream index at which to prune, or None when disabled/too early."""
        if self.prune_fraction is not None:
            i = n // self.prune_fraction
        elif self.prune_power is not None:
            i = int(n**self.prune_power + 1e-9)
        else:
            return None
        return i if i >= 2 else None


@dataclass
class SieveState:
    """The current sieve point and its cached L1 norm."""

    point: Point
    norm: float


def _l1(coords: tuple[float, ...]) -> float:
    return sum(abs(c) for c in coords)


def _stream_records(
    points: Sequence[Point],
    counter: Optional[CostCounter],
    use_sieve: bool,
    prune_at: Optional[int],
) -> tuple[KdTree, list[Point]]:
    """One streaming pass: returns the tree and the retained records.

    A point dominated by the sieve is dropped before the tree lookup; a
    surviving point with strictly larger norm replaces the sieve (ties keep
    the incumbent).  The prune rebuild fires at most once, just before the
    point with stream index ``prune_at`` (1-based) is processed.
    """
    recs: list[Point] = []
    tree: Optional[KdTree] = None
    sieve: Optional[SieveState] = None
    for i, p in enumerate(points, start=1):
        if i == 1:
            tree = KdTree(len(p.coords))
            tree.insert(p, counter)
            recs.append(p)
            if use_sieve:
                sieve = SieveState(p, _l1(p.coords))
            continue
        if prune_at is not None and i == prune_at:
            tree, recs = prune(tree, recs, counter)
        if sieve is not None:
            sc = sieve.point.coords
            pc = p.coords
            gt = False
            dom = True
            k = 0
            for x, y in zip(sc, pc):
                k += 1
                if x < y:
                    dom = False
                    break
                if x > y:
                    gt = True
            if counter is not None:
                counter.scalar_comparisons += k
            if dom and gt:
                continue
            norm = _l1(pc)
            if norm > sieve.norm:
                sieve.point = p
                sieve.norm = norm
        if not tree.is_dominated(p, counter):
            tree.insert(p, counter)
            recs.append(p)
    if tree is None:
        tree = KdTree(1)
    return tree, recs


def records(
    points: Sequence[Point],
    counter: Optional[CostCounter] = None,
    *,
    use_sieve: bool = False,
) -> list[Point]:
    """The records of the stream: points not dominated by any earlier point.

    The sieve never changes the result, only the counters: the sieve point
    always arrived earlier than the arrival it discards, so anything it
    kills was never a record to begin with.
    """
    _, recs = _stream_records(list(points), counter, use_sieve, None)
    return recs


def prune(
    tree: KdTree, record_list: Sequence[Point], counter: Optional[CostCounter] = None
) -> tuple[KdTree, list[Point]]:
    """Rebuild the tree from the records, newest first, dropping dominated ones.

    The survivors are exactly the maxima of the record set.  They are
    returned in original arrival order, which keeps the reversal identity
    valid when streaming resumes.
    """
    fresh = KdTree(tree.dim, track_lower=tree.track_lower)
    kept: set[Point] = set()
    for q in reversed(list(record_list)):
        if fresh.root is None or not fresh.is_dominated(q, counter):
            fresh.insert(q, counter)
            kept.add(q)
    survivors = [q for q in record_list if q in kept]
    return fresh, survivors


def _two_phase(
    points: Sequence[Point],
    config: Optional[MaximaConfig],
    counter: Optional[CostCounter],
) -> tuple[list[Point], int]:
    cfg = config if config is not None else MaximaConfig()
    pts = list(points)
    if not pts:
        return [], 0
    _, recs = _stream_records(pts, counter, cfg.use_sieve, cfg.prune_index(len(pts)))
    recs.reverse()
    _, maxima = _stream_records(recs, counter, False, None)
    return maxima, len(recs)


def two_phase_maxima(
    points: Sequence[Point],
    config: Optional[MaximaConfig] = None,
    counter: Optional[CostCounter] = None,
) -> list[Point]:
    """Maxima via the two streaming passes, emitted newest record first."""
    maxima, _ = _two_phase(points, config, counter)
    return maxima


class _ObservedLive(set):
    # Live set whose removals are reported; delete_dominated discards through
    # this exactly once per point it kills.
    __slots__ = ("on_delete",)

    def __init__(self, on_delete: Callable[[Point], None]) -> None:
        super().__init__()
        self.on_delete = on_delete

    def discard(self, q: Point) -> None:
        super().discard(q)
        self.on_delete(q)


def online_maxima(
    points: Iterable[Point],
    counter: Optional[CostCounter] = None,
    *,
    observer: Optional[Observer] = None,
    on_step: Optional[Callable[[int, set[Point]], None]] = None,
) -> list[Point]:
    """Maintain the maxima of every prefix; returns the final set in arrival order.

    An arriving point that is not dominated first marks everything it
    dominates as dead (they stay in the tree and keep answering queries),
    then joins the live set.  ``observer`` sees ("insert", p) and
    ("delete", q) events; ``on_step`` sees (prefix_length, live_set) after
    every arrival and must copy the set if it wants a snapshot.
    """
    live: set[Point]
    if observer is None:
        live = set()
    else:
        live = _ObservedLive(lambda q: observer("delete", q))
    tree: Optional[KdTree] = None
    for i, p in enumerate(points, start=1):
        if tree is None:
            tree = KdTree(len(p.coords), track_lower=True)
            tree.insert(p, counter)
            live.add(p)
            if observer is not None:
                observer("insert", p)
        elif not tree.is_dominated(p, counter):
            tree.delete_dominated(p, live, counter)
            tree.insert(p, counter)
            live.add(p)
            if observer is not None:
                observer("insert", p)
        if on_step is not None:
            on_step(i, live)
    return sorted(live, key=lambda q: q.index)


def list_maxima(
    points: Sequence[Point],
    *,
    move_to_front: bool = False,
    counter: Optional[CostCounter] = None,
    observer: Optional[Observer] = None,
) -> list[Point]:
    """Maxima by scanning a list of current candidates (the classic baseline).

    Each arrival walks the list once: it dies at the first entry dominating
    it, otherwise every entry it dominates is deleted and it is appended.
    Because the list is an antichain, those two cases never mix.  With
    ``move_to_front`` the killing entry is moved to the list head, which
    pays off on inputs whose maxima keep killing.
    """
    front: list[Point] = []
    scal = 0
    for p in points:
        pc = p.coords
        killer = -1
        dead: list[int] = []
        for pos, q in enumerate(front):
            ge = True  # q >= p so far
            le = True  # q <= p so far
            for x, y in zip(q.coords, pc):
                scal += 1
                if x < y:
                    ge = False
                    if not le:
                        break
                elif x > y:
                    le = False
                    if not ge:
                        break
            if ge and not le:
                killer = pos
                break
            if le and not ge:
                dead.append(pos)
        if killer >= 0:
            if move_to_front and killer > 0:
                front.insert(0, front.pop(killer))
            continue
        for pos in reversed(dead):
            gone = front.pop(pos)
            if observer is not None:
                observer("delete", gone)
        front.append(p)
        if observer is not None:
            observer("insert", p)
    if counter is not None:
        counter.scalar_comparisons += scal
    return front
