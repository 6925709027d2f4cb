"""Longest common subsequence of two or more strings via dominance layers.

A match is a tuple of positions, one per string, holding the same symbol.
Extending a common subsequence means jumping from a match to another whose
positions are strictly larger in every string, so the k-th layer of matches
minimal under the all-coordinates-strict order is exactly the set of
cheapest endpoints of length-k common subsequences.  The LCS length is the
number of nonempty layers, and a witness falls out of parent links.

Layers are generated through next-occurrence tables (no scanning), and the
minima of each candidate batch can be computed by two engines that must
agree: the quadratic mark-based double loop, or the k-d tree record pass
applied to negated coordinates (with queries offset by one half, which on
integer grids turns strict dominance into the tree's ordinary question).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .kdtree import KdTree
from .points import CostCounter, Point, _dominates_scan

ENGINES = ("hakata-imai", "maxima")


class MatchPoint:
    """A match: 1-based positions, the matched symbol, a back link."""

    __slots__ = ("positions", "symbol", "parent")

    def __init__(
        self,
        positions: tuple[int, ...],
        symbol: str,
        parent: Optional["MatchPoint"] = None,
    ) -> None:
        self.positions = positions
        self.symbol = symbol
        self.parent = parent

    def __repr__(self) -> str:
        return f"MatchPoint({self.positions!r}, {self.symbol!r})"


class SuccessorTable:
    """Next-occurrence tables over the common alphabet of the strings.

    ``successor(positions, c)`` returns the componentwise smallest match of
    symbol ``c`` strictly after ``positions`` (1-based; 0 means "from the
    start"), or None when some string has no further occurrence.
    """

    __slots__ = ("lengths", "alphabet", "_next")

    def __init__(self, strings: Sequence[str]) -> None:
        if len(strings) < 2:
            raise ValueError(f"need at least 2 strings, got {len(strings)}")
        common = set(strings[0])
        for s in strings[1:]:
            common &= set(s)
        self.alphabet: tuple[str, ...] = tuple(sorted(common))
        self.lengths = tuple(len(s) for s in strings)
        self._next: list[dict[str, list[int]]] = []
        for s in strings:
            m = len(s)
            per: dict[str, list[int]] = {}
            for c in self.alphabet:
                arr = [0] * (m + 1)
                nxt = 0
                for pos in range(m, 0, -1):
                    if s[pos - 1] == c:
                        nxt = pos
                    arr[pos - 1] = nxt
                per[c] = arr
            self._next.append(per)

    def successor(
        self, positions: Sequence[int], symbol: str
    ) -> Optional[tuple[int, ...]]:
        out = []
        for t, pos in enumerate(positions):
            arr = self._next[t].get(symbol)
            if arr is None:
                return None
            nxt = arr[pos]
            if nxt == 0:
                return None
            out.append(nxt)
        return tuple(out)


@dataclass(frozen=True)
class LcsResult:
    """LCS length, one witness string, and the per-layer minima counts."""

    length: int
    witness: str
    layer_sizes: tuple[int, ...]
    layers: tuple[tuple[tuple[int, ...], ...], ...]


def _strict_over(a: Sequence[int], b: Sequence[int]) -> tuple[bool, int]:
    # Is a strictly above b in every coordinate?  Scan with early exit.
    k = 0
    for x, y in zip(a, b):
        k += 1
        if x <= y:
            return False, k
    return True, k


def _marking_minima_idx(
    coords_list: Sequence[tuple[int, ...]],
    counter: Optional[CostCounter],
    strict: bool,
) -> list[int]:
    """Indices of the minima by the mark-based double loop.

    A pivot already marked is skipped; otherwise it is tested in both
    directions against every unmarked point (itself included, harmlessly)
    and whichever lies above gets marked, dead pivots still marking what
    they can.  ``strict`` switches the comparator from ordinary dominance
    to all-coordinates-strict.
    """
    over = _strict_over if strict else _dominates_scan
    n = len(coords_list)
    marked = [False] * n
    out: list[int] = []
    scal = 0
    for i in range(n):
        if marked[i]:
            continue
        ci = coords_list[i]
        for j in range(n):
            if marked[j]:
                continue
            cj = coords_list[j]
            up, k = over(cj, ci)
            scal += k
            if up:
                marked[j] = True
            up, k = over(ci, cj)
            scal += k
            if up:
                marked[i] = True
        if not marked[i]:
            out.append(i)
    if counter is not None:
        counter.scalar_comparisons += scal
    return out


def hakata_imai_minima(
    points: Sequence[Point], counter: Optional[CostCounter] = None
) -> list[Point]:
    """Minima (dominance reversed) of the points, in input order."""
    keep = _marking_minima_idx([p.coords for p in points], counter, strict=False)
    pts = list(points)
    return [pts[i] for i in keep]


def _strict_records(
    pts: Sequence[Point], counter: Optional[CostCounter]
) -> list[Point]:
    # Records under the all-strict order on integer coordinates: query the
    # tree at p + (0.5, ..., 0.5), so ordinary dominance of a stored integer
    # point over the shifted query is exactly strict excess over p itself.
    out: list[Point] = []
    tree: Optional[KdTree] = None
    for p in pts:
        if tree is None:
            tree = KdTree(len(p.coords))
            tree.insert(p, counter)
            out.append(p)
            continue
        shifted = tuple(c + 0.5 for c in p.coords)
        if not tree.is_dominated_coords(shifted, counter):
            tree.insert(p, counter)
            out.append(p)
    return out


def _kd_strict_minima_idx(
    coords_list: Sequence[tuple[int, ...]], counter: Optional[CostCounter]
) -> list[int]:
    # Strict minima == strict maxima of the negated points, and those are
    # the records of the reversed record sequence.
    neg = [
        Point(tuple(-c for c in cs), i) for i, cs in enumerate(coords_list)
    ]
    recs = _strict_records(neg, counter)
    recs.reverse()
    return [p.index for p in _strict_records(recs, counter)]


def _expand(
    table: SuccessorTable, layer: Optional[Sequence[MatchPoint]]
) -> list[MatchPoint]:
    """Successor candidates of a layer (or of the origin when layer is None).

    Duplicate position tuples collapse to one candidate whose parent is the
    generator least advanced in the later strings (positions compared last
    coordinate first), which pins down one witness deterministically.
    """
    seen: dict[tuple[int, ...], MatchPoint] = {}
    d = len(table.lengths)
    sources: Iterable[Optional[MatchPoint]]
    if layer is None:
        sources = (None,)
    else:
        sources = layer
    origin = (0,) * d
    for src in sources:
        base = src.positions if src is not None else origin
        for c in table.alphabet:
            pos = table.successor(base, c)
            if pos is None:
                continue
            prev = seen.get(pos)
            if prev is None:
                seen[pos] = MatchPoint(pos, c, src)
            elif src is not None and src.positions[::-1] < prev.parent.positions[::-1]:
                prev.parent = src
    return list(seen.values())


def mlcs(
    strings: Sequence[str],
    engine: str = "hakata-imai",
    counter: Optional[CostCounter] = None,
) -> LcsResult:
    """LCS of two or more strings by peeling minimal-match layers.

    Both engines produce identical layers, lengths, and witnesses; they
    differ only in how each batch's minima are found.  Any empty input
    string (or an empty common alphabet) gives length 0 immediately.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}, expected one of {ENGINES}")
    table = SuccessorTable(strings)
    if any(m == 0 for m in table.lengths):
        return LcsResult(0, "", (), ())
    layers: list[tuple[MatchPoint, ...]] = []
    frontier = _expand(table, None)
    while frontier:
        coords_list = [mp.positions for mp in frontier]
        if engine == "hakata-imai":
            keep = _marking_minima_idx(coords_list, counter, strict=True)
        else:
            keep = _kd_strict_minima_idx(coords_list, counter)
        layer = tuple(
            sorted((frontier[i] for i in keep), key=lambda m: m.positions)
        )
        layers.append(layer)
        frontier = _expand(table, layer)
    if not layers:
        return LcsResult(0, "", (), ())
    end = min(layers[-1], key=lambda m: m.positions[::-1])
    syms: list[str] = []
    cur: Optional[MatchPoint] = end
    while cur is not None:
        syms.append(cur.symbol)
        cur = cur.parent
    return LcsResult(
        length=len(layers),
        witness="".join(reversed(syms)),
        layer_sizes=tuple(len(layer) for layer in layers),
        layers=tuple(tuple(m.positions for m in layer) for layer in layers),
    )
