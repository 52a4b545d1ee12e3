"""Brute-force enumeration of dissections and quiddity-class counting.

This is the independent oracle the closed forms and the series engine are
validated against.  Enumeration follows the base-cell recursion: pick the
vertex set of the cell containing the closing side of the current range,
then recurse into the sub-polygons hanging off its chord sides.  Sub-polygon
choices are iterated in increasing vertex order, so the stream order is
deterministic and golden files are stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .geometry import Chord, CellFilter, Dissection, quiddity_of


@dataclass
class CountTable:
    """Counts keyed by number of cells m, for one polygon size parameter n."""

    n: int
    by_m: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.by_m.values())


def _gen_range(lo: int, hi: int, cell_ok: CellFilter) -> Iterator[frozenset[Chord]]:
    """Chord sets dissecting the sub-polygon on vertices lo..hi.

    The closing side (lo, hi) is treated as a boundary side, not a chord.
    A span of 1 is the empty-sub-dissection sentinel.
    """
    span = hi - lo
    if span == 1:
        yield frozenset()
        return
    for r in range(1, span):
        if not cell_ok(r + 2):
            continue
        for interior in combinations(range(lo + 1, hi), r):
            yield from _attach((lo, *interior, hi), 0, frozenset(), cell_ok)


def _attach(
    cell: tuple[int, ...], s: int, acc: frozenset[Chord], cell_ok: CellFilter
) -> Iterator[frozenset[Chord]]:
    if s == len(cell) - 1:
        yield acc
        return
    a, b = cell[s], cell[s + 1]
    if b - a == 1:
        yield from _attach(cell, s + 1, acc, cell_ok)
        return
    for sub in _gen_range(a, b, cell_ok):
        yield from _attach(cell, s + 1, acc | {(a, b)} | sub, cell_ok)


def enumerate_dissections(
    n: int, cell_filter: Optional[CellFilter] = None
) -> Iterator[Dissection]:
    """Yield each dissection of the (n+2)-gon whose every cell size passes
    cell_filter, exactly once, in deterministic order."""
    if n < 1:
        raise ValueError("polygon size parameter must be at least 1")
    ok = cell_filter if cell_filter is not None else (lambda size: True)
    for chords in _gen_range(0, n + 1, ok):
        yield Dissection(n, chords)


def periodic_filter(ell: int) -> CellFilter:
    """Cell sizes allowed in an ell-periodic dissection: size == 3 mod ell."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    return lambda size: (size - 3) % ell == 0


def count_dissections(n: int, ell: int) -> CountTable:
    """by_m[m] = number of ell-periodic dissections of the (n+2)-gon with m cells."""
    if n < 1:
        raise ValueError("polygon size parameter must be at least 1")
    table = CountTable(n)
    for d in enumerate_dissections(n, periodic_filter(ell)):
        m = len(d.chords) + 1
        table.by_m[m] = table.by_m.get(m, 0) + 1
    return table


def count_quiddities(n: int, ell: int) -> CountTable:
    """by_m[m] = number of distinct labeled quiddity tuples over all
    ell-periodic dissections of the (n+2)-gon with m cells.

    For ell = 3 this is the quantity with a closed form; for other ell it is
    exploratory output with no formula to check against.
    """
    if n < 1:
        raise ValueError("polygon size parameter must be at least 1")
    seen: dict[int, set[tuple[int, ...]]] = {}
    for d in enumerate_dissections(n, periodic_filter(ell)):
        m = len(d.chords) + 1
        seen.setdefault(m, set()).add(quiddity_of(d))
    table = CountTable(n)
    for m, quids in seen.items():
        table.by_m[m] = len(quids)
    return table


def count_multi_index_dissections(m: Sequence[int]) -> int:
    """Exact count of dissections with multi-index m (m_r cells of size r+2)."""
    from .geometry import multi_index_of

    m = tuple(m)
    while m and m[-1] == 0:
        m = m[:-1]
    if any(v < 0 for v in m):
        raise ValueError("multi-index entries must be non-negative")
    if not m:
        return 1
    n = sum((r + 1) * v for r, v in enumerate(m))
    allowed = {r + 3 for r, v in enumerate(m) if v > 0}
    count = 0
    for d in enumerate_dissections(n, lambda size: size in allowed):
        if multi_index_of(d) == m:
            count += 1
    return count
