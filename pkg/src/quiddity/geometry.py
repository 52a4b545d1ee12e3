"""Labeled convex polygons, dissections, cells, quiddities, multi-indices.

The polygon with size parameter n has n+2 vertices, labeled 0..n+1 in
counterclockwise order.  The base edge is (n+1, 0).  All modules downstream
(enumeration, surgery, indexing) assume this anchoring.

A chord is stored as a sorted pair (i, j) with i < j.  Two chords (a, b) and
(c, d) cross iff a < c < b < d after sorting, and a dissection is a set of
pairwise non-crossing chords.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

Chord = tuple[int, int]
Cell = tuple[int, ...]
Quiddity = tuple[int, ...]
MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class Dissection:
    """A set of pairwise non-crossing chords on the (n+2)-gon."""

    n: int
    chords: frozenset[Chord]

    @staticmethod
    def make(n: int, chords: Iterable[Iterable[int]] = ()) -> "Dissection":
        """Build a dissection, normalizing each chord to a sorted pair."""
        normalized = frozenset((min(c), max(c)) for c in (tuple(ch) for ch in chords))
        return Dissection(n, normalized)

    def sorted_chords(self) -> list[Chord]:
        return sorted(self.chords)

    def serialize(self) -> str:
        """Canonical text form: ``n=<n>;chords=(i1,j1),(i2,j2),...``."""
        body = ",".join(f"({i},{j})" for i, j in self.sorted_chords())
        return f"n={self.n};chords={body}"


class DissectionParseError(ValueError):
    """Raised on malformed dissection serializations, with a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position})")
        self.position = position


def parse(text: str) -> Dissection:
    """Parse the canonical serialization produced by :meth:`Dissection.serialize`."""
    text = text.strip()
    if not text.startswith("n="):
        raise DissectionParseError("expected 'n='", 0)
    semi = text.find(";")
    if semi < 0:
        raise DissectionParseError("expected ';' after the size parameter", len(text))
    try:
        n = int(text[2:semi])
    except ValueError:
        raise DissectionParseError("size parameter is not an integer", 2) from None
    rest = text[semi + 1 :]
    if not rest.startswith("chords="):
        raise DissectionParseError("expected 'chords='", semi + 1)
    body = rest[len("chords=") :]
    chords: list[Chord] = []
    pos = semi + 1 + len("chords=")
    if body:
        if not (body.startswith("(") and body.endswith(")")):
            raise DissectionParseError("chord list must look like (i,j),(k,l)", pos)
        for item in body[1:-1].split("),("):
            parts = item.split(",")
            if len(parts) != 2:
                raise DissectionParseError(f"bad chord '({item})'", pos)
            try:
                i, j = int(parts[0]), int(parts[1])
            except ValueError:
                raise DissectionParseError(f"bad chord '({item})'", pos) from None
            chords.append((min(i, j), max(i, j)))
            pos += len(item) + 3
    d = Dissection.make(n, chords)
    if not validate(d):
        raise DissectionParseError("chords do not form a valid dissection", 0)
    return d


def chord_valid(n: int, chord: Chord) -> bool:
    """Endpoint sanity: cyclically non-adjacent vertex pair within 0..n+1."""
    i, j = chord
    if not (0 <= i < j <= n + 1):
        return False
    if j - i < 2:
        return False
    if (i, j) == (0, n + 1):
        return False
    return True


def crossing(c1: Chord, c2: Chord) -> bool:
    a, b = c1
    c, d = c2
    return (a < c < b < d) or (c < a < d < b)


def validate(d: Dissection) -> bool:
    """True iff all chords are valid and pairwise non-crossing."""
    if d.n < 1:
        return False
    chords = d.sorted_chords()
    if any(not chord_valid(d.n, c) for c in chords):
        return False
    for i, c1 in enumerate(chords):
        for c2 in chords[i + 1 :]:
            if crossing(c1, c2):
                return False
    return True


def require_valid(d: Dissection) -> None:
    if not validate(d):
        raise ValueError(f"invalid dissection: {d.serialize()}")


def _base_cell_of_range(lo: int, hi: int, chords: list[Chord]) -> Cell:
    """Vertices of the cell containing side (lo, hi) of the sub-polygon lo..hi.

    A vertex v in (lo, hi) belongs to that cell iff no chord inside the range
    separates it from the closing side, i.e. no chord (a, b) != (lo, hi) with
    lo <= a < v < b <= hi.
    """
    covered = set()
    for a, b in chords:
        if lo <= a and b <= hi and (a, b) != (lo, hi):
            covered.update(range(a + 1, b))
    return tuple(v for v in range(lo, hi + 1) if v not in covered)


def _collect_cells(lo: int, hi: int, chords: list[Chord], out: list[Cell]) -> None:
    if hi - lo == 1:
        return
    cell = _base_cell_of_range(lo, hi, chords)
    out.append(cell)
    for a, b in zip(cell, cell[1:]):
        _collect_cells(a, b, chords, out)


def cells_of(d: Dissection) -> list[Cell]:
    """The m = |chords|+1 cells, found by recursive splitting from the base edge.

    Cells are returned sorted by their vertex tuples.
    """
    require_valid(d)
    inner = [c for c in d.sorted_chords()]
    out: list[Cell] = []
    _collect_cells(0, d.n + 1, inner, out)
    return sorted(out)


def quiddity_of(d: Dissection) -> Quiddity:
    """Per-vertex cell counts: a_i = 1 + number of chords at vertex i."""
    require_valid(d)
    counts = [1] * (d.n + 2)
    for i, j in d.chords:
        counts[i] += 1
        counts[j] += 1
    return tuple(counts)


def is_l_periodic(d: Dissection, ell: int) -> bool:
    """True iff every cell size is congruent to 3 mod ell."""
    require_valid(d)
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    return all((len(cell) - 3) % ell == 0 for cell in cells_of(d))


def multi_index_of(d: Dissection) -> MultiIndex:
    """m_r = number of (r+2)-cells, as a tuple (m_1, m_2, ...) without trailing zeros."""
    cells = cells_of(d)
    top = max(len(c) for c in cells) - 2
    m = [0] * top
    for cell in cells:
        m[len(cell) - 3] += 1
    while m and m[-1] == 0:
        m.pop()
    return tuple(m)


def mi_weight(m: MultiIndex) -> int:
    """The weight sum(r * m_r); equals the polygon size parameter n."""
    return sum((r + 1) * v for r, v in enumerate(m))


def mi_size(m: MultiIndex) -> int:
    """The size sum(m_r); equals the number of cells m."""
    return sum(m)


def quiddity_rotations(q: Quiddity) -> set[Quiddity]:
    """All cyclic rotations of a quiddity.  Never used in counts, which
    treat quiddities as labeled tuples at fixed vertex positions."""
    return {q[i:] + q[:i] for i in range(len(q))}


CellFilter = Callable[[int], bool]
