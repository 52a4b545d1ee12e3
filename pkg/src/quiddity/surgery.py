"""Levels, base sides, Z3-indices, surgery, and canonical representatives.

Only 3-periodic dissections are indexed.  Each cell stores its vertices in
increasing label order v_0 < ... < v_{r+1}; its sides sit at positions
0..r+1, where position s < r+1 is the segment (v_s, v_{s+1}) and position
r+1 is the wrap side (v_0, v_{r+1}).  The wrap side is always the cell's
base side: for the base cell it is the base edge (n+1, 0), and for any other
cell it is the chord separating it from the base cell.  Going
counterclockwise from the base side, Z3-indices increase by 1 per side, so
the side at position s carries index (base_index + s + 1) mod 3.

Surgery on two distant chord sides of a cell replaces them by the other two
sides of the quadrilateral spanned by their endpoints.  It is 3-periodic
(preserves cell sizes mod 3) exactly when the two sides share a Z3-index,
and it never changes the quiddity.  A dissection admitting no opening
surgery is maximally open; each quiddity class of 3-periodic dissections
contains exactly one maximally open element, which canonicalize computes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import geometry
from .geometry import Chord, Dissection


@dataclass(frozen=True)
class SurgeryMove:
    """Surgery on side positions s < s2 of cell number `cell`."""

    cell: int
    s: int
    s2: int
    kind: str  # "opening" | "closing"


@dataclass(frozen=True)
class IndexedDissection:
    """A 3-periodic dissection with levels, parents, and Z3-indices."""

    d: Dissection
    cells: tuple[tuple[int, ...], ...]
    levels: tuple[int, ...]
    parents: tuple[int | None, ...]
    base_cell: int
    side_index: dict[Chord, int]  # Z3-index of every edge and chord

    def side(self, cell: int, pos: int) -> Chord:
        """The vertex pair at side position pos of the given cell."""
        verts = self.cells[cell]
        if pos == len(verts) - 1:
            return (verts[0], verts[-1])
        return (verts[pos], verts[pos + 1])

    def side_z3(self, cell: int, pos: int) -> int:
        return self.side_index[self.side(cell, pos)]

    def cell_z3(self, cell: int) -> int:
        """The Z3-index of a cell is the index of its base side."""
        return self.side_index[self.side(cell, len(self.cells[cell]) - 1)]


def index(d: Dissection) -> IndexedDissection:
    """Populate levels, parents, base sides, and Z3-indices.

    The assignment is unique: the base edge is seeded with index 0 and cells
    are processed outward by level, each cell indexing its non-base sides
    from its already-indexed base side.
    """
    geometry.require_valid(d)
    if not geometry.is_l_periodic(d, 3):
        raise ValueError("Z3-indexing is defined only for 3-periodic dissections")
    cells = tuple(geometry.cells_of(d))
    base_pair = (0, d.n + 1)

    owners: dict[Chord, list[int]] = {}
    for ci, verts in enumerate(cells):
        r2 = len(verts)
        for pos in range(r2):
            pair = (verts[pos], verts[pos + 1]) if pos < r2 - 1 else (verts[0], verts[-1])
            owners.setdefault(pair, []).append(ci)

    base_cell = owners[base_pair][0]
    parents: list[int | None] = [None] * len(cells)
    levels = [0] * len(cells)
    for ci, verts in enumerate(cells):
        if ci == base_cell:
            continue
        pair = (verts[0], verts[-1])
        a, b = owners[pair]
        parents[ci] = b if a == ci else a
    # level = number of ancestors along the parent chain
    for ci in range(len(cells)):
        depth, cur = 0, parents[ci]
        while cur is not None:
            depth += 1
            cur = parents[cur]
        levels[ci] = depth

    side_index: dict[Chord, int] = {base_pair: 0}
    for ci in sorted(range(len(cells)), key=lambda c: levels[c]):
        verts = cells[ci]
        beta = side_index[(verts[0], verts[-1])]
        for pos in range(len(verts) - 1):
            side_index[(verts[pos], verts[pos + 1])] = (beta + pos + 1) % 3

    return IndexedDissection(d, cells, tuple(levels), tuple(parents), base_cell, side_index)


def _distant(s: int, s2: int, r2: int) -> bool:
    """Both arcs between the sides contain a vertex of the cell."""
    return s2 >= s + 3 and s >= (s2 + 3) - r2


def legal_moves(x: IndexedDissection) -> list[SurgeryMove]:
    """All 3-periodic surgery moves: pairs of chord sides of a cell with the
    same Z3-index, tagged opening when one of them is the cell's base side."""
    chords = x.d.chords
    moves: list[SurgeryMove] = []
    for ci, verts in enumerate(x.cells):
        r2 = len(verts)
        chord_positions = [
            pos for pos in range(r2) if x.side(ci, pos) in chords
        ]
        for i, s in enumerate(chord_positions):
            for s2 in chord_positions[i + 1 :]:
                if x.side_z3(ci, s) != x.side_z3(ci, s2):
                    continue
                # equal-index sides of a cell in a 3-periodic dissection
                # are automatically distant
                assert _distant(s, s2, r2)
                kind = "opening" if s2 == r2 - 1 else "closing"
                moves.append(SurgeryMove(ci, s, s2, kind))
    return moves


def apply(x: IndexedDissection, mv: SurgeryMove) -> IndexedDissection:
    """Perform the surgery: replace the two sides by the other two sides of
    their quadrilateral.  The result is re-indexed from scratch."""
    if not 0 <= mv.cell < len(x.cells):
        raise ValueError(f"illegal surgery move {mv}")
    verts = x.cells[mv.cell]
    r2 = len(verts)
    if not 0 <= mv.s < mv.s2 < r2:
        raise ValueError(f"illegal surgery move {mv}")
    old_a, old_b = x.side(mv.cell, mv.s), x.side(mv.cell, mv.s2)
    chords = x.d.chords
    if (
        old_a not in chords
        or old_b not in chords
        or x.side_index[old_a] != x.side_index[old_b]
        or not _distant(mv.s, mv.s2, r2)
    ):
        raise ValueError(f"illegal surgery move {mv}")
    va, vb = verts[(mv.s + 1) % r2], verts[mv.s2]
    vc, vd = verts[(mv.s2 + 1) % r2], verts[mv.s]
    new_a = (min(va, vb), max(va, vb))
    new_b = (min(vc, vd), max(vc, vd))
    new_chords = (chords - {old_a, old_b}) | {new_a, new_b}
    return index(Dissection(x.d.n, frozenset(new_chords)))


def is_maximally_open(x: IndexedDissection) -> bool:
    """True iff no 3-periodic opening surgery exists."""
    return not any(mv.kind == "opening" for mv in legal_moves(x))


def is_base_open(x: IndexedDissection) -> bool:
    """True iff in every cell (base cell included) every non-base side with
    the Z3-index of the base side is an edge.  Requires maximal openness."""
    if not is_maximally_open(x):
        raise ValueError("is_base_open requires a maximally open dissection")
    chords = x.d.chords
    for ci, verts in enumerate(x.cells):
        r2 = len(verts)
        beta = x.cell_z3(ci)
        for pos in range(r2 - 1):
            if x.side_z3(ci, pos) == beta and x.side(ci, pos) in chords:
                return False
    return True


def canonicalize(d: Dissection, *, with_trace: bool = False):
    """The unique maximally open dissection with the same quiddity.

    Opening moves are applied highest level first (ties: lowest cell, then
    lowest side position).  The output is independent of this order; the
    tie-break only fixes the trace.
    """
    x = index(d)
    trace: list[tuple[tuple[int, ...], SurgeryMove]] = []
    while True:
        openings = [mv for mv in legal_moves(x) if mv.kind == "opening"]
        if not openings:
            break
        mv = min(openings, key=lambda m: (-x.levels[m.cell], x.cells[m.cell], m.s))
        trace.append((x.cells[mv.cell], mv))
        x = apply(x, mv)
    if with_trace:
        return x.d, trace
    return x.d


def blow_up(d: Dissection, i: int) -> Dissection:
    """Attach a triangle to the (i, i+1) edge (i = n+1 attaches to the base
    edge).  Quiddity becomes (..., a_i + 1, 1, a_{i+1} + 1, ...)."""
    geometry.require_valid(d)
    n = d.n
    if not 0 <= i <= n + 1:
        raise ValueError(f"edge index {i} out of range 0..{n + 1}")
    if i == n + 1:
        return Dissection(n + 1, d.chords | {(0, n + 1)})
    remap = lambda v: v if v <= i else v + 1
    chords = {(remap(a), remap(b)) for a, b in d.chords}
    chords.add((i, i + 2))
    return Dissection(n + 1, frozenset(chords))


def expand(d: Dissection, i: int, split: tuple[int, int]) -> Dissection:
    """Expand vertex i into an edge path i', x, y, i'' of three new edges,
    splitting the chord pencil at i contiguously.

    split = (a1, a2) with a1 + a2 = a_i + 1 chooses how many cells stay with
    each copy; the a2 - 1 chords nearest the (i, i+1) edge move to i''.  The
    quiddity becomes (..., a_{i-1}, a1, 1, 1, a2, a_{i+1}, ...).
    """
    geometry.require_valid(d)
    n = d.n
    if not 0 <= i <= n + 1:
        raise ValueError(f"vertex {i} out of range 0..{n + 1}")
    a1, a2 = split
    a_i = geometry.quiddity_of(d)[i]
    if a1 < 1 or a2 < 1 or a1 + a2 != a_i + 1:
        raise ValueError(f"split {split} is not a contiguous partition at a vertex of quiddity {a_i}")
    total = n + 2
    at_i = sorted(
        (t for c in d.chords for t in c if i in c and t != i),
        key=lambda t: (t - i) % total,
    )
    to_second = set(at_i[: a2 - 1])  # nearest the (i, i+1) edge, moved to i''
    remap = lambda v: v if v < i else v + 3
    chords = set()
    for a, b in d.chords:
        if i in (a, b):
            t = b if a == i else a
            src = i + 3 if t in to_second else i
            chords.add((min(src, remap(t)), max(src, remap(t))))
        else:
            chords.add((remap(a), remap(b)))
    out = Dissection(n + 3, frozenset(chords))
    geometry.require_valid(out)
    return out


def connected_by_surgeries(d1: Dissection, d2: Dissection, max_moves: int) -> list[SurgeryMove] | None:
    """Search for a 3-periodic surgery path from d1 to d2 (BFS, both opening
    and closing moves).  Returns the move list or None.

    Whether equal quiddities always imply such a path is open for general
    dissections; in the 3-periodic case connectivity holds via the canonical
    representative.
    """
    if geometry.quiddity_of(d1) != geometry.quiddity_of(d2):
        return None
    start = index(d1)
    target = d2.chords
    frontier: list[tuple[IndexedDissection, list[SurgeryMove]]] = [(start, [])]
    seen = {d1.chords}
    for _ in range(max_moves):
        nxt: list[tuple[IndexedDissection, list[SurgeryMove]]] = []
        for x, path in frontier:
            for mv in legal_moves(x):
                y = apply(x, mv)
                if y.d.chords == target:
                    return path + [mv]
                if y.d.chords not in seen:
                    seen.add(y.d.chords)
                    nxt.append((y, path + [mv]))
        frontier = nxt
    return None
