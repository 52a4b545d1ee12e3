import random
from collections import Counter, defaultdict

import pytest

from quiddity import enumeration as en
from quiddity import formulas, geometry
from quiddity import surgery as su
from quiddity.geometry import Dissection
from known_cases import MO_NOT_BO_16GON, MO_NOT_BO_16GON_CHORD_INDEX, OPEN_CHAIN


def three_periodic(n):
    return en.enumerate_dissections(n, en.periodic_filter(3))


def test_index_trivial_triangle():
    x = su.index(Dissection.make(1, []))
    assert x.cells == ((0, 1, 2),)
    assert x.levels == (0,)
    assert x.parents == (None,)
    # base edge 0, then 1, 2 counterclockwise
    assert x.side_index[(0, 2)] == 0
    assert x.side_index[(0, 1)] == 1
    assert x.side_index[(1, 2)] == 2


def test_index_rejects_non_periodic():
    with pytest.raises(ValueError):
        su.index(Dissection.make(2, []))  # a lone square cell
    with pytest.raises(ValueError):
        su.index(Dissection.make(3, [(0, 2), (1, 3)]))  # invalid


def test_index_sixteen_gon_figure():
    x = su.index(MO_NOT_BO_16GON)
    for chord, idx in MO_NOT_BO_16GON_CHORD_INDEX.items():
        assert x.side_index[chord] == idx, chord
    assert su.is_maximally_open(x)
    assert not su.is_base_open(x)


def test_index_octagon_two_triangles():
    x = su.index(Dissection.make(6, [(1, 3), (4, 6)]))
    base = x.cells[x.base_cell]
    assert base == (0, 1, 3, 4, 6, 7)
    assert x.side_index[(1, 3)] == 2
    assert x.side_index[(4, 6)] == 1
    by_cell = {x.cells[ci]: x.levels[ci] for ci in range(len(x.cells))}
    assert by_cell == {(0, 1, 3, 4, 6, 7): 0, (1, 2, 3): 1, (4, 5, 6): 1}


def test_levels_count_ancestors(three_periodic_pool):
    for d in three_periodic_pool[7]:
        x = su.index(d)
        for ci in range(len(x.cells)):
            depth, cur = 0, x.parents[ci]
            while cur is not None:
                depth += 1
                cur = x.parents[cur]
            assert x.levels[ci] == depth


def test_legal_moves_trivial_and_fan():
    assert su.legal_moves(su.index(Dissection.make(1, []))) == []
    # pentagon fan: chords (0,2) and (2,4) sit in the base cell with
    # different indices, so no move exists
    x = su.index(Dissection.make(3, [(0, 2), (2, 4)]))
    assert su.legal_moves(x) == []


def test_opening_chain_figure():
    x = su.index(OPEN_CHAIN[0])
    assert sorted(Counter(x.levels).items()) == [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]
    for step, expected in enumerate(OPEN_CHAIN[1:], start=1):
        openings = [mv for mv in su.legal_moves(x) if mv.kind == "opening"]
        assert len(openings) == 1
        x = su.apply(x, openings[0])
        assert x.d == expected
    assert su.is_maximally_open(x)
    assert su.is_base_open(x)
    canon, trace = su.canonicalize(OPEN_CHAIN[0], with_trace=True)
    assert canon == OPEN_CHAIN[2]
    assert len(trace) == 2


def test_apply_rejects_illegal_moves():
    x = su.index(Dissection.make(3, [(0, 2), (2, 4)]))
    with pytest.raises(ValueError):
        su.apply(x, su.SurgeryMove(cell=x.base_cell, s=0, s2=3, kind="closing"))


def test_apply_is_reversible(three_periodic_pool):
    for d in three_periodic_pool[6]:
        x = su.index(d)
        for mv in su.legal_moves(x):
            y = su.apply(x, mv)
            back = [w for w in su.legal_moves(y) if su.apply(y, w).d == d]
            assert back, (d, mv)


def test_surgery_preserves_quiddity_and_periodicity(three_periodic_pool):
    for n in range(1, 9):
        for d in three_periodic_pool[n]:
            x = su.index(d)
            quid = geometry.quiddity_of(d)
            for mv in su.legal_moves(x):
                y = su.apply(x, mv)
                assert geometry.quiddity_of(y.d) == quid
                assert geometry.is_l_periodic(y.d, 3)


def test_surgery_preserves_indices_of_unchanged_sides(three_periodic_pool):
    for d in three_periodic_pool[7]:
        x = su.index(d)
        for mv in su.legal_moves(x):
            y = su.apply(x, mv)
            removed = {x.side(mv.cell, mv.s), x.side(mv.cell, mv.s2)}
            for side, idx in x.side_index.items():
                if side not in removed:
                    assert y.side_index[side] == idx
            # the two new sides carry the index of the pair they replace
            old_idx = x.side_index[next(iter(removed))]
            for side in y.d.chords - x.d.chords:
                assert y.side_index[side] == old_idx


def test_same_index_sides_are_distant(three_periodic_pool):
    for n in range(1, 9):
        for d in three_periodic_pool[n]:
            x = su.index(d)
            for ci, verts in enumerate(x.cells):
                r2 = len(verts)
                for s in range(r2):
                    for s2 in range(s + 1, r2):
                        if x.side_z3(ci, s) == x.side_z3(ci, s2):
                            assert s2 >= s + 3 and s >= (s2 + 3) - r2


def test_openings_count_rule(three_periodic_pool):
    # per cell: number of openings = number of non-base chord sides whose
    # index equals the base side's index
    for d in three_periodic_pool[7]:
        x = su.index(d)
        openings = Counter(
            mv.cell for mv in su.legal_moves(x) if mv.kind == "opening"
        )
        for ci, verts in enumerate(x.cells):
            r2 = len(verts)
            beta = x.cell_z3(ci)
            expected = sum(
                1
                for pos in range(r2 - 1)
                if x.side_z3(ci, pos) == beta and x.side(ci, pos) in d.chords
            )
            if ci == x.base_cell:
                expected = 0  # its base side is an edge, never a chord pair
            assert openings.get(ci, 0) == expected


def test_opening_decreases_level_sum(three_periodic_pool):
    for d in three_periodic_pool[8][:500]:
        x = su.index(d)
        for mv in su.legal_moves(x):
            if mv.kind != "opening":
                continue
            y = su.apply(x, mv)
            assert sum(y.levels) <= sum(x.levels) - 1


def test_canonical_uniqueness(three_periodic_pool):
    for n in range(1, 8):
        groups = defaultdict(list)
        for d in three_periodic_pool[n]:
            groups[geometry.quiddity_of(d)].append(d)
        for quid, members in groups.items():
            open_members = [
                d for d in members if su.is_maximally_open(su.index(d))
            ]
            assert len(open_members) == 1
            for d in members:
                assert su.canonicalize(d) == open_members[0]


def test_canonicalize_fixed_point():
    canon = su.canonicalize(MO_NOT_BO_16GON)
    assert canon == MO_NOT_BO_16GON


def test_octagon_collision_pairs(three_periodic_pool):
    groups = defaultdict(list)
    for d in three_periodic_pool[6]:
        if len(d.chords) + 1 == 3:
            groups[geometry.quiddity_of(d)].append(d)
    sizes = Counter(len(v) for v in groups.values())
    assert sum(len(v) for v in groups.values()) == 36
    assert len(groups) == 34
    assert sizes == {1: 32, 2: 2}
    for members in groups.values():
        if len(members) == 2:
            a, b = members
            path = su.connected_by_surgeries(a, b, max_moves=1)
            assert path is not None and len(path) == 1
            assert su.canonicalize(a) == su.canonicalize(b)


def test_maximally_open_counts_match_tables(three_periodic_pool):
    for n in range(1, 8):
        mo = Counter()
        mobo = Counter()
        for d in three_periodic_pool[n]:
            x = su.index(d)
            if su.is_maximally_open(x):
                m = len(d.chords) + 1
                mo[m] += 1
                if su.is_base_open(x):
                    mobo[m] += 1
        for m in range(1, n + 1):
            if (n - m) % 3 == 0:
                k = (n - m) // 3
                assert mo.get(m, 0) == formulas.Q_nk(n, k)
                assert mobo.get(m, 0) == formulas.P_nk(n, k)


def test_is_base_open_requires_maximally_open():
    x = su.index(OPEN_CHAIN[0])  # admits an opening
    assert not su.is_maximally_open(x)
    with pytest.raises(ValueError):
        su.is_base_open(x)


def test_blow_up():
    tri = Dissection.make(1, [])
    b = su.blow_up(tri, 0)
    assert geometry.quiddity_of(b) == (2, 1, 2, 1)
    assert b.n == 2
    with pytest.raises(ValueError):
        su.blow_up(tri, 3)
    rng = random.Random(11)
    pool = list(three_periodic(5))
    for _ in range(20):
        d = rng.choice(pool)
        quid = geometry.quiddity_of(d)
        i = rng.randrange(d.n + 2)
        out = su.blow_up(d, i)
        if i < d.n + 1:
            expect = quid[:i] + (quid[i] + 1, 1, quid[i + 1] + 1) + quid[i + 2 :]
        else:
            expect = (quid[0] + 1,) + quid[1 : d.n + 1] + (quid[d.n + 1] + 1, 1)
        assert geometry.quiddity_of(out) == expect
        assert out.n == d.n + 1
        assert sum(geometry.quiddity_of(out)) == sum(quid) + 3
        assert geometry.is_l_periodic(out, 3)


def test_expand():
    tri = Dissection.make(1, [])
    e = su.expand(tri, 0, (1, 1))
    assert e == Dissection.make(4, [])
    assert geometry.quiddity_of(e) == (1, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        su.expand(tri, 0, (1, 2))  # must sum to a_i + 1 = 2
    rng = random.Random(13)
    pool = list(three_periodic(5))
    for _ in range(30):
        d = rng.choice(pool)
        quid = geometry.quiddity_of(d)
        i = rng.randrange(d.n + 2)
        a1 = rng.randint(1, quid[i])
        a2 = quid[i] + 1 - a1
        out = su.expand(d, i, (a1, a2))
        got = geometry.quiddity_of(out)
        assert got == quid[:i] + (a1, 1, 1, a2) + quid[i + 1 :]
        assert out.n == d.n + 3
        assert sum(got) == sum(quid) + 3
        assert geometry.is_l_periodic(out, 3)


def test_reachability_by_blowups_and_expansions(three_periodic_pool):
    # closure of {triangle} under blow-up and expansion covers every
    # 3-periodic dissection (hence every quiddity) up to n = 6
    limit = 6
    seen = {Dissection.make(1, [])}
    frontier = list(seen)
    while frontier:
        nxt = []
        for d in frontier:
            if d.n + 1 <= limit:
                for i in range(d.n + 2):
                    b = su.blow_up(d, i)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            if d.n + 3 <= limit:
                quid = geometry.quiddity_of(d)
                for i in range(d.n + 2):
                    for a1 in range(1, quid[i] + 1):
                        e = su.expand(d, i, (a1, quid[i] + 1 - a1))
                        if e not in seen:
                            seen.add(e)
                            nxt.append(e)
        frontier = nxt
    for n in range(1, limit + 1):
        expected = set(three_periodic_pool[n])
        got = {d for d in seen if d.n == n}
        assert got == expected
        assert {geometry.quiddity_of(d) for d in got} == {
            geometry.quiddity_of(d) for d in expected
        }


def test_canonicalize_trace_format():
    canon, trace = su.canonicalize(OPEN_CHAIN[0], with_trace=True)
    for cell_vertices, mv in trace:
        assert mv.kind == "opening"
        assert 0 <= mv.s < mv.s2 <= len(cell_vertices) - 1
