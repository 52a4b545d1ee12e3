"""The Conway-Coxeter matrix equation.

The equation asks for integer tuples (a_1, ..., a_N) whose product of
factors [[a_i, -1], [1, 0]] equals plus or minus the identity.  This module
provides the product, Euler continuants, Hirzebruch-Jung continued-fraction
values, solution classification, and a pruned exhaustive search for positive
solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


class _Infinity:
    """Marker for a Hirzebruch-Jung value with zero denominator."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "∞"


INFINITY = _Infinity()

DEFAULT_SEARCH_BOUND = 11


@dataclass(frozen=True)
class Mat2:
    """A 2x2 integer matrix (a b / c d)."""

    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)


IDENTITY = Mat2(1, 0, 0, 1)


def cc_factor(a: int) -> Mat2:
    return Mat2(a, -1, 1, 0)


def cc_product(entries: Sequence[int]) -> Mat2:
    """Left-to-right product of the factors [[a_i, -1], [1, 0]]."""
    if len(entries) == 0:
        raise ValueError("cc_product requires at least one entry")
    m = cc_factor(entries[0])
    for a in entries[1:]:
        m = m * cc_factor(a)
    return m


@dataclass(frozen=True)
class SolutionClass:
    """Classification of a solution: length N, total sum T, defect k, sign.

    T = 3(N-2) - 6k and the right-hand side is sign * Id with
    sign = (-1)^(k+1).  k is None when T - 3(N-2) is not a multiple of 6
    (possible only for solutions with non-positive entries).
    """

    N: int
    T: int
    k: Optional[int]
    sign: int


def is_cc_solution(entries: Sequence[int]) -> Optional[SolutionClass]:
    """Classify `entries` if its product is +-Id, else None."""
    m = cc_product(entries)
    if (m.a, m.b, m.c, m.d) == (1, 0, 0, 1):
        sign = 1
    elif (m.a, m.b, m.c, m.d) == (-1, 0, 0, -1):
        sign = -1
    else:
        return None
    n_len = len(entries)
    total = sum(entries)
    defect6 = 3 * (n_len - 2) - total
    k = defect6 // 6 if defect6 % 6 == 0 else None
    if all(a >= 1 for a in entries):
        assert k is not None and 0 <= k <= n_len / 3 - 1
        assert sign == (-1) ** (k + 1)
    return SolutionClass(n_len, total, k, sign)


def continuant(entries: Sequence[int]) -> int:
    """Euler's continuant K_N: K_0 = 1, K_1 = a_1, K_N = a_N K_{N-1} - K_{N-2}."""
    prev, cur = 0, 1
    for a in entries:
        prev, cur = cur, a * cur - prev
    return cur


def hj_value(entries: Sequence[int]):
    """The Hirzebruch-Jung continued fraction [[a_1, ..., a_N]] as a Fraction.

    Returns the INFINITY marker when the denominator continuant vanishes;
    zero denominators are meaningful (continued fractions representing zero).
    """
    if len(entries) == 0:
        raise ValueError("hj_value requires at least one entry")
    num = continuant(entries)
    den = continuant(entries[1:])
    if den == 0:
        return INFINITY
    return Fraction(num, den)


def _suffix_bounds(length: int, bound: int) -> list[int]:
    # fib[j] bounds |K_j| over sequences of length j with entries in [1, bound]
    fib = [1, bound]
    while len(fib) <= length:
        fib.append(bound * fib[-1] + fib[-2])
    return fib


def _search(N: int, bound: int, first: Optional[int] = None) -> list[tuple[int, ...]]:
    """DFS for positive solutions, optionally pinned to a first coordinate.

    State is the partial product (p q / r s).  Prunes: entries at most N-2
    (each a_i counts cells of a dissection with at most N-2 cells), total sum
    at most 3N-6, and partial-product entries bounded by what the remaining
    suffix continuants can cancel.
    """
    B = N - 2
    t_max = 3 * N - 6
    fib = _suffix_bounds(N, B)
    out: list[tuple[int, ...]] = []
    firsts = range(1, B + 1) if first is None else range(first, first + 1)

    def dfs(prefix: list[int], p: int, q: int, r: int, s: int, total: int) -> None:
        j = N - len(prefix)  # factors still to place
        if j == 1:
            # closing entry is forced: need -p = 0, r a + s = 0, p a + q = -r
            if p != 0 or abs(q) != 1 or r != -q:
                return
            if s % r != 0:
                return
            a = -s // r
            if 1 <= a <= B and total + a <= t_max:
                out.append(tuple(prefix) + (a,))
            return
        if abs(r) > fib[j - 1] or abs(q) > fib[j - 1]:
            return
        if abs(p) > fib[j - 2] or abs(s) > fib[j]:
            return
        for a in range(1, B + 1):
            if total + a + (j - 1) > t_max:
                break
            dfs(prefix + [a], p * a + q, -p, r * a + s, -r, total + a)

    for a1 in firsts:
        dfs([a1], a1, -1, 1, 0, a1)
    return out


def enumerate_positive_solutions(
    N: int, *, bound: int = DEFAULT_SEARCH_BOUND, jobs: int = 1
) -> set[tuple[int, ...]]:
    """All positive integer tuples of length N solving the matrix equation.

    With jobs > 1 the search is split by first coordinate across processes;
    results are identical to the sequential run.
    """
    if N < 3:
        raise ValueError("no positive solutions exist for N < 3")
    if N > bound:
        raise ValueError(
            f"N={N} exceeds the configured search bound {bound}; "
            f"pass a larger bound= explicitly if you really want this"
        )
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_search_first, [(N, bound, a) for a in range(1, N - 1)])
        return set().union(*map(set, parts))
    return set(_search(N, bound))


def _search_first(args: tuple[int, int, int]) -> list[tuple[int, ...]]:
    N, bound, first = args
    return _search(N, bound, first)
