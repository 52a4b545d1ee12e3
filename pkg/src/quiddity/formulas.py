"""Closed-form coefficient formulas, in exact integer arithmetic.

Every division is performed with an explicit exactness check: a non-zero
remainder means the implementation (not the input) is wrong, so it raises.
Out-of-domain (n, k) return 0, matching the "coefficients are 0 unless"
convention of the source formulas.
"""

from __future__ import annotations

import math
from typing import Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k), zero for k < 0 or k > n.

    C(n, 0) = 1 for every n, including negative n (empty falling factorial);
    the k = 0 case with negative top index does occur in the coefficient
    sums, at the diagonal where the cell count equals 1.
    """
    if k == 0:
        return 1
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise ArithmeticError(f"inexact division {num}/{den}")
    return q


def multinomial(top: int, parts: Sequence[int]) -> int:
    """top! / (parts_1! ... parts_k!), requiring sum(parts) == top."""
    if any(p < 0 for p in parts):
        return 0
    if sum(parts) != top:
        raise ValueError(f"multinomial parts {parts} do not sum to {top}")
    out = 1
    rest = top
    for p in parts:
        out *= math.comb(rest, p)
        rest -= p
    return out


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan is defined for n >= 0")
    return exact_div(binomial(2 * n, n), n + 1)


def P_nk(n: int, k: int) -> int:
    """Number of maximally open base-open 3-periodic dissections of the
    (n+2)-gon with n-3k cells.

    The constant term P_{0,0} is 1; otherwise 0 outside 0 <= k < n/3."""
    if n == 0 and k == 0:
        return 1
    if n < 1 or k < 0 or 3 * k >= n:
        return 0
    return exact_div(
        binomial(n - 2 * k - 1, k) * binomial(2 * n - 4 * k, n - 3 * k), n - k + 1
    )


def Q_nk(n: int, k: int) -> int:
    """Number of 3-periodic quiddities of the (n+2)-gon with n-3k cells,
    equivalently positive matrix-equation solutions of length n+2 with total
    sum 3(n-2k).

    The constant term Q_{0,0} is 1; otherwise 0 outside 0 <= k < n/3."""
    if n == 0 and k == 0:
        return 1
    if n < 1 or k < 0 or 3 * k >= n:
        return 0
    total = 0
    for s in range(k + 1):
        term = (
            (3 * (k - s) + 2)
            * binomial(n - 3 * k + s - 2, s)
            * binomial(2 * n - 3 * k - s - 1, n - 3 * k - 1)
        )
        total += exact_div(term, n - s + 1)
    return total


def P_total(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return sum(P_nk(n, k) for k in range(0, (n + 2) // 3))


def Q_total(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return sum(Q_nk(n, k) for k in range(0, (n + 2) // 3))


def D_l_nm(ell: int, n: int, m: int) -> int:
    """The ell-periodic Kirkman-Cayley count: dissections of the (n+2)-gon
    into m cells, all of size congruent to 3 mod ell; 0 unless ell | n-m."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    if n < 1 or m <= 0 or m > n:
        return 0
    if (n - m) % ell != 0:
        return 0
    k = (n - m) // ell
    value = exact_div(
        binomial(m - 1 + (n - m) // ell, m - 1) * binomial(n + m, m), n + 1
    )
    alt = exact_div(
        binomial(n - (ell - 1) * k - 1, k) * binomial(2 * n - ell * k, n - ell * k),
        n + 1,
    )
    assert value == alt
    return value


def D_l_total(ell: int, n: int) -> int:
    """Total number of ell-periodic dissections of the (n+2)-gon."""
    if n == 0:
        return 1
    return sum(D_l_nm(ell, n, n - ell * k) for k in range(0, (n + ell - 1) // ell))


def D_multi(m: Sequence[int]) -> int:
    """Number of dissections with m_r cells of size r+2 for every r."""
    weight = sum((r + 1) * v for r, v in enumerate(m))
    size = sum(m)
    if any(v < 0 for v in m):
        return 0
    if size == 0:
        return 1
    return exact_div(multinomial(weight + size, [weight, *m]), weight + 1)


def P_multi(m: Sequence[int]) -> int:
    """Number of maximally open base-open 3-periodic dissections with
    multi-index m; 0 unless m is 3-periodic (m_r = 0 for r != 1 mod 3)."""
    if any(v < 0 for v in m):
        return 0
    if any(v != 0 and (r + 1) % 3 != 1 for r, v in enumerate(m)):
        return 0
    weight = sum((r + 1) * v for r, v in enumerate(m))
    size = sum(m)
    if size == 0:
        return 1
    a = exact_div(2 * weight + size, 3)
    top = exact_div(2 * weight + 4 * size, 3)
    return exact_div(multinomial(top, [a, *m]), a + 1)


def power_coeff(ell: int, e: int, n: int, k: int) -> int:
    """Coefficient of z^n w^(n-ell*k) in the e-th power of the ell-periodic
    dissection BGF; the constant term (n = k = 0) is 1."""
    if e < 1:
        raise ValueError("e must be a positive integer")
    if n == 0 and k == 0:
        return 1
    if n < 1 or k < 0 or ell * k >= n:
        return 0
    return exact_div(
        e
        * binomial(n - (ell - 1) * k - 1, k)
        * binomial(2 * n - ell * k + e - 1, n - ell * k),
        n + e,
    )


def P_power_coeff(e: int, n: int, k: int) -> int:
    """Coefficient of z^n w^(n-3k) in the e-th power of the base-open BGF;
    the constant term (n = k = 0) is 1."""
    if e < 1:
        raise ValueError("e must be a positive integer")
    if n == 0 and k == 0:
        return 1
    if n < 1 or k < 0 or 3 * k >= n:
        return 0
    return exact_div(
        e * binomial(n - 2 * k - 1, k) * binomial(2 * n - 4 * k + e - 1, n - 3 * k),
        n - k + e,
    )


def Q_n3(n: int) -> int:
    """Q_{n,n-3} in both printed closed forms, cross-asserted; 0 for n < 4."""
    if n < 4:
        return 0
    first = binomial(2 * n - 4, n - 4) + exact_div(
        6 * binomial(2 * n - 5, n - 5), n + 1
    )
    second = binomial(2 * n - 3, n - 4) - 2 * binomial(2 * n - 5, n - 6)
    assert first == second
    return first


def Q_n6(n: int) -> int:
    """Q_{n,n-6} in closed form; 0 for n < 7."""
    if n < 7:
        return 0
    return (
        exact_div((n - 5) * binomial(2 * n - 6, n - 7), 2)
        - (n + 2) * binomial(2 * n - 8, n - 9)
        - (n - 2) * binomial(2 * n - 9, n - 10)
    )


def blowup_count(n: int) -> int:
    """Number of marked fans obtained from the projective-plane fan by n
    blow-ups: Q_{n+1,n-2} + (n+3)(2 C_n - C_{n-1})."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    value = Q_nk(n + 1, 1) + (n + 3) * (2 * catalan(n) - catalan(n - 1))
    if n >= 2:
        closed = exact_div((n + 4) * binomial(2 * n + 1, n - 1), n)
        assert value == closed
    return value
