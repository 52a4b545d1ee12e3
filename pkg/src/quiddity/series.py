"""Truncated formal power series over exact coefficients.

Three substrates: univariate (dense list over z), bivariate (z-graded rows
of w-polynomials), and multivariate (finitely supported monomials in
w_1, w_2, ...).  Arithmetic is exact modulo truncation: the truncated
product equals the truncation of the exact product.

The fixed-point solvers iterate F <- RHS(F) from F = 1.  Every RHS term
carries a factor that raises valuation, so each sweep fixes at least one
further coefficient; order+1 sweeps suffice and a final stabilization
assertion (one more sweep changes nothing) certifies the result.
Denominators all have constant term 1 and are inverted by the standard
truncated-geometric recurrence, so no general series division is needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .geometry import MultiIndex


class USeries:
    """Dense univariate series; coeffs[k] is the z^k coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = list(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def zero(order: int) -> "USeries":
        return USeries([0] * (order + 1))

    @staticmethod
    def one(order: int) -> "USeries":
        return USeries([1] + [0] * order)

    def coeff(self, k: int) -> int:
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, USeries) and self.coeffs == other.coeffs

    def __add__(self, other: "USeries") -> "USeries":
        assert self.order == other.order
        return USeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "USeries") -> "USeries":
        assert self.order == other.order
        return USeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: "USeries") -> "USeries":
        assert self.order == other.order
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return USeries(out)

    def shift(self, k: int) -> "USeries":
        """Multiply by z^k, truncating."""
        return USeries(([0] * k + self.coeffs)[: self.order + 1])

    def recip(self) -> "USeries":
        """Inverse of a series with constant term 1."""
        assert self.coeffs[0] == 1
        n = self.order
        out = [0] * (n + 1)
        out[0] = 1
        for k in range(1, n + 1):
            out[k] = -sum(self.coeffs[j] * out[k - j] for j in range(1, k + 1))
        return USeries(out)

    def pow(self, e: int) -> "USeries":
        out = USeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"USeries({self.coeffs})"


class BSeries:
    """Bivariate series; rows[n] maps m to the z^n w^m coefficient."""

    __slots__ = ("rows",)

    def __init__(self, rows: list[dict[int, object]]):
        self.rows = rows

    @property
    def order(self) -> int:
        return len(self.rows) - 1

    @staticmethod
    def zero(order: int) -> "BSeries":
        return BSeries([{} for _ in range(order + 1)])

    @staticmethod
    def one(order: int) -> "BSeries":
        rows: list[dict[int, object]] = [{0: 1}] + [{} for _ in range(order)]
        return BSeries(rows)

    @staticmethod
    def monomial(order: int, n: int, m: int, c=1) -> "BSeries":
        s = BSeries.zero(order)
        if n <= order and c != 0:
            s.rows[n][m] = c
        return s

    def coeff(self, n: int, m: int):
        if n > self.order:
            raise IndexError(f"coefficient z^{n} beyond truncation order {self.order}")
        return self.rows[n].get(m, 0)

    def support(self) -> set[tuple[int, int]]:
        return {(n, m) for n, row in enumerate(self.rows) for m, c in row.items() if c}

    def _clean(self) -> "BSeries":
        for row in self.rows:
            for m in [m for m, c in row.items() if c == 0]:
                del row[m]
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, BSeries) or self.order != other.order:
            return False
        a, b = self._clean(), other._clean()
        return a.rows == b.rows

    def __add__(self, other: "BSeries") -> "BSeries":
        assert self.order == other.order
        out = BSeries([dict(row) for row in self.rows])
        for n, row in enumerate(other.rows):
            target = out.rows[n]
            for m, c in row.items():
                target[m] = target.get(m, 0) + c
        return out._clean()

    def __sub__(self, other: "BSeries") -> "BSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "BSeries":
        return BSeries([{m: c * v for m, v in row.items()} for row in self.rows])

    def __mul__(self, other: "BSeries") -> "BSeries":
        assert self.order == other.order
        order = self.order
        out = BSeries.zero(order)
        for i, row_a in enumerate(self.rows):
            if not row_a:
                continue
            for j in range(order + 1 - i):
                row_b = other.rows[j]
                if not row_b:
                    continue
                target = out.rows[i + j]
                for m1, c1 in row_a.items():
                    for m2, c2 in row_b.items():
                        key = m1 + m2
                        target[key] = target.get(key, 0) + c1 * c2
        return out._clean()

    def recip(self) -> "BSeries":
        """Inverse of a series whose z^0 row is the constant 1."""
        assert self.rows[0] == {0: 1}
        order = self.order
        out = BSeries.zero(order)
        out.rows[0][0] = 1
        for n in range(1, order + 1):
            acc: dict[int, object] = {}
            for j in range(1, n + 1):
                for m1, c1 in self.rows[j].items():
                    for m2, c2 in out.rows[n - j].items():
                        key = m1 + m2
                        acc[key] = acc.get(key, 0) + c1 * c2
            out.rows[n] = {m: -c for m, c in acc.items() if c != 0}
        return out

    def pow(self, e: int) -> "BSeries":
        out = BSeries.one(self.order)
        base = self
        k = e
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __repr__(self) -> str:
        return f"BSeries(order={self.order}, terms={sorted(self.support())})"


class MSeries:
    """Multivariate series in w_1, w_2, ...; keys are multi-indices
    (m_1, m_2, ...) without trailing zeros, truncated by weight."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict[MultiIndex, int], order: int):
        self.coeffs = coeffs
        self.order = order

    @staticmethod
    def one(order: int) -> "MSeries":
        return MSeries({(): 1}, order)

    @staticmethod
    def w(order: int, r: int) -> "MSeries":
        """The monomial w_r (weight r)."""
        if r < 1:
            raise ValueError("w_r indices start at 1")
        key = tuple([0] * (r - 1) + [1])
        return MSeries({key: 1} if r <= order else {}, order)

    def coeff(self, m: Iterable[int]) -> int:
        key = tuple(m)
        while key and key[-1] == 0:
            key = key[:-1]
        return self.coeffs.get(key, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MSeries) or self.order != other.order:
            return False
        a = {k: v for k, v in self.coeffs.items() if v}
        b = {k: v for k, v in other.coeffs.items() if v}
        return a == b

    def __add__(self, other: "MSeries") -> "MSeries":
        assert self.order == other.order
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return MSeries({k: v for k, v in out.items() if v}, self.order)

    def __mul__(self, other: "MSeries") -> "MSeries":
        assert self.order == other.order
        out: dict[MultiIndex, int] = {}
        for k1, c1 in self.coeffs.items():
            w1 = sum((r + 1) * v for r, v in enumerate(k1))
            for k2, c2 in other.coeffs.items():
                w2 = sum((r + 1) * v for r, v in enumerate(k2))
                if w1 + w2 > self.order:
                    continue
                lo, hi = (k1, k2) if len(k1) <= len(k2) else (k2, k1)
                key = tuple(
                    a + (lo[i] if i < len(lo) else 0) for i, a in enumerate(hi)
                )
                out[key] = out.get(key, 0) + c1 * c2
        return MSeries({k: v for k, v in out.items() if v}, self.order)

    def pow(self, e: int) -> "MSeries":
        out = MSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"MSeries(order={self.order}, terms={len(self.coeffs)})"


# ---------------------------------------------------------------------------
# fixed-point solvers


def _p_univ_rhs(f: USeries) -> USeries:
    order = f.order
    z1 = USeries.one(order).shift(1)
    z3 = USeries.one(order).shift(3)
    f2 = f * f
    return USeries.one(order) + z1 * f2 * (USeries.one(order) - z3 * f2).recip()


def _q_univ_from_p(p: USeries) -> USeries:
    order = p.order
    z1 = USeries.one(order).shift(1)
    z3 = USeries.one(order).shift(3)
    p2 = p * p
    return USeries.one(order) + z1 * p2 * (USeries.one(order) - z3 * p2 * p).recip()


def _p_biv_rhs(f: BSeries) -> BSeries:
    order = f.order
    wz = BSeries.monomial(order, 1, 1)
    z3 = BSeries.monomial(order, 3, 0)
    f2 = f * f
    return BSeries.one(order) + wz * f2 * (BSeries.one(order) - z3 * f2).recip()


def _q_biv_from_p(p: BSeries) -> BSeries:
    order = p.order
    wz = BSeries.monomial(order, 1, 1)
    z3 = BSeries.monomial(order, 3, 0)
    p2 = p * p
    return BSeries.one(order) + wz * p2 * (BSeries.one(order) - z3 * p2 * p).recip()


def _d_ell_rhs(f: BSeries, ell: int) -> BSeries:
    order = f.order
    wz = BSeries.monomial(order, 1, 1)
    zl = BSeries.monomial(order, ell, 0)
    return BSeries.one(order) + wz * f.pow(2) * (
        BSeries.one(order) - zl * f.pow(ell)
    ).recip()


def _d_multi_rhs(f: MSeries) -> MSeries:
    order = f.order
    out = MSeries.one(order)
    power = f  # f^(r+1), built incrementally
    for r in range(1, order + 1):
        power = power * f
        out = out + MSeries.w(order, r) * power
    return out


def _p_multi_rhs(f: MSeries) -> MSeries:
    order = f.order
    out = MSeries.one(order)
    f2 = f * f
    power = MSeries.one(order)  # f^(2d), built incrementally
    d = 1
    while 3 * d - 2 <= order:
        power = power * f2
        out = out + MSeries.w(order, 3 * d - 2) * power
        d += 1
    return out


def _q_multi_from_p(p: MSeries) -> MSeries:
    order = p.order
    out = MSeries.one(order)
    p3 = p.pow(3)
    power = p * p  # p^(3d-1), built incrementally
    d = 1
    while 3 * d - 2 <= order:
        out = out + MSeries.w(order, 3 * d - 2) * power
        power = power * p3
        d += 1
    return out


def _iterate(rhs, start, order: int):
    f = start
    for _ in range(order + 1):
        f = rhs(f)
    assert rhs(f) == f, "fixed-point iteration did not stabilize"
    return f


EQUATIONS = (
    "P_univ",
    "Q_univ",
    "P_biv",
    "Q_biv",
    "D_ell_biv",
    "D_multi",
    "P_multi",
    "Q_multi",
)


def solve_fixed_point(equation: str, order: int, *, ell: int | None = None):
    """Solve one of the defining functional equations up to `order`.

    Returns a USeries, BSeries, or MSeries depending on the equation.
    `ell` is required for (and only for) D_ell_biv.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if equation == "D_ell_biv":
        if ell is None or ell < 1:
            raise ValueError("D_ell_biv requires a positive ell")
    elif ell is not None:
        raise ValueError(f"{equation} does not take ell")
    if equation == "P_univ":
        return _iterate(_p_univ_rhs, USeries.one(order), order)
    if equation == "Q_univ":
        return _q_univ_from_p(solve_fixed_point("P_univ", order))
    if equation == "P_biv":
        return _iterate(_p_biv_rhs, BSeries.one(order), order)
    if equation == "Q_biv":
        return _q_biv_from_p(solve_fixed_point("P_biv", order))
    if equation == "D_ell_biv":
        return _iterate(lambda f: _d_ell_rhs(f, ell), BSeries.one(order), order)
    if equation == "D_multi":
        return _iterate(_d_multi_rhs, MSeries.one(order), order)
    if equation == "P_multi":
        return _iterate(_p_multi_rhs, MSeries.one(order), order)
    if equation == "Q_multi":
        return _q_multi_from_p(solve_fixed_point("P_multi", order))
    raise ValueError(f"unknown equation {equation!r}; expected one of {EQUATIONS}")


def eval_w1(b: BSeries) -> USeries:
    """Evaluate at w = 1: coefficient-wise sum over m."""
    return USeries([sum(row.values()) if row else 0 for row in b.rows])


def substitute_periodic(ms: MSeries, ell: int) -> BSeries:
    """Substitute w_r <- w z^r when r = 1 mod ell, 0 otherwise.

    Maps the multivariate GF onto the bivariate ell-periodic one.
    """
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    out = BSeries.zero(ms.order)
    for key, c in ms.coeffs.items():
        if any(v != 0 and (r + 1 - 1) % ell != 0 for r, v in enumerate(key)):
            continue
        n = sum((r + 1) * v for r, v in enumerate(key))
        m = sum(key)
        if n <= ms.order:
            row = out.rows[n]
            row[m] = row.get(m, 0) + c
    return out._clean()


def lb_extract(ell: int, e: int, n: int) -> dict[int, int]:
    """Direct coefficient extraction, independent of the fixed-point path.

    Exponentiates phi(u) = (1 - w u / (1 - u^ell))^(-1) truncated at u^n and
    returns e * [u^n] phi^(n+e) as a map from w-powers to integers.  This
    equals (n+e) * [z^n] of the e-th power of the ell-periodic dissection
    BGF, so it cross-checks both the solver and the closed forms.
    """
    if ell < 1 or e < 1 or n < 1:
        raise ValueError("lb_extract requires positive ell, e, n")
    one = BSeries.one(n)  # z-slot plays the role of u
    wu = BSeries.monomial(n, 1, 1)
    ul = BSeries.monomial(n, ell, 0)
    phi = (one - wu * (one - ul).recip()).recip()
    top = phi.pow(n + e)
    return {m: e * c for m, c in top.rows[n].items() if c != 0}


def d1_closed_form(order: int) -> BSeries:
    """Series expansion of (z + 1 - sqrt(z^2 - 2(2w+1)z + 1)) / (2(w+1)z).

    Expanded with exact rational arithmetic; the square root is computed by
    Newton iteration on truncated series seeded at the constant term.  The
    result has integer coefficients and must match the D_ell_biv(1) solver.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    work = order + 1
    a = BSeries.zero(work)
    a.rows[0][0] = Fraction(1)
    a.rows[1][0] = Fraction(-2)
    a.rows[1][1] = Fraction(-4)
    a.rows[2][0] = Fraction(1)
    half = Fraction(1, 2)
    s = BSeries.one(work).scale(Fraction(1))
    steps = max(1, work.bit_length() + 1)
    for _ in range(steps):
        s = (s + a * s.recip()).scale(half)
    assert s * s == a, "series square root did not converge"
    numer = BSeries.monomial(work, 1, 0, Fraction(1)) + BSeries.one(work).scale(
        Fraction(1)
    ) - s
    assert not numer.rows[0], "numerator must vanish at z^0"
    out = BSeries.zero(order)
    for n in range(order + 1):
        row = numer.rows[n + 1]
        top = max(row) if row else 0
        # divide the w-polynomial by (1 + w), then by 2
        q: dict[int, Fraction] = {}
        prev = Fraction(0)
        for m in range(top + 1):
            cur = row.get(m, Fraction(0)) - prev
            q[m] = cur
            prev = cur
        assert prev == 0, "numerator not divisible by (1 + w)"
        for m, c in q.items():
            c2 = c * half
            if c2:
                assert c2.denominator == 1
                out.rows[n][m] = int(c2)
    return out._clean()
