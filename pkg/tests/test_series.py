import pytest

from quiddity import enumeration as en
from quiddity import formulas as f
from quiddity import series as se
from quiddity.series import BSeries, MSeries, USeries


def test_useries_arithmetic_exact():
    a = USeries([1, 2, 3, 4])
    b = USeries([1, -1, 0, 5])
    assert (a * b).coeffs == [1, 1, 1, 6]
    assert (a + b).coeffs == [2, 1, 3, 9]
    assert (a.recip() * a).coeffs == [1, 0, 0, 0]
    assert a.shift(2).coeffs == [0, 0, 1, 2]
    assert a.pow(2) == a * a


def test_truncated_product_equals_truncation_of_exact_product():
    # solve high, truncate down: the low-order solve must agree exactly
    high = se.solve_fixed_point("Q_univ", 20)
    low = se.solve_fixed_point("Q_univ", 8)
    assert high.coeffs[:9] == low.coeffs
    bh = se.solve_fixed_point("Q_biv", 14)
    bl = se.solve_fixed_point("Q_biv", 9)
    for n in range(10):
        assert bh.rows[n] == bl.rows[n]
    mh = se.solve_fixed_point("D_multi", 8)
    ml = se.solve_fixed_point("D_multi", 5)
    for key, value in ml.coeffs.items():
        assert mh.coeff(key) == value


def test_p_univ_golden():
    p = se.solve_fixed_point("P_univ", 10)
    assert p.coeffs == [1, 1, 2, 5, 15, 48, 160, 550, 1937, 6954, 25355]


def test_q_univ_golden():
    q = se.solve_fixed_point("Q_univ", 14)
    assert q.coeffs == [
        1, 1, 2, 5, 15, 49, 166, 577, 2050, 7414,
        27201, 100984, 378651, 1431901, 5454718,
    ]


def test_solver_argument_validation():
    with pytest.raises(ValueError):
        se.solve_fixed_point("P_univ", 5, ell=3)
    with pytest.raises(ValueError):
        se.solve_fixed_point("D_ell_biv", 5)
    with pytest.raises(ValueError):
        se.solve_fixed_point("nope", 5)


def test_rational_q_expression_matches_formula_row():
    # the solved P plugged into the rational form reproduces the closed-form
    # row; this ties the series path to the binomial path at order 30
    order = 30
    p = se.solve_fixed_point("P_univ", order)
    one = USeries.one(order)
    z1, z3 = one.shift(1), one.shift(3)
    q = one + z1 * p * p * (one - z3 * p.pow(3)).recip()
    assert q.coeffs == [f.Q_total(n) for n in range(order + 1)]
    assert p.coeffs == [f.P_total(n) for n in range(order + 1)]


def test_bivariate_identity_at_order_20():
    order = 20
    p = se.solve_fixed_point("P_biv", order)
    q = se.solve_fixed_point("Q_biv", order)
    one = BSeries.one(order)
    wz = BSeries.monomial(order, 1, 1)
    z3 = BSeries.monomial(order, 3, 0)
    assert q == one + wz * p * p * (one - z3 * p.pow(3)).recip()
    for n in range(order + 1):
        for k in range(0, (n + 2) // 3):
            assert q.coeff(n, n - 3 * k) == f.Q_nk(n, k)
            assert p.coeff(n, n - 3 * k) == f.P_nk(n, k)


def test_bivariate_support():
    q = se.solve_fixed_point("Q_biv", 12)
    for (n, m) in q.support():
        if n == 0:
            assert m == 0
            continue
        assert (n - m) % 3 == 0 and 0 <= (n - m) // 3 < n / 3


def test_eval_w1():
    order = 14
    assert se.eval_w1(se.solve_fixed_point("Q_biv", order)).coeffs == [
        f.Q_total(n) for n in range(order + 1)
    ]
    assert se.eval_w1(se.solve_fixed_point("P_biv", 10)).coeffs == [
        f.P_total(n) for n in range(11)
    ]
    assert se.eval_w1(BSeries.zero(5)) == USeries.zero(5)


def test_odd_dissection_substitution_identity():
    # the 2-periodic generating function carries the base-open bivariate one:
    # P(z, w) coefficients appear in it along n = n~ + k~, m = n~ - 2 k~
    order = 20
    p = se.solve_fixed_point("P_biv", order)
    d2 = se.solve_fixed_point("D_ell_biv", order, ell=2)
    for n in range(order + 1):
        for k in range(0, (n + 2) // 3):
            assert p.coeff(n, n - 3 * k) == d2.coeff(n - k, n - 3 * k)


def test_d1_closed_form_matches_solver():
    assert se.d1_closed_form(12) == se.solve_fixed_point("D_ell_biv", 12, ell=1)


def test_d_ell_biv_at_w1_matches_enumeration():
    d1 = se.eval_w1(se.solve_fixed_point("D_ell_biv", 5, ell=1))
    assert d1.coeffs == [1, 1, 3, 11, 45, 197]
    d3 = se.solve_fixed_point("D_ell_biv", 6, ell=3)
    for n in range(1, 7):
        table = en.count_dissections(n, 3).by_m
        for m in range(1, n + 1):
            assert d3.coeff(n, m) == table.get(m, 0)


def test_multivariate_solutions():
    order = 8
    dm = se.solve_fixed_point("D_multi", order)
    assert dm.coeff((3,)) == 5
    assert dm.coeff((1, 0, 0, 1)) == 7
    assert dm.coeff(()) == 1
    for key, value in dm.coeffs.items():
        assert value == f.D_multi(key)
    pm = se.solve_fixed_point("P_multi", order)
    for key, value in pm.coeffs.items():
        assert value == f.P_multi(key)


def test_substitute_periodic():
    order = 8
    dm = se.solve_fixed_point("D_multi", order)
    for ell in (1, 2, 3, 4):
        assert se.substitute_periodic(dm, ell) == se.solve_fixed_point(
            "D_ell_biv", order, ell=ell
        )
    pm = se.solve_fixed_point("P_multi", order)
    assert se.substitute_periodic(pm, 3) == se.solve_fixed_point("P_biv", order)
    qm = se.solve_fixed_point("Q_multi", order)
    assert se.substitute_periodic(qm, 3) == se.solve_fixed_point("Q_biv", order)
    assert se.substitute_periodic(MSeries.one(4), 3) == BSeries.one(4)


def test_lb_extract_examples():
    assert se.lb_extract(3, 1, 5) == {2: 42, 5: 252}
    # derived oracle: the square has 1 one-cell and 2 two-cell dissections,
    # so (n+e) D[1]_{2,m} gives 3 and 6
    counts = en.count_dissections(2, 1).by_m
    assert counts == {1: 1, 2: 2}
    assert se.lb_extract(1, 1, 2) == {m: 3 * c for m, c in counts.items()}


def test_lb_extract_matches_series_powers():
    for ell in (1, 2, 3, 4):
        d = se.solve_fixed_point("D_ell_biv", 10, ell=ell)
        for e in (1, 2, 3, 4):
            power = d.pow(e)
            for n in range(1, 11):
                expected = {
                    m: (n + e) * c for m, c in power.rows[n].items() if c != 0
                }
                assert se.lb_extract(ell, e, n) == expected


def test_lb_extract_matches_power_coeff_formula():
    for ell in (1, 2, 3):
        for e in (1, 2, 3):
            for n in range(1, 9):
                got = se.lb_extract(ell, e, n)
                for k in range(0, (n + ell - 1) // ell):
                    m = n - ell * k
                    assert got.get(m, 0) == (n + e) * f.power_coeff(ell, e, n, k)


def test_coefficients_nonnegative_integers():
    for name in ("P_univ", "Q_univ"):
        s = se.solve_fixed_point(name, 12)
        assert all(isinstance(c, int) and c >= 0 for c in s.coeffs)
    for name in ("P_biv", "Q_biv"):
        s = se.solve_fixed_point(name, 12)
        assert all(
            isinstance(c, int) and c >= 0 for row in s.rows for c in row.values()
        )
