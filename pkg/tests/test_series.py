from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from nestwork import enumeration as en
from nestwork.series import (
    BivariatePoly,
    TruncationMismatch,
    UnivariatePoly,
    add,
    fn_poly,
    formal_derivative_y,
    geometric_inverse,
    gf_p,
    gf_q,
    gf_rt,
    gn_poly,
    inverse_power_one_minus_xy,
    mul,
    stirling2,
)

A124380 = [1, 2, 4, 9, 22, 57, 157, 453, 1368]
A024428 = [1, 1, 2, 4, 8, 18, 42, 102, 260, 684, 1860]


def poly(terms, order):
    return BivariatePoly.from_terms(terms, order)


def test_mul_example():
    a = poly({(0, 0): 1, (1, 1): 1}, 2)
    b = poly({(0, 0): 1, (1, 1): 2}, 2)
    assert mul(a, b) == poly({(0, 0): 1, (1, 1): 3, (2, 2): 2}, 2)


def test_mul_truncates():
    xy = BivariatePoly.monomial(1, 1, 2)
    assert (xy * xy * xy) == BivariatePoly.zero(2)


def test_geometric_inverse_example():
    xy = BivariatePoly.monomial(1, 1, 3)
    assert geometric_inverse(xy, 3) == poly({(j, j): 1 for j in range(4)}, 3)


def test_geometric_inverse_is_inverse():
    q = poly({(1, 0): 2, (1, 1): -1, (2, 1): 3, (3, 3): 5}, 7)
    one = BivariatePoly.one(7)
    assert (one - q) * geometric_inverse(q) == one


def test_derivative_example():
    assert formal_derivative_y(BivariatePoly.monomial(2, 2, 3)) == BivariatePoly.monomial(2, 1, 3, 2)


def test_errors():
    with pytest.raises(ValueError):
        geometric_inverse(BivariatePoly.one(3))
    with pytest.raises(TruncationMismatch):
        add(BivariatePoly.one(2), BivariatePoly.one(3))
    with pytest.raises(TruncationMismatch):
        geometric_inverse(BivariatePoly.monomial(1, 1, 3), 4)
    with pytest.raises(ValueError):
        BivariatePoly.from_terms({(1, 2): 1}, 3)
    for fn in (gf_p, gf_q, gf_rt):
        with pytest.raises(ValueError):
            fn(0)
    with pytest.raises(ValueError):
        stirling2(3, 4)


def test_negative_binomial_matches_repeated_inverse():
    order = 9
    g = geometric_inverse(BivariatePoly.monomial(1, 1, order))
    acc = BivariatePoly.one(order)
    for m in range(1, 7):
        acc = acc * g
        assert acc == inverse_power_one_minus_xy(m, order)


def test_gf_p_matches_counts():
    g = gf_p(12)
    assert g[2, 1] == 1
    assert g[6, 2] == en.count_bruteforce("P", 6, 2)
    assert list(g.row_sums()[1:10]) == A124380
    for n in range(1, 13):
        for k in range(n // 2 + 1):
            assert g[n, k] == en.count_p(n, k)
        assert all(g[n, k] == 0 for k in range(n // 2 + 1, n + 1))


def test_gf_q_matches_counts():
    g = gf_q(12)
    assert g[1, 0] == 1
    assert list(g.row_sums()[1:12]) == A024428
    for n in range(1, 13):
        for k in range((n - 1) // 2 + 1):
            assert g[n, k] == en.count_q(n - 1, k) == stirling2(n - k, n - 2 * k)
        assert all(g[n, k] == 0 for k in range((n - 1) // 2 + 1, n + 1))


def test_gf_rt_closed_form_and_oracle():
    g = gf_rt(20)
    assert g[3, 1] == 3 == en.count_bruteforce("T", 3, 1)
    for n in range(1, 21):
        assert g[n, 0] == 1
        for k in range(n):
            assert g[n, k] == comb(comb(n - k + 1, 2) + k - 1, k) == en.count_t(n, k)
            assert g[n, k] == en.count_r(n + k - 1, k)


def test_gf_rt_against_series_arithmetic():
    order = 10
    x = BivariatePoly.monomial(1, 0, order)
    g = geometric_inverse(BivariatePoly.monomial(1, 1, order))
    total = BivariatePoly.zero(order)
    xm = BivariatePoly.one(order)
    for m in range(1, order + 1):
        xm = xm * x
        term = xm
        for _ in range(comb(m + 1, 2)):
            term = term * g
        total = total + term
    assert total == gf_rt(order)


def test_y_equal_one_reduction():
    order = 12
    # sum_n x^n prod_{k<=n} (1 + kx), expanded with plain lists
    total = [0] * (order + 1)
    for n in range(1, order + 1):
        term = [0] * (order + 1)
        term[n] = 1
        for k in range(1, n + 1):
            term = [term[e] + (k * term[e - 1] if e else 0) for e in range(order + 1)]
        total = [a + b for a, b in zip(total, term)]
    assert list(gf_p(order).row_sums()) == total


def test_stirling():
    assert stirling2(8, 3) == 966
    assert sum(1 for d in en.all_partitions(8) if d.n - d.k == 3) == 966
    for n in range(1, 10):
        assert stirling2(n, n) == 1 == stirling2(n, 1)
    assert stirling2(0, 0) == 1


def test_fn_poly():
    assert fn_poly(2) == UnivariatePoly((1, 1))
    assert fn_poly(3) == UnivariatePoly((1, 3))
    assert [fn_poly(n)(1) for n in range(1, 10)] == A124380
    g = gf_p(12)
    for n in range(1, 13):
        assert fn_poly(n) == UnivariatePoly(g.row(n))


def test_gn_poly():
    assert gn_poly(3) == UnivariatePoly((1, 1))
    assert [gn_poly(n)(1) for n in range(1, 12)] == A024428
    g = gf_q(12)
    for n in range(1, 13):
        p = gn_poly(n)
        assert p == UnivariatePoly(g.row(n))
        for k in range((n - 1) // 2 + 1):
            assert p.coefficient(k) == stirling2(n - k, n - 2 * k)


def test_row_polys_reject_small_n():
    with pytest.raises(ValueError):
        fn_poly(0)
    with pytest.raises(ValueError):
        gn_poly(0)


def newton_derivative(values):
    """p'(0) from p(0), p(1), ..., p(d) via forward differences; exact for degree <= d."""
    diffs = list(values)
    out = Fraction(0)
    for m in range(1, len(values)):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        out += Fraction((-1) ** (m + 1) * diffs[0], m)
    return out


@given(st.lists(st.integers(-50, 50), max_size=8), st.integers(-5, 5))
def test_derivative_matches_finite_differences(coeffs, y0):
    p = UnivariatePoly(tuple(coeffs))
    values = [p(y0 + t) for t in range(len(coeffs) + 1)]
    assert newton_derivative(values) == p.derivative()(y0)


@given(st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 6)), st.integers(-9, 9), max_size=12))
def test_bivariate_derivative_rowwise(raw):
    terms = {(n, k): c for (n, k), c in raw.items() if k <= n}
    p = BivariatePoly.from_terms(terms, 6)
    dp = formal_derivative_y(p)
    for n in range(7):
        row = UnivariatePoly(p.row(n))
        assert UnivariatePoly(dp.row(n)) == row.derivative()
        values = [row(t) for t in range(n + 2)]
        assert newton_derivative(values) == row.derivative()(0)


@given(
    st.dictionaries(st.tuples(st.integers(0, 5), st.integers(0, 5)), st.integers(-9, 9), max_size=8),
    st.dictionaries(st.tuples(st.integers(0, 5), st.integers(0, 5)), st.integers(-9, 9), max_size=8),
)
def test_ring_laws(ra, rb):
    a = BivariatePoly.from_terms({nk: c for nk, c in ra.items() if nk[1] <= nk[0]}, 5)
    b = BivariatePoly.from_terms({nk: c for nk, c in rb.items() if nk[1] <= nk[0]}, 5)
    assert a * b == b * a
    assert a + b == b + a
    assert a * BivariatePoly.one(5) == a
    # Leibniz rule survives truncation since d/dy never changes the x power
    assert (a * b).derivative_y() == a.derivative_y() * b + a * b.derivative_y()


def test_univariate_poly_basics():
    p = UnivariatePoly((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.shift(2).coeffs == (0, 0, 1, 2)
    assert (p - p).coeffs == ()
    assert p.coefficient(5) == 0
    assert p(3) == 7
