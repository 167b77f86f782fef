from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from overpartitions import ClassParams, DomainError
from overpartitions.enumeration import count_D, count_D_mn, count_F, count_Q, enumerate_partitions
from overpartitions.qseries import (
    A_MINUS_ONE, A_MINUS_ONE_OVER_Q, BivariateSeries, H_series, MonomialParam, TruncatedSeries,
    W_series, andrews_product_side, andrews_sum_side, check_H_recurrence, check_H_recurrence_general,
    check_J_relations, jacobi_bilateral, jacobi_specialization, overpartition_series, poch_finite,
    poch_infinite, product_side_C, q_poch, rogers_ramanujan, sum_side_F, sum_side_G, sum_side_main,
    sum_side_Q,
)
from overpartitions.verify import pentagonal_series

MINUS_Q = MonomialParam(-1, 1)


def _naive_product(factors: list[list[int]], N: int) -> list[int]:
    """Schoolbook product of dense polynomials, truncated at degree N."""
    out = [1] + [0] * N
    for f in factors:
        nxt = [0] * (N + 1)
        for a, ca in enumerate(out):
            for b, cb in enumerate(f):
                if a + b <= N:
                    nxt[a + b] += ca * cb
        out = nxt
    return out


# -- truncated arithmetic -------------------------------------------------------

def test_negative_order_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries(-1)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=8),
       st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_product_matches_schoolbook(a, b):
    N = 10
    got = (TruncatedSeries(N, a) * TruncatedSeries(N, b)).coefficients()
    assert got == _naive_product([a, b], N)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=8), st.integers(1, 6))
def test_inverse_times_series_is_one(coeffs, lead):
    s = TruncatedSeries(12, [lead] + coeffs)
    assert s * s.inverse() == TruncatedSeries.one(12)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=8), st.integers(-3, 3), st.integers(1, 5))
def test_binomial_division_undoes_multiplication(coeffs, c, e):
    s = TruncatedSeries(12, coeffs)
    assert s.mul_binomial(c, e).div_binomial(c, e) == s


def test_shift_and_integrality():
    s = TruncatedSeries(5, [1, Fraction(1, 2)])
    assert s.shift(2).coefficients() == [0, 0, 1, Fraction(1, 2), 0, 0]
    assert not s.is_integral() and TruncatedSeries.one(5).is_integral()


def test_first_difference():
    a, b = TruncatedSeries(6, [1, 2, 3]), TruncatedSeries(6, [1, 2, 4])
    assert a.first_difference(b) == 2 and a.first_difference(a.copy()) is None


def test_serialization_formats():
    s = TruncatedSeries(3, [1, Fraction(1, 2), 0, -2])
    assert json.loads(json.dumps(s.to_json())) == {"truncation": 3, "coeffs": {"0": "1", "1": "1/2", "3": "-2"}}
    assert s.to_tsv() == "0\t1\n1\t1/2\n2\t0\n3\t-2"
    b = BivariateSeries(2, 2)
    b.add_row(1, TruncatedSeries(2, [0, 3]))
    assert b[1, 1] == 3 and list(b.items()) == [(1, 1, 3)]
    assert b.to_json() == {"x_truncation": 2, "truncation": 2, "coeffs": {"1,1": "3"}}
    assert b.to_tsv() == "1\t1\t3"


# -- Pochhammer symbols ---------------------------------------------------------

def test_empty_and_negative_index_products():
    assert q_poch(0, 8) == TruncatedSeries.one(8)
    assert poch_finite(MINUS_Q, -1, 8) == TruncatedSeries(8, [Fraction(1, 2)])


def test_finite_product_matches_schoolbook():
    assert poch_finite(MINUS_Q, 2, 6).coefficients() == [1, 1, 1, 1, 0, 0, 0]
    for n in range(7):
        factors = [[1] + [0] * (j - 1) + [-1] for j in range(1, n + 1)]
        assert q_poch(n, 20).coefficients() == _naive_product(factors, 20)


def test_unsupported_products_rejected():
    with pytest.raises(DomainError):
        poch_finite(MonomialParam(1, 1), -1, 4)
    with pytest.raises(DomainError):
        poch_finite(MINUS_Q, -2, 4)
    with pytest.raises(DomainError):
        poch_infinite(1, 0, 1, 4)


def test_euler_product_is_pentagonal():
    assert poch_infinite(1, 1, 1, 10).coefficients() == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0]
    assert poch_infinite(1, 1, 1, 60) == pentagonal_series(60)
    assert poch_infinite(1, 2, 2, 1) == TruncatedSeries.one(1)


def test_overpartition_generating_function():
    assert overpartition_series(3)[3] == 8
    assert overpartition_series(10).coefficients() == [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232]


def test_product_side_values():
    assert product_side_C(ClassParams(2, 1), 4)[4] == 4
    assert product_side_C(ClassParams(2, 2), 4)[4] == 6
    for k in range(2, 6):
        for i in range(1, k + 1):
            assert product_side_C(ClassParams(k, i), 0)[0] == 1


# -- Jacobi triple product ------------------------------------------------------

@pytest.mark.parametrize("k,i", [(2, 1), (5, 5), (3, 2), (4, 1)])
def test_jacobi_specialization(k, i):
    assert jacobi_specialization(ClassParams(k, i), 40)
    assert jacobi_specialization(ClassParams(k, i), 0)


def test_jacobi_bilateral_low_terms():
    # k = 2, i = 1: exponents n(2n+1)
    assert jacobi_bilateral(ClassParams(2, 1), 10).coefficients() == [1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1]


# -- H, W and J -----------------------------------------------------------------

def test_h_constant_term():
    for a in (MonomialParam.zero(), A_MINUS_ONE, A_MINUS_ONE_OVER_Q):
        h = H_series((3, 2), a, MonomialParam(1, 0, 1), 6, 6)
        assert h[0, 0] == 1


def test_h_rejects_unsupported_arguments():
    with pytest.raises(DomainError):
        H_series((3, 2), MonomialParam(1, 0), MonomialParam(1, 0, 1), 4, 4)
    with pytest.raises(DomainError):
        H_series((3, 2), A_MINUS_ONE, MonomialParam(1, 0, 0), 4, 4)


def test_w_series_matches_enumeration():
    for k in range(2, 4):
        for i in range(1, k + 1):
            p = ClassParams(k, i)
            w = W_series(p, 12, 12)
            flat = w.at_x_equals_one()
            for n in range(13):
                assert flat[n] == count_D(p, n)
                for m in range(n + 1):
                    assert w[m, n] == count_D_mn(p, m, n)


@pytest.mark.parametrize("k,i", [(3, 2), (2, 1)])
def test_w_recurrence_in_series_form(k, i):
    assert check_H_recurrence(ClassParams(k, i), 20)


@pytest.mark.parametrize("a", [MonomialParam.zero(), A_MINUS_ONE, A_MINUS_ONE_OVER_Q])
def test_h_recurrence_for_each_parameter(a):
    for k in range(2, 4):
        for i in range(1, k + 1):
            assert check_H_recurrence_general(ClassParams(k, i), a, 14)


def test_j_relations():
    assert check_J_relations(24, ks=(3,))
    assert check_J_relations(24, ks=(2,))
    assert check_J_relations(0)


# -- multi-sums -----------------------------------------------------------------

def test_main_sum_values():
    for k in range(2, 5):
        for i in range(1, k + 1):
            assert sum_side_main(ClassParams(k, i), 0, 0)[0, 0] == 1
    assert sum_side_main(ClassParams(2, 2), 4, 4).at_x_equals_one()[4] == 6


def test_main_sum_matches_enumeration_by_length():
    p = ClassParams(4, 2)
    s = sum_side_main(p, 16, 16)
    for n in range(17):
        for m in range(n + 1):
            assert s[m, n] == count_D_mn(p, m, n)


def test_split_sums_add_to_main_sum():
    p = ClassParams(3, 2)
    f, g, main = sum_side_F(p, 16, 16), sum_side_G(p, 16, 16), sum_side_main(p, 16, 16)
    assert f + g == main
    assert f[0, 0] == g[0, 0] == Fraction(1, 2)


def test_split_sum_matches_enumeration():
    p = ClassParams(3, 1)
    f = sum_side_F(p, 12, 12)
    for n in range(13):
        for m in range(n + 1):
            if (m, n) != (0, 0):
                assert f[m, n] == count_F(p, m, n)


def test_q_closed_form_examples():
    assert sum_side_Q((0, 0), ClassParams(3, 1), 10) == TruncatedSeries.one(10)
    s = sum_side_Q((1, 0), ClassParams(3, 1), 20)
    assert s.coefficients() == [0] + [1] * 20
    for prof in ((1, 0), (2, 1)):
        p = ClassParams(3, 2)
        s = sum_side_Q(prof, p, 20)
        for n in range(1, 21):
            assert s[n] == count_Q(p, prof, n)
    with pytest.raises(DomainError):
        sum_side_Q((0, 1), ClassParams(3, 1), 5)


# -- classical identities -------------------------------------------------------

def _difference_two_partitions(n: int, smallest: int) -> int:
    count = 0
    for lam in enumerate_partitions(n):
        v = [p.value for p in lam]
        if all(a - b >= 2 for a, b in zip(v, v[1:])) and (not v or v[-1] >= smallest):
            count += 1
    return count


@pytest.mark.parametrize("which", [1, 2])
def test_rogers_ramanujan(which):
    lhs, rhs = rogers_ramanujan(which, 40)
    assert lhs == rhs
    for n in range(21):
        assert lhs[n] == _difference_two_partitions(n, 2 if which == 1 else 1)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_andrews_sum_equals_product(k):
    for i in range(1, k + 1):
        p = ClassParams(k, i)
        assert andrews_sum_side(p, 40, 40).at_x_equals_one() == andrews_product_side(p, 40)


def test_andrews_reduces_to_rogers_ramanujan():
    for i, which in ((2, 2), (1, 1)):
        assert andrews_product_side(ClassParams(2, i), 40) == rogers_ramanujan(which, 40)[1]
