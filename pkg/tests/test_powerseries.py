from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from akzeta.combinatorics import Composition
from akzeta.errors import DomainError
from akzeta.powerseries import (PolyRat, TruncSeries, series_inverse,
                                series_exp, series_log, series_compose,
                                bernoulli_numbers,
                                classical_bernoulli_polynomial, li_series,
                                ak_bernoulli_polys)


def test_polyrat_arithmetic_and_eval():
    x = PolyRat.x()
    p = (x - Fraction(1, 2)) * (x + 2)
    assert p(Fraction(1, 2)) == 0
    assert p(0) == -1
    assert p.degree == 2
    assert p - p == PolyRat()
    assert 2 * x == x + x


def test_polyrat_str_canonical():
    assert str(PolyRat.x() - Fraction(1, 2)) == "x - 1/2"
    assert str(PolyRat.const(1)) == "1"
    assert str(PolyRat()) == "0"
    assert str(PolyRat([0, 0, 1])) == "x^2"
    assert str(PolyRat([Fraction(1, 6), -1]) * 3) == "-3*x + 1/2"


def test_truncseries_mul_and_inverse():
    f = TruncSeries([1, 1], 6)  # 1 + t
    g = series_inverse(f)
    assert (f * g).coeffs == TruncSeries.one(6).coeffs
    assert g.coeffs[:4] == [Fraction(1), Fraction(-1), Fraction(1), Fraction(-1)]
    with pytest.raises(DomainError):
        series_inverse(TruncSeries.t(4))


def test_series_exp_log_roundtrip():
    f = TruncSeries([0, 1, Fraction(1, 3), Fraction(-1, 7)], 8)
    assert series_log(series_exp(f) ).coeffs == f.coeffs
    # exp(log(1+t)) = 1 + t
    g = TruncSeries([1, 1], 8)
    assert series_exp(series_log(g)).coeffs == g.coeffs


def test_series_compose():
    # 1/(1 - (t + t^2)) starts 1 + t + 2t^2 + 3t^3 + 5t^4 (Fibonacci)
    geom = series_inverse(TruncSeries([1, -1], 6))
    inner = TruncSeries([0, 1, 1], 6)
    comp = series_compose(geom, inner)
    assert comp.coeffs[:5] == [1, 1, 2, 3, 5]


def test_bernoulli_numbers():
    B = bernoulli_numbers(8)
    assert B[0] == 1
    assert B[1] == Fraction(-1, 2)
    assert B[2] == Fraction(1, 6)
    assert B[3] == 0
    assert B[4] == Fraction(-1, 30)
    assert B[8] == Fraction(-1, 30)


def test_classical_bernoulli_polynomials():
    assert str(classical_bernoulli_polynomial(1)) == "x - 1/2"
    b2 = classical_bernoulli_polynomial(2)
    assert b2(0) == Fraction(1, 6)
    assert b2(1) == Fraction(1, 6)
    # symmetry B_m(1-x) = (-1)^m B_m(x) at a sample point
    b5 = classical_bernoulli_polynomial(5)
    assert b5(Fraction(2, 7)) == -b5(Fraction(5, 7))


def test_li_series_coefficients():
    s = li_series(Composition.of(2), 6)
    assert s.coeffs[3] == Fraction(1, 9)
    # depth 2: coefficient of w^n is H_{n-1}/n^2 for index (1,2)
    s = li_series(Composition.of(1, 2), 6)
    assert s.coeffs[1] == 0
    assert s.coeffs[3] == (Fraction(1) + Fraction(1, 2)) / 9
    with pytest.raises(DomainError):
        li_series(Composition.of(1, 2), 1)


def test_li_series_numeric_vs_mpmath():
    # Li_2(w) at w = 1/3 against the classical dilogarithm
    s = li_series(Composition.of(2), 60)
    w = Fraction(1, 3)
    val = sum(c * w**n for n, c in enumerate(s.coeffs))
    with mp.workdps(40):
        ref = mp.polylog(2, mp.mpf(1) / 3)
        diff = abs(mp.mpf(val.numerator) / val.denominator - ref)
        assert diff < mp.mpf("1e-25")


def test_ak_bernoulli_collapse_to_classical():
    polys = ak_bernoulli_polys(Composition.of(1), 1, 6)
    for m in range(7):
        assert polys[m] == classical_bernoulli_polynomial(m)


def test_ak_bernoulli_basic_shapes():
    polys = ak_bernoulli_polys(Composition.of(2), 1, 3)
    assert polys[0] == PolyRat.const(1)
    assert all(polys[m].degree <= m for m in range(4))
    with pytest.raises(DomainError):
        ak_bernoulli_polys(Composition.of(1), 0, 2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(max_denominator=20), min_size=0, max_size=5),
       st.fractions(max_denominator=10))
def test_polyrat_eval_is_ring_hom(coeffs, point):
    p = PolyRat(coeffs)
    q = PolyRat([1, -2, 3])
    assert (p + q)(point) == p(point) + q(point)
    assert (p * q)(point) == p(point) * q(point)
