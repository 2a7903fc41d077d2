from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ramify.cdvf import (
    LaurentField,
    MixedField,
    PAdicElement,
    PAdicField,
    Precision,
    hensel_root,
    newton_polygon,
    poly_eval,
    vp,
)
from ramify.coeffield import FiniteField
from ramify.errors import HenselHypothesisFailed, PrecisionExhausted, Unsupported

Q3 = PAdicField(3)
Q7 = PAdicField(7)
nonzero = st.fractions(max_denominator=500).filter(lambda x: x != 0 and abs(x.numerator) < 10**6)


@given(nonzero, nonzero)
def test_padic_arithmetic_matches_rationals(a, b):
    x, y = Q3.from_rational(a), Q3.from_rational(b)
    assert x * y == Q3.from_rational(a * b)
    assert x + y == Q3.from_rational(a + b)
    assert x / y == Q3.from_rational(a / b)


@given(nonzero)
def test_padic_valuation_is_vp(a):
    assert Q3.from_rational(a).valuation() == vp(a, 3)


def test_vp_oracle():
    assert vp(Fraction(18, 5), 3) == 2
    assert vp(Fraction(5, 27), 3) == -3


def test_zero_valuation_is_precision_exhausted():
    with pytest.raises(PrecisionExhausted):
        Q3.zero().valuation()
    # known only modulo 3^64, and v = 60 sits inside the guard band of 8
    x = PAdicElement(Q3, (Fraction(3**60),), 64)
    with pytest.raises(PrecisionExhausted):
        x.valuation()
    assert x.vlow() == 60
    assert PAdicElement(Q3, (Fraction(3**50),), 64).valuation() == 50
    assert Precision.scaled(8).guard == 1


def test_ramified_padic_uniformizer():
    # Q_2(i) with pi = i - 1: pi^2 = -2 pi - 2, so v(2) = 2
    K = PAdicField(2, eisenstein=[2, 2, 1])
    assert K.e == 2
    assert K.from_rational(2).valuation() == 2
    pi = K.uniformizer()
    assert (pi * pi + 2 * pi + 2).is_zero()


F2 = FiniteField(2, 1)
L2 = LaurentField(F2)


def laurent(terms):
    return L2.element({k: F2.one() for k in terms})


@settings(max_examples=50)
@given(st.sets(st.integers(-5, 20), min_size=1, max_size=6), st.sets(st.integers(-5, 20), min_size=1, max_size=6))
def test_laurent_inverse_and_valuation(a, b):
    x, y = laurent(a), laurent(b)
    assert (x * x.inverse() - 1).is_zero()
    assert (x * y).valuation() == min(a) + min(b)


def test_laurent_frobenius_in_char_p():
    t = L2.uniformizer()
    x = 1 + t + t**3
    assert x * x == 1 + t**2 + t**6


def test_mixed_field_inverse_requires_monomial_residue():
    M = MixedField(PAdicField(3), "T")
    T = M.series_variable()
    x = 3 + 2 * T
    assert (x * x.inverse() - 1).is_zero()
    assert (T * T.inverse() - 1).is_zero()
    with pytest.raises(Unsupported):
        ((1 + T) * (2 + T)).inverse()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.lists(st.sampled_from([1, 2, 4, 5]), min_size=4, max_size=4))
def test_newton_polygon_recovers_root_valuations(vals, units):
    # product of (X - u 3^k) has roots of valuation k, counted with multiplicity
    poly = [Q3.one()]
    for k, unit in zip(vals, units):
        r = Q3.from_rational(unit * 3**k)
        poly = [(poly[i - 1] if i else Q3.zero()) - (r * poly[i] if i < len(poly) else Q3.zero())
                for i in range(len(poly) + 1)]
    got = {}
    for v, length in newton_polygon(poly):
        got[v] = got.get(v, 0) + length
    want = {}
    for k in vals:
        want[Fraction(k)] = want.get(Fraction(k), 0) + 1
    assert got == want


@pytest.mark.parametrize("a,p", [(2, 7), (-1, 5), (7, 3), (11, 5)])
def test_hensel_square_roots_square_back(a, p):
    K = PAdicField(p)
    x0 = next(x for x in range(p) if (x * x - a) % p == 0)
    r = hensel_root([K.from_rational(-a), K.zero(), K.one()], K.from_rational(x0))
    assert (r * r - K.from_rational(a)).is_zero()
    assert (r - K.from_rational(x0)).vlow() >= 1


def test_hensel_hypothesis_failure():
    # X^2 - 2 over Q_7 starting from a non-root
    with pytest.raises(HenselHypothesisFailed):
        hensel_root([Q7.from_rational(-2), Q7.zero(), Q7.one()], Q7.from_rational(1))


@given(st.integers(2, 12))
def test_poly_eval_horner(n):
    cs = [Q3.from_rational(k + 1) for k in range(n)]
    x = Q3.from_rational(Fraction(2, 5))
    want = sum((Fraction(k + 1) * Fraction(2, 5) ** k for k in range(n)), Fraction(0))
    assume(want != 0)
    assert poly_eval(cs, x) == Q3.from_rational(want)
