from hypothesis import given, settings
from hypothesis import strategies as st

from ramify.coeffield import FiniteField, Poly, RationalFunctionField, separable_split
from ramify.errors import DivisionByZero

GF9 = FiniteField(3, 2)
GF5 = FiniteField(5, 1)
GF8 = FiniteField(2, 3)


def elems(F):
    return st.lists(st.integers(0, F.p - 1), min_size=F.r, max_size=F.r).map(F.element)


@settings(max_examples=60)
@given(elems(GF9), elems(GF9), elems(GF9))
def test_field_axioms_gf9(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert (b / a) * a == b


@given(elems(GF8))
def test_frobenius_period(a):
    # x^(q) = x on GF(q)
    assert a ** GF8.q == a


def test_multiplicative_group_is_cyclic_of_order_q_minus_1():
    orders = set()
    for k in range(1, GF9.q):
        x = GF9.element([k % 3, k // 3])
        o = next(n for n in range(1, GF9.q) if (x**n) == GF9.one())
        orders.add(o)
    assert 8 in orders and all(8 % o == 0 for o in orders)


def test_division_by_zero():
    try:
        GF5.from_int(1) / GF5.zero()
    except DivisionByZero:
        return
    raise AssertionError("expected DivisionByZero")


def test_prime_field_from_int_reduces():
    assert GF5.from_int(7) == GF5.from_int(2)
    assert GF5.from_int(-1) == GF5.from_int(4)


R = RationalFunctionField.over(FiniteField(3, 1), ["u"])
u = R.gen("u")


def ratfun():
    coeff = st.integers(-4, 4)
    return st.tuples(st.lists(coeff, min_size=1, max_size=4), st.lists(coeff, min_size=1, max_size=3)).filter(
        lambda nd: any(c % 3 for c in nd[1])
    ).map(lambda nd: R.from_poly(Poly(R.coeff_field, [R.coeff_field.from_int(c) for c in nd[0]]),
                                 Poly(R.coeff_field, [R.coeff_field.from_int(c) for c in nd[1]])))


@settings(max_examples=50, deadline=None)
@given(ratfun(), ratfun())
def test_rational_functions_form_a_field(a, b):
    assert a + b == b + a
    assert (a * b) * (a + b) == a * a * b + a * b * b
    if not b.is_zero():
        assert (a / b) * b == a


@settings(max_examples=30, deadline=None)
@given(ratfun())
def test_pth_root_of_pth_power(a):
    assert R.pth_root(a**3) == a


def test_u_has_no_cube_root():
    assert R.pth_root(u) is None
    assert R.pth_root(u + 1) is None


def test_canonical_form_cancels():
    assert (u * u - 1) / (u + 1) == u - 1
    assert repr((u * u - 1) / (u + 1)) == repr(u - 1)


def test_separable_split():
    F = FiniteField(3, 1)
    X = Poly(F, [F.zero(), F.one()])
    g, s = separable_split(X**3)
    assert g == X and s == 1
    g, s = separable_split(X**2 + X)
    assert s == 0 and g.degree == 2
