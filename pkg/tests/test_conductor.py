from fractions import Fraction

import pytest

from ramify import catalog
from ramify.conductor import (
    artin_conductor,
    artin_via_compositum,
    case3_closed_forms,
    depth,
    faithful_conductor,
    hyodo_bounds,
    kato_conductor,
    conductor_upper_bounds,
    swan_conductor,
)
from ramify.errors import NonIntegralInstance, NotCaseIII
from ramify.groups import characters
from ramify.ramfilt import compute_ramification

from conftest import built

ALL = catalog.names()


# ---- exact arithmetic in Z[zeta_N] / Phi_N, independent of the library ----


def _polydiv(a, b):
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        k = len(a) - len(b)
        c = a[-1] // b[-1]
        q[k] = c
        for i, x in enumerate(b):
            a[i + k] -= c * x
        while a and a[-1] == 0:
            a.pop()
    return q, a


def cyclotomic(n):
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _polydiv(poly, cyclotomic(d))
            assert not any(rem)
    return poly


def pairing(weights, chi, N):
    """(1/|G|) sum_sigma w(sigma) zeta^(N chi(sigma)) as an exact rational, or None if irrational."""
    acc = [Fraction(0)] * N
    for g, w in weights.items():
        acc[int(chi(g) * N) % N] += Fraction(w)
    phi = cyclotomic(N)
    # reduce modulo Phi_N, which is monic
    acc = list(acc)
    for top in range(len(acc) - 1, len(phi) - 2, -1):
        c = acc[top]
        if c:
            k = top - (len(phi) - 1)
            for i, x in enumerate(phi):
                acc[i + k] -= c * x
    if any(acc[1:]):
        return None
    return acc[0] / len(weights)


def swan_weights(R):
    f = R.f_sep * R.f_ins
    w = {g: -f * R.s[g] for g in R.nontrivial}
    w[R.identity] = f * sum(R.s[g] for g in R.nontrivial)
    return w


def artin_weights(R):
    f = R.f_sep * R.f_ins
    w = {g: -f * R.i[g] for g in R.nontrivial}
    w[R.identity] = f * sum(R.i[g] for g in R.nontrivial)
    return w


@pytest.mark.parametrize("name", ALL)
def test_swan_and_artin_match_character_pairing(name):
    R = compute_ramification(built(name))
    N = len(R.elements)
    for chi in characters(built(name).group):
        assert swan_conductor(R, chi) == pairing(swan_weights(R), chi, N)
        assert artin_conductor(R, chi) == pairing(artin_weights(R), chi, N)


def test_cyclotomic_oracle_sanity():
    assert cyclotomic(4) == [1, 0, 1]
    assert cyclotomic(9) == [1, 0, 0, 1, 0, 0, 1]


# (sw, ksw, d_K) by hand
KNOWN = {
    "e1_artin_schreier": (2, 2, Fraction(4, 3)),
    "as_p3_n1": (1, 1, Fraction(2, 3)),
    "as_p3_n4": (4, 4, Fraction(8, 3)),
    "as_p2_n1": (1, 1, Fraction(1, 2)),
    "as_p2_n3": (3, 3, Fraction(3, 2)),
    "as_p2_n5": (5, 5, Fraction(5, 2)),
    "e2_case2_p2": (2, 2, Fraction(1)),
    "e2_case2_p3": (3, 3, Fraction(2)),
    "e3_cyclotomic": (2, 2, Fraction(4, 3)),
    "e4_case3": (6, 5, Fraction(7, 2)),
}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_known_conductors_and_depth(name):
    rep = faithful_conductor(built(name))
    dep = depth(built(name))
    assert (rep.sw, rep.ksw, dep.d_K) == KNOWN[name]
    assert dep.closed_form == dep.d_L


def test_tame_and_trivial_characters_have_zero_conductor():
    E = built("e4_case3")
    for chi in characters(E.group):
        if chi.order() == 1:
            assert kato_conductor(E, chi) == 0


def test_order_two_character_of_flagship_goes_to_quotient():
    E = built("e4_case3")
    chi2 = next(c for c in characters(E.group) if c.order() == 2)
    rep = kato_conductor(E, chi2)
    assert rep.on_quotient
    assert rep.ksw == faithful_conductor(built("e4_floor_bottom")).ksw


@pytest.mark.parametrize("name", ALL)
def test_hyodo_and_bounds(name):
    E = built(name)
    h = hyodo_bounds(E)
    assert h.lower_ok and h.upper_ok
    b = conductor_upper_bounds(E)
    assert b["depth_bound_slack"] >= 0 and b["ceiling_slack"] >= 0


def test_flagship_hyodo_is_strict():
    h = hyodo_bounds(built("e4_case3"))
    assert h.lower == Fraction(13, 4) and h.d_K == Fraction(7, 2) and h.upper == 4
    assert not h.first_equality


@pytest.mark.parametrize("p,e,ksw,j2,d,lhs3", [
    (2, 2, 5, 3, Fraction(7, 2), Fraction(13, 4)),
    (3, 6, 14, 8, Fraction(34, 3), Fraction(100, 9)),
    (5, 20, 44, 24, Fraction(196, 5), Fraction(976, 25)),
])
def test_case3_closed_forms(p, e, ksw, j2, d, lhs3):
    out = case3_closed_forms(p, e)
    assert (out["ksw"], out["j2"], out["d"], out["lhs3"]) == (ksw, j2, d, lhs3)
    assert out["strict"]
    # the left side of the lower depth bound from the two jumping numbers
    assert (p - 1) * (Fraction(ksw, p) + Fraction(j2, p * p)) == lhs3


def test_case3_closed_forms_guard():
    with pytest.raises(NonIntegralInstance):
        case3_closed_forms(3, 4)


def test_artin_after_base_change():
    E = built("e4_case3")
    info = artin_via_compositum(E)
    R = compute_ramification(E)
    assert all(info["i_LM"][g] == 2 * R.i[g] for g in R.nontrivial)
    assert info["A_M"] == info["A_from_L"] == 6
    assert info["ksw"] == info["A_M"] - 1 == 5
    with pytest.raises(NotCaseIII):
        artin_via_compositum(built("e1_artin_schreier"))
