import pytest

from ramify import catalog
from ramify.cdvf import DEFAULT_PRECISION
from ramify.errors import DegreeMismatch, NotARoot, NotCaseIII, NotPExtension, ValidationError
from ramify.extension import CaseLabel, fixed_field, kummer_compositum
from ramify.ramfilt import case_label
from ramify.report import load_extension

# (e, f_sep, f_ins, case) worked out by hand from the defining equations
INVARIANTS = {
    "e1_artin_schreier": (3, 1, 1, "I"),
    "as_p3_n1": (3, 1, 1, "I"),
    "as_p3_n4": (3, 1, 1, "I"),
    "as_p2_n1": (2, 1, 1, "I"),
    "as_p2_n3": (2, 1, 1, "I"),
    "as_p2_n5": (2, 1, 1, "I"),
    "e2_case2_p2": (1, 1, 2, "II"),
    "e2_case2_p3": (1, 1, 3, "II"),
    "e3_cyclotomic": (3, 1, 1, "I"),
    "e4_case3": (2, 1, 2, "III"),
    "e4_floor_bottom": (2, 1, 1, "I"),
    "e4_floor_top": (1, 1, 2, "II"),
}


@pytest.mark.parametrize("name", sorted(INVARIANTS))
def test_invariants_and_case(ext, name):
    E = ext(name)
    e, fs, fi, case = INVARIANTS[name]
    assert (E.e, E.f_sep, E.f_ins) == (e, fs, fi)
    assert E.e * E.f_sep * E.f_ins == E.n
    assert case_label(E) == CaseLabel(case)
    assert E.monogenic


def test_catalog_covers_names():
    assert sorted(catalog.names()) == sorted(INVARIANTS)


def _load(doc):
    return load_extension(doc, DEFAULT_PRECISION)


def test_wrong_action_is_not_a_root():
    doc = catalog.get("e1_artin_schreier")
    doc["action"][1] = [{"terms": [[0, 1]]}, 1]
    with pytest.raises(NotARoot):
        _load(doc)


@pytest.mark.parametrize("group", ["cyclic:9", "product:3,3"])
def test_claimed_group_of_wrong_order(group):
    doc = catalog.get("e1_artin_schreier")
    doc["group"] = group
    with pytest.raises(DegreeMismatch):
        _load(doc)


def test_tame_extension_is_rejected():
    doc = {"base": {"type": "padic", "p": 3}, "minpoly": [-3, 0, 1], "action": [[0, 1], [0, -1]], "group": "cyclic:2"}
    with pytest.raises(NotPExtension):
        _load(doc)


def test_missing_minpoly():
    doc = catalog.get("e1_artin_schreier")
    del doc["minpoly"]
    with pytest.raises(ValidationError):
        _load(doc)


def test_fixed_field_of_order_two_subgroup_in_flagship(ext):
    E = ext("e4_case3")
    ff = fixed_field(E, frozenset({0, 2}))
    assert ff.T.n == 2 and ff.T.e == 2
    # L over T is ferociously ramified: residue degree 2, purely inseparable
    assert (ff.e_top, ff.f_sep_top, ff.f_ins_top) == (1, 1, 2)


def test_fixed_field_extremes(ext):
    E = ext("e1_artin_schreier")
    assert fixed_field(E, frozenset({0})).T is E
    assert fixed_field(E, frozenset(range(3))).T.n == 1


def test_kummer_compositum(ext):
    C = kummer_compositum(ext("e4_case3"))
    assert C.LM.n == 4 and C.f == 2
    assert (C.LM.e, C.LM.f_sep, C.LM.f_ins) == (4, 1, 1)
    with pytest.raises(NotCaseIII):
        kummer_compositum(ext("e1_artin_schreier"))


@pytest.mark.parametrize("name,want", [("e1_artin_schreier", 6), ("e3_cyclotomic", 6), ("e4_case3", 8)])
def test_different_of_minimal_polynomial(ext, name, want):
    assert ext(name).different_valuation() == want
