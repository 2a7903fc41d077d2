from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramify.groups import Character, Group, characters, faithful_character, parse_group
from ramify.errors import ValidationError


def cyclic(n):
    return Group([[(i + j) % n for j in range(n)] for i in range(n)])


def klein():
    return Group([[i ^ j for j in range(4)] for i in range(4)])


@given(st.integers(1, 16))
def test_cyclic_group_structure(n):
    G = cyclic(n)
    assert G.is_cyclic() and G.is_abelian()
    assert sorted(len(H) for H in G.subgroups()) == sorted(d for d in range(1, n + 1) if n % d == 0)
    assert len(characters(G)) == n
    assert faithful_character(G).is_faithful()


def test_klein_is_not_cyclic():
    V = klein()
    assert not V.is_cyclic()
    assert len(V.subgroups()) == 5
    with pytest.raises(Exception):
        faithful_character(V)


def test_character_must_be_homomorphism():
    G = cyclic(4)
    with pytest.raises(ValidationError):
        Character(G, {0: Fraction(0), 1: Fraction(1, 4), 2: Fraction(1, 4), 3: Fraction(3, 4)})


def test_character_kernel_and_order():
    G = cyclic(4)
    chi = Character(G, {g: Fraction(2 * g, 4) for g in range(4)})
    assert chi.order() == 2
    assert sorted(chi.kernel()) == [0, 2]


def test_parse_group():
    assert parse_group("cyclic:4") == {1: 1, 2: 1, 4: 2}
    assert parse_group("product:2,2") == {1: 1, 2: 3}
    assert parse_group("trivial") == {1: 1}
    with pytest.raises(ValidationError):
        parse_group("dihedral:4")


def test_non_group_table_rejected():
    with pytest.raises(ValidationError):
        Group([[0, 1], [0, 1]])
