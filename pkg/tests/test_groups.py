from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latticeduality.groups import (
    Code,
    FiniteAbelianGroup,
    char_pairing,
    character_sum,
    code_intersect,
    code_sum,
    dual_code,
    enumerate_subgroups,
    subgroup_closure,
    whole_group,
)

small_orders = st.lists(st.integers(1, 6), min_size=1, max_size=3).filter(lambda o: 1 < len(FiniteAbelianGroup(o)) <= 48)


def test_dual_of_dual():
    G = FiniteAbelianGroup((2, 4))
    assert G.dual().dual() == G
    assert G.dual().is_dual and not G.is_dual


def test_element_arithmetic_and_json():
    G = FiniteAbelianGroup((3, 4))
    g = G(2, 3)
    assert g + g == G(1, 2)
    assert -g == G(1, 1)
    assert (g - g).is_zero()
    assert FiniteAbelianGroup.from_json(G.to_json()) == G
    with pytest.raises(ValueError):
        G(1)
    with pytest.raises(ValueError):
        FiniteAbelianGroup.from_json({"orders": [2], "extra": 1})


def test_subgroup_counts():
    assert len(enumerate_subgroups(FiniteAbelianGroup((2, 4)))) == 8
    assert len(enumerate_subgroups(FiniteAbelianGroup((2, 2)))) == 5
    assert len(enumerate_subgroups(FiniteAbelianGroup((9,)))) == 3


def test_dual_code_of_z4():
    G = FiniteAbelianGroup((4,))
    C = subgroup_closure(G, [G(2)])
    D = dual_code(C)
    assert sorted(c.coords for c in D) == [(0,), (2,)]
    assert dual_code(whole_group(G)).elements == {G.dual().zero}


def test_code_json_round_trip():
    G = FiniteAbelianGroup((2, 2))
    C = subgroup_closure(G, [G(1, 1)])
    assert Code.from_json(C.to_json()) == C


def test_trivial_character_sum():
    G = FiniteAbelianGroup((4,))
    assert character_sum(G.dual().elements, G(1)).to_int() == 0
    assert character_sum(G.dual().elements, G.zero).to_int() == 4


@given(small_orders, st.data())
def test_double_dual_and_orders(orders, data):
    G = FiniteAbelianGroup(orders)
    gens = data.draw(st.lists(st.sampled_from(G.elements), max_size=2))
    C = subgroup_closure(G, gens)
    D = dual_code(C)
    assert len(C) * len(D) == G.order
    assert dual_code(D).elements == C.elements


@given(small_orders, st.data())
def test_pairing_is_bilinear(orders, data):
    G = FiniteAbelianGroup(orders)
    g, h = data.draw(st.sampled_from(G.elements)), data.draw(st.sampled_from(G.elements))
    chi = data.draw(st.sampled_from(G.dual().elements))
    N = G.exponent
    assert char_pairing(chi, g + h) == (char_pairing(chi, g) + char_pairing(chi, h)) % N
    assert char_pairing(chi, g) == char_pairing(G.dual()(g.coords), G(chi.coords))


@given(small_orders, st.data())
def test_sum_and_intersection_duality(orders, data):
    G = FiniteAbelianGroup(orders)
    C = subgroup_closure(G, data.draw(st.lists(st.sampled_from(G.elements), max_size=2)))
    E = subgroup_closure(G, data.draw(st.lists(st.sampled_from(G.elements), max_size=2)))
    assert dual_code(code_sum(C, E)).elements == code_intersect(dual_code(C), dual_code(E)).elements
