from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latticeduality import finite_field as ff
from latticeduality.groups import FiniteAbelianGroup, dual_code, enumerate_subgroups, subgroup_closure, whole_group
from latticeduality.lattices import check_modular
from latticeduality.macwilliams import dual_partition
from latticeduality.supports import (
    RegularSupport,
    SupportViolation,
    ball,
    builtin_support,
    chain_support,
    check_distance,
    exact_weight,
    full_cyclic_chain,
    gamma,
    lee_weight,
    min_weight,
    sigma_weight,
    support_from_json,
    validate_support,
    weight_distribution,
    weight_partition,
    weights_equivalent,
)

BUILTINS = [
    ("hamming", dict(orders=(2,), n=2)),
    ("hamming", dict(orders=(2,), n=3)),
    ("hamming", dict(orders=(3,), n=2)),
    ("hamming", dict(orders=(2, 2), n=2)),
    ("rank", dict(q=2, k=1, m=1)),
    ("rank", dict(q=2, k=2, m=2)),
    ("rank", dict(q=2, k=2, m=3)),
    ("rank", dict(q=3, k=1, m=2)),
    ("rank", dict(q=4, k=1, m=2)),
    ("lee4", {}),
    ("chain", dict(orders=(8,), chain=full_cyclic_chain(8))),
    ("chain", dict(orders=(2, 4), chain=[[[0, 2]], [[0, 1]]])),
    ("homogeneous", dict(p=3, n=1)),
    ("homogeneous", dict(p=3, n=2)),
]
IDS = [f"{k}-{'-'.join(map(str, p.values()))}" for k, p in BUILTINS]


@pytest.fixture(scope="module", params=BUILTINS, ids=IDS)
def sup(request):
    kind, params = request.param
    return builtin_support(kind, **params)


def test_hamming_gamma():
    assert gamma(builtin_support("hamming", orders=(2,), n=2)) == (1, 2, 4)
    assert gamma(builtin_support("hamming", orders=(2,), n=3)) == (1, 2, 4, 8)


def test_builtin_gammas():
    assert gamma(builtin_support("rank", q=2, k=2, m=3)) == (1, 8, 64)
    assert gamma(builtin_support("rank", q=2, k=2, m=2)) == (1, 4, 16)
    assert gamma(builtin_support("homogeneous", p=3, n=1)) == (1, 3, 9)
    assert gamma(builtin_support("chain", orders=(8,), chain=full_cyclic_chain(8))) == (1, 2, 4, 8)


def test_zero_kernel_violation():
    G = FiniteAbelianGroup((2,))
    base = builtin_support("rank", q=2, k=1, m=1)
    bad = RegularSupport(G, base.lattice, (0, 0))
    report = validate_support(bad)
    assert [v.axiom for v in report.violations] == ["A"]
    with pytest.raises(SupportViolation):
        bad.validate()


def test_subadditivity_violation():
    # Z_4 with sigma(2) at the top and sigma(1) below it breaks (C): 1 + 1 = 2
    L = builtin_support("lee4").lattice
    bad = RegularSupport(FiniteAbelianGroup((4,)), L, (0, 1, 2, 1))
    axioms = {v.axiom for v in validate_support(bad, stop_at_first=False).violations}
    assert "C" in axioms


def test_gamma_requires_validation():
    raw = support_from_json({"kind": "lee4"})
    with pytest.raises(ValueError):
        gamma(raw)


def test_homogeneous_rejects_p2():
    with pytest.raises(ValueError):
        builtin_support("homogeneous", p=2, n=1)


def test_ball_examples():
    h = builtin_support("hamming", orders=(2,), n=2)
    assert sorted(g.coords for g in ball(h, 0b01)) == [(0, 0), (1, 0)]
    assert len(ball(h, h.lattice.bottom)) == 1
    r = builtin_support("rank", q=2, k=2, m=2)
    span_e1 = r.lattice.index(((1, 0),))
    B = ball(r, span_e1)
    assert len(B) == 4
    assert all(g.coords[2:] == (0, 0) for g in B)


def test_hamming_dual_support_is_trivial_coordinates():
    h = builtin_support("hamming", orders=(3,), n=2)
    for chi in h.dual.group:
        assert h.dual(chi) == sum(1 << i for i, c in enumerate(chi.coords) if c == 0)


def test_chain_dual_support():
    s = builtin_support("chain", orders=(8,), chain=full_cyclic_chain(8))
    layers = [frozenset(g for g in s.group if s(g) <= i) for i in range(4)]
    for chi in s.dual.group:
        killed = [j for j in range(4) if all((c * g.coords[0]) % 8 == 0 for g in layers[j] for c in chi.coords)]
        assert s.dual(chi) == max(killed)


def test_lee_sigma_weight():
    s = builtin_support("lee4")
    G = s.group
    assert [sigma_weight(s, G(a)) for a in range(4)] == [0, 2, 1, 2]


def test_rank_weight_is_matrix_rank():
    s = builtin_support("rank", q=3, k=1, m=2)
    F = ff.field(3)
    for g in s.group:
        assert s.weight(g) == ff.rank(F, [g.coords])


def test_weight_distribution_examples():
    h = builtin_support("hamming", orders=(2,), n=2)
    G = h.group
    C = subgroup_closure(G, [G(1, 1)])
    assert weight_distribution(C, h).counts == (1, 0, 1)
    assert weight_distribution(subgroup_closure(G, []), h).counts == (1, 0, 0)
    r = builtin_support("rank", q=2, k=2, m=2)
    assert weight_distribution(whole_group(r.group), r).counts == (1, 9, 6)


def test_min_weight_examples():
    h = builtin_support("hamming", orders=(2,), n=2)
    G = h.group
    assert min_weight(subgroup_closure(G, [G(1, 1)]), h) == 2
    s = builtin_support("lee4")
    Z4 = s.group
    assert min_weight(whole_group(Z4), s) == 1
    assert min_weight(subgroup_closure(Z4, [Z4(2)]), s) == 1
    with pytest.raises(ValueError):
        min_weight(subgroup_closure(Z4, []), s)


def test_weight_equivalence_examples():
    s = builtin_support("lee4")
    assert weights_equivalent(s.group, s.weight, lee_weight)
    assert weights_equivalent(s.group, s.weight, s.weight)
    h = builtin_support("hamming", orders=(2,), n=2)
    assert not weights_equivalent(h.group, h.weight, exact_weight((2,), 2))


def test_distance_examples():
    for kind, params in [("lee4", {}), ("hamming", dict(orders=(2,), n=3)), ("homogeneous", dict(p=3, n=2))]:
        assert check_distance(builtin_support(kind, **params)) is None


def test_descriptor_round_trip():
    s = builtin_support("lee4")
    custom = {
        "kind": "custom",
        "params": {"group": s.group.to_json(), "lattice": s.lattice.to_json()},
        "sigma": list(s.sigma),
    }
    assert support_from_json(custom).validate().sigma == s.sigma
    with pytest.raises(ValueError):
        support_from_json({"kind": "lee4", "bogus": 1})


# properties over every builtin


def test_gamma_table_shape(sup):
    g = sup.gamma_table
    assert g[0] == 1 and g[-1] == sup.group.order
    assert all(a <= b for a, b in zip(g, g[1:]))
    assert all(sup.group.order % x == 0 for x in g)


def test_gamma_reciprocity(sup):
    r, n = sup.r, sup.group.order
    assert all(sup.dual.gamma_table[s] * sup.gamma_table[r - s] == n for s in range(r + 1))


def test_characters_annihilate_their_dual_ball(sup):
    from latticeduality.groups import char_pairing

    for chi in sup.dual.group:
        assert all(char_pairing(chi, g) == 0 for g in sup.balls[sup.dual(chi)])


def test_dual_of_ball_is_dual_ball(sup):
    for S in sup.lattice.elements:
        assert dual_code(ball(sup, S)).elements == sup.dual.balls[S]


def test_double_dual(sup):
    assert sup.dual.dual == sup


def test_modular_implies_distance(sup):
    if check_modular(sup.lattice) is None:
        assert check_distance(sup) is None


def test_weight_partitions_are_mutually_dual(sup):
    primal = weight_partition(sup.group.elements, sup.weight)
    dual = weight_partition(sup.dual.group.elements, sup.dual.weight)
    assert dual_partition(sup.group, list(primal)) == dual
    assert dual_partition(sup.dual.group, list(dual)) == primal


# random subgroup chains

CHAIN_GROUPS = [(8,), (9,), (12,), (2, 4), (2, 2, 2), (3, 3), (4, 4)]


@st.composite
def subgroup_chains(draw):
    G = FiniteAbelianGroup(draw(st.sampled_from(CHAIN_GROUPS)))
    subs = enumerate_subgroups(G)
    current = subs[0]
    chain = []
    while True:
        bigger = [H for H in subs if current.elements < H.elements and len(H) < G.order]
        if not bigger or not draw(st.booleans()):
            break
        current = draw(st.sampled_from(bigger))
        chain.append(current)
    return G, chain


@given(subgroup_chains())
def test_chain_support_is_fourier_reflexive(case):
    G, chain = case
    gens = [[list(g.coords) for g in H.generators] for H in chain]
    s = chain_support(G.orders, gens).validate()
    P = weight_partition(G.elements, s.weight)
    assert len(P) == len(chain) + 2
    assert len(dual_partition(G, list(P))) == len(chain) + 2
    assert dual_partition(G, list(P)) == weight_partition(s.dual.group.elements, s.dual.weight)
