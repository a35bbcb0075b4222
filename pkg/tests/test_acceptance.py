"""One test per acceptance criterion; each prints a PASS/FAIL line with its runtime."""

from __future__ import annotations

import itertools
import time
from contextlib import contextmanager

from latticeduality.groups import FiniteAbelianGroup, char_pairing, dual_code, enumerate_subgroups
from latticeduality.lattices import divisor_lattice, check_regular
from latticeduality.macwilliams import (
    character_sum_table,
    compatibility_check,
    composition,
    dual_optimality_check,
    implicit_identity_residual,
    inverse_distribution,
    is_optimal,
    krawtchouk_regular,
    krawtchouk_regular_dual,
    label_map,
    oracle_table,
    product_krawtchouk,
    product_weight,
    regular_table,
    relabel_table,
    singleton_defect,
    support_optimal_distribution,
    symmetrized_krawtchouk,
    transform,
    weight_table,
)
from latticeduality.matrices import (
    ConstraintSpec,
    brute_force_count,
    closed_form_count,
    count_skew,
    count_symmetric,
)
from latticeduality.supports import builtin_support, full_cyclic_chain, lee_weight, min_weight, weight_distribution

LEE_TABLE = [[1, 2, 1], [1, 0, -1], [1, -2, 1]]
HOMOGENEOUS_TABLE = [[1, 2, 6], [1, 2, -3], [1, -1, 0]]

ORACLE_SUPPORTS = [
    ("hamming", dict(orders=(2,), n=3)),
    ("hamming", dict(orders=(3,), n=2)),
    ("rank", dict(q=2, k=2, m=2)),
    ("rank", dict(q=2, k=2, m=3)),
    ("lee4", {}),
    ("chain", dict(orders=(8,), chain=full_cyclic_chain(8))),
    ("homogeneous", dict(p=3, n=1)),
    ("homogeneous", dict(p=3, n=2)),
]

# Z_4, Z_9, Z_2^3 and Mat(2x2, F_2)
SWEEP_SUPPORTS = [
    ("lee4", {}),
    ("homogeneous", dict(p=3, n=1)),
    ("hamming", dict(orders=(2,), n=3)),
    ("rank", dict(q=2, k=2, m=2)),
]


@contextmanager
def criterion(capsys, number: int, title: str, limit: float):
    start = time.perf_counter()
    failure = None
    try:
        yield
    except AssertionError as exc:
        failure = exc
    elapsed = time.perf_counter() - start
    slow = elapsed >= limit
    status = "FAIL" if failure or slow else "PASS"
    detail = f" ({failure})" if failure else (f" (over {limit:g} s)" if slow else "")
    with capsys.disabled():
        print(f"\n[criterion {number}] {status} {title} in {elapsed:.2f} s{detail}")
    if failure:
        raise failure
    assert not slow, f"criterion {number} took {elapsed:.2f} s, limit {limit:g} s"


def _sweep():
    for kind, params in SWEEP_SUPPORTS:
        sup = builtin_support(kind, **params)
        for C in enumerate_subgroups(sup.group):
            yield sup, C


def test_criterion_1_lee_golden_table(capsys):
    with criterion(capsys, 1, "Lee golden table", 1.0):
        sup = builtin_support("lee4")
        formula = regular_table(sup, 1)
        rows = label_map(sup.dual.group.elements, sup.dual.weight, lee_weight)
        cols = label_map(sup.group.elements, sup.weight, lee_weight)
        assert relabel_table(formula, rows, cols).as_ints() == LEE_TABLE


def _equal_up_to_permutation(table, target) -> bool:
    # weight 0 stays first in both directions
    n = len(target)
    for rp in itertools.permutations(range(1, n)):
        for cp in itertools.permutations(range(1, n)):
            r, c = (0, *rp), (0, *cp)
            if all(table[r[i]][c[j]] == target[i][j] for i in range(n) for j in range(n)):
                return True
    return False


def test_criterion_2_homogeneous_golden_matrix(capsys):
    with criterion(capsys, 2, "homogeneous golden matrix (p=3, n=1)", 1.0):
        sup = builtin_support("homogeneous", p=3, n=1)
        table = regular_table(sup, 1).as_ints()
        assert _equal_up_to_permutation(table, HOMOGENEOUS_TABLE)


def test_criterion_3_formula_oracle_equivalence(capsys):
    with criterion(capsys, 3, "formula/oracle equivalence on 8 builtins", 60.0):
        for kind, params in ORACLE_SUPPORTS:
            sup = builtin_support(kind, **params)
            r, inv, gamma, order = sup.r, sup.invariants, sup.gamma_table, sup.group.order
            assert set(sup.weights) == set(sup.dual.weights) == set(range(r + 1))
            o1, o2 = oracle_table(sup, 1), oracle_table(sup, 2)
            for i in range(r + 1):
                for j in range(r + 1):
                    assert krawtchouk_regular(inv, gamma, i, j) == o1[i][j], (kind, params, 1, i, j)
                    assert krawtchouk_regular_dual(inv, gamma, order, i, j) == o2[i][j], (kind, params, 2, i, j)


def test_criterion_4_macwilliams_round_trip(capsys):
    with criterion(capsys, 4, "MacWilliams round trip over every subgroup", 120.0):
        count = 0
        for sup, C in _sweep():
            D = dual_code(C)
            W, Wd = weight_distribution(C, sup), weight_distribution(D, sup.dual)
            assert transform(W, regular_table(sup, 2), len(C)) == Wd, (sup, C)
            assert inverse_distribution(Wd, len(D), sup) == W, (sup, C)
            count += 1
        assert count == 3 + 3 + 16 + 67


def _constraint_families(q, k, m):
    cells = [(a, b) for a in range(k) for b in range(m)]
    ident = [[int(a == b) for b in range(m)] for a in range(k)]
    first = [[int(a == 0 and b == 0) for b in range(m)] for a in range(k)]
    ones = [[1] * m for _ in range(k)]
    yield "kernel", [ConstraintSpec("kernel", coefficients=A) for A in (ident, first, ones)]
    sets = [tuple(cells), ((0, 0),), tuple((0, b) for b in range(m))]
    if len(cells) > 1:
        sets.append(((0, 0), cells[-1]))
    yield "sum_zero", [ConstraintSpec("sum_zero", s) for s in sets]
    blocks = {(1, 1), (k, 1), (1, m), (k, m)}
    yield "zero_block", [ConstraintSpec("zero_block", block=b) for b in sorted(blocks)]
    diag = [(), ((0, 0),), tuple((a, a) for a in range(k))]
    if k > 1:
        diag.append(((k - 1, k - 1),))
    yield "zero_diagonal", [ConstraintSpec("zero_diagonal", d) for d in diag]
    if k == m:
        yield "sym/skew", [ConstraintSpec("symmetric"), ConstraintSpec("skew_symmetric")]


def test_criterion_5_matrix_counts(capsys):
    with criterion(capsys, 5, "closed-form matrix counts vs brute force", 120.0):
        instances = {}
        for q in (2, 3):
            for k in (1, 2, 3):
                for m in range(k, 4):
                    for family, specs in _constraint_families(q, k, m):
                        for spec in specs:
                            instances.setdefault(family, set()).add((q, k, m, spec))
                            for j in range(k + 1):
                                got = closed_form_count(q, k, m, spec, j)
                                assert got == brute_force_count(q, k, m, spec, j), (q, k, m, spec, j)
        assert all(len(v) >= 3 for v in instances.values())
        all22 = ConstraintSpec("sum_zero", ((0, 0), (0, 1), (1, 0), (1, 1)))
        assert closed_form_count(2, 2, 2, all22, 1) == 5
        assert closed_form_count(2, 2, 2, ConstraintSpec("sum_zero", ((0, 0),)), 2) == 2
        assert closed_form_count(2, 2, 2, ConstraintSpec("zero_block", block=(1, 1)), 2) == 2
        assert closed_form_count(2, 2, 2, ConstraintSpec("zero_diagonal", ((0, 0), (1, 1))), 2) == 1
        assert count_symmetric(2, 2, 1) == 3
        assert count_skew(2, 2, 2) == 1


def test_criterion_6_optimality_suite(capsys):
    with criterion(capsys, 6, "Singleton bound and optimal codes", 60.0):
        optimal = 0
        for sup, C in _sweep():
            if len(C) == 1:
                continue
            assert singleton_defect(C, sup) >= 0
            if C.is_trivial() or not is_optimal(C, sup):
                continue
            optimal += 1
            report = dual_optimality_check(C, sup)
            assert report.dual_optimal and report.bound_holds, (sup, C)
            assert support_optimal_distribution(sup, min_weight(C, sup)) == weight_distribution(C, sup)
        assert optimal > 0


def test_criterion_7_structural_properties(capsys):
    with criterion(capsys, 7, "structural identities", 60.0):
        for kind, params in ORACLE_SUPPORTS:
            sup = builtin_support(kind, **params)
            r, n = sup.r, sup.group.order
            assert all(sup.dual.gamma_table[s] * sup.gamma_table[r - s] == n for s in range(r + 1))
            for chi in sup.dual.group:
                assert all(char_pairing(chi, g) == 0 for g in sup.balls[sup.dual(chi)])
        for sup, C in _sweep():
            for s in range(sup.r + 1):
                lhs, rhs = implicit_identity_residual(C, sup, s)
                assert lhs == rhs, (sup, C, s)
        base = FiniteAbelianGroup((4,))
        K = weight_table(base, lee_weight, lee_weight, 2)
        assert K.as_ints() == LEE_TABLE
        square = FiniteAbelianGroup((4, 4))
        pw, pt = product_weight(base, lee_weight, 2), product_weight(base.dual(), lee_weight, 2)
        for (a, b), value in character_sum_table(square, pw, pt).items():
            assert product_krawtchouk(K, a, b) == value.to_int()
        comp_g = lambda g: composition(pw(g), 2)  # noqa: E731
        comp_c = lambda chi: composition(pt(chi), 2)  # noqa: E731
        for (d, e), value in character_sum_table(square, comp_g, comp_c).items():
            assert symmetrized_krawtchouk(K, d, e, 2) == value.to_int()


def test_criterion_8_negative_controls(capsys):
    with criterion(capsys, 8, "negative controls", 10.0):
        witness = check_regular(divisor_lattice(12))
        assert witness is not None and set(witness.elements) == {4, 6}
        Z4 = FiniteAbelianGroup((4,))
        bad = compatibility_check(Z4, lambda g: int(not g.is_zero()), lambda chi: chi.coords)
        assert bad is not None and {g.coords for g in bad.elements} == {(1,), (2,)}
