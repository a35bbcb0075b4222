"""Krawtchouk coefficients, MacWilliams transforms and optimal-code distributions.

Tables are indexed ``K[i][j]`` with ``i`` the weight of the evaluated element
and ``j`` the weight class of the characters summed over.  All arithmetic is
over :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Hashable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .cyclotomic import CyclotomicSum, cyclo_reduce
from .groups import Code, FiniteAbelianGroup, GroupElement, char_pairing, dual_code
from .lattices import LatticeInvariants
from .supports import RegularSupport, WeightDistribution, min_weight, weight_distribution

Weight = Callable[[GroupElement], Hashable]


class ArithmeticInconsistency(ArithmeticError):
    """A quantity that must be a nonnegative integer is not."""


class IncompatiblePairError(ValueError):
    def __init__(self, witness: "IncompatibilityWitness"):
        super().__init__(str(witness))
        self.witness = witness


@dataclass(frozen=True)
class IncompatibilityWitness:
    """Two elements of equal weight whose character sums over ``tau_class`` differ."""

    tau_class: Hashable
    elements: Tuple[GroupElement, GroupElement]
    values: Tuple[CyclotomicSum, CyclotomicSum]

    def __str__(self) -> str:
        g, h = self.elements
        a, b = self.values
        return f"class {self.tau_class}: sum at {g} is {a}, at {h} is {b}"


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class KrawtchoukTable:
    values: Tuple[Tuple[Fraction, ...], ...]
    provenance: str = field(default="regular_formula", compare=False)

    @property
    def r(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int) -> Tuple[Fraction, ...]:
        return self.values[i]

    def __iter__(self) -> Iterator[Tuple[Fraction, ...]]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def as_ints(self) -> List[List[int]]:
        if any(x.denominator != 1 for row in self.values for x in row):
            raise ArithmeticInconsistency("table has non-integer entries")
        return [[int(x) for x in row] for row in self.values]

    def to_tsv(self) -> str:
        cols = range(len(self.values[0]))
        lines = ["\t".join(["i\\j", *map(str, cols)])]
        lines += ["\t".join([str(i), *map(format_rational, row)]) for i, row in enumerate(self.values)]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"provenance": self.provenance, "table": [[format_rational(x) for x in row] for row in self.values]}


def _table(rows: Sequence[Sequence], provenance: str) -> KrawtchoukTable:
    return KrawtchoukTable(tuple(tuple(Fraction(x) for x in row) for row in rows), provenance)


# ---------------------------------------------------------------------------
# closed forms from lattice invariants


def _check_index(r: int, i: int, j: int):
    if not (0 <= i <= r and 0 <= j <= r):
        raise IndexError(f"({i}, {j}) outside 0..{r}")


def krawtchouk_regular(inv: LatticeInvariants, gamma: Sequence[int], i: int, j: int) -> Fraction:
    """``K(w_dual, w)(i, j)``: ``i`` is a dual-support weight, ``j`` a support weight."""
    r = inv.r
    _check_index(r, i, j)
    return Fraction(
        sum(gamma[s] * inv.mu_mob[s][j] * inv.mu_leq[s][r - i] * inv.mu_geq[j][s] for s in range(r + 1))
    )


def krawtchouk_regular_dual(inv: LatticeInvariants, gamma: Sequence[int], order: int, i: int, j: int) -> Fraction:
    """``K(w, w_dual)(i, j)``: ``i`` is a support weight, ``j`` a dual-support weight."""
    r = inv.r
    _check_index(r, i, j)
    total = sum(
        Fraction(inv.mu_mob[r - j][r - s] * inv.mu_geq[r - s][i] * inv.mu_leq[r - j][r - s], gamma[r - s])
        for s in range(r + 1)
    )
    return order * total


def _attained(sup: RegularSupport) -> FrozenSet[int]:
    return frozenset(sup.weights)


def regular_table(sup: RegularSupport, part: int = 1) -> KrawtchoukTable:
    """Full table from the closed forms, zero on unattained rows and columns.

    ``part=1`` gives ``K(w_dual, w)``, ``part=2`` gives ``K(w, w_dual)``.
    """
    inv, gamma, r = sup.invariants, sup.gamma_table, sup.r
    if part == 1:
        rows, cols = _attained(sup.dual), _attained(sup)
        cell = lambda i, j: krawtchouk_regular(inv, gamma, i, j)
    elif part == 2:
        rows, cols = _attained(sup), _attained(sup.dual)
        cell = lambda i, j: krawtchouk_regular_dual(inv, gamma, sup.group.order, i, j)
    else:
        raise ValueError("part must be 1 or 2")
    R = range(r + 1)
    return _table([[cell(i, j) if i in rows and j in cols else 0 for j in R] for i in R], "regular_formula")


# ---------------------------------------------------------------------------
# character-sum oracle


def _class_sums(
    H: FiniteAbelianGroup, omega: Weight, tau: Weight
) -> Tuple[Dict[Tuple[Hashable, Hashable], CyclotomicSum], Optional[IncompatibilityWitness]]:
    """Sums ``sum_{tau(chi) = b} chi(h)`` keyed by ``(omega(h), b)``, plus the first conflict."""
    chars = H.dual().elements
    classes: Dict[Hashable, List[GroupElement]] = {}
    for chi in chars:
        classes.setdefault(tau(chi), []).append(chi)
    N = H.exponent
    table: Dict[Tuple[Hashable, Hashable], CyclotomicSum] = {}
    reps: Dict[Tuple[Hashable, Hashable], GroupElement] = {}
    for h in H.elements:
        a = omega(h)
        for b, members in classes.items():
            raw = [0] * N
            for chi in members:
                raw[char_pairing(chi, h)] += 1
            value = cyclo_reduce(raw, N)
            key = (a, b)
            if key not in table:
                table[key], reps[key] = value, h
            elif table[key] != value:
                return table, IncompatibilityWitness(b, (reps[key], h), (table[key], value))
    return table, None


def character_sum_table(H: FiniteAbelianGroup, omega: Weight, tau: Weight) -> Dict[Tuple[Hashable, Hashable], CyclotomicSum]:
    """Exact ``K(omega, tau)`` as a mapping over attained ``(a, b)``; raises if incompatible."""
    table, witness = _class_sums(H, omega, tau)
    if witness is not None:
        raise IncompatiblePairError(witness)
    return table


def compatibility_check(H: FiniteAbelianGroup, omega: Weight, tau: Weight) -> Optional[IncompatibilityWitness]:
    """``None`` when ``(omega, tau)`` is compatible, else a witness."""
    return _class_sums(H, omega, tau)[1]


def _integer_table(sums: Mapping[Tuple[int, int], CyclotomicSum], r: int) -> KrawtchoukTable:
    rows = [[0] * (r + 1) for _ in range(r + 1)]
    for (a, b), value in sums.items():
        if not value.is_integer():
            raise ArithmeticInconsistency(f"K({a},{b}) = {value} is not an integer")
        rows[a][b] = value.to_int()
    return _table(rows, "oracle")


def oracle_table(sup: RegularSupport, part: int = 1) -> KrawtchoukTable:
    """The same table as :func:`regular_table`, from character sums."""
    if part == 1:
        H, omega, tau = sup.dual.group, sup.dual.weight, sup.weight
    elif part == 2:
        H, omega, tau = sup.group, sup.weight, sup.dual.weight
    else:
        raise ValueError("part must be 1 or 2")
    return _integer_table(character_sum_table(H, omega, tau), sup.r)


def krawtchouk_oracle(sup: RegularSupport, i: int, j: int, part: int = 1) -> Fraction:
    _check_index(sup.r, i, j)
    return oracle_table(sup, part)[i][j]


def weight_table(H: FiniteAbelianGroup, omega: Callable[[GroupElement], int], tau: Callable[[GroupElement], int], r: int) -> KrawtchoukTable:
    """Oracle table for arbitrary integer-valued weights in ``0..r``."""
    return _integer_table(character_sum_table(H, omega, tau), r)


# ---------------------------------------------------------------------------
# relabelling between equivalent weights


def label_map(elements: Sequence[GroupElement], old: Weight, new: Weight) -> Dict[Hashable, Hashable]:
    """The bijection of weight values induced by two equivalent weights."""
    forward: Dict[Hashable, Hashable] = {}
    backward: Dict[Hashable, Hashable] = {}
    for g in elements:
        a, b = old(g), new(g)
        if forward.setdefault(a, b) != b or backward.setdefault(b, a) != a:
            raise ValueError(f"weights are not equivalent (at {g})")
    return forward


def relabel_table(K: KrawtchoukTable, row_map: Mapping[int, int], col_map: Mapping[int, int]) -> KrawtchoukTable:
    """Move entry ``(i, j)`` to ``(row_map[i], col_map[j])``; unmapped indices stay put."""
    n = len(K)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows[row_map.get(i, i)][col_map.get(j, j)] = K[i][j]
    return _table(rows, K.provenance)


# ---------------------------------------------------------------------------
# transforms


def transform(W: WeightDistribution, K: KrawtchoukTable, code_size: int) -> WeightDistribution:
    """``W'_b = (1/|C|) sum_a K[a][b] W_a``, asserted to be nonnegative integers."""
    if len(W) != len(K):
        raise ValueError(f"distribution length {len(W)} does not match table size {len(K)}")
    out = []
    for b in range(len(K)):
        value = sum((K[a][b] * W[a] for a in range(len(W))), Fraction(0)) / code_size
        if value.denominator != 1 or value < 0:
            raise ArithmeticInconsistency(f"transformed count W_{b} = {value}")
        out.append(int(value))
    return WeightDistribution(tuple(out))


def dual_distribution(C: Code, sup: RegularSupport) -> WeightDistribution:
    """``W(C*, w_dual)`` from ``W(C, w)`` via the closed-form table."""
    return transform(weight_distribution(C, sup), regular_table(sup, 2), len(C))


def inverse_distribution(W_dual: WeightDistribution, dual_size: int, sup: RegularSupport) -> WeightDistribution:
    """``W(C, w)`` back from ``W(C*, w_dual)``."""
    return transform(W_dual, regular_table(sup, 1), dual_size)


# ---------------------------------------------------------------------------
# products and symmetrization


def product_krawtchouk(K: KrawtchoukTable, a: Sequence[int], b: Sequence[int]) -> Fraction:
    if len(a) != len(b):
        raise ValueError("index vectors differ in length")
    return math.prod((K[x][y] for x, y in zip(a, b)), start=Fraction(1))


def composition(weights: Sequence[int], r: int) -> Tuple[int, ...]:
    """Multiplicities ``(e_0, ..., e_r)`` of the values in ``weights``."""
    counts = [0] * (r + 1)
    for w in weights:
        counts[w] += 1
    return tuple(counts)


def _expand(comp: Sequence[int]) -> List[int]:
    return [i for i, c in enumerate(comp) for _ in range(c)]


def multiset_permutations(items: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Distinct orderings of a multiset, lexicographic."""
    pool = sorted(items)
    if not pool:
        yield ()
        return
    for k, x in enumerate(pool):
        if k and pool[k - 1] == x:
            continue
        for rest in multiset_permutations(pool[:k] + pool[k + 1 :]):
            yield (x, *rest)


def symmetrized_krawtchouk(K: KrawtchoukTable, d: Sequence[int], e: Sequence[int], n: int) -> Fraction:
    if sum(d) != n or sum(e) != n:
        raise ValueError(f"compositions {tuple(d)}, {tuple(e)} do not sum to {n}")
    if len(d) != len(K) or len(e) != len(K):
        raise ValueError("composition length does not match the table")
    a = _expand(d)
    return sum((product_krawtchouk(K, a, b) for b in multiset_permutations(_expand(e))), Fraction(0))


def product_weight(base: FiniteAbelianGroup, omega: Callable[[GroupElement], int], n: int) -> Callable[[GroupElement], Tuple[int, ...]]:
    """Coordinatewise weight vector on ``base ** n`` (also usable on its dual)."""
    k = base.rank

    def weights(g: GroupElement) -> Tuple[int, ...]:
        B = base.dual() if g.group.is_dual != base.is_dual else base
        return tuple(omega(B(g.coords[t * k : (t + 1) * k])) for t in range(n))

    return weights


# ---------------------------------------------------------------------------
# implicit identities, Singleton bound, optimal codes


def implicit_identity_residual(C: Code, sup: RegularSupport, s: int) -> Tuple[Fraction, Fraction]:
    """Both sides of the implicit identity at level ``s``, each from enumeration."""
    r, inv = sup.r, sup.invariants
    if not 0 <= s <= r:
        raise IndexError(f"s = {s} outside 0..{r}")
    W = weight_distribution(C, sup)
    D = dual_code(C)
    Wd = weight_distribution(D, sup.dual)
    lhs = Fraction(sum(W[i] * inv.mu_geq[s][i] for i in range(s + 1)))
    rhs = Fraction(len(C), sup.dual.gamma_table[r - s]) * sum(Wd[j] * inv.mu_leq[s][r - j] for j in range(r - s + 1))
    return lhs, rhs


def singleton_defect(C: Code, sup: RegularSupport) -> Fraction:
    d = min_weight(C, sup)
    return Fraction(sup.group.order, sup.gamma_table[d - 1]) - len(C)


def is_optimal(C: Code, sup: RegularSupport) -> bool:
    return singleton_defect(C, sup) == 0


@dataclass(frozen=True)
class DualOptimalityReport:
    d: int
    d_dual: int
    dual_optimal: bool
    bound_holds: bool

    @property
    def ok(self) -> bool:
        return self.dual_optimal and self.bound_holds


def dual_optimality_check(C: Code, sup: RegularSupport) -> DualOptimalityReport:
    if C.is_trivial():
        raise ValueError("dual optimality is only claimed for non-trivial codes")
    if not is_optimal(C, sup):
        raise ValueError("code is not optimal")
    D = dual_code(C)
    d, d_dual = min_weight(C, sup), min_weight(D, sup.dual)
    return DualOptimalityReport(d, d_dual, is_optimal(D, sup.dual), d_dual >= sup.r - d + 2)


def optimal_distribution(
    order: int, inv: LatticeInvariants, gamma: Sequence[int], gamma_dual: Sequence[int], d: int
) -> WeightDistribution:
    """Weight distribution forced on an optimal code of minimum weight ``d``."""
    r = inv.r
    if not 1 <= d <= r:
        raise ValueError(f"minimum weight {d} outside 1..{r}")
    W = [Fraction(0)] * (r + 1)
    W[0] = Fraction(1)
    for s in range(d, r + 1):
        rhs = Fraction(order, gamma[d - 1] * gamma_dual[r - s]) * inv.mu_leq[s][r]
        known = inv.mu_geq[s][0] + sum(W[i] * inv.mu_geq[s][i] for i in range(d, s))
        W[s] = (rhs - known) / inv.mu_geq[s][s]
        if W[s].denominator != 1 or W[s] < 0:
            raise ArithmeticInconsistency(f"W_{s} = {W[s]} for an optimal code with d = {d}")
    return WeightDistribution(tuple(int(x) for x in W))


def support_optimal_distribution(sup: RegularSupport, d: int) -> WeightDistribution:
    return optimal_distribution(sup.group.order, sup.invariants, sup.gamma_table, sup.dual.gamma_table, d)


# ---------------------------------------------------------------------------
# dual partitions


def dual_partition(G: FiniteAbelianGroup, blocks: Sequence[FrozenSet[GroupElement]]) -> FrozenSet[FrozenSet[GroupElement]]:
    """Characters grouped by their exact sums over every block of a partition of ``G``."""
    ordered = sorted(blocks, key=lambda B: min(B))
    N = G.exponent
    classes: Dict[Tuple, set] = {}
    for chi in G.dual().elements:
        key = []
        for B in ordered:
            raw = [0] * N
            for g in B:
                raw[char_pairing(chi, g)] += 1
            key.append(cyclo_reduce(raw, N).coeffs)
        classes.setdefault(tuple(key), set()).add(chi)
    return frozenset(frozenset(c) for c in classes.values())
