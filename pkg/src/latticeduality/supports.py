"""Regular supports ``sigma: G -> L``, their duals, weights and distributions.

A support is stored as an explicit table ``sigma[i]`` = lattice index of the
``i``-th group element (in ``G.elements`` order).  Builtin kinds generate the
table by rule; every support goes through the same exhaustive validator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

from . import finite_field as ff
from .groups import Code, FiniteAbelianGroup, GroupElement, char_pairing, subgroup_closure
from .lattices import (
    Counterexample,
    Lattice,
    LatticeInvariants,
    chain_lattice,
    check_regular,
    boolean_lattice,
    dual_view,
    invariant_tables,
    punctured_boolean_lattice,
    subspace_lattice,
)

Weight = Callable[[GroupElement], Hashable]


class SupportViolation(ValueError):
    def __init__(self, violations: Sequence["Violation"]):
        super().__init__("; ".join(v.message for v in violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class Violation:
    """``axiom`` is one of A-E, or ``"L"`` when the lattice itself is not regular."""

    axiom: str
    witness: Tuple
    message: str


@dataclass(frozen=True)
class SupportReport:
    violations: Tuple[Violation, ...]
    gamma: Optional[Tuple[int, ...]]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class WeightDistribution:
    counts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    def to_json(self) -> dict:
        return {"counts": list(self.counts)}


@dataclass(frozen=True)
class RegularSupport:
    group: FiniteAbelianGroup
    lattice: Lattice
    sigma: Tuple[int, ...]
    gamma_table: Optional[Tuple[int, ...]] = field(default=None, compare=False)
    name: str = field(default="custom", compare=False)

    def __post_init__(self):
        if len(self.sigma) != self.group.order:
            raise ValueError(f"sigma has {len(self.sigma)} entries for a group of order {self.group.order}")
        if any(not 0 <= x < len(self.lattice) for x in self.sigma):
            raise ValueError("sigma takes a value outside the lattice")

    @property
    def validated(self) -> bool:
        return self.gamma_table is not None

    @property
    def r(self) -> int:
        return self.lattice.rank

    def __call__(self, g: GroupElement) -> int:
        return self.sigma[self.group.index(g)]

    def weight(self, g: GroupElement) -> int:
        return self.lattice.rank_of[self(g)]

    @cached_property
    def weights(self) -> Tuple[int, ...]:
        rk = self.lattice.rank_of
        return tuple(rk[x] for x in self.sigma)

    @cached_property
    def balls(self) -> Tuple[FrozenSet[GroupElement], ...]:
        L, els = self.lattice, self.group.elements
        return tuple(
            frozenset(g for g, x in zip(els, self.sigma) if L.leq[x][S]) for S in L.elements
        )

    @cached_property
    def invariants(self) -> LatticeInvariants:
        return invariant_tables(self.lattice)

    @cached_property
    def dual(self) -> "RegularSupport":
        return dual_support(self)

    def validate(self) -> "RegularSupport":
        """Validated copy of this support; raises :class:`SupportViolation`."""
        report = validate_support(self)
        if not report.ok:
            raise SupportViolation(report.violations)
        return RegularSupport(self.group, self.lattice, self.sigma, report.gamma, self.name)

    def __repr__(self) -> str:
        return f"RegularSupport({self.name}, {self.group}, rank {self.lattice.rank})"


def _sumset(A: FrozenSet[GroupElement], B: FrozenSet[GroupElement]) -> FrozenSet[GroupElement]:
    return frozenset(a + b for a in A for b in B)


def validate_support(sup: RegularSupport, stop_at_first: bool = True) -> SupportReport:
    """Exhaustive check of the regular-support axioms.

    A: sigma(g) is the bottom iff g = 0.  B: sigma(g) = sigma(-g).
    C: sigma(g + h) <= sigma(g) v sigma(h).  D: balls of joins are sums of balls.
    E: ball sizes depend only on rank.
    """
    G, L = sup.group, sup.lattice
    out: List[Violation] = []

    def done() -> bool:
        return stop_at_first and bool(out)

    witness = check_regular(L)
    if witness is not None:
        return SupportReport((Violation("L", witness.elements, f"lattice not regular: {witness.message}"),), None)
    lab = L.labels
    els = G.elements
    for g in els:
        if (sup(g) == L.bottom) != g.is_zero():
            out.append(Violation("A", (g,), f"sigma({g}) = {lab[sup(g)]} but zero-kernel fails"))
            break
    for g in els:
        if done():
            break
        if sup(g) != sup(-g):
            out.append(Violation("B", (g,), f"sigma({g}) = {lab[sup(g)]} != sigma({-g}) = {lab[sup(-g)]}"))
            break
    join, leq = L.join, L.leq
    for g in els:
        if done():
            break
        for h in els:
            bound = join[sup(g)][sup(h)]
            if not leq[sup(g + h)][bound]:
                out.append(
                    Violation("C", (g, h), f"sigma({g}+{h}) = {lab[sup(g + h)]} not below {lab[bound]}")
                )
                break
        else:
            continue
        break
    balls = sup.balls
    if not done():
        for S in L.elements:
            for T in L.elements:
                if balls[join[S][T]] != _sumset(balls[S], balls[T]):
                    out.append(
                        Violation("D", (lab[S], lab[T]), f"G({lab[S]} v {lab[T]}) != G({lab[S]}) + G({lab[T]})")
                    )
                    break
            else:
                continue
            break
    gamma: Dict[int, int] = {}
    if not done():
        for S in L.elements:
            s = L.rank_of[S]
            size = len(balls[S])
            if gamma.setdefault(s, size) != size:
                out.append(Violation("E", (lab[S],), f"|G({lab[S]})| = {size} but another rank-{s} ball has {gamma[s]}"))
                break
    if out:
        return SupportReport(tuple(out), None)
    return SupportReport((), tuple(gamma[s] for s in range(L.rank + 1)))


def ball(sup: RegularSupport, S: int) -> Code:
    elems = sup.balls[S]
    return Code(sup.group, elems, tuple(sorted(elems)))


def gamma(sup: RegularSupport) -> Tuple[int, ...]:
    if not sup.validated:
        raise ValueError("support has not been validated")
    return sup.gamma_table


def dual_support(sup: RegularSupport) -> RegularSupport:
    """The dual support on the character group, valued in the dual lattice.

    ``sigma*(chi)`` is the join of all ``S`` whose ball is annihilated by
    ``chi``; that this join is itself such an ``S`` is asserted.
    """
    if not sup.validated:
        raise ValueError("support has not been validated")
    G, L = sup.group, sup.lattice
    Gd = G.dual()
    annihilators = [
        frozenset(chi for chi in Gd if all(char_pairing(chi, g) == 0 for g in sup.balls[S])) for S in L.elements
    ]
    values = []
    for chi in Gd:
        killing = [S for S in L.elements if chi in annihilators[S]]
        top = L.join_all(killing)
        if chi not in annihilators[top]:
            raise AssertionError(f"{chi} does not annihilate the ball of its dual support {L.labels[top]}")
        values.append(top)
    dual = RegularSupport(Gd, dual_view(L), tuple(values), name=f"dual({sup.name})")
    return dual.validate()


def sigma_weight(sup: RegularSupport, g: GroupElement) -> int:
    return sup.weight(g)


def weight_distribution(C: Code, sup: RegularSupport) -> WeightDistribution:
    if C.group != sup.group:
        raise ValueError("code and support live on different groups")
    counts = [0] * (sup.lattice.rank + 1)
    for g in C.elements:
        counts[sup.weight(g)] += 1
    return WeightDistribution(tuple(counts))


def min_weight(C: Code, sup: RegularSupport) -> int:
    ws = [sup.weight(g) for g in C.elements if not g.is_zero()]
    if not ws:
        raise ValueError("the zero code has no minimum weight")
    return min(ws)


def weight_partition(elements, omega: Weight) -> FrozenSet[FrozenSet[GroupElement]]:
    classes: Dict[Hashable, set] = {}
    for g in elements:
        classes.setdefault(omega(g), set()).add(g)
    return frozenset(frozenset(c) for c in classes.values())


def weights_equivalent(G: FiniteAbelianGroup, omega: Weight, omega2: Weight) -> bool:
    return weight_partition(G.elements, omega) == weight_partition(G.elements, omega2)


def check_distance(sup: RegularSupport) -> Optional[Counterexample]:
    """``None`` if ``d(g, h) = w(g - h)`` is a metric on the group.

    With ``x = g - h`` and ``y = h - g'`` the triangle inequality is
    ``w(x + y) <= w(x) + w(y)``, so pairs suffice.
    """
    els = sup.group.elements
    for x in els:
        if (sup.weight(x) == 0) != x.is_zero():
            return Counterexample("identity", (x,), f"w({x}) = {sup.weight(x)}")
        if sup.weight(x) != sup.weight(-x):
            return Counterexample("symmetry", (x,), f"w({x}) != w({-x})")
    for x in els:
        for y in els:
            if sup.weight(x + y) > sup.weight(x) + sup.weight(y):
                return Counterexample("triangle", (x, y), f"w({x}+{y}) > w({x}) + w({y})")
    return None


# ---------------------------------------------------------------------------
# builtin supports


def hamming_support(orders: Sequence[int], n: int) -> RegularSupport:
    """Hamming support on ``G**n`` valued in the boolean lattice of ``[n]``."""
    base = len(orders)
    G = FiniteAbelianGroup(tuple(orders) * n)
    sigma = tuple(
        sum(1 << i for i in range(n) if any(g.coords[i * base : (i + 1) * base])) for g in G.elements
    )
    return RegularSupport(G, boolean_lattice(n), sigma, name=f"hamming({list(orders)},{n})")


def matrix_entries(q: int, k: int, m: int, g: GroupElement) -> Tuple[Tuple[int, ...], ...]:
    """The ``k x m`` matrix over F_q encoded by a group element of ``Z_p ** (e k m)``."""
    F = ff.field(q)
    e = F.degree
    flat = [F.from_digits(g.coords[t * e : (t + 1) * e]) for t in range(k * m)]
    return tuple(tuple(flat[r * m : (r + 1) * m]) for r in range(k))


def matrix_group(q: int, k: int, m: int) -> FiniteAbelianGroup:
    F = ff.field(q)
    return FiniteAbelianGroup((F.p,) * (F.degree * k * m))


def rank_support(q: int, k: int, m: int) -> RegularSupport:
    """Column-space support on ``k x m`` matrices over F_q."""
    if not 1 <= k <= m:
        raise ValueError("rank support needs 1 <= k <= m")
    F = ff.field(q)
    G = matrix_group(q, k, m)
    L = subspace_lattice(q, k)
    sigma = tuple(L.index(ff.rref(F, ff.transpose(matrix_entries(q, k, m, g)))) for g in G.elements)
    return RegularSupport(G, L, sigma, name=f"rank({q},{k},{m})")


def chain_support(orders: Sequence[int], chain: Sequence[Sequence[Sequence[int]]]) -> RegularSupport:
    """Chain support for ``{0} < G_1 < ... < G_{r-1} < G``.

    ``chain`` lists generator coordinates of the intermediate subgroups only.
    """
    G = FiniteAbelianGroup(tuple(orders))
    subgroups = [frozenset({G.zero})]
    subgroups += [subgroup_closure(G, [G(c) for c in gens]).elements for gens in chain]
    subgroups.append(frozenset(G.elements))
    for a, b in zip(subgroups, subgroups[1:]):
        if not (a < b):
            raise ValueError("chain of subgroups must be strictly increasing from {0} to G")
    sigma = tuple(next(i for i, H in enumerate(subgroups) if g in H) for g in G.elements)
    return RegularSupport(G, chain_lattice(len(subgroups) - 1), sigma, name=f"chain({list(orders)})")


def full_cyclic_chain(n: int) -> List[List[List[int]]]:
    """Generators of a maximal chain of proper nontrivial subgroups of ``Z_n``."""
    primes = []
    r = n
    p = 2
    while r > 1:
        while r % p == 0:
            primes.append(p)
            r //= p
        p += 1
    gens, step = [], n
    for p in primes[:-1]:
        step //= p
        gens.append([[step]])
    return gens


def lee4_support() -> RegularSupport:
    sup = chain_support((4,), [[[2]]])
    return RegularSupport(sup.group, sup.lattice, sup.sigma, name="lee4")


def homogeneous_support(p: int, n: int) -> RegularSupport:
    """Support on ``(Z_{p^2})**n`` equivalent to the homogeneous weight (p an odd prime)."""
    if p < 3 or not ff.is_prime(p):
        raise ValueError("homogeneous support needs an odd prime p >= 3")
    G = FiniteAbelianGroup((p * p,) * n)
    L = punctured_boolean_lattice(n)
    top = L.index("top")
    sigma = tuple(
        top if any(c % p for c in g.coords) else sum(1 << i for i, c in enumerate(g.coords) if c)
        for g in G.elements
    )
    return RegularSupport(G, L, sigma, name=f"homogeneous({p},{n})")


_MAKERS = {
    "hamming": hamming_support,
    "rank": rank_support,
    "chain": chain_support,
    "lee4": lee4_support,
    "homogeneous": homogeneous_support,
}


def builtin_support(kind: str, **params) -> RegularSupport:
    """Validated builtin support.

    kinds: ``hamming(orders, n)``, ``rank(q, k, m)``, ``chain(orders, chain)``,
    ``lee4()``, ``homogeneous(p, n)``.
    """
    if kind not in _MAKERS:
        raise ValueError(f"unknown support kind {kind!r}")
    return _MAKERS[kind](**params).validate()


def support_from_json(data: dict) -> RegularSupport:
    """Build (without validating) a support from its JSON descriptor."""
    unknown = set(data) - {"kind", "params", "sigma"}
    if unknown:
        raise ValueError(f"unknown support descriptor keys: {sorted(unknown)}")
    kind = data["kind"]
    params = dict(data.get("params", {}))
    if kind == "custom":
        extra = set(params) - {"group", "lattice"}
        if extra:
            raise ValueError(f"unknown custom support params: {sorted(extra)}")
        G = FiniteAbelianGroup.from_json(params["group"])
        L = Lattice.from_json(params["lattice"])
        return RegularSupport(G, L, tuple(data["sigma"]))
    if "sigma" in data:
        raise ValueError("'sigma' is only allowed for custom supports")
    if "group" in params:
        params["orders"] = tuple(FiniteAbelianGroup.from_json(params.pop("group")).orders)
    if kind not in _MAKERS:
        raise ValueError(f"unknown support kind {kind!r}")
    try:
        return _MAKERS[kind](**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {kind}: {exc}") from None


# ---------------------------------------------------------------------------
# named weights used for equivalence checks


def lee_weight(g: GroupElement) -> int:
    """Lee weight on ``Z_4`` (sum over coordinates for ``Z_4 ** n``)."""
    return sum(min(c, 4 - c) for c in g.coords)


def exact_weight(orders: Sequence[int], n: int) -> Weight:
    """Positions of the nonzero blocks of an element of ``G**n``, as a 0/1 vector."""
    base = len(orders)
    return lambda g: tuple(int(any(g.coords[i * base : (i + 1) * base])) for i in range(n))
