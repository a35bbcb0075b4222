"""Finite lattices given by explicit order tables, Moebius functions and invariants.

Elements are the integers ``0..n-1``.  ``leq[a][b]`` is the order relation;
meet, join, bottom, top and (for graded lattices) the rank function are all
derived from it.  Builtin families are generated by rule and then frozen into
the same table form so every check runs on one representation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Hashable, List, Optional, Tuple

from . import finite_field as ff
from .combinatorics import binom, binom2, q_binomial


class LatticeError(ValueError):
    """The order tables do not describe a finite lattice."""


class NotGradedError(LatticeError):
    pass


class NonRegularLatticeError(LatticeError):
    def __init__(self, witness: "Counterexample"):
        super().__init__(witness.message)
        self.witness = witness


@dataclass(frozen=True)
class Counterexample:
    """Witness returned by the ``check_*`` functions."""

    kind: str
    elements: Tuple
    message: str


@dataclass(frozen=True)
class Lattice:
    leq: Tuple[Tuple[bool, ...], ...]
    labels: Tuple[Hashable, ...] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.leq)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(n)))
        if n == 0:
            raise LatticeError("empty lattice")
        for a in range(n):
            if not self.leq[a][a]:
                raise LatticeError(f"leq not reflexive at {a}")
            for b in range(n):
                if a != b and self.leq[a][b] and self.leq[b][a]:
                    raise LatticeError(f"leq not antisymmetric at {a}, {b}")
        # meet and join must exist; touching them validates
        self.meet, self.join  # noqa: B018

    @classmethod
    def from_relation(cls, n: int, pairs, labels=None) -> "Lattice":
        """Order generated (reflexively, transitively) by the pairs ``a <= b``."""
        rel = [[a == b for b in range(n)] for a in range(n)]
        for a, b in pairs:
            rel[a][b] = True
        for k in range(n):
            for a in range(n):
                if rel[a][k]:
                    for b in range(n):
                        if rel[k][b]:
                            rel[a][b] = True
        return cls(tuple(tuple(r) for r in rel), None if labels is None else tuple(labels))

    @classmethod
    def from_json(cls, data: dict) -> "Lattice":
        unknown = set(data) - {"elements", "leq", "rank"}
        if unknown:
            raise ValueError(f"unknown lattice descriptor keys: {sorted(unknown)}")
        L = cls.from_relation(data["elements"], data["leq"])
        if "rank" in data:
            given = tuple(data["rank"])
            if not L.is_graded or L.rank_of != given:
                raise NotGradedError(f"declared rank function {list(given)} disagrees with the cover relation")
        return L

    def to_json(self) -> dict:
        n = len(self)
        out = {
            "elements": n,
            "leq": [[a, b] for a in range(n) for b in range(n) if self.leq[a][b] and a != b],
        }
        if self.is_graded:
            out["rank"] = list(self.rank_of)
        return out

    def __len__(self) -> int:
        return len(self.leq)

    @property
    def elements(self) -> range:
        return range(len(self))

    def index(self, label: Hashable) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> Dict[Hashable, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    # meet / join

    def _bound_table(self, upper: bool) -> Tuple[Tuple[int, ...], ...]:
        n = len(self)
        rel = self.leq
        table = []
        for a in range(n):
            row = []
            for b in range(n):
                if upper:
                    cands = [c for c in range(n) if rel[a][c] and rel[b][c]]
                    best = [c for c in cands if all(rel[c][d] for d in cands)]
                else:
                    cands = [c for c in range(n) if rel[c][a] and rel[c][b]]
                    best = [c for c in cands if all(rel[d][c] for d in cands)]
                if len(best) != 1:
                    kind = "join" if upper else "meet"
                    raise LatticeError(f"no unique {kind} of {self.labels[a]} and {self.labels[b]}")
                row.append(best[0])
            table.append(tuple(row))
        return tuple(table)

    @cached_property
    def meet(self) -> Tuple[Tuple[int, ...], ...]:
        return self._bound_table(upper=False)

    @cached_property
    def join(self) -> Tuple[Tuple[int, ...], ...]:
        return self._bound_table(upper=True)

    def join_all(self, items) -> int:
        out = self.bottom
        for a in items:
            out = self.join[out][a]
        return out

    @cached_property
    def bottom(self) -> int:
        return next(a for a in self.elements if all(self.leq[a][b] for b in self.elements))

    @cached_property
    def top(self) -> int:
        return next(a for a in self.elements if all(self.leq[b][a] for b in self.elements))

    @cached_property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        n = len(self)
        return tuple(
            (a, b)
            for a in range(n)
            for b in range(n)
            if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in range(n))
        )

    @cached_property
    def _height(self) -> Tuple[int, ...]:
        # longest chain from the bottom; a linear extension is "number of elements below"
        order = sorted(self.elements, key=lambda a: sum(self.leq[b][a] for b in self.elements))
        h = [0] * len(self)
        for b in order:
            h[b] = max((h[a] + 1 for a in self.elements if self.lt(a, b)), default=0)
        return tuple(h)

    @cached_property
    def is_graded(self) -> bool:
        h = self._height
        return all(h[b] == h[a] + 1 for a, b in self.covers)

    @cached_property
    def rank_of(self) -> Tuple[int, ...]:
        """Rank function rho_L as a tuple indexed by element."""
        if not self.is_graded:
            bad = next((a, b) for a, b in self.covers if self._height[b] != self._height[a] + 1)
            raise NotGradedError(f"maximal chains differ in length (cover {bad})")
        return self._height

    @property
    def rank(self) -> int:
        return self.rank_of[self.top]

    def rho(self, a: int) -> int:
        return self.rank_of[a]

    def of_rank(self, s: int) -> List[int]:
        return [a for a in self.elements if self.rank_of[a] == s]

    @cached_property
    def linear_extension(self) -> Tuple[int, ...]:
        return tuple(sorted(self.elements, key=lambda a: sum(self.leq[b][a] for b in self.elements)))

    @cached_property
    def mobius_table(self) -> Tuple[Tuple[Optional[int], ...], ...]:
        """``mobius_table[S][T]`` for ``S <= T``, else ``None``."""
        n = len(self)
        table = [[None] * n for _ in range(n)]
        for S in range(n):
            table[S][S] = 1
            for T in self.linear_extension:
                if self.lt(S, T):
                    table[S][T] = -sum(table[S][U] for U in range(n) if self.leq[S][U] and self.lt(U, T))
        return tuple(tuple(r) for r in table)


def mobius(L: Lattice, S: int, T: int) -> int:
    if not L.leq[S][T]:
        raise ValueError(f"{L.labels[S]} is not below {L.labels[T]}")
    return L.mobius_table[S][T]


def dual_view(L: Lattice) -> Lattice:
    """Order-reversed lattice: meet and join swap, ranks complement."""
    n = len(L)
    return Lattice(tuple(tuple(L.leq[b][a] for b in range(n)) for a in range(n)), L.labels)


# ---------------------------------------------------------------------------
# invariants and regularity


@dataclass(frozen=True)
class LatticeInvariants:
    """``mu_leq[s][t]``, ``mu_geq[s][t]``, ``mu_mob[s][t]`` for ``0 <= s, t <= r``."""

    r: int
    mu_leq: Tuple[Tuple[int, ...], ...]
    mu_geq: Tuple[Tuple[int, ...], ...]
    mu_mob: Tuple[Tuple[int, ...], ...]

    def dual(self) -> "LatticeInvariants":
        r = self.r
        R = range(r + 1)
        return LatticeInvariants(
            r,
            tuple(tuple(self.mu_geq[r - s][r - t] for t in R) for s in R),
            tuple(tuple(self.mu_leq[r - s][r - t] for t in R) for s in R),
            tuple(tuple(self.mu_mob[r - t][r - s] for t in R) for s in R),
        )


def _regularity_witness(L: Lattice) -> Tuple[Optional[Counterexample], Optional[LatticeInvariants]]:
    if not L.is_graded:
        return Counterexample("not_graded", (), "lattice is not graded"), None
    r, rk = L.rank, L.rank_of
    R = range(r + 1)
    n = len(L)
    below = [[0] * (r + 1) for _ in range(n)]
    above = [[0] * (r + 1) for _ in range(n)]
    for S in range(n):
        for T in range(n):
            if L.leq[S][T]:
                below[T][rk[S]] += 1
                above[S][rk[T]] += 1
    mu_leq = [[0] * (r + 1) for _ in R]
    mu_geq = [[0] * (r + 1) for _ in R]
    for counts, table, kind, word in ((below, mu_leq, "count_below", "below"), (above, mu_geq, "count_above", "above")):
        rep: Dict[int, int] = {}
        for T in range(n):
            t = rk[T]
            T0 = rep.setdefault(t, T)
            for s in R:
                if counts[T][s] != counts[T0][s]:
                    return Counterexample(
                        kind,
                        (L.labels[T0], L.labels[T]),
                        f"rank-{s} elements {word} {L.labels[T0]} vs {L.labels[T]}: {counts[T0][s]} vs {counts[T][s]}",
                    ), None
                table[s][t] = counts[T][s]
    mob = [[0] * (r + 1) for _ in R]
    seen: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for S in range(n):
        for T in range(n):
            if not L.leq[S][T]:
                continue
            key = (rk[S], rk[T])
            val = L.mobius_table[S][T]
            if key in seen:
                S0, T0 = seen[key]
                if L.mobius_table[S0][T0] != val:
                    return Counterexample(
                        "mobius",
                        (L.labels[S0], L.labels[T0], L.labels[S], L.labels[T]),
                        f"mu({L.labels[S0]},{L.labels[T0]}) = {L.mobius_table[S0][T0]} but "
                        f"mu({L.labels[S]},{L.labels[T]}) = {val}",
                    ), None
            else:
                seen[key] = (S, T)
                mob[key[0]][key[1]] = val
    inv = LatticeInvariants(
        r,
        tuple(tuple(row) for row in mu_leq),
        tuple(tuple(row) for row in mu_geq),
        tuple(tuple(row) for row in mob),
    )
    return None, inv


def check_regular(L: Lattice, interval_criterion: bool = False) -> Optional[Counterexample]:
    """``None`` if ``L`` is regular, else a witness.

    With ``interval_criterion`` the sufficient condition on interval rank
    counts is tested instead of the count/Moebius definition.
    """
    if not interval_criterion:
        return _regularity_witness(L)[0]
    if not L.is_graded:
        return Counterexample("not_graded", (), "lattice is not graded")
    rk = L.rank_of
    seen: Dict[Tuple[int, int, int], Tuple[Tuple[int, int], int]] = {}
    for S in L.elements:
        for T in L.elements:
            if not L.leq[S][T]:
                continue
            counts = [0] * (L.rank + 1)
            for U in L.elements:
                if L.leq[S][U] and L.leq[U][T]:
                    counts[rk[U]] += 1
            for i in range(rk[S], rk[T] + 1):
                key = (i, rk[S], rk[T])
                if key in seen and seen[key][1] != counts[i]:
                    (S0, T0), c0 = seen[key]
                    return Counterexample(
                        "interval",
                        (L.labels[S0], L.labels[T0], L.labels[S], L.labels[T]),
                        f"rank-{i} elements in [{L.labels[S0]},{L.labels[T0]}] vs "
                        f"[{L.labels[S]},{L.labels[T]}]: {c0} vs {counts[i]}",
                    )
                seen.setdefault(key, ((S, T), counts[i]))
    return None


def invariant_tables(L: Lattice) -> LatticeInvariants:
    """Invariant tables by enumeration, checked across every representative."""
    witness, inv = _regularity_witness(L)
    if witness is not None:
        raise NonRegularLatticeError(witness)
    return inv


def check_modular(L: Lattice) -> Optional[Counterexample]:
    """``None`` if ``S v (T ^ U) == (S v T) ^ U`` whenever ``S <= U``."""
    meet, join = L.meet, L.join
    for S in L.elements:
        for U in L.elements:
            if not L.leq[S][U]:
                continue
            for T in L.elements:
                lhs = join[S][meet[T][U]]
                rhs = meet[join[S][T]][U]
                if lhs != rhs:
                    lab = L.labels
                    return Counterexample(
                        "modular",
                        (lab[S], lab[T], lab[U]),
                        f"S={lab[S]}, T={lab[T]}, U={lab[U]}: S v (T ^ U) = {lab[lhs]} != {lab[rhs]} = (S v T) ^ U",
                    )
    return None


# ---------------------------------------------------------------------------
# builtin families


def chain_lattice(r: int) -> Lattice:
    return Lattice.from_relation(r + 1, [(i, i + 1) for i in range(r)])


def boolean_lattice(n: int) -> Lattice:
    """Subsets of ``{0..n-1}`` as bitmasks; element ``i`` is bitmask ``i``."""
    size = 1 << n
    rel = tuple(tuple((a & b) == a for b in range(size)) for a in range(size))
    return Lattice(rel, tuple(range(size)))


def punctured_boolean_lattice(n: int) -> Lattice:
    """Subsets of ``[n+1]`` avoiding ``n+1``, plus ``[n+1]`` itself (label ``"top"``)."""
    size = 1 << n
    rel = [[(a & b) == a for b in range(size)] + [True] for a in range(size)]
    rel.append([False] * size + [True])
    return Lattice(tuple(tuple(r) for r in rel), tuple(range(size)) + ("top",))


def enumerate_subspaces(q: int, k: int) -> List[Tuple[Tuple[int, ...], ...]]:
    """All subspaces of F_q^k as canonical RREF bases, by dimension then basis."""
    F = ff.field(q)
    vectors = list(itertools.product(range(q), repeat=k))
    seen = {(): None}
    frontier = [()]
    while frontier:
        nxt = []
        for basis in frontier:
            for v in vectors:
                new = ff.rref(F, basis + (v,))
                if new not in seen:
                    seen[new] = None
                    nxt.append(new)
        frontier = nxt
    return sorted(seen, key=lambda b: (len(b), b))


def subspace_lattice(q: int, k: int) -> Lattice:
    F = ff.field(q)
    spaces = enumerate_subspaces(q, k)
    rel = tuple(
        tuple(len(ff.rref(F, B + A)) == len(B) for B in spaces)
        for A in spaces
    )
    return Lattice(rel, tuple(spaces))


def divisor_lattice(n: int) -> Lattice:
    divs = [d for d in range(1, n + 1) if n % d == 0]
    rel = tuple(tuple(b % a == 0 for b in divs) for a in divs)
    return Lattice(rel, tuple(divs))


def pentagon() -> Lattice:
    """N_5: ``0 < a < b < 1`` and ``0 < c < 1``."""
    return Lattice.from_relation(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], ("0", "a", "b", "c", "1"))


@dataclass(frozen=True)
class LatticeFamily:
    """Builtin family tag with parameters: chain(r), boolean(n), subspace(q, k), punctured_boolean(n)."""

    tag: str
    params: Tuple[int, ...]

    def __post_init__(self):
        arity = {"chain": 1, "boolean": 1, "subspace": 2, "punctured_boolean": 1}
        if self.tag not in arity:
            raise ValueError(f"unknown lattice family {self.tag!r}")
        if len(self.params) != arity[self.tag] or any(p < 1 for p in self.params):
            raise ValueError(f"bad parameters {self.params} for {self.tag}")
        if self.tag == "subspace":
            ff.prime_power(self.params[0])

    @property
    def rank(self) -> int:
        if self.tag == "subspace":
            return self.params[1]
        if self.tag == "punctured_boolean":
            return self.params[0] + 1
        return self.params[0]

    def build(self) -> Lattice:
        if self.tag == "chain":
            return chain_lattice(*self.params)
        if self.tag == "boolean":
            return boolean_lattice(*self.params)
        if self.tag == "subspace":
            return subspace_lattice(*self.params)
        return punctured_boolean_lattice(*self.params)


def closed_form_invariants(family: LatticeFamily) -> LatticeInvariants:
    r = family.rank
    R = range(r + 1)
    if family.tag == "chain":
        leq = lambda s, t: int(s <= t)  # noqa: E731
        geq = lambda s, t: int(s >= t)  # noqa: E731
        mob = lambda s, t: 1 if s == t else (-1 if t == s + 1 else 0)  # noqa: E731
    elif family.tag == "boolean":
        n = r
        leq = lambda s, t: binom(t, s)  # noqa: E731
        geq = lambda s, t: binom(n - t, s - t)  # noqa: E731
        mob = lambda s, t: (-1) ** (t - s) if s <= t else 0  # noqa: E731
    elif family.tag == "subspace":
        q, k = family.params
        leq = lambda s, t: q_binomial(t, s, q)  # noqa: E731
        geq = lambda s, t: q_binomial(k - t, s - t, q)  # noqa: E731
        mob = lambda s, t: (-1) ** (t - s) * q ** binom2(t - s) if s <= t else 0  # noqa: E731
    else:
        n = family.params[0]

        def leq(s, t):
            if s > t:
                return 0
            if t <= n:
                return binom(t, s)
            return binom(n, s) if s <= n else 1

        def geq(s, t):
            if s < t:
                return 0
            return binom(n - t, s - t) if s <= n else 1

        def mob(s, t):
            if t < s:
                return 0
            if t <= n:
                return (-1) ** (t - s)
            if s == n + 1:
                return 1
            return -1 if s == n else 0

    return LatticeInvariants(
        r,
        tuple(tuple(leq(s, t) for t in R) for s in R),
        tuple(tuple(geq(s, t) for t in R) for s in R),
        tuple(tuple(mob(s, t) for t in R) for s in R),
    )
