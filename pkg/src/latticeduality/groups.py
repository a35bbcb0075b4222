"""Finite abelian groups as products of cyclic groups, characters, and codes.

Every group is presented as ``Z_{n_1} x ... x Z_{n_k}``.  The character group
is identified with a copy of the same product through the canonical pairing

    chi(g) = zeta_N ** (sum_i chi_i * g_i * (N / n_i)),   N = lcm(n_i),

which is symmetric in ``chi`` and ``g``; so the dual of the dual group is the
group itself and dual codes can be computed in either direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .cyclotomic import CyclotomicSum, cyclo_reduce

DEFAULT_SUBGROUP_CAP = 256
DEFAULT_CODE_CAP = 2**16


class GroupSizeError(ValueError):
    """Raised when a group or code is too large to enumerate."""


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z_{n_1} x ... x Z_{n_k}``; ``is_dual`` marks a character group."""

    orders: Tuple[int, ...]
    is_dual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        if any(n < 1 for n in self.orders):
            raise ValueError(f"cyclic orders must be >= 1, got {self.orders}")

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return reduce(math.lcm, self.orders, 1)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @cached_property
    def _dual_group(self) -> "FiniteAbelianGroup":
        other = FiniteAbelianGroup(self.orders, not self.is_dual)
        other.__dict__["_dual_group"] = self
        return other

    def dual(self) -> "FiniteAbelianGroup":
        return self._dual_group

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        body = " x ".join(f"Z{n}" for n in self.orders) or "{0}"
        return f"dual({body})" if self.is_dual else body

    @property
    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def __call__(self, *coords) -> "GroupElement":
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        if len(coords) != self.rank:
            raise ValueError(f"{coords} has wrong length for {self}")
        return GroupElement(self, tuple(int(c) % n for c, n in zip(coords, self.orders)))

    # Enumeration.  Elements are listed in mixed-radix order, last coordinate fastest.

    @cached_property
    def elements(self) -> Tuple["GroupElement", ...]:
        out: List[GroupElement] = []

        def rec(prefix: Tuple[int, ...], i: int):
            if i == self.rank:
                out.append(GroupElement(self, prefix))
                return
            for c in range(self.orders[i]):
                rec(prefix + (c,), i + 1)

        rec((), 0)
        return tuple(out)

    @cached_property
    def _index(self) -> Dict[Tuple[int, ...], int]:
        return {g.coords: i for i, g in enumerate(self.elements)}

    def index(self, g: "GroupElement") -> int:
        return self._index[g.coords]

    def __iter__(self) -> Iterator["GroupElement"]:
        return iter(self.elements)

    def to_json(self) -> dict:
        return {"orders": list(self.orders)}

    @classmethod
    def from_json(cls, data: dict) -> "FiniteAbelianGroup":
        unknown = set(data) - {"orders"}
        if unknown:
            raise ValueError(f"unknown group descriptor keys: {sorted(unknown)}")
        return cls(tuple(data["orders"]))


@dataclass(frozen=True, slots=True)
class GroupElement:
    group: FiniteAbelianGroup
    coords: Tuple[int, ...]

    def _same(self, other: "GroupElement"):
        if not isinstance(other, GroupElement) or other.group != self.group:
            raise ValueError(f"elements live in different groups: {self.group} vs {other.group}")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._same(other)
        return GroupElement(
            self.group,
            tuple((a + b) % n for a, b, n in zip(self.coords, other.coords, self.group.orders)),
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple((-a) % n for a, n in zip(self.coords, self.group.orders)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __mul__(self, k: int) -> "GroupElement":
        return GroupElement(self.group, tuple((k * a) % n for a, n in zip(self.coords, self.group.orders)))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __lt__(self, other: "GroupElement") -> bool:
        return self.coords < other.coords

    def __repr__(self) -> str:
        prefix = "chi" if self.group.is_dual else ""
        return f"{prefix}{self.coords}"


# A character is an element of the dual group.
Character = GroupElement


def element_add(g: GroupElement, h: GroupElement) -> GroupElement:
    return g + h


def element_neg(g: GroupElement) -> GroupElement:
    return -g


def char_pairing(chi: GroupElement, g: GroupElement) -> int:
    """Exponent ``e`` in ``[0, N)`` with ``chi(g) = zeta_N ** e``."""
    G = g.group
    if chi.group != G.dual():
        raise ValueError(f"{chi} is not a character of {G}")
    N = G.exponent
    return sum(c * a * (N // n) for c, a, n in zip(chi.coords, g.coords, G.orders)) % N


def character_sum(chars: Iterable[GroupElement], g: GroupElement) -> CyclotomicSum:
    """``sum chi(g)`` over ``chars``, exactly."""
    N = g.group.exponent
    raw = [0] * N
    for chi in chars:
        raw[char_pairing(chi, g)] += 1
    return cyclo_reduce(raw, N)


@dataclass(frozen=True)
class Code:
    """A subgroup of ``group`` stored with its full element set."""

    group: FiniteAbelianGroup
    elements: FrozenSet[GroupElement]
    generators: Tuple[GroupElement, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.elements

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(sorted(self.elements))

    def is_trivial(self) -> bool:
        return len(self) in (1, self.group.order)

    def __repr__(self) -> str:
        shown = sorted(self.elements)[:8]
        tail = ", ..." if len(self) > 8 else ""
        return f"Code({self.group}, |C|={len(self)}: {shown}{tail})"

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "generators": [list(g.coords) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "Code":
        unknown = set(data) - {"group", "generators"}
        if unknown:
            raise ValueError(f"unknown code descriptor keys: {sorted(unknown)}")
        G = FiniteAbelianGroup.from_json(data["group"])
        return subgroup_closure(G, [G(c) for c in data["generators"]])


def subgroup_closure(
    G: FiniteAbelianGroup, generators: Sequence[GroupElement], cap: int = DEFAULT_CODE_CAP
) -> Code:
    """Smallest subgroup of ``G`` containing ``generators``."""
    elems = {G.zero}
    for gen in generators:
        if gen.group != G:
            raise ValueError(f"generator {gen} not in {G}")
        if gen in elems:
            continue
        # the subgroup generated so far plus multiples of gen
        layer = set(elems)
        shift = gen
        while shift not in elems:
            layer |= {h + shift for h in elems}
            shift = shift + gen
        elems = layer
        if len(elems) > cap:
            raise GroupSizeError(f"code exceeds cap {cap}")
    return Code(G, frozenset(elems), tuple(generators))


def whole_group(G: FiniteAbelianGroup) -> Code:
    return Code(G, frozenset(G.elements), tuple(G.elements))


def dual_code(C: Code) -> Code:
    """Characters annihilating every element of ``C``."""
    Gd = C.group.dual()
    gens = _generators_of(C)
    elems = frozenset(chi for chi in Gd if all(char_pairing(chi, g) == 0 for g in gens))
    return Code(Gd, elems, tuple(sorted(elems)))


def _generators_of(C: Code) -> Tuple[GroupElement, ...]:
    # annihilating the generators is enough; fall back to all elements when unknown
    if C.generators and subgroup_closure(C.group, C.generators).elements == C.elements:
        return C.generators
    return tuple(C.elements)


def code_sum(C: Code, D: Code) -> Code:
    if C.group != D.group:
        raise ValueError("codes live in different groups")
    return subgroup_closure(C.group, _generators_of(C) + _generators_of(D))


def code_intersect(C: Code, D: Code) -> Code:
    if C.group != D.group:
        raise ValueError("codes live in different groups")
    elems = C.elements & D.elements
    return Code(C.group, elems, tuple(sorted(elems)))


def enumerate_subgroups(G: FiniteAbelianGroup, cap: int = DEFAULT_SUBGROUP_CAP) -> List[Code]:
    """Every subgroup of ``G`` exactly once, ordered by size then elements."""
    if G.order > cap:
        raise GroupSizeError(f"|G| = {G.order} exceeds subgroup enumeration cap {cap}")
    trivial = Code(G, frozenset({G.zero}), ())
    seen = {trivial.elements: trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            for g in G:
                if g in H.elements:
                    continue
                K = subgroup_closure(G, H.generators + (g,))
                if K.elements not in seen:
                    seen[K.elements] = K
                    nxt.append(K)
        frontier = nxt
    return sorted(seen.values(), key=lambda c: (len(c), sorted(c.elements)))
