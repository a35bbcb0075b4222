"""Counting matrices over F_q by rank, in closed form and by brute force."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import finite_field as ff
from .combinatorics import binom, binom2, count_full_rank_rows, q_binomial
from .macwilliams import ArithmeticInconsistency, KrawtchoukTable, transform
from .supports import WeightDistribution

DEFAULT_BRUTE_FORCE_CAP = 2**20

__all__ = [
    "ConstraintSpec",
    "MatrixSpaceParams",
    "brute_force_count",
    "closed_form_count",
    "count_index_sum_zero",
    "count_kernel_rank",
    "count_rank",
    "count_skew",
    "count_symmetric",
    "count_zero_block",
    "count_zero_diagonal",
    "q_binomial",
    "rank_krawtchouk",
    "rank_krawtchouk_table",
    "rank_transform",
    "sym_skew_identity_check",
]


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _exact(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticInconsistency(f"{what} = {x} is not an integer")
    return int(x)


@dataclass(frozen=True)
class MatrixSpaceParams:
    q: int
    k: int
    m: int

    def __post_init__(self):
        ff.prime_power(self.q)
        if not 1 <= self.k <= self.m:
            raise ValueError(f"need 1 <= k <= m, got k={self.k}, m={self.m}")


def count_rank(q: int, k: int, m: int, i: int) -> int:
    """Number of ``k x m`` matrices over F_q of rank ``i``."""
    return q_binomial(m, i, q) * count_full_rank_rows(q, k, i)


def rank_krawtchouk(q: int, k: int, m: int, i: int, j: int) -> int:
    return sum(
        _sign(j - s) * q ** (m * s + binom2(j - s)) * q_binomial(k - s, k - j, q) * q_binomial(k - i, s, q)
        for s in range(k + 1)
    )


def rank_krawtchouk_table(q: int, k: int, m: int) -> KrawtchoukTable:
    R = range(k + 1)
    return KrawtchoukTable(tuple(tuple(Fraction(rank_krawtchouk(q, k, m, i, j)) for j in R) for i in R))


def rank_transform(W: Sequence[int], q: int, k: int, m: int, code_size: int) -> WeightDistribution:
    if not isinstance(W, WeightDistribution):
        W = WeightDistribution(tuple(W))
    return transform(W, rank_krawtchouk_table(q, k, m), code_size)


def _kernel_sum(q: int, k: int, m: int, j: int, coeff) -> Fraction:
    return Fraction(
        sum(
            _sign(j - s) * q ** (m * s + binom2(j - s)) * q_binomial(k - s, k - j, q) * coeff(s)
            for s in range(k + 1)
        )
    )


def count_kernel_rank(q: int, k: int, m: int, rf: int, j: int) -> int:
    """Rank-``j`` matrices in the kernel of a nonzero linear functional of rank ``rf``."""
    if not 1 <= rf <= k:
        raise ValueError(f"functional rank {rf} outside 1..{k}")
    total = _kernel_sum(q, k, m, j, lambda s: q_binomial(k, s, q) + (q - 1) * q_binomial(k - rf, s, q))
    return _exact(total / q, "kernel count")


def indicator_matrix(k: int, m: int, indices: Sequence[Tuple[int, int]]) -> Tuple[Tuple[int, ...], ...]:
    chosen = set(indices)
    return tuple(tuple(int((a, b) in chosen) for b in range(m)) for a in range(k))


def count_index_sum_zero(q: int, k: int, m: int, indices: Sequence[Tuple[int, int]], j: int) -> int:
    """Rank-``j`` matrices whose entries at ``indices`` sum to zero."""
    if not indices:
        raise ValueError("index set must be nonempty")
    _check_indices(k, m, indices)
    rf = ff.rank(ff.field(q), indicator_matrix(k, m, indices))
    return count_kernel_rank(q, k, m, rf, j)


def count_zero_block(q: int, k: int, m: int, kb: int, mb: int, j: int) -> int:
    """Rank-``j`` matrices whose top-left ``kb x mb`` block vanishes."""
    if not (1 <= kb <= k and 1 <= mb <= m):
        raise ValueError(f"block {kb}x{mb} does not fit in {k}x{m}")
    total = sum(
        Fraction(q_binomial(mb, i, q) * count_full_rank_rows(q, kb, i) * rank_krawtchouk(q, k, m, i, j))
        for i in range(min(kb, mb) + 1)
    )
    return _exact(total / q ** (kb * mb), "zero-block count")


def count_zero_diagonal(q: int, k: int, m: int, size: int, j: int) -> int:
    """Rank-``j`` matrices vanishing on ``size`` prescribed diagonal entries."""
    if not 0 <= size <= k:
        raise ValueError(f"diagonal set size {size} outside 0..{k}")
    total = sum(
        Fraction(binom(size, i) * (q - 1) ** i * rank_krawtchouk(q, k, m, i, j)) for i in range(size + 1)
    )
    return _exact(total / q**size, "zero-diagonal count")


def count_symmetric(q: int, k: int, i: int) -> int:
    return q_binomial(k, i, q) * sum(
        _sign(i - s) * q ** (binom2(s + 1) + binom2(i - s)) * q_binomial(i, s, q) for s in range(i + 1)
    )


def count_skew(q: int, k: int, i: int) -> int:
    return q_binomial(k, i, q) * sum(
        _sign(i - s) * q ** (binom2(s) + binom2(i - s)) * q_binomial(i, s, q) for s in range(i + 1)
    )


@dataclass(frozen=True)
class SymSkewReport:
    q: int
    k: int
    lhs: Tuple[int, ...]
    rhs: Tuple[Fraction, ...]

    @property
    def holds(self) -> bool:
        return all(a == b for a, b in zip(self.lhs, self.rhs))


def sym_skew_identity_check(q: int, k: int) -> SymSkewReport:
    """Compare the symmetric rank distribution with the transform of the skew one."""
    lhs = tuple(count_symmetric(q, k, j) for j in range(k + 1))
    scale = Fraction(1, q ** binom2(k))
    rhs = tuple(
        scale * sum(count_skew(q, k, i) * rank_krawtchouk(q, k, k, i, j) for i in range(k + 1)) for j in range(k + 1)
    )
    return SymSkewReport(q, k, lhs, rhs)


# ---------------------------------------------------------------------------
# constraints and the brute-force oracle

CONSTRAINT_KINDS = ("none", "sum_zero", "zero_block", "zero_diagonal", "symmetric", "skew_symmetric", "kernel")


def _check_indices(k: int, m: int, indices: Sequence[Tuple[int, int]]):
    for a, b in indices:
        if not (0 <= a < k and 0 <= b < m):
            raise ValueError(f"index ({a}, {b}) outside a {k}x{m} matrix")


@dataclass(frozen=True)
class ConstraintSpec:
    """A linear condition on ``k x m`` matrices; indices are 0-based ``(row, col)``.

    ``kernel`` takes a coefficient matrix ``A`` and means ``sum A_ab M_ab = 0``.
    """

    kind: str = "none"
    indices: Tuple[Tuple[int, int], ...] = ()
    block: Optional[Tuple[int, int]] = None
    coefficients: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __post_init__(self):
        if self.kind not in CONSTRAINT_KINDS:
            raise ValueError(f"unknown constraint kind {self.kind!r}")
        object.__setattr__(self, "indices", tuple(tuple(ix) for ix in self.indices))
        if len(set(self.indices)) != len(self.indices):
            raise ValueError("index set has repeated positions")
        if self.coefficients is not None:
            object.__setattr__(self, "coefficients", tuple(tuple(r) for r in self.coefficients))
        if self.kind == "zero_diagonal" and any(a != b for a, b in self.indices):
            raise ValueError("zero_diagonal only takes diagonal positions")
        if self.kind == "zero_block" and self.block is None:
            raise ValueError("zero_block needs a block size")
        if self.kind == "kernel" and self.coefficients is None:
            raise ValueError("kernel needs a coefficient matrix")
        if self.kind == "sum_zero" and not self.indices:
            raise ValueError("sum_zero needs a nonempty index set")

    def check_shape(self, k: int, m: int):
        _check_indices(k, m, self.indices)
        if self.kind in ("symmetric", "skew_symmetric") and k != m:
            raise ValueError(f"{self.kind} needs a square matrix space")
        if self.kind == "zero_block" and not (1 <= self.block[0] <= k and 1 <= self.block[1] <= m):
            raise ValueError(f"block {self.block} does not fit in {k}x{m}")
        if self.kind == "kernel":
            A = self.coefficients
            if len(A) != k or any(len(row) != m for row in A):
                raise ValueError("coefficient matrix has the wrong shape")

    def admits(self, F: ff.GF, M: Tuple[Tuple[int, ...], ...]) -> bool:
        kind = self.kind
        if kind == "none":
            return True
        if kind == "sum_zero":
            total = 0
            for a, b in self.indices:
                total = F.add(total, M[a][b])
            return total == 0
        if kind == "zero_block":
            kb, mb = self.block
            return not any(M[a][b] for a in range(kb) for b in range(mb))
        if kind == "zero_diagonal":
            return not any(M[a][a] for a, _ in self.indices)
        if kind == "symmetric":
            n = len(M)
            return all(M[a][b] == M[b][a] for a in range(n) for b in range(a))
        if kind == "skew_symmetric":
            n = len(M)
            return all(M[a][a] == 0 for a in range(n)) and all(
                M[a][b] == F.neg(M[b][a]) for a in range(n) for b in range(a)
            )
        total = 0
        for row_a, row_m in zip(self.coefficients, M):
            for x, y in zip(row_a, row_m):
                total = F.add(total, F.mul(x, y))
        return total == 0

    def to_json(self) -> dict:
        out: Dict = {"kind": self.kind}
        if self.indices:
            out["indices"] = [list(ix) for ix in self.indices]
        if self.block is not None:
            out["block"] = list(self.block)
        if self.coefficients is not None:
            out["coefficients"] = [list(r) for r in self.coefficients]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ConstraintSpec":
        unknown = set(data) - {"kind", "indices", "block", "coefficients"}
        if unknown:
            raise ValueError(f"unknown constraint keys: {sorted(unknown)}")
        block = tuple(data["block"]) if "block" in data else None
        return cls(data.get("kind", "none"), tuple(map(tuple, data.get("indices", ()))), block, data.get("coefficients"))


@lru_cache(maxsize=16)
def _all_matrices(q: int, k: int, m: int) -> Tuple[Tuple[Tuple[Tuple[int, ...], ...], int], ...]:
    F = ff.field(q)
    out: List = []
    for flat in itertools.product(range(q), repeat=k * m):
        M = tuple(flat[a * m : (a + 1) * m] for a in range(k))
        out.append((M, ff.rank(F, M)))
    return tuple(out)


def brute_force_count(
    q: int, k: int, m: int, constraint: ConstraintSpec, j: int, cap: int = DEFAULT_BRUTE_FORCE_CAP
) -> int:
    """Count rank-``j`` matrices satisfying ``constraint`` by enumerating every matrix."""
    if q ** (k * m) > cap:
        raise ValueError(f"{q}^{k * m} matrices exceeds the brute-force cap {cap}")
    constraint.check_shape(k, m)
    F = ff.field(q)
    return sum(1 for M, rk in _all_matrices(q, k, m) if rk == j and constraint.admits(F, M))


def closed_form_count(q: int, k: int, m: int, constraint: ConstraintSpec, j: int) -> int:
    constraint.check_shape(k, m)
    kind = constraint.kind
    if kind == "none":
        return count_rank(q, k, m, j)
    if kind == "sum_zero":
        return count_index_sum_zero(q, k, m, constraint.indices, j)
    if kind == "zero_block":
        return count_zero_block(q, k, m, *constraint.block, j)
    if kind == "zero_diagonal":
        return count_zero_diagonal(q, k, m, len(set(constraint.indices)), j)
    if kind == "symmetric":
        return count_symmetric(q, k, j)
    if kind == "skew_symmetric":
        return count_skew(q, k, j)
    rf = ff.rank(ff.field(q), constraint.coefficients)
    if rf == 0:
        raise ValueError("kernel coefficient matrix must be nonzero")
    return count_kernel_rank(q, k, m, rf, j)
