"""Exact sums of N-th roots of unity, reduced modulo the cyclotomic polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> Tuple[list, list]:
    """Divide integer polynomials (coefficients lowest degree first); ``den`` monic."""
    num = list(num)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for shift in range(len(num) - 1 - dd, -1, -1):
        c = num[shift + dd]
        quot[shift] = c
        if c:
            for t, d in enumerate(den):
                num[shift + t] -= c * d
    rem = num[:dd] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Obtained by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_poly(d))
            if any(rem):
                raise ArithmeticError(f"x^{n}-1 not divisible by Phi_{d}")
    return tuple(poly)


@dataclass(frozen=True)
class CyclotomicSum:
    """An element of Z[zeta_N] in its canonical residue form.

    ``coeffs[k]`` multiplies ``zeta_N**k`` for ``0 <= k < phi(N)``.
    """

    N: int
    coeffs: Tuple[int, ...]

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_integer():
            raise ArithmeticError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def __str__(self) -> str:
        if self.is_integer():
            return str(self.coeffs[0])
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"({' + '.join(terms)}) mod Phi_{self.N}"


def cyclo_reduce(raw: Sequence[int], N: int) -> CyclotomicSum:
    """Reduce ``sum raw[j] * zeta_N**j`` to its canonical residue."""
    if len(raw) != N:
        raise ValueError(f"expected {N} multiplicities, got {len(raw)}")
    phi = cyclotomic_poly(N)
    deg = len(phi) - 1
    _, rem = _poly_divmod(raw, phi)
    rem = list(rem) + [0] * (deg - len(rem))
    return CyclotomicSum(N, tuple(rem[:deg]))
