"""Binomial and Gaussian binomial coefficients, total over all integer arguments."""

from __future__ import annotations

import math


def binom(a: int, b: int) -> int:
    """``C(a, b)``, zero unless ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def binom2(x: int) -> int:
    """``x (x - 1) / 2`` for any integer ``x``."""
    return x * (x - 1) // 2


def q_binomial(a: int, b: int, q: int) -> int:
    """Gaussian binomial ``[a, b]_q``, zero unless ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    b = min(b, a - b)
    num = den = 1
    for u in range(b):
        num *= q ** (a - u) - 1
        den *= q ** (u + 1) - 1
    return num // den


def count_full_rank_rows(q: int, rows: int, i: int) -> int:
    """``prod_{u<i} (q**rows - q**u)``: ordered choices of ``i`` independent vectors in F_q^rows."""
    return math.prod(q**rows - q**u for u in range(i))
