"""Small finite fields F_q and exact linear algebra over them.

Field elements are the integers ``0..q-1``; for ``q = p**e`` the base-``p``
digits of an integer are its coefficients in ``F_p[x] / (f)``.  Addition is
therefore digit-wise mod ``p``, which makes the additive group of ``F_q`` the
product ``Z_p ** e`` used by the rank support.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, Sequence, Tuple

# Conway polynomials, coefficients lowest degree first, leading 1 omitted.
CONWAY = {
    4: (1, 1),  # x^2 + x + 1
    8: (1, 1, 0),  # x^3 + x + 1
    9: (2, 2),  # x^2 + 2x + 2
}


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(q: int) -> Tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise if ``q`` is not a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not is_prime(p):
                break
            return p, e
    raise ValueError(f"{q} is not a prime power")


@dataclass(frozen=True)
class GF:
    q: int

    def __post_init__(self):
        p, e = prime_power(self.q)
        if e > 1 and self.q not in CONWAY:
            raise ValueError(f"no irreducible polynomial tabulated for F_{self.q}")

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def degree(self) -> int:
        return prime_power(self.q)[1]

    def digits(self, a: int) -> Tuple[int, ...]:
        p, e = self.p, self.degree
        return tuple((a // p**t) % p for t in range(e))

    def from_digits(self, ds: Sequence[int]) -> int:
        p = self.p
        return sum((d % p) * p**t for t, d in enumerate(ds))

    @cached_property
    def add_table(self) -> Tuple[Tuple[int, ...], ...]:
        q, p = self.q, self.p
        return tuple(
            tuple(self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))]) for b in range(q))
            for a in range(q)
        )

    @cached_property
    def mul_table(self) -> Tuple[Tuple[int, ...], ...]:
        q, p, e = self.q, self.p, self.degree
        if e == 1:
            return tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
        red = CONWAY[q]

        def mul(a: int, b: int) -> int:
            prod = [0] * (2 * e - 1)
            for i, x in enumerate(self.digits(a)):
                for j, y in enumerate(self.digits(b)):
                    prod[i + j] = (prod[i + j] + x * y) % p
            # x^e = -(red) ; reduce from the top
            for deg in range(2 * e - 2, e - 1, -1):
                c = prod[deg]
                if c:
                    prod[deg] = 0
                    for t, r in enumerate(red):
                        prod[deg - e + t] = (prod[deg - e + t] - c * r) % p
            return self.from_digits(prod[:e])

        return tuple(tuple(mul(a, b) for b in range(q)) for a in range(q))

    @cached_property
    def neg_table(self) -> Tuple[int, ...]:
        return tuple(self.add_table[a].index(0) for a in range(self.q))

    @cached_property
    def inv_table(self) -> Tuple[int, ...]:
        return tuple(0 if a == 0 else self.mul_table[a].index(1) for a in range(self.q))

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


def rref(F: GF, rows: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """Reduced row echelon form with zero rows dropped (canonical row-space basis)."""
    work: List[List[int]] = [list(r) for r in rows]
    if not work:
        return ()
    ncols = len(work[0])
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    piv_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(piv_row, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[piv_row], work[pivot] = work[pivot], work[piv_row]
        s = inv[work[piv_row][col]]
        work[piv_row] = [mul[s][x] for x in work[piv_row]]
        for r in range(len(work)):
            c = work[r][col]
            if r != piv_row and c:
                nc = neg[c]
                work[r] = [add[x][mul[nc][y]] for x, y in zip(work[r], work[piv_row])]
        piv_row += 1
        if piv_row == len(work):
            break
    return tuple(tuple(r) for r in work[:piv_row])


def rank(F: GF, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(F, rows))


def transpose(rows: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(zip(*rows))
