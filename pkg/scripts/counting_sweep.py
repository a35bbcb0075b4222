"""Compare every closed-form matrix count with brute-force enumeration."""

from __future__ import annotations

import argparse
import time

from latticeduality.matrices import ConstraintSpec, brute_force_count, closed_form_count, sym_skew_identity_check


def constraints(k: int, m: int):
    cells = [(a, b) for a in range(k) for b in range(m)]
    yield ConstraintSpec()
    yield ConstraintSpec("sum_zero", tuple(cells))
    yield ConstraintSpec("sum_zero", ((0, 0),))
    yield ConstraintSpec("zero_block", block=(1, 1))
    yield ConstraintSpec("zero_block", block=(k, 1))
    yield ConstraintSpec("zero_diagonal", tuple((a, a) for a in range(k)))
    yield ConstraintSpec("kernel", coefficients=[[int(a == b) for b in range(m)] for a in range(k)])
    if k == m:
        yield ConstraintSpec("symmetric")
        yield ConstraintSpec("skew_symmetric")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--max-m", type=int, default=3)
    args = parser.parse_args()
    start = time.perf_counter()
    checked = mismatches = 0
    for q in args.q:
        for k in range(1, args.max_m + 1):
            for m in range(k, args.max_m + 1):
                for spec in constraints(k, m):
                    for j in range(k + 1):
                        a, b = closed_form_count(q, k, m, spec, j), brute_force_count(q, k, m, spec, j)
                        checked += 1
                        if a != b:
                            mismatches += 1
                            print(f"MISMATCH q={q} {k}x{m} {spec.to_json()} rank {j}: {a} vs {b}")
    print(f"{checked} counts checked, {mismatches} mismatches, {time.perf_counter() - start:.1f} s")
    for q in args.q:
        for k in range(1, args.max_m + 1):
            rep = sym_skew_identity_check(q, k)
            print(f"sym/skew identity q={q} k={k}: {'holds' if rep.holds else 'fails'} {list(rep.lhs)}")


if __name__ == "__main__":
    main()
