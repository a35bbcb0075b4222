"""List the optimal codes of small builtin supports and check their duals."""

from __future__ import annotations

from latticeduality.groups import enumerate_subgroups
from latticeduality.macwilliams import dual_optimality_check, is_optimal, support_optimal_distribution
from latticeduality.supports import builtin_support, min_weight, weight_distribution

INSTANCES = [
    ("lee4", {}),
    ("hamming", dict(orders=(2,), n=3)),
    ("hamming", dict(orders=(3,), n=2)),
    ("rank", dict(q=2, k=2, m=2)),
    ("homogeneous", dict(p=3, n=2)),
]


def main() -> None:
    for kind, params in INSTANCES:
        sup = builtin_support(kind, **params)
        subs = [C for C in enumerate_subgroups(sup.group) if not C.is_trivial()]
        optimal = [C for C in subs if is_optimal(C, sup)]
        print(f"{sup!r}: {len(subs)} non-trivial subgroups, {len(optimal)} optimal")
        for C in optimal:
            d = min_weight(C, sup)
            rep = dual_optimality_check(C, sup)
            solved = support_optimal_distribution(sup, d)
            print(
                f"  |C|={len(C)} d={d} W={list(weight_distribution(C, sup).counts)} "
                f"solved={list(solved.counts)} d*={rep.d_dual} dual optimal={rep.dual_optimal}"
            )


if __name__ == "__main__":
    main()
