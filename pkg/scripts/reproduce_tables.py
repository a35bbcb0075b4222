"""Print closed-form and oracle Krawtchouk tables for the builtin supports."""

from __future__ import annotations

import argparse

from latticeduality.macwilliams import label_map, oracle_table, regular_table, relabel_table
from latticeduality.supports import builtin_support, full_cyclic_chain, lee_weight

INSTANCES = {
    "lee4": ("lee4", {}),
    "hamming-2-3": ("hamming", dict(orders=(2,), n=3)),
    "hamming-3-2": ("hamming", dict(orders=(3,), n=2)),
    "rank-2-2-2": ("rank", dict(q=2, k=2, m=2)),
    "rank-2-2-3": ("rank", dict(q=2, k=2, m=3)),
    "chain-8": ("chain", dict(orders=(8,), chain=full_cyclic_chain(8))),
    "homogeneous-3-1": ("homogeneous", dict(p=3, n=1)),
    "homogeneous-3-2": ("homogeneous", dict(p=3, n=2)),
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*", help=f"subset of {', '.join(INSTANCES)}")
    args = parser.parse_args()
    unknown = set(args.names) - set(INSTANCES)
    if unknown:
        parser.error(f"unknown instances: {sorted(unknown)}")
    for name in args.names or INSTANCES:
        kind, params = INSTANCES[name]
        sup = builtin_support(kind, **params)
        print(f"== {name}  gamma={list(sup.gamma_table)}  dual gamma={list(sup.dual.gamma_table)}")
        for part in (1, 2):
            K = regular_table(sup, part)
            agree = K == oracle_table(sup, part)
            print(f"-- part {part} (oracle agrees: {agree})")
            print(K.to_tsv(), end="")
        if name == "lee4":
            rows = label_map(sup.dual.group.elements, sup.dual.weight, lee_weight)
            cols = label_map(sup.group.elements, sup.weight, lee_weight)
            print("-- part 1 indexed by Lee weight")
            print(relabel_table(regular_table(sup, 1), rows, cols).to_tsv(), end="")
        print()


if __name__ == "__main__":
    main()
