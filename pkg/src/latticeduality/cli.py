"""Command-line front end.

Exit codes: 0 ok, 1 usage error, 2 support axiom violation, 3 lattice not
regular or not graded, 4 arithmetic inconsistency or formula/oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .groups import subgroup_closure
from .lattices import LatticeError
from .macwilliams import (
    ArithmeticInconsistency,
    KrawtchoukTable,
    dual_optimality_check,
    label_map,
    oracle_table,
    regular_table,
    relabel_table,
    singleton_defect,
    support_optimal_distribution,
    transform,
)
from .matrices import ConstraintSpec, brute_force_count, closed_form_count
from .supports import (
    RegularSupport,
    SupportViolation,
    WeightDistribution,
    full_cyclic_chain,
    lee_weight,
    min_weight,
    support_from_json,
    validate_support,
    weight_distribution,
)

EXIT_OK, EXIT_USAGE, EXIT_AXIOM, EXIT_LATTICE, EXIT_ARITH = 0, 1, 2, 3, 4

SUPPORT_FLAGS = {
    "hamming": {"group", "n"},
    "rank": {"q", "k", "m"},
    "chain": {"group", "chain"},
    "lee4": set(),
    "homogeneous": {"p", "n"},
}


class UsageError(ValueError):
    pass


class OracleMismatch(ArithmeticError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> List[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _tuples(text: str) -> List[List[int]]:
    return [_ints(part) for part in text.split(";") if part.strip()]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


# ---------------------------------------------------------------------------
# support resolution


def _add_support_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--support", choices=sorted(SUPPORT_FLAGS), help="builtin support kind")
    p.add_argument("--spec", help="JSON support descriptor file")
    p.add_argument("--group", help="cyclic orders of the base group, comma separated")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--chain", help="JSON list of generator lists for the intermediate subgroups")


def _raw_support(args) -> RegularSupport:
    given = {f for f in ("group", "n", "q", "k", "m", "p", "chain") if getattr(args, f) is not None}
    if args.spec is not None:
        if args.support is not None or given:
            raise UsageError("--spec cannot be combined with builtin support flags")
        with open(args.spec) as fh:
            return support_from_json(json.load(fh))
    if args.support is None:
        raise UsageError("one of --support or --spec is required")
    allowed = SUPPORT_FLAGS[args.support]
    if given - allowed:
        raise UsageError(f"{args.support} does not take {', '.join('--' + f for f in sorted(given - allowed))}")
    params = {}
    if args.support in ("hamming", "chain"):
        if args.group is None:
            raise UsageError(f"{args.support} needs --group")
        params["orders"] = tuple(_ints(args.group))
    if args.support == "chain":
        if args.chain is not None:
            params["chain"] = json.loads(args.chain)
        elif len(params["orders"]) == 1:
            params["chain"] = full_cyclic_chain(params["orders"][0])
        else:
            raise UsageError("chain on a non-cyclic group needs --chain")
    missing = [f for f in sorted(allowed - {"group", "chain"}) if getattr(args, f) is None]
    if missing:
        raise UsageError(f"{args.support} needs {', '.join('--' + f for f in missing)}")
    params.update({f: getattr(args, f) for f in allowed - {"group", "chain"}})
    return support_from_json({"kind": args.support, "params": params})


def _support(args) -> RegularSupport:
    return _raw_support(args).validate()


def _lee_relabel(sup: RegularSupport, K: KrawtchoukTable, part: int) -> KrawtchoukTable:
    # lee4 tables are reported with rows and columns indexed by Lee weight
    primal = label_map(sup.group.elements, sup.weight, lee_weight)
    dual = label_map(sup.dual.group.elements, sup.dual.weight, lee_weight)
    rows, cols = (dual, primal) if part == 1 else (primal, dual)
    return relabel_table(K, rows, cols)


# ---------------------------------------------------------------------------
# commands


def cmd_krawtchouk(args) -> int:
    sup = _support(args)
    part = 2 if args.dual else 1
    K = regular_table(sup, part)
    if args.verify:
        O = oracle_table(sup, part)
        if O != K:
            raise OracleMismatch(f"closed form {K.as_ints()} differs from oracle {O.as_ints()}")
    if sup.name == "lee4":
        K = _lee_relabel(sup, K, part)
    if args.format == "json":
        out = K.to_json()
        out.update(support=sup.name, part=part, verified=bool(args.verify))
        _emit(out)
    else:
        sys.stdout.write(K.to_tsv())
    return EXIT_OK


def cmd_verify_support(args) -> int:
    sup = _raw_support(args)
    report = validate_support(sup, stop_at_first=False)
    lattice_bad = any(v.axiom == "L" for v in report.violations)
    failed = {v.axiom: v for v in report.violations}
    out = {
        "support": sup.name,
        "lattice_regular": not lattice_bad,
        "axioms": {
            ax: ("skipped" if lattice_bad else failed[ax].message if ax in failed else "ok") for ax in "ABCDE"
        },
        "gamma": list(report.gamma) if report.gamma else None,
        "ok": report.ok,
    }
    if lattice_bad:
        out["lattice_witness"] = failed["L"].message
    _emit(out)
    if lattice_bad:
        return EXIT_LATTICE
    return EXIT_OK if report.ok else EXIT_AXIOM


def cmd_transform(args) -> int:
    sup = _support(args)
    W = WeightDistribution(tuple(_ints(args.counts)))
    if len(W) != sup.r + 1:
        raise UsageError(f"--counts needs {sup.r + 1} entries")
    if W.total != args.code_size:
        raise UsageError(f"counts sum to {W.total}, not the code size {args.code_size}")
    part = 2 if args.direction == "forward" else 1
    _emit(transform(W, regular_table(sup, part), args.code_size).to_json())
    return EXIT_OK


def _matrix_request(args) -> dict:
    if args.request is not None:
        with open(args.request) as fh:
            req = json.load(fh)
        unknown = set(req) - {"q", "k", "m", "constraint", "rank"}
        if unknown:
            raise UsageError(f"unknown request keys: {sorted(unknown)}")
        return req
    for f in ("q", "k", "m", "rank"):
        if getattr(args, f) is None:
            raise UsageError(f"--{f} is required without --request")
    constraint = {"kind": args.constraint}
    if args.indices:
        constraint["indices"] = _tuples(args.indices)
    if args.block:
        constraint["block"] = _ints(args.block)
    if args.coefficients:
        constraint["coefficients"] = _tuples(args.coefficients)
    return {"q": args.q, "k": args.k, "m": args.m, "constraint": constraint, "rank": args.rank}


def cmd_count_matrices(args) -> int:
    req = _matrix_request(args)
    q, k, m, j = req["q"], req["k"], req["m"], req["rank"]
    if not 1 <= k <= m:
        raise UsageError("need 1 <= k <= m")
    if not 0 <= j <= k:
        raise UsageError(f"rank {j} outside 0..{k}")
    constraint = ConstraintSpec.from_json(req.get("constraint", {"kind": "none"}))
    count = (brute_force_count if args.brute_force else closed_form_count)(q, k, m, constraint, j)
    _emit({"count": str(count)})
    return EXIT_OK


def cmd_optimal(args) -> int:
    sup = _support(args)
    G = sup.group
    gens = [G(c) for c in _tuples(args.generators)]
    C = subgroup_closure(G, gens)
    if len(C) == 1:
        raise UsageError("the zero code has no minimum weight")
    defect = singleton_defect(C, sup)
    out = {
        "size": len(C),
        "min_weight": min_weight(C, sup),
        "defect": str(defect),
        "optimal": defect == 0,
        "distribution": list(weight_distribution(C, sup).counts),
    }
    if defect == 0 and not C.is_trivial():
        rep = dual_optimality_check(C, sup)
        solved = support_optimal_distribution(sup, rep.d)
        out.update(
            dual_optimal=rep.dual_optimal,
            dual_min_weight=rep.d_dual,
            dual_bound_holds=rep.bound_holds,
            solved_distribution=list(solved.counts),
        )
        if solved.counts != weight_distribution(C, sup).counts or not rep.ok:
            _emit(out)
            return EXIT_ARITH
    _emit(out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="latticeduality", description="Lattice-based MacWilliams identities at desk scale.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("krawtchouk", help="Krawtchouk table of a regular support")
    _add_support_args(p)
    p.add_argument("--dual", action="store_true", help="table for the support/dual-support pair instead")
    p.add_argument("--verify", action="store_true", help="cross-check against character sums")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_krawtchouk)

    p = sub.add_parser("verify-support", help="check the regular-support axioms")
    _add_support_args(p)
    p.set_defaults(func=cmd_verify_support)

    p = sub.add_parser("transform", help="MacWilliams transform of a weight distribution")
    _add_support_args(p)
    p.add_argument("--counts", required=True, help="W_0,...,W_r")
    p.add_argument("--code-size", type=int, required=True)
    p.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("count-matrices", help="count matrices over F_q by rank under a constraint")
    p.add_argument("--request", help="JSON request file")
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--rank", type=int)
    p.add_argument("--constraint", default="none")
    p.add_argument("--indices", help="0-based positions 'r,c;r,c;...'")
    p.add_argument("--block", help="zero block size 'k,m'")
    p.add_argument("--coefficients", help="functional coefficients, rows separated by ';'")
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=cmd_count_matrices)

    p = sub.add_parser("optimal", help="Singleton defect and optimality of a code")
    _add_support_args(p)
    p.add_argument("--generators", required=True, help="generator coordinates 'a,b;c,d;...'")
    p.set_defaults(func=cmd_optimal)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SupportViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        lattice = any(v.axiom == "L" for v in exc.violations)
        return EXIT_LATTICE if lattice else EXIT_AXIOM
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LATTICE
    except (ArithmeticInconsistency, OracleMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARITH
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
