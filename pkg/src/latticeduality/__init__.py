"""MacWilliams identities for supports valued in regular lattices."""

from __future__ import annotations

from .groups import Code, FiniteAbelianGroup, GroupElement, dual_code, enumerate_subgroups, subgroup_closure
from .lattices import Lattice, LatticeInvariants, check_modular, check_regular, invariant_tables
from .macwilliams import (
    KrawtchoukTable,
    krawtchouk_oracle,
    krawtchouk_regular,
    krawtchouk_regular_dual,
    oracle_table,
    regular_table,
    transform,
)
from .supports import RegularSupport, WeightDistribution, builtin_support, dual_support, weight_distribution

__all__ = [
    "Code",
    "FiniteAbelianGroup",
    "GroupElement",
    "KrawtchoukTable",
    "Lattice",
    "LatticeInvariants",
    "RegularSupport",
    "WeightDistribution",
    "builtin_support",
    "check_modular",
    "check_regular",
    "dual_code",
    "dual_support",
    "enumerate_subgroups",
    "invariant_tables",
    "krawtchouk_oracle",
    "krawtchouk_regular",
    "krawtchouk_regular_dual",
    "oracle_table",
    "regular_table",
    "subgroup_closure",
    "transform",
    "weight_distribution",
]
