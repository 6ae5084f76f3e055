"""Twisted partition monoids and the classification of their congruences."""

from .cpair import CPair, RowSpec, includes, is_exceptional, leq_C, member, validate
from .fcmatrix import FCMatrix, cg_fc_member, enumerate_fc, includes_fc, validate_fc
from .lattice import Lattice, build_lattice
from .natcong import NatCong
from .oracle import all_congruences, build_monoid, classify
from .partition import InvalidInput, Partition, enumerate_cong_Pn, enumerate_partitions, multiply
from .symbols import Symbol, parse_token
from .twisted import ZERO, Pair

__all__ = [
    "CPair", "RowSpec", "includes", "is_exceptional", "leq_C", "member", "validate",
    "FCMatrix", "cg_fc_member", "enumerate_fc", "includes_fc", "validate_fc",
    "Lattice", "build_lattice", "NatCong", "all_congruences", "build_monoid", "classify",
    "InvalidInput", "Partition", "enumerate_cong_Pn", "enumerate_partitions", "multiply",
    "Symbol", "parse_token", "ZERO", "Pair",
]
