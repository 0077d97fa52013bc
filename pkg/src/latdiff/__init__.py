"""Differential and difference operators on finite lattices."""

from .enumeration import CountQuery, CountReport, enumerate_ops
from .formulas import (
    catalan, chain_total, omega_recurrence, omega_top_formula, quasi_derivation_total, quasi_total,
)
from .lattice import (
    Lattice, PosetSpec, build_boolean, build_chain, build_from_covers, build_pentagon,
    build_quasi_antichain, is_distributive, leq,
)
from .operators import (
    OperatorFamily, Weight, chain_floor, chain_saturate, check_property, check_weight, make_named,
    modify_at_top,
)

__version__ = "0.1.0"

__all__ = [
    "CountQuery", "CountReport", "enumerate_ops",
    "catalan", "chain_total", "omega_recurrence", "omega_top_formula", "quasi_derivation_total", "quasi_total",
    "Lattice", "PosetSpec", "build_boolean", "build_chain", "build_from_covers", "build_pentagon",
    "build_quasi_antichain", "is_distributive", "leq",
    "OperatorFamily", "Weight", "chain_floor", "chain_saturate", "check_property", "check_weight", "make_named",
    "modify_at_top",
]
