"""Exact characters and dimensions of current-algebra Demazure modules.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from demchar._core import (
    BudgetExceeded,
    RootSystem,
    classical_qsystem,
    decompose_demazure,
    demazure_character,
    demazure_dim,
    dominant_witness_exists,
    irr_character,
    key_construct,
    key_search_brute,
    key_valid,
    minuscule,
    prime_certificate,
    qsystem_identity,
    schur_compare,
    set_term_budget,
    steinberg_split,
    tensor_mult,
    verify_factorization,
    verify_table,
    weyl_dim,
)

__all__ = [
    "BudgetExceeded",
    "RootSystem",
    "classical_qsystem",
    "decompose_demazure",
    "demazure_character",
    "demazure_dim",
    "dominant_witness_exists",
    "irr_character",
    "key_construct",
    "key_search_brute",
    "key_valid",
    "minuscule",
    "prime_certificate",
    "qsystem_identity",
    "schur_compare",
    "set_term_budget",
    "steinberg_split",
    "tensor_mult",
    "verify_factorization",
    "verify_table",
    "weyl_dim",
]
