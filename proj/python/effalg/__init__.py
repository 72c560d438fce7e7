"""Finite effect algebras: validation, structure, decompositions and states."""

from ._core import (
    Algebra,
    EffalgError,
    boolean_algebra,
    certify_no_state,
    decompose,
    direct_product,
    find_state,
    fixture,
    fixture_names,
    horizontal_sum,
    law_ids,
    mv_chain,
    run_laws,
    smear,
    verify_eaf,
)

__all__ = [
    "Algebra",
    "EffalgError",
    "boolean_algebra",
    "certify_no_state",
    "decompose",
    "direct_product",
    "find_state",
    "fixture",
    "fixture_names",
    "horizontal_sum",
    "law_ids",
    "mv_chain",
    "run_laws",
    "smear",
    "verify_eaf",
]
