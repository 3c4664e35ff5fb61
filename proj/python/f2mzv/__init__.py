"""Exact and numeric engine for multiple zeta values on the degree-2 Fermat curve."""

from ._core import (  # noqa: F401
    alpha,
    basis,
    bernoulli,
    beta,
    check_recursion,
    closed_form,
    coaction_symbol,
    coaction_u,
    compile_index,
    dims,
    eval,
    is_admissible,
    log2,
    pi,
    run_checks,
    shuffle_words,
    verify_coaction_uv,
    zeta,
)

__all__ = [
    "alpha", "basis", "bernoulli", "beta", "check_recursion", "closed_form",
    "coaction_symbol", "coaction_u", "compile_index", "dims", "eval",
    "is_admissible", "log2", "pi", "run_checks", "shuffle_words",
    "verify_coaction_uv", "zeta",
]
