"""Normalized determinants, chaotic order tests, and Levi-form maximality
criteria on dense Hermitian truncations.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._core import (  # noqa: F401
    HypothesisViolated,
    NotInvertibleError,
    __version__,
    additive_constant,
    catalog_kinds,
    chaotic_leq,
    counterexample_pair,
    delta,
    delta_extrema,
    eigenvalues,
    fsd,
    gen_kantorovich,
    geometric_mean,
    hadamard,
    kantorovich,
    levi_form,
    levi_form_fd,
    loewner_leq,
    log_mean,
    matrix_exp,
    matrix_log,
    matrix_power,
    p_mean,
    specht,
    specht_p,
)
