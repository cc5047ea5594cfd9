"""Exact hermitian Morita theory: scaling, Gram extraction and lifting of forms."""

from ._hmorita import (
    Error,
    Form,
    InvariantViolation,
    Involution,
    MathError,
    ParseError,
    extract,
    extract_gram,
    form_over_d,
    form_over_star,
    lift,
    lift_to_bar_t,
    orthogonal_sum,
    reduce,
    rescale_involution,
    run_fuzz,
    scale,
    unscale,
)

__all__ = [
    "Error",
    "Form",
    "InvariantViolation",
    "Involution",
    "MathError",
    "ParseError",
    "extract",
    "extract_gram",
    "form_over_d",
    "form_over_star",
    "lift",
    "lift_to_bar_t",
    "orthogonal_sum",
    "reduce",
    "rescale_involution",
    "run_fuzz",
    "scale",
    "unscale",
]
