"""Multiresolution analysis of incomplete rankings."""

from fractions import Fraction

from ._core import (
    AlphaTable,
    AuditFailure,
    DomainError,
    Error,
    ParseError,
    ResourceError,
    derangements,
    estimate,
    factorial,
    feature_marginal,
    format_coefficients,
    generate,
    identifiable_support,
    kernel_smooth,
    marginal,
    naive_marginal,
    parse_coefficients,
    solution_space,
    synthesize,
    validate,
)
from ._core import fwt as _fwt

__all__ = [
    "AlphaTable",
    "AuditFailure",
    "DomainError",
    "Error",
    "ParseError",
    "ResourceError",
    "alpha",
    "derangements",
    "estimate",
    "factorial",
    "feature_marginal",
    "format_coefficients",
    "fwt",
    "generate",
    "identifiable_support",
    "kernel_smooth",
    "marginal",
    "naive_marginal",
    "parse_coefficients",
    "solution_space",
    "synthesize",
    "validate",
]


def fwt(f, table=None, workers=1, return_ops=False):
    """Wavelet transform of a dict mapping rankings (tuples) to values."""
    coefficients, ops = _fwt(f, table if table is not None else AlphaTable(), workers)
    return (coefficients, ops) if return_ops else coefficients


def alpha(pi, pi_prime, table=None):
    """Exact alpha coefficient as a Fraction."""
    num, den = (table if table is not None else AlphaTable()).alpha(tuple(pi), tuple(pi_prime))
    return Fraction(num, den)
