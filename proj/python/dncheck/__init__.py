"""Exact verification of congruences for sums of squared Delannoy polynomials."""

from ._core import (
    STATEMENTS,
    DncheckError,
    binom_valuated,
    campaign,
    central_ratio_sequence,
    d_sequence,
    identity_suite,
    legendre,
    lhs_sum,
    residue_index,
    sieve_primes,
    sqrt_mod,
    two_squares,
    verify,
)

__all__ = [
    "STATEMENTS",
    "DncheckError",
    "binom_valuated",
    "campaign",
    "central_ratio_sequence",
    "d_sequence",
    "identity_suite",
    "legendre",
    "lhs_sum",
    "residue_index",
    "sieve_primes",
    "sqrt_mod",
    "two_squares",
    "verify",
]
