"""Exact shift-invariance analysis on finite abelian groups.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its surface and adds a small helper for exact rationals.
"""

from fractions import Fraction

from ._core import (
    Distribution,
    FixedPointSpace,
    Group,
    PreconditionError,
    SpecMismatchError,
    TheoremViolationError,
    ValidationError,
    __version__,
    char_hat_one_exact,
    char_table,
    circle_classify,
    convolve,
    dirac,
    embed_circle_support,
    empirical_shift_check,
    fixed_point_space,
    haar_forced,
    independence_check,
    inverse_fourier,
    invariance_subgroup,
    is_fixed_point,
    lambda_set,
    oracle_fixed_points,
    power_invariance,
    run_request,
    sample,
    shift,
    stabilizer,
    tv_distance,
    uniform,
    verify_converse,
    verify_forward,
)


def fraction(text: str) -> Fraction:
    """Parse a "p/q" string from the library into a ``fractions.Fraction``."""
    return Fraction(text)


__all__ = [
    "Distribution",
    "FixedPointSpace",
    "Group",
    "PreconditionError",
    "SpecMismatchError",
    "TheoremViolationError",
    "ValidationError",
    "__version__",
    "char_hat_one_exact",
    "char_table",
    "circle_classify",
    "convolve",
    "dirac",
    "embed_circle_support",
    "empirical_shift_check",
    "fixed_point_space",
    "fraction",
    "haar_forced",
    "independence_check",
    "inverse_fourier",
    "invariance_subgroup",
    "is_fixed_point",
    "lambda_set",
    "oracle_fixed_points",
    "power_invariance",
    "run_request",
    "sample",
    "shift",
    "stabilizer",
    "tv_distance",
    "uniform",
    "verify_converse",
    "verify_forward",
]
