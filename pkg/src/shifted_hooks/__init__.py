"""Exact verification toolkit for hook-length and shifted-part identities."""

from .exactnum import (
    Rational,
    binomial,
    factorial,
    falling_factorial,
    fmt_rat,
    stirling_first,
    stirling_second,
)
from .partitions import (
    Partition,
    a_lambda_poly,
    conjugate,
    enumerate_partitions,
    hook_product,
    hook_profile,
    partition_count,
    phi_poly,
    shifted_parts,
    skew_syt_count,
    syt_count,
)
from .polyring import MultiPoly, exact_div, geometric_inverse, param, var

__all__ = [
    "Rational",
    "binomial",
    "factorial",
    "falling_factorial",
    "fmt_rat",
    "stirling_first",
    "stirling_second",
    "Partition",
    "a_lambda_poly",
    "conjugate",
    "enumerate_partitions",
    "hook_product",
    "hook_profile",
    "partition_count",
    "phi_poly",
    "shifted_parts",
    "skew_syt_count",
    "syt_count",
    "MultiPoly",
    "exact_div",
    "geometric_inverse",
    "param",
    "var",
]

__version__ = "0.1.0"
