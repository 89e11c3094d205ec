"""Exact Igusa local zeta functions for univariate polynomials split over Q.

Everything is exact arithmetic.  Polynomials are given as ascending
integer coefficient lists, e.g. ``[-1, 0, 1]`` for ``x^2 - 1``.
"""

from ._core import (
    IgusaError,
    NotPrime,
    NotSplitOverQ,
    BudgetExceeded,
    brute_force_count,
    coefficients,
    decode_keystream,
    keystream,
    poincare,
    solution_counts,
    tree_dot,
    verify,
    zeta,
    zeta_json,
)

__all__ = [
    "IgusaError",
    "NotPrime",
    "NotSplitOverQ",
    "BudgetExceeded",
    "brute_force_count",
    "coefficients",
    "decode_keystream",
    "keystream",
    "poincare",
    "solution_counts",
    "tree_dot",
    "verify",
    "zeta",
    "zeta_json",
]

__version__ = "0.1.0"
