"""Exact arithmetic substrate: q-series, polynomials, Dirichlet series."""

from .dirichlet import DirichletEval, dirichlet_partial, euler_coefficients, euler_product
from .numtheory import primes_up_to, rational_str
from .polynomial import LocalFactor, Polynomial
from .series import QExpansion, eta_expand, series_invert, series_mul

__all__ = [
    "DirichletEval",
    "LocalFactor",
    "Polynomial",
    "QExpansion",
    "dirichlet_partial",
    "eta_expand",
    "euler_coefficients",
    "euler_product",
    "primes_up_to",
    "rational_str",
    "series_invert",
    "series_mul",
]
