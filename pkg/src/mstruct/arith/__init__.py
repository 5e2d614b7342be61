"""Scalar tower: exact rationals, multivariate polynomials, rational functions."""

from .poly import MultiPoly, poly_gcd, poly_lcm, register_variable, var
from .ratfunc import DenominatorVanishes, RatFunc, parse, rf
from .rational import format_scalar, to_scalar

__all__ = [
    "DenominatorVanishes",
    "MultiPoly",
    "RatFunc",
    "format_scalar",
    "parse",
    "poly_gcd",
    "poly_lcm",
    "register_variable",
    "rf",
    "to_scalar",
    "var",
]
