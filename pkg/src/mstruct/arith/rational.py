"""Exact rational scalars.

Scalars are kept as plain ``int`` whenever they are integral and as
``gmpy2.mpq`` otherwise.  Every helper here accepts ``int``, ``mpq``,
``fractions.Fraction`` and strings such as ``"-3/7"``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

import gmpy2
from gmpy2 import mpq

Scalar = Union[int, "mpq"]

MPQ_TYPE = type(mpq(1, 2))
SCALAR_TYPES = (int, MPQ_TYPE)


def is_scalar(x) -> bool:
    return isinstance(x, (int, MPQ_TYPE, Fraction)) and not isinstance(x, bool)


def to_scalar(x) -> Scalar:
    """Coerce ``x`` to the canonical scalar representation."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, MPQ_TYPE):
        if x.denominator == 1:
            return int(x.numerator)
        return x
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return x.numerator
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return to_scalar(Fraction(x.strip()))
    if isinstance(x, Rational):
        return to_scalar(Fraction(x.numerator, x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


def normalize(x: Scalar) -> Scalar:
    if type(x) is MPQ_TYPE and x.denominator == 1:
        return int(x.numerator)
    return x


def sdiv(a: Scalar, b: Scalar) -> Scalar:
    """Exact quotient of two scalars."""
    if not b:
        raise ZeroDivisionError("division by zero scalar")
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if not r:
            return q
        return mpq(a, b)
    return normalize(mpq(a) / b)


def numerator(x: Scalar) -> int:
    return int(x) if type(x) is int else int(x.numerator)


def denominator(x: Scalar) -> int:
    return 1 if type(x) is int else int(x.denominator)


def format_scalar(x: Scalar) -> str:
    x = normalize(x)
    if type(x) is int:
        return str(x)
    return f"{int(x.numerator)}/{int(x.denominator)}"


def to_fraction(x: Scalar) -> Fraction:
    return Fraction(numerator(x), denominator(x))


def int_gcd(a: int, b: int) -> int:
    return int(gmpy2.gcd(a, b))


def int_lcm(a: int, b: int) -> int:
    return int(gmpy2.lcm(a, b))
