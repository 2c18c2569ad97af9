"""Exact scalars: Python ints for integers, ``Fraction`` for rationals.

Both are arbitrary precision, and ``Fraction`` normalises eagerly (positive
denominator, reduced by the gcd), so equality is structural.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def as_rational(value: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would smuggle rounding into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def is_normalized(q: Fraction) -> bool:
    return q.denominator > 0 and math.gcd(q.numerator, q.denominator) == 1


def _check_natural(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")


def binom_int(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for naturals; zero when ``k > n``."""
    _check_natural("n", n)
    _check_natural("k", k)
    return math.comb(n, k)


def factorial(m: int) -> int:
    _check_natural("m", m)
    return math.factorial(m)
