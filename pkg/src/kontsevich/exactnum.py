"""Exact rational arithmetic helpers.

Every coefficient and every intersection number is a ``fractions.Fraction``;
this module adds the combinatorial helpers and the ``p/q`` text form shared by
the command line, the HTTP layer and the cache file.
"""

import math
from fractions import Fraction
from typing import Union

from .exceptions import MonomialSyntaxError

Rational = Fraction
RationalLike = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def rational(value: RationalLike) -> Fraction:
    """Coerce an integer or fraction to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"Expected an exact integer or Fraction, got {type(value).__name__}")
    return Fraction(value)


def binomial(n: int, k: int) -> Fraction:
    """Return C(n, k), zero when k < 0 or k > n.

    Args:
        n: Non-negative upper index.
        k: Any integer.

    Returns:
        The binomial coefficient as an integral Fraction.
    """
    if n < 0:
        raise ValueError(f"binomial upper index must be non-negative, got {n}")
    if k < 0 or k > n:
        return ZERO
    return Fraction(math.comb(n, k))


def is_integral(value: Fraction) -> bool:
    return value.denominator == 1


def format_rational(value: RationalLike) -> str:
    """Render as ``p/q``, dropping ``/1``."""
    value = rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the ``p/q`` (or plain integer) text form.

    Raises:
        MonomialSyntaxError: If the text is not an exact rational.
    """
    raw = text.strip()
    numerator, slash, denominator = raw.partition("/")
    try:
        if not slash:
            return Fraction(int(numerator))
        den = int(denominator)
        if den == 0:
            raise MonomialSyntaxError(f"zero denominator in {text!r}")
        return Fraction(int(numerator), den)
    except ValueError:
        raise MonomialSyntaxError(f"not an exact rational: {text!r}")
