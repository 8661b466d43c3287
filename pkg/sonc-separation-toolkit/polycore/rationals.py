"""Exact rational scalars.

Coefficients, weights and evaluation points are ``fractions.Fraction`` values,
which are always kept in lowest terms with a positive denominator.
"""

from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


# PUBLIC_INTERFACE
def to_rational(value: RationalLike) -> Fraction:
    """
    Convert an int, Fraction or literal to an exact rational.

    Strings may be integers ("-3"), quotients ("22/7") or decimal literals
    ("1.05"); decimals are converted exactly by scaling with powers of ten.
    Floats are refused so they cannot leak into exact code paths.

    Args:
        value: Value to convert

    Returns:
        The exact rational

    Raises:
        ValueError: When the value is a float or an unparseable string
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"Refusing inexact value {value!r}; pass a string or Fraction")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    text = str(value).strip()
    try:
        result = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Invalid rational literal {value!r}: {e}") from e
    return result


def format_rational(value: Fraction) -> str:
    """Serialize as a decimal-free "p/q" string with an explicit denominator."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def rationalize(x: float, max_denominator: int) -> Fraction:
    """Closest rational to a float with a bounded denominator."""
    return Fraction(x).limit_denominator(max_denominator)
