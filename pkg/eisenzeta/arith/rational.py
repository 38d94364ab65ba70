"""
Exact rational helpers

Rationals are plain `fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator. This module adds the p-adic
valuation, the primality guard used by every p-dependent routine, and the
bit-exact "num/den" serialization used in all machine-readable output.
"""

import math
from fractions import Fraction
from typing import Union

from sympy import isprime

from eisenzeta.errors import NotPrimeError

# v_p(0)
VP_INFINITY = math.inf

RationalLike = Union[int, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int or Fraction to a Fraction.

    Floats are refused, since a float has already lost exactness.

    Args:
        value: Integer or Fraction

    Returns:
        Fraction: The same value as a Fraction
    """

    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}")


def require_prime(p: int) -> int:
    """
    Validate that `p` is a prime.

    Args:
        p: Candidate prime

    Returns:
        int: `p` unchanged

    Raises:
        NotPrimeError: If `p` is not a prime
    """

    if not isinstance(p, int) or isinstance(p, bool) or p < 2 or not isprime(p):
        raise NotPrimeError(f"Expected a prime, got {p!r}")
    return p


def vp(x: RationalLike, p: int) -> Union[int, float]:
    """
    p-adic valuation of a rational number.

    Args:
        x: Rational number
        p: Prime

    Returns:
        int | float: v_p(x), or `VP_INFINITY` when x = 0

    Raises:
        NotPrimeError: If `p` is not a prime
    """

    require_prime(p)
    x = as_rational(x)
    if x == 0:
        return VP_INFINITY

    valuation = 0
    num, den = abs(x.numerator), x.denominator
    while num % p == 0:
        num //= p
        valuation += 1
    while den % p == 0:
        den //= p
        valuation -= 1
    return valuation


def format_rational(x: RationalLike) -> str:
    """
    Serialize a rational as "num/den", or "num" when the denominator is 1.

    Args:
        x: Rational number

    Returns:
        str: Lowest-terms serialization
    """

    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse the "num/den" serialization back into a Fraction.

    Args:
        text: Serialized rational

    Returns:
        Fraction: Parsed value
    """

    num, sep, den = text.strip().partition("/")
    if not sep:
        return Fraction(int(num))
    return Fraction(int(num), int(den))
