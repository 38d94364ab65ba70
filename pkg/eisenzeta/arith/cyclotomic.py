"""
Exact arithmetic in the cyclotomic field Q(zeta_24)

Elements are stored over the power basis {1, z, ..., z^7} of Q(z), where z is
the primitive 24th root of unity exp(2*pi*i/24). Its minimal polynomial is
Phi_24(x) = x^8 - x^4 + 1, so products are reduced with z^8 = z^4 - 1.

Q(zeta_24) holds every matrix entry the four built-in groups need: sqrt(2)
through zeta_8, sqrt(3) and zeta_3 through zeta_12, and i = z^6.
"""

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Union

import numpy as np

from eisenzeta.arith.linalg import solve_unique
from eisenzeta.arith.rational import as_rational, format_rational
from eisenzeta.errors import CycloDivisionByZero, NotRationalError

DEGREE = 8
CONDUCTOR = 24

_ZETA_POWERS = np.exp(2j * np.pi * np.arange(DEGREE) / CONDUCTOR)

ComplexApprox = complex


def _reduce_powers(acc: list) -> list:
    """Fold coefficients of z^k, k >= 8, back onto the power basis"""

    acc = list(acc)
    for k in range(len(acc) - 1, DEGREE - 1, -1):
        c = acc[k]
        if c:
            acc[k - 4] += c
            acc[k - 8] -= c
    acc.extend([0] * (DEGREE - len(acc)))
    return acc[:DEGREE]


class CycloNumber:
    """
    Immutable exact element of Q(zeta_24)

    Internally an element is a tuple of eight integer numerators over one
    positive common denominator, kept in lowest terms. The public view is
    `coords`, the eight rational coordinates over the power basis.

    Args:
        coords: Up to eight ints or Fractions, coefficient of z^k at index k
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coords=()):
        coords = [as_rational(c) for c in coords]
        if len(coords) > DEGREE:
            raise ValueError(f"At most {DEGREE} coordinates, got {len(coords)}")
        coords.extend([Fraction(0)] * (DEGREE - len(coords)))

        den = reduce(lcm, (c.denominator for c in coords), 1)
        self._set(tuple(c.numerator * (den // c.denominator) for c in coords), den)

    def _set(self, num: tuple, den: int) -> None:
        g = reduce(gcd, num, den)
        if g > 1:
            num = tuple(n // g for n in num)
            den //= g
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _from_ints(cls, num, den: int) -> "CycloNumber":
        obj = cls.__new__(cls)
        obj._set(tuple(num), den)
        return obj

    @classmethod
    def from_rational(cls, value) -> "CycloNumber":
        """
        Embed a rational number.

        Args:
            value: int or Fraction

        Returns:
            CycloNumber: value * z^0
        """

        value = as_rational(value)
        return cls._from_ints(
            (value.numerator,) + (0,) * (DEGREE - 1), value.denominator
        )

    @classmethod
    def zeta_power(cls, k: int) -> "CycloNumber":
        """
        The root of unity z^k for any integer k.

        Args:
            k: Exponent, reduced mod 24

        Returns:
            CycloNumber: z^k
        """

        k %= CONDUCTOR
        acc = [0] * max(k + 1, DEGREE)
        acc[k] = 1
        return cls._from_ints(_reduce_powers(acc), 1)

    @property
    def coords(self) -> tuple:
        """Rational coordinates over the power basis"""

        return tuple(Fraction(n, self._den) for n in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        """
        Checked narrowing to a rational number.

        Returns:
            Fraction: The value, when it lies in Q

        Raises:
            NotRationalError: If any irrational coordinate is nonzero
        """

        if not self.is_rational():
            raise NotRationalError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def embed(self) -> ComplexApprox:
        """
        Principal complex embedding z -> exp(2*pi*i/24).

        Returns:
            complex: Floating-point approximation of the element
        """

        coords = np.array([float(c) for c in self.coords])
        return complex(np.dot(coords, _ZETA_POWERS))

    def inv(self) -> "CycloNumber":
        return cyclo_inv(self)

    def _coerce(self, other) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycloNumber.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = lcm(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        return CycloNumber._from_ints(
            (a * fa + b * fb for a, b in zip(self._num, other._num)), den
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._from_ints((-a for a in self._num), self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = as_rational(other)
            return CycloNumber._from_ints(
                (a * other.numerator for a in self._num),
                self._den * other.denominator,
            )
        if not isinstance(other, CycloNumber):
            return NotImplemented

        acc = [0] * (2 * DEGREE - 1)
        for i, a in enumerate(self._num):
            if a:
                for j, b in enumerate(other._num):
                    if b:
                        acc[i + j] += a * b
        return CycloNumber._from_ints(_reduce_powers(acc), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise CycloDivisionByZero("Division by zero")
            return self * (1 / as_rational(other))
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self * cyclo_inv(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * cyclo_inv(self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return cyclo_inv(self) ** (-exponent)

        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = CycloNumber.from_rational(other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self._den == other._den and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def sort_key(self) -> tuple:
        """Key for the canonical (serialized-coordinate) ordering"""

        return tuple(format_rational(c) for c in self.coords)

    def to_json(self) -> list:
        """Eight "num/den" strings, one per power-basis coordinate"""

        return [format_rational(c) for c in self.coords]

    def __repr__(self):
        return f"CycloNumber({', '.join(self.to_json())})"

    def __str__(self):
        if self.is_rational():
            return format_rational(self.to_rational())
        terms = []
        for k, c in enumerate(self.coords):
            if c:
                terms.append(format_rational(c) if k == 0 else f"{format_rational(c)}*z^{k}")
        return " + ".join(terms)


ZERO = CycloNumber()
ONE = CycloNumber.from_rational(1)


@lru_cache(maxsize=4096)
def cyclo_inv(x: CycloNumber) -> CycloNumber:
    """
    Exact inverse of a nonzero element.

    Solves the 8x8 rational system (multiplication by x) * y = 1.

    Args:
        x: Nonzero element of Q(zeta_24)

    Returns:
        CycloNumber: y with x * y = 1

    Raises:
        CycloDivisionByZero: If x = 0
    """

    if x.is_zero():
        raise CycloDivisionByZero("Cannot invert zero in Q(zeta_24)")
    if x.is_rational():
        return CycloNumber.from_rational(1 / x.to_rational())

    # column j holds the coordinates of x * z^j
    columns = [(x * CycloNumber.zeta_power(j)).coords for j in range(DEGREE)]
    rows = [[columns[j][i] for j in range(DEGREE)] for i in range(DEGREE)]
    rhs = [Fraction(1)] + [Fraction(0)] * (DEGREE - 1)
    return CycloNumber(solve_unique(rows, rhs))


def _sqrt2() -> CycloNumber:
    # zeta_8 + zeta_8^-1
    return CycloNumber.zeta_power(3) + CycloNumber.zeta_power(-3)


def _sqrt3() -> CycloNumber:
    # zeta_12 + zeta_12^-1
    return CycloNumber.zeta_power(2) + CycloNumber.zeta_power(-2)


_SYMBOLS = {
    "SQRT2": _sqrt2,
    "SQRT3": _sqrt3,
    "I": lambda: CycloNumber.zeta_power(6),
    "ZETA3": lambda: CycloNumber.zeta_power(8),
    "ZETA8": lambda: CycloNumber.zeta_power(3),
    "ZETA12": lambda: CycloNumber.zeta_power(2),
}

SYMBOL_NAMES = tuple(_SYMBOLS)


def cyclo_symbol(name: str) -> CycloNumber:
    """
    Named constants of Q(zeta_24), each at its principal complex value.

    Args:
        name: One of SQRT2, SQRT3, I, ZETA3, ZETA8, ZETA12 (case-insensitive)

    Returns:
        CycloNumber: The exact constant
    """

    try:
        return _SYMBOLS[name.upper()]()
    except KeyError:
        raise ValueError(
            f"Unknown symbol: {name}. Choose one of {', '.join(SYMBOL_NAMES)}"
        ) from None


Scalar = Union[int, Fraction, CycloNumber]
