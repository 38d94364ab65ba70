"""
Truncated power series with exact rational coefficients

Exponents live on the lattice (1/D)·Z>=0 and are stored scaled by D, so a
series in T has D = 1 while the theta constants use D = 4 (variable u with
u^4 = q). Every series carries its truncation order N in lattice units: terms
with scaled exponent >= N are unknown and are never stored.
"""

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Mapping, Optional

from eisenzeta.arith.rational import as_rational, format_rational
from eisenzeta.errors import LatticeMismatchError, OrderExceededError
from eisenzeta.poly.univariate import UniPoly


class TruncSeries:
    """
    Series sum_e c_e u^(e/D) known modulo u^(N/D)

    Args:
        coeffs: Map from scaled exponent e to coefficient
        order: Truncation order N in lattice units
        denom: Lattice denominator D
    """

    __slots__ = ("denom", "order", "_coeffs")

    def __init__(self, coeffs: Optional[Mapping[int, object]] = None, order: int = 1, denom: int = 1):
        if denom < 1:
            raise ValueError(f"Lattice denominator must be positive, got {denom}")
        if order < 0:
            raise ValueError(f"Truncation order must be nonnegative, got {order}")
        self.denom = denom
        self.order = order
        self._coeffs: Dict[int, Fraction] = {}
        for e, value in (coeffs or {}).items():
            if e < 0:
                raise ValueError(f"Negative exponent {e}")
            value = as_rational(value)
            if e < order and value:
                self._coeffs[e] = value

    @classmethod
    def from_list(cls, values: Iterable, order: int, denom: int = 1) -> "TruncSeries":
        return cls(dict(enumerate(values)), order, denom)

    @classmethod
    def one(cls, order: int, denom: int = 1) -> "TruncSeries":
        return cls({0: 1}, order, denom)

    def coefficient(self, e: int) -> Fraction:
        return series_coefficient(self, e)

    def items(self):
        """(scaled exponent, coefficient) pairs in increasing exponent"""

        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check_lattice(self, other: "TruncSeries") -> None:
        if self.denom != other.denom:
            raise LatticeMismatchError(
                f"Series lattices differ: 1/{self.denom} and 1/{other.denom}"
            )

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_lattice(other)
        result = dict(self._coeffs)
        for e, c in other._coeffs.items():
            result[e] = result.get(e, 0) + c
        return TruncSeries(result, min(self.order, other.order), self.denom)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries({e: -c for e, c in self._coeffs.items()}, self.order, self.denom)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncSeries(
                {e: c * other for e, c in self._coeffs.items()}, self.order, self.denom
            )
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_lattice(other)

        order = min(self.order, other.order)
        result: Dict[int, Fraction] = {}
        right = other.items()
        for e, a in self.items():
            if e >= order:
                break
            for f, b in right:
                if e + f >= order:
                    break
                result[e + f] = result.get(e + f, 0) + a * b
        return TruncSeries(result, order, self.denom)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncSeries":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = TruncSeries.one(self.order, self.denom)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def inv(self) -> "TruncSeries":
        return series_inv(self)

    def to_lattice(self, denom: int) -> "TruncSeries":
        """
        Re-express the series on another exponent lattice.

        Refining (denom a multiple of D) always works. Coarsening requires
        every stored exponent to lie on the coarser lattice.

        Args:
            denom: Target lattice denominator

        Returns:
            TruncSeries: Same series with lattice 1/denom

        Raises:
            LatticeMismatchError: If the lattices are incompatible
        """

        if denom % self.denom == 0:
            factor = denom // self.denom
            return TruncSeries(
                {e * factor: c for e, c in self._coeffs.items()}, self.order * factor, denom
            )
        if self.denom % denom == 0:
            factor = self.denom // denom
            off_lattice = [e for e in self._coeffs if e % factor]
            if off_lattice:
                raise LatticeMismatchError(
                    f"Exponent {off_lattice[0]}/{self.denom} is not on the lattice 1/{denom}"
                )
            return TruncSeries(
                {e // factor: c for e, c in self._coeffs.items()},
                -(-self.order // factor),
                denom,
            )
        raise LatticeMismatchError(f"Lattices 1/{self.denom} and 1/{denom} are not nested")

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.denom, self.order, self._coeffs) == (other.denom, other.order, other._coeffs)

    def to_unipoly(self) -> UniPoly:
        if self.denom != 1:
            raise LatticeMismatchError("Only integer-lattice series convert to polynomials")
        return UniPoly(self.coefficient(e) for e in range(self.order))

    def to_json(self) -> dict:
        return {
            "D": self.denom,
            "order": self.order,
            "coeffs": {str(e): format_rational(c) for e, c in self.items()},
        }

    def __repr__(self):
        terms = ", ".join(f"{e}: {format_rational(c)}" for e, c in self.items())
        return f"TruncSeries(D={self.denom}, order={self.order}, {{{terms}}})"


def series_coefficient(s: TruncSeries, k: int) -> Fraction:
    """
    Coefficient of u^(k/D).

    Args:
        s: Series
        k: Scaled exponent

    Returns:
        Fraction: Stored coefficient or 0

    Raises:
        OrderExceededError: If k is at or beyond the truncation order
    """

    if k >= s.order:
        raise OrderExceededError(f"Exponent {k} is beyond truncation order {s.order}")
    return s._coeffs.get(k, Fraction(0))


def series_inv(s: TruncSeries) -> TruncSeries:
    """
    Multiplicative inverse by exact long division.

    Raises:
        ZeroDivisionError: If the constant term vanishes
    """

    c0 = s._coeffs.get(0, Fraction(0)) if s.order > 0 else Fraction(0)
    if not c0:
        raise ZeroDivisionError("Series with zero constant term is not invertible")

    terms = [(e, c) for e, c in s.items() if e > 0]
    out = [Fraction(0)] * s.order
    out[0] = 1 / c0
    for k in range(1, s.order):
        acc = Fraction(0)
        for e, c in terms:
            if e > k:
                break
            acc += c * out[k - e]
        out[k] = -acc / c0
    return TruncSeries.from_list(out, s.order, s.denom)


def series_compose_T_over_1mT(s: TruncSeries) -> TruncSeries:
    """
    Substitute t = T/(1-T) = T + T^2 + ... and re-truncate at s.order.

    Uses t^k = sum_j C(k+j-1, j) T^(k+j).

    Raises:
        LatticeMismatchError: If s is not on the integer lattice
    """

    if s.denom != 1:
        raise LatticeMismatchError(f"Composition needs an integer lattice, got 1/{s.denom}")

    out: Dict[int, Fraction] = {}
    for k, c in s.items():
        if k == 0:
            out[0] = out.get(0, 0) + c
            continue
        for j in range(s.order - k):
            out[k + j] = out.get(k + j, 0) + c * comb(k + j - 1, j)
    return TruncSeries(out, s.order)
