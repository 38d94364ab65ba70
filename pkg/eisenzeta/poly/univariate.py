"""
Exact univariate polynomials in T
"""

from fractions import Fraction
from typing import Iterable, Union

from sympy import QQ, Poly, Symbol

from eisenzeta.arith.rational import as_rational, format_rational

_T = Symbol("T")


class UniPoly:
    """
    Polynomial p_0 + p_1 T + ... with Fraction coefficients

    Trailing zeros are trimmed, so the zero polynomial has no coefficients and
    degree -1.

    Args:
        coeffs: Coefficients in increasing powers of T
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        values = [as_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs = tuple(values)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, t: Union[Fraction, complex]):
        """Horner evaluation at an exact or complex point"""

        value = 0
        for c in reversed(self.coeffs):
            value = value * t + (c if isinstance(t, (int, Fraction)) else float(c))
        return value

    def to_sympy(self) -> Poly:
        return Poly([QQ(c.numerator, c.denominator) for c in reversed(self.coeffs)] or [QQ(0)], _T, domain=QQ)

    @classmethod
    def from_sympy(cls, poly: Poly) -> "UniPoly":
        return cls(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs()))

    def exact_quotient(self, divisor: "UniPoly") -> "UniPoly":
        """
        Quotient of an exact division.

        Raises:
            ValueError: If divisor does not divide self
        """

        quotient, remainder = self.to_sympy().div(divisor.to_sympy())
        if not remainder.is_zero:
            raise ValueError(f"{divisor} does not divide {self}")
        return UniPoly.from_sympy(quotient)

    def to_json(self) -> dict:
        return {"coeffs": {str(k): format_rational(c) for k, c in enumerate(self.coeffs) if c}}

    def __str__(self):
        return format_unipoly(self)

    def __repr__(self):
        return f"UniPoly({self})"


def common_factor(a: UniPoly, b: UniPoly) -> UniPoly:
    """
    Monic greatest common divisor of two polynomials, exact over Q.

    Args:
        a: First polynomial
        b: Second polynomial

    Returns:
        UniPoly: gcd(a, b), the constant 1 when they are coprime
    """

    if a.is_zero() and b.is_zero():
        return UniPoly()
    return UniPoly.from_sympy(a.to_sympy().gcd(b.to_sympy()).monic())


def _term_text(value: Fraction, k: int, latex: bool) -> str:
    power = "" if k == 0 else ("T" if k == 1 else f"T^{k}" if not latex or k < 10 else f"T^{{{k}}}")
    num, den = value.numerator, value.denominator
    if power:
        top = power if num == 1 else f"{num}{' ' if latex else ''}{power}"
    else:
        top = str(num)
    if den == 1:
        return top
    if latex:
        return f"\\frac{{{top}}}{{{den}}}"
    return f"{top}/{den}"


def format_unipoly(p: UniPoly, latex: bool = False) -> str:
    """
    Render as e.g. "1/5+2T/5+2T^2/5", or in LaTeX as "\\frac{1}{5}+\\frac{2 T}{5}+...".

    Args:
        p: Polynomial to render
        latex: Emit LaTeX fractions

    Returns:
        str: Rendered polynomial, "0" for the zero polynomial
    """

    text = ""
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        body = _term_text(abs(c), k, latex)
        if c < 0:
            text += "-" + body
        else:
            text += ("+" if text else "") + body
    return text or "0"
