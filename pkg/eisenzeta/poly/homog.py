"""
Homogeneous bivariate polynomials with exact coefficients

A degree-n polynomial is stored as the sparse map i -> A_i for the terms
A_i x^(n-i) y^i. Coefficients live in Q(zeta_24); rational views are obtained
through a checked narrowing.
"""

from fractions import Fraction
from math import comb
from typing import Dict, Iterator, Mapping, Optional, Tuple

from eisenzeta.arith.cyclotomic import ONE, CycloNumber, Scalar
from eisenzeta.arith.rational import format_rational
from eisenzeta.errors import NotRationalError
from eisenzeta.groups.matrix import Mat2


def _cyclo(value: Scalar) -> CycloNumber:
    if isinstance(value, CycloNumber):
        return value
    return CycloNumber.from_rational(value)


class HomogPoly:
    """
    Homogeneous polynomial sum_i A_i x^(n-i) y^i

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their degrees and stored maps agree.

    Args:
        degree: Total degree n
        coeffs: Map from y-exponent i (0 <= i <= n) to A_i
    """

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Optional[Mapping[int, Scalar]] = None):
        if degree < 0:
            raise ValueError(f"Degree must be nonnegative, got {degree}")
        self.degree = degree
        self._coeffs: Dict[int, CycloNumber] = {}
        for i, value in (coeffs or {}).items():
            if not 0 <= i <= degree:
                raise ValueError(f"y-exponent {i} outside 0..{degree}")
            value = _cyclo(value)
            if not value.is_zero():
                self._coeffs[i] = value

    @classmethod
    def monomial(cls, degree: int, i: int, coeff: Scalar = 1) -> "HomogPoly":
        return cls(degree, {i: coeff})

    @classmethod
    def x(cls) -> "HomogPoly":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "HomogPoly":
        return cls.monomial(1, 1)

    @classmethod
    def zero(cls, degree: int) -> "HomogPoly":
        return cls(degree)

    def coefficient(self, i: int) -> CycloNumber:
        return self._coeffs.get(i, CycloNumber())

    def terms(self) -> Iterator[Tuple[int, CycloNumber]]:
        """Nonzero (i, A_i) pairs in increasing y-exponent"""

        for i in sorted(self._coeffs):
            yield i, self._coeffs[i]

    def support(self) -> list:
        return sorted(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self._coeffs.values())

    def rational_coeffs(self) -> Dict[int, Fraction]:
        """
        Checked narrowing of every coefficient to a rational.

        Returns:
            dict[int, Fraction]: i -> A_i

        Raises:
            NotRationalError: If some coefficient has an irrational part
        """

        try:
            return {i: c.to_rational() for i, c in self.terms()}
        except NotRationalError:
            raise NotRationalError(f"Polynomial {self} has irrational coefficients") from None

    def dense_rational(self) -> list:
        """A_0..A_n as Fractions, zeros included"""

        coeffs = self.rational_coeffs()
        return [coeffs.get(i, Fraction(0)) for i in range(self.degree + 1)]

    def _check_degree(self, other: "HomogPoly") -> None:
        if other.degree != self.degree:
            raise ValueError(
                f"Degree mismatch: {self.degree} and {other.degree}"
            )

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        if not isinstance(other, HomogPoly):
            return NotImplemented
        self._check_degree(other)
        result = dict(self._coeffs)
        for i, c in other._coeffs.items():
            result[i] = result[i] + c if i in result else c
        return HomogPoly(self.degree, result)

    def __neg__(self) -> "HomogPoly":
        return HomogPoly(self.degree, {i: -c for i, c in self._coeffs.items()})

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, value: Scalar) -> "HomogPoly":
        if isinstance(value, CycloNumber) and value.is_rational():
            value = value.to_rational()
        return HomogPoly(self.degree, {i: c * value for i, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, HomogPoly):
            result: Dict[int, CycloNumber] = {}
            for i, a in self._coeffs.items():
                for j, b in other._coeffs.items():
                    term = a * b
                    result[i + j] = result[i + j] + term if i + j in result else term
            return HomogPoly(self.degree + other.degree, result)
        if isinstance(other, (int, Fraction, CycloNumber)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "HomogPoly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = HomogPoly(0, {0: ONE})
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self._coeffs.items())))

    def min_y_exponent_above_zero(self) -> Optional[int]:
        positive = [i for i in self._coeffs if i > 0]
        return min(positive) if positive else None

    def to_json(self) -> dict:
        """
        JSON map {"n": degree, "coeffs": {"i": "num/den"}}.

        Irrational coefficients serialize as their eight power-basis coordinates.
        """

        coeffs = {}
        for i, c in self.terms():
            coeffs[str(i)] = format_rational(c.to_rational()) if c.is_rational() else c.to_json()
        return {"n": self.degree, "coeffs": coeffs}

    def __str__(self):
        return format_homog(self)

    def __repr__(self):
        return f"HomogPoly({self.degree}, {self})"


def _monomial_text(n: int, i: int, latex: bool) -> str:
    def power(var: str, e: int) -> str:
        if e == 0:
            return ""
        if e == 1:
            return var
        if latex and e >= 10:
            return f"{var}^{{{e}}}"
        return f"{var}^{e}"

    parts = [p for p in (power("x", n - i), power("y", i)) if p]
    return (" " if latex else "").join(parts)


def format_homog(f: HomogPoly, latex: bool = False) -> str:
    """
    Render as e.g. "x^8+14x^4y^4+y^8", or in LaTeX as "x^8+14 x^4 y^4+y^8".

    Args:
        f: Polynomial to render
        latex: Emit LaTeX (braced multi-digit exponents, spaced factors)

    Returns:
        str: Rendered polynomial, "0" for the zero polynomial
    """

    if f.is_zero():
        return "0"

    pieces = []
    for i, c in f.terms():
        monomial = _monomial_text(f.degree, i, latex)
        if not c.is_rational():
            pieces.append(("+", f"({c}){monomial}"))
            continue
        value = c.to_rational()
        sign = "-" if value < 0 else "+"
        value = abs(value)
        if value == 1 and monomial:
            body = monomial
        elif value.denominator == 1:
            body = f"{value.numerator}{' ' if latex and monomial else ''}{monomial}"
        elif latex:
            body = f"\\frac{{{value.numerator}}}{{{value.denominator}}}{' ' if monomial else ''}{monomial}"
        else:
            body = f"({format_rational(value)}){monomial}"
        pieces.append((sign, body))

    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += sign + body
    return text


def _powers(value, k: int) -> list:
    result = [value ** 0]
    for _ in range(k):
        result.append(result[-1] * value)
    return result


def linear_power_coeffs(a, b, k: int) -> list:
    """
    Dense coefficients of (a x + b y)^k, index j for x^(k-j) y^j.

    Works for any exact scalar type (Fraction or CycloNumber).
    """

    pa = _powers(a, k)
    pb = _powers(b, k)
    return [pa[k - j] * pb[j] * comb(k, j) for j in range(k + 1)]


def expand_linear_power(a: Scalar, b: Scalar, ell: int) -> HomogPoly:
    """
    Exact binomial expansion of (a x + b y)^ell.

    Args:
        a: x coefficient
        b: y coefficient
        ell: Nonnegative exponent

    Returns:
        HomogPoly: The expanded power
    """

    if ell < 0:
        raise ValueError(f"Exponent must be nonnegative, got {ell}")
    coeffs = linear_power_coeffs(_cyclo(a), _cyclo(b), ell)
    return HomogPoly(ell, dict(enumerate(coeffs)))


def _convolve(left: list, right: list) -> list:
    out = [0] * (len(left) + len(right) - 1)
    for i, u in enumerate(left):
        if u:
            for j, v in enumerate(right):
                if v:
                    out[i + j] = out[i + j] + u * v
    return out


def _common_scalar(sigma: Mat2) -> Optional[Tuple[CycloNumber, list]]:
    """Split sigma = s * R with R rational, when possible"""

    pivot = next((e for e in sigma.entries if not e.is_zero()), None)
    if pivot is None:
        return None
    inv_pivot = pivot.inv()
    ratios = []
    for e in sigma.entries:
        ratio = e * inv_pivot
        if not ratio.is_rational():
            return None
        ratios.append(ratio.to_rational())
    return pivot, ratios


def act_on_poly(sigma: Mat2, f: HomogPoly) -> HomogPoly:
    """
    Substitute x -> a x + b y, y -> c x + d y and re-expand exactly.

    This is a right action: act(s, act(t, f)) == act(t @ s, f).

    Args:
        sigma: Matrix (a b; c d)
        f: Homogeneous polynomial

    Returns:
        HomogPoly: f(sigma (x, y)^t)
    """

    n = f.degree
    if f.is_zero():
        return HomogPoly(n)

    split = _common_scalar(sigma)
    if split is not None:
        scalar, (a, b, c, d) = split
        factor = scalar ** n
    else:
        a, b, c, d = sigma.entries
        factor = None

    x_image = [linear_power_coeffs(a, b, k) for k in range(n + 1)]
    y_image = [linear_power_coeffs(c, d, k) for k in range(n + 1)]

    result: Dict[int, CycloNumber] = {}
    for i, coeff in f.terms():
        expanded = _convolve(x_image[n - i], y_image[i])
        for j, value in enumerate(expanded):
            if value:
                term = coeff * value
                result[j] = result[j] + term if j in result else term

    image = HomogPoly(n, result)
    if factor is not None and factor != ONE:
        image = image.scale(factor)
    return image
