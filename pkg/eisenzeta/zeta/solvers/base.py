import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Tuple

from eisenzeta.arith.rational import as_rational, format_rational
from eisenzeta.errors import DegenerateEnumeratorError, NotRationalError
from eisenzeta.poly.homog import HomogPoly
from eisenzeta.poly.series import TruncSeries
from eisenzeta.poly.univariate import UniPoly

logger = logging.getLogger("ZetaSolver")

METHODS = ("LINEAR", "SERIES", "CLOSED")


@dataclass(frozen=True)
class ZetaResult:
    """
    Zeta polynomial of a formal weight enumerator

    Attributes:
        P: The zeta polynomial P(T)
        q: Parameter q != 1
        n: Degree of the enumerator
        d: Minimum distance of the enumerator
        method: LINEAR, SERIES or CLOSED
        label: Code type, when the enumerator is an Eisenstein polynomial
        ell: Weight, when the enumerator is an Eisenstein polynomial
    """

    P: UniPoly
    q: Fraction
    n: int
    d: int
    method: str
    label: Optional[str] = None
    ell: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "type": self.label,
            "ell": self.ell,
            "method": self.method,
            "q": format_rational(self.q),
            "n": self.n,
            "d": self.d,
            "P": self.P.to_json(),
            "text": str(self.P),
        }


def prepare_enumerator(f: HomogPoly, q) -> Tuple[int, int, List[Fraction], Fraction]:
    """
    Validate a formal weight enumerator and unpack it.

    Args:
        f: Candidate enumerator x^n + sum A_i x^(n-i) y^i
        q: Parameter, any rational except 1

    Returns:
        tuple: (n, d, [A_0..A_n], q as Fraction)

    Raises:
        DegenerateEnumeratorError: If f is x^n alone, is not monic in x^n,
            or has irrational coefficients
    """

    q = as_rational(q)
    if q == 1:
        raise ValueError("The zeta parameter q must differ from 1")
    try:
        coeffs = f.dense_rational()
    except NotRationalError as error:
        raise DegenerateEnumeratorError(str(error)) from None
    if coeffs[0] != 1:
        raise DegenerateEnumeratorError(f"x^{f.degree} coefficient of {f} is not 1")

    d = f.min_y_exponent_above_zero()
    if d is None:
        raise DegenerateEnumeratorError(f"{f} is x^{f.degree} alone")
    return f.degree, d, coeffs, q


def lemma_system(n: int, d: int, q: Fraction) -> List[List[Fraction]]:
    """
    Coefficient matrix of the zeta identity.

    Row i, column k is the x^(n-i) y^i coefficient contributed by T^k in P to
    [T^(n-d)] P(T) / ((1-T)(1-qT)) * (xT + y(1-T))^n, which equals
    C(n, i) [T^(i-d-k)] (1-T)^i / ((1-T)(1-qT)).

    Args:
        n: Degree
        d: Minimum distance
        q: Parameter

    Returns:
        list[list[Fraction]]: (n+1) x (n-d+1) matrix
    """

    size = n - d + 1
    kernel = TruncSeries.from_list([1, -(1 + q), q], size).inv()
    one_minus_t = TruncSeries.from_list([1, -1], size)

    rows = []
    power = TruncSeries.one(size)
    for i in range(n + 1):
        series = kernel * power
        row = []
        for k in range(size):
            e = i - d - k
            row.append(comb(n, i) * series.coefficient(e) if 0 <= e < size else Fraction(0))
        rows.append(row)
        power = power * one_minus_t
    return rows


def lemma_rhs(coeffs: List[Fraction], q: Fraction) -> List[Fraction]:
    """(f - x^n)/(q - 1) as a coefficient vector"""

    return [Fraction(0)] + [a / (q - 1) for a in coeffs[1:]]


def lemma_identity_check(result: ZetaResult, f: HomogPoly) -> bool:
    """
    Re-expand the zeta identity with `result.P` and compare with f exactly.

    Args:
        result: A computed zeta polynomial
        f: The enumerator it was computed from

    Returns:
        bool: True when every x^(n-i) y^i coefficient matches
    """

    n, d, coeffs, q = prepare_enumerator(f, result.q)
    if result.P.degree > n - d:
        return False
    rows = lemma_system(n, d, q)
    rhs = lemma_rhs(coeffs, q)
    p = [result.P.coefficient(k) for k in range(n - d + 1)]
    return all(sum(r * c for r, c in zip(row, p)) == b for row, b in zip(rows, rhs))


class BaseZetaSolver(ABC):
    """
    Base class for all zeta polynomial solvers.

    Each implementation computes P_f(T) for a formal weight enumerator f and
    a parameter q by an independent route.
    """

    method: str = ""

    @abstractmethod
    def solve(self, f: HomogPoly, q) -> ZetaResult:
        """
        Compute the zeta polynomial of f.

        Args:
            f: Formal weight enumerator
            q: Parameter, any rational except 1

        Returns:
            ZetaResult: The zeta polynomial with its provenance
        """
        pass
