"""
Zeta polynomials of formal weight enumerators, three ways

`zeta_linear` and `zeta_series` work for any formal weight enumerator and any
q != 1. `closed_form_zeta` evaluates the closed forms for the normalized
Eisenstein polynomials of Types I, III and IV at their natural q.
"""

from fractions import Fraction

from eisenzeta.eisenstein.core import CLOSED_FORM_TYPES, eisenstein_poly
from eisenzeta.errors import InvalidWeightError
from eisenzeta.poly.homog import HomogPoly
from eisenzeta.poly.univariate import UniPoly
from eisenzeta.zeta.solvers.base import (
    METHODS,
    BaseZetaSolver,
    ZetaResult,
    lemma_identity_check,
    logger,
)
from eisenzeta.zeta.solvers.linear import LinearZetaSolver
from eisenzeta.zeta.solvers.series import SeriesZetaSolver, normalized_weight_enumerator

# natural zeta parameter q_X per type
Q_VALUES = {"I": Fraction(2), "II": Fraction(2), "III": Fraction(3), "IV": Fraction(4)}

# weight step w_X between consecutive invariant generators
W_VALUES = {"I": 2, "II": 8, "III": 3, "IV": 2}

# step between consecutive nonzero Eisenstein polynomials used for interlacing
INTERLACE_STEPS = {"I": 2, "II": 8, "III": 4, "IV": 2}

_SOLVERS = {"LINEAR": LinearZetaSolver, "SERIES": SeriesZetaSolver}

__all__ = [
    "INTERLACE_STEPS",
    "METHODS",
    "Q_VALUES",
    "W_VALUES",
    "ZetaResult",
    "closed_form_zeta",
    "get_solver",
    "lemma_identity_check",
    "normalized_weight_enumerator",
    "zeta_for",
    "zeta_linear",
    "zeta_series",
]


def get_solver(method: str) -> BaseZetaSolver:
    """
    Solver instance for LINEAR or SERIES.

    Raises:
        ValueError: For any other method name
    """

    try:
        return _SOLVERS[method.upper()]()
    except KeyError:
        raise ValueError(f"Invalid zeta method: {method}. Choose one of LINEAR, SERIES") from None


def zeta_linear(f: HomogPoly, q) -> ZetaResult:
    """Zeta polynomial of f via the exact linear system"""

    return LinearZetaSolver().solve(f, q)


def zeta_series(f: HomogPoly, q) -> ZetaResult:
    """Zeta polynomial of f via the normalized weight enumerator"""

    return SeriesZetaSolver().solve(f, q)


def _closed_form_valid(label: str, ell: int) -> bool:
    if label == "III":
        return ell >= 4 and ell % 4 == 0
    return ell >= 2 and ell % 2 == 0


def closed_form_zeta(label: str, ell: int) -> ZetaResult:
    """
    Closed-form zeta polynomial of the normalized Eisenstein polynomial.

    - Type I (q = 2): (2 + 2^(l/2) T^(l-2)) / (2 + 2^(l/2))
    - Type III (q = 3): 12/(3 + 3^(l/2)) sum_{j=0}^{(l-4)/2} (-3)^j T^(2j)
    - Type IV (q = 4): 6/(2 + 2^l) sum_{j=0}^{l-2} (-2)^j T^j

    Args:
        label: One of I, III, IV
        ell: Weight

    Returns:
        ZetaResult: method CLOSED, with n = l and the type's minimum distance

    Raises:
        InvalidWeightError: If the Eisenstein polynomial vanishes at ell
    """

    if label not in CLOSED_FORM_TYPES:
        raise ValueError(f"Invalid type: {label}. Choose one of {', '.join(CLOSED_FORM_TYPES)}")
    if not _closed_form_valid(label, ell):
        raise InvalidWeightError(f"No Type {label} Eisenstein polynomial of weight {ell}")

    if label == "I":
        scale = 2 + 2 ** (ell // 2)
        coeffs = [Fraction(0)] * (ell - 1)
        coeffs[0] += Fraction(2, scale)
        coeffs[ell - 2] += Fraction(2 ** (ell // 2), scale)
        d = 2
    elif label == "III":
        factor = Fraction(12, 3 + 3 ** (ell // 2))
        coeffs = [Fraction(0)] * (ell - 3)
        for j in range((ell - 4) // 2 + 1):
            coeffs[2 * j] = factor * (-3) ** j
        d = 3
    else:
        factor = Fraction(6, 2 + 2**ell)
        coeffs = [factor * (-2) ** j for j in range(ell - 1)]
        d = 2

    return ZetaResult(UniPoly(coeffs), Q_VALUES[label], ell, d, "CLOSED", label, ell)


def zeta_for(label: str, ell: int, method: str = "LINEAR", q=None) -> ZetaResult:
    """
    Zeta polynomial of the normalized Eisenstein polynomial of a type.

    Args:
        label: One of I, II, III, IV
        ell: Weight
        method: LINEAR, SERIES or CLOSED
        q: Parameter; defaults to the type's natural q

    Returns:
        ZetaResult: Tagged with the type and weight

    Raises:
        InvalidWeightError: If the Eisenstein polynomial vanishes at ell
    """

    method = method.upper()
    if method == "CLOSED":
        if q is not None and Fraction(q) != Q_VALUES.get(label):
            raise ValueError("Closed forms are only available at the natural q of a type")
        return closed_form_zeta(label, ell)

    poly = eisenstein_poly(label, ell)
    if poly.is_zero():
        raise InvalidWeightError(f"The Type {label} Eisenstein polynomial of weight {ell} is zero")
    q = Q_VALUES[label] if q is None else q
    result = get_solver(method).solve(poly.tilde, q)
    logger.debug(f"Type {label}, l={ell}, {method}: P = {result.P}")
    return ZetaResult(result.P, result.q, result.n, result.d, result.method, label, ell)
