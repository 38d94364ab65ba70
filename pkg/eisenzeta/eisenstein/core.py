"""
Eisenstein polynomials by group averaging, and their closed forms

The averaged polynomial phi_l = (1/|G|) sum_{sigma in G} (sigma x)^l is the
ground truth. The closed forms are claims checked against it.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional

from eisenzeta.errors import NoMinimumDistanceError, NonNormalizableError
from eisenzeta.groups.core import TYPE_LABELS, MatrixGroup, averaging_group, is_invariant_under
from eisenzeta.poly.homog import HomogPoly, expand_linear_power

logger = logging.getLogger("EisensteinBuilder")

CLOSED_FORM_TYPES = ("I", "III", "IV")
BOUNDS = ("full", "printed")


@dataclass(frozen=True)
class EisensteinPoly:
    """
    Averaged polynomial phi_l for one group, with its normalization

    Attributes:
        group_label: Code type of the group
        ell: Weight l
        raw: The unnormalized average
        tilde: raw divided by its x^l coefficient, None when raw is zero
        group_name: Name of the averaging group
    """

    group_label: str
    ell: int
    raw: HomogPoly
    tilde: Optional[HomogPoly]
    group_name: str = ""

    def is_zero(self) -> bool:
        return self.tilde is None

    def is_invariant(self, group: MatrixGroup, exhaustive: bool = False) -> bool:
        """
        Exact invariance of `raw` under a group.

        Invariance under the generators implies invariance under the whole
        generated group; `exhaustive` checks every element anyway.
        """

        sigmas = group.elements if exhaustive else group.generators
        return is_invariant_under(self.raw, sigmas)

    def to_json(self) -> dict:
        return {
            "type": self.group_label,
            "group": self.group_name,
            "ell": self.ell,
            "raw": self.raw.to_json(),
            "tilde": self.tilde.to_json() if self.tilde is not None else None,
        }


def average(group: MatrixGroup, ell: int) -> EisensteinPoly:
    """
    Average (sigma x)^ell over a finite group.

    Args:
        group: Finite matrix group
        ell: Nonnegative weight

    Returns:
        EisensteinPoly: raw average and, when nonzero, its normalization

    Raises:
        NonNormalizableError: If the average is nonzero but has no x^ell term
        NotRationalError: If the normalized coefficients are not rational
    """

    if ell < 0:
        raise ValueError(f"Weight must be nonnegative, got {ell}")

    raw = HomogPoly.zero(ell)
    for (a, b), multiplicity in group.first_rows():
        raw = raw + expand_linear_power(a, b, ell).scale(Fraction(multiplicity, group.order))

    if raw.is_zero():
        logger.debug(f"phi_{ell} vanishes for {group.name}")
        return EisensteinPoly(group.label, ell, raw, None, group.name)

    leading = raw.coefficient(0)
    if leading.is_zero():
        raise NonNormalizableError(
            f"phi_{ell} for {group.name} is nonzero but has a vanishing x^{ell} coefficient"
        )
    tilde = raw.scale(leading.inv())
    tilde = HomogPoly(ell, tilde.rational_coeffs())
    return EisensteinPoly(group.label, ell, raw, tilde, group.name)


@lru_cache(maxsize=None)
def eisenstein_poly(label: str, ell: int) -> EisensteinPoly:
    """Cached average over `averaging_group(label)`"""

    return average(averaging_group(label), ell)


def _check_label(label: str, allowed=TYPE_LABELS) -> None:
    if label not in allowed:
        raise ValueError(f"Invalid type: {label}. Choose one of {', '.join(allowed)}")


def closed_form(label: str, ell: int, bound: str = "full") -> Optional[HomogPoly]:
    """
    Closed-form normalized Eisenstein polynomial.

    - Type I, l even: x^l + y^l + 2/(2 + 2^(l/2)) sum_{j even} C(l, j) x^(l-j) y^j
    - Type III, 4 | l: x^l + 3/(3 + 3^(l/2)) sum_{3 | j} 2^j C(l, j) x^(l-j) y^j
    - Type IV, l even: x^l + 2/(2 + 2^l) sum_{j even} 3^j C(l, j) x^(l-j) y^j

    Sums run over 0 < j < l for Type I. For Types III and IV they run over
    0 < j <= l with `bound="full"` and over 0 < j < l with `bound="printed"`;
    only the full bound matches the averaged polynomial when the y^l term
    is admissible.

    Args:
        label: One of I, III, IV
        ell: Weight
        bound: "full" or "printed"

    Returns:
        HomogPoly | None: The closed form, or None when it predicts zero
    """

    _check_label(label, CLOSED_FORM_TYPES)
    if bound not in BOUNDS:
        raise ValueError(f"Invalid summation bound: {bound}. Choose one of {', '.join(BOUNDS)}")
    if ell < 0:
        raise ValueError(f"Weight must be nonnegative, got {ell}")
    if closed_form_vanishes(label, ell):
        return None
    if ell == 0:
        return HomogPoly(0, {0: 1})

    top = ell if bound == "full" else ell - 1
    coeffs: Dict[int, Fraction] = {0: Fraction(1)}
    if label == "I":
        factor = Fraction(2, 2 + 2 ** (ell // 2))
        coeffs[ell] = Fraction(1)
        for j in range(2, ell, 2):
            coeffs[j] = factor * comb(ell, j)
    elif label == "III":
        factor = Fraction(3, 3 + 3 ** (ell // 2))
        for j in range(3, top + 1, 3):
            coeffs[j] = factor * 2**j * comb(ell, j)
    else:
        factor = Fraction(2, 2 + 2**ell)
        for j in range(2, top + 1, 2):
            coeffs[j] = factor * 3**j * comb(ell, j)
    return HomogPoly(ell, coeffs)


def closed_form_vanishes(label: str, ell: int) -> bool:
    """
    Case split of the closed forms: True when phi_l is predicted zero.

    Type I and IV vanish for odd l, Type III unless 4 | l.
    """

    _check_label(label, CLOSED_FORM_TYPES)
    if label == "III":
        return ell % 4 != 0
    return ell % 2 != 0


def min_distance(f: HomogPoly) -> int:
    """
    Smallest i > 0 with A_i != 0.

    Args:
        f: Formal weight enumerator

    Returns:
        int: Minimum distance d

    Raises:
        NoMinimumDistanceError: If f = x^n
    """

    d = f.min_y_exponent_above_zero()
    if d is None:
        raise NoMinimumDistanceError(f"{f} has no term besides x^{f.degree}")
    return d


def valid_weights(label: str, ell_max: int, ell_min: int = 1) -> List[int]:
    """
    Weights in [ell_min, ell_max] with a nonzero average, read off the
    averaging oracle.

    Weight 0 (the constant 1) is never included.
    """

    _check_label(label)
    return [
        ell
        for ell in range(max(1, ell_min), ell_max + 1)
        if not eisenstein_poly(label, ell).is_zero()
    ]
