"""
q-expansions: theta constants, the theta map and Eisenstein series

The theta constants are expanded in u with u^4 = q, i.e. on the lattice
(1/4)·Z, where f_0 = sum_m u^(4 m^2) and f_1 = sum_m u^((2m+1)^2) both have
integer exponents.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np
from sympy import divisor_sigma

from eisenzeta.errors import ZeroBernoulliError
from eisenzeta.padic.report import IntegralityReport, scan_valuations
from eisenzeta.poly.homog import HomogPoly
from eisenzeta.poly.series import TruncSeries

THETA_DENOM = 4
DEFAULT_ORDER = 200


@dataclass(frozen=True)
class QExpansion:
    """
    Labelled truncated q-expansion

    Attributes:
        series: The expansion; lattice 1/4 for theta images, 1 for q-series
        label: Description, e.g. "f0" or "psi_4"
    """

    series: TruncSeries
    label: str

    def to_json(self) -> dict:
        return {"label": self.label, **self.series.to_json()}


def _theta_counts(parity: int, order: int) -> list:
    """Dense integer coefficients of f_parity below `order`"""

    counts = [0] * order
    bound = math.isqrt(max(order - 1, 0)) + 1
    for b in range(-bound, bound + 1):
        if b % 2 != parity:
            continue
        exponent = b * b
        if exponent < order:
            counts[exponent] += 1
    return counts


def theta_expansion(parity: int, order: int) -> QExpansion:
    """
    Theta constant f_0 (parity 0) or f_1 (parity 1) in the variable u.

    f_0 = sum_{b even} u^(b^2) and f_1 = sum_{b odd} u^(b^2), over all b in Z
    with b^2 < order.

    Args:
        parity: 0 or 1
        order: Truncation order in lattice units

    Returns:
        QExpansion: Expansion on the lattice 1/4
    """

    if parity not in (0, 1):
        raise ValueError(f"Theta parity must be 0 or 1, got {parity}")
    if order < 1:
        raise ValueError(f"Truncation order must be positive, got {order}")
    series = TruncSeries.from_list(_theta_counts(parity, order), order, THETA_DENOM)
    return QExpansion(series, f"f{parity}")


def _int_powers(base: list, top: int, order: int) -> list:
    powers = [np.array([1] + [0] * (order - 1), dtype=object)]
    base = np.array(base, dtype=object)
    for _ in range(top):
        powers.append(np.convolve(powers[-1], base)[:order])
    return powers


def theta_map(f: HomogPoly, order: int) -> QExpansion:
    """
    Th(f): substitute x -> f_0 and y -> f_1 and expand exactly.

    Theta coefficients are integers, so powers are convolved over Python ints
    and only the final combination uses rationals.

    Args:
        f: Homogeneous polynomial with rational coefficients
        order: Truncation order in lattice units

    Returns:
        QExpansion: Th(f) on the lattice 1/4

    Raises:
        NotRationalError: If f has irrational coefficients
    """

    if order < 1:
        raise ValueError(f"Truncation order must be positive, got {order}")
    n = f.degree
    coeffs = f.rational_coeffs()
    f0 = _int_powers(_theta_counts(0, order), n, order)
    f1 = _int_powers(_theta_counts(1, order), n, order)

    total = [Fraction(0)] * order
    for i, a in coeffs.items():
        product = np.convolve(f0[n - i], f1[i])[:order]
        for e, value in enumerate(product):
            if value:
                total[e] += a * int(value)
    return QExpansion(TruncSeries.from_list(total, order, THETA_DENOM), f"Th({f})")


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """
    Bernoulli number B_k from sum_{j=0}^{k} C(k+1, j) B_j = 0, B_0 = 1.

    This convention gives B_1 = -1/2.

    Args:
        k: Nonnegative index

    Returns:
        Fraction: B_k
    """

    if k < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {k}")
    if k == 0:
        return Fraction(1)
    return -sum(comb(k + 1, j) * bernoulli(j) for j in range(k)) / (k + 1)


def divisor_sum(n: int, k: int) -> int:
    """sigma_k(n) = sum of d^k over the positive divisors d of n"""

    if n < 1:
        raise ValueError(f"Divisor sums need a positive argument, got {n}")
    return int(divisor_sigma(n, k))


def eisenstein_series(k: int, order: int) -> QExpansion:
    """
    psi_k = 1 - (2k / B_k) sum_{n >= 1} sigma_{k-1}(n) q^n.

    Args:
        k: Weight, an even integer >= 2
        order: Number of q-terms kept (exponents 0..order-1)

    Returns:
        QExpansion: Expansion on the integer lattice

    Raises:
        ZeroBernoulliError: If B_k = 0, i.e. k is odd and > 1
    """

    if k < 2:
        raise ValueError(f"Eisenstein series weight must be at least 2, got {k}")
    b_k = bernoulli(k)
    if b_k == 0:
        raise ZeroBernoulliError(f"B_{k} = 0, so psi_{k} is undefined")

    factor = -Fraction(2 * k) / b_k
    coeffs = {0: Fraction(1)}
    for n in range(1, order):
        coeffs[n] = factor * divisor_sum(n, k - 1)
    return QExpansion(TruncSeries(coeffs, order), f"psi_{k}")


def series_integrality(e: QExpansion, p: int) -> IntegralityReport:
    """
    Valuation scan of every retained coefficient of an expansion.

    Raises:
        NotPrimeError: If p is not a prime
    """

    return scan_valuations(e.series.items(), p, e.label)
