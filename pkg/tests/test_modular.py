import itertools
import math
from fractions import Fraction

import pytest

from eisenzeta.eisenstein.core import eisenstein_poly
from eisenzeta.errors import ZeroBernoulliError
from eisenzeta.modular.core import (
    bernoulli,
    divisor_sum,
    eisenstein_series,
    series_integrality,
    theta_expansion,
    theta_map,
)
from eisenzeta.poly.homog import HomogPoly


@pytest.mark.parametrize(
    "k, value",
    [
        (0, Fraction(1)),
        (1, Fraction(-1, 2)),
        (2, Fraction(1, 6)),
        (3, Fraction(0)),
        (4, Fraction(-1, 30)),
        (6, Fraction(1, 42)),
        (12, Fraction(-691, 2730)),
    ],
)
def test_bernoulli(k, value):
    assert bernoulli(k) == value


def test_divisor_sum():
    assert divisor_sum(6, 1) == 12
    assert divisor_sum(2, 3) == 9
    assert divisor_sum(12, 0) == 6
    with pytest.raises(ValueError):
        divisor_sum(0, 1)


def test_eisenstein_series():
    psi4 = eisenstein_series(4, 4).series
    assert [psi4.coefficient(n) for n in range(4)] == [1, 240, 2160, 6720]
    psi6 = eisenstein_series(6, 3).series
    assert [psi6.coefficient(n) for n in range(3)] == [1, -504, -16632]


def test_eisenstein_series_needs_nonzero_bernoulli():
    with pytest.raises(ZeroBernoulliError):
        eisenstein_series(3, 5)
    with pytest.raises(ValueError):
        eisenstein_series(0, 5)


def test_theta_constants():
    f0 = theta_expansion(0, 10).series
    f1 = theta_expansion(1, 10).series
    assert f0.items() == [(0, 1), (4, 2)]
    assert f1.items() == [(1, 2), (9, 2)]
    assert f0.denom == 4
    with pytest.raises(ValueError):
        theta_expansion(2, 10)


def test_theta_map_of_variables():
    assert theta_map(HomogPoly.x(), 30).series == theta_expansion(0, 30).series
    assert theta_map(HomogPoly.y(), 30).series == theta_expansion(1, 30).series


def test_theta_map_of_a_square():
    # f0^2 counts representations as a sum of two even squares
    image = theta_map(HomogPoly.x() ** 2, 20).series
    assert image.items() == [(0, 1), (4, 4), (8, 4), (16, 4)]


def count_lattice_points(even: int, odd: int, order: int) -> list:
    """Solutions of b_1^2 + ... + b_n^2 = m, the first `even` entries even, the rest odd"""

    bound = math.isqrt(order) + 1
    choices = [[b for b in range(-bound, bound + 1) if b % 2 == 0]] * even
    choices += [[b for b in range(-bound, bound + 1) if b % 2 == 1]] * odd
    counts = [0] * order
    for point in itertools.product(*choices):
        m = sum(b * b for b in point)
        if m < order:
            counts[m] += 1
    return counts


def test_theta_image_of_x2_plus_y2_is_f0_squared_plus_f1_squared():
    x, y = HomogPoly.x(), HomogPoly.y()
    f0 = theta_expansion(0, 200).series
    f1 = theta_expansion(1, 200).series
    image = theta_map(x * x + y * y, 200).series
    assert image == f0 * f0 + f1 * f1
    # b = c mod 2 exactly when b^2 + c^2 is even
    assert all(image.coefficient(m) == 0 for m in range(1, 200, 2))
    assert image.coefficient(2) == 4
    assert image.coefficient(10) == 8
    assert image.coefficient(25) == 0


@pytest.mark.parametrize(
    "coeffs, degree",
    [({0: 1}, 3), ({1: 1}, 3), ({2: 1}, 3), ({3: 1}, 3), ({0: 1, 2: Fraction(-3, 2), 4: 5}, 4)],
)
def test_theta_map_matches_a_brute_force_lattice_count(coeffs, degree):
    order = 40
    f = HomogPoly(degree, coeffs)
    expected = [Fraction(0)] * order
    for i, a in coeffs.items():
        for m, count in enumerate(count_lattice_points(degree - i, i, order)):
            expected[m] += Fraction(a) * count
    image = theta_map(f, order).series
    assert [image.coefficient(m) for m in range(order)] == expected


def test_type_ii_weight_8_theta_image_is_psi4():
    image = theta_map(eisenstein_poly("II", 8).tilde, 200).series.to_lattice(1)
    assert image.order == 50
    assert image == eisenstein_series(4, 50).series


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_psi_p_minus_1_is_p_integral(p):
    assert series_integrality(eisenstein_series(p - 1, 200), p).passed


def test_series_integrality_witness():
    report = series_integrality(eisenstein_series(4, 3), 2)
    assert report.passed
    report = series_integrality(eisenstein_series(12, 3), 691)
    assert not report.passed
    assert report.offending_terms == [(1, -1), (2, -1)]
