import random
from fractions import Fraction

import pytest

from eisenzeta.arith.cyclotomic import cyclo_symbol
from eisenzeta.errors import LatticeMismatchError, NotRationalError, OrderExceededError
from eisenzeta.groups.matrix import Mat2
from eisenzeta.poly.homog import HomogPoly, act_on_poly, expand_linear_power, format_homog
from eisenzeta.poly.series import TruncSeries, series_compose_T_over_1mT, series_inv
from eisenzeta.poly.univariate import UniPoly, common_factor, format_unipoly

x, y = HomogPoly.x(), HomogPoly.y()


def test_homog_arithmetic():
    f = (x + y) ** 2
    assert f == HomogPoly(2, {0: 1, 1: 2, 2: 1})
    assert f - x * x - y * y == (x * y).scale(2)
    assert (x - x).is_zero()
    assert f.support() == [0, 1, 2]


def test_homog_degree_mismatch():
    with pytest.raises(ValueError):
        x + y * y


def test_expand_linear_power():
    sqrt2 = cyclo_symbol("SQRT2")
    f = expand_linear_power(sqrt2, sqrt2, 2)
    assert f == HomogPoly(2, {0: 2, 1: 4, 2: 2})
    assert f.is_rational()
    assert not expand_linear_power(1, sqrt2, 1).is_rational()


def test_rational_coeffs():
    f = HomogPoly(3, {0: 1, 3: Fraction(2, 3)})
    assert f.rational_coeffs() == {0: Fraction(1), 3: Fraction(2, 3)}
    assert f.dense_rational() == [Fraction(1), Fraction(0), Fraction(0), Fraction(2, 3)]
    with pytest.raises(NotRationalError):
        HomogPoly(1, {1: cyclo_symbol("I")}).rational_coeffs()


def test_format_homog():
    f = HomogPoly(8, {0: 1, 4: 14, 8: 1})
    assert format_homog(f) == "x^8+14x^4y^4+y^8"
    g = HomogPoly(12, {0: 1, 4: -33, 8: -33, 12: 1})
    assert format_homog(g) == "x^12-33x^8y^4-33x^4y^8+y^12"
    assert format_homog(g, latex=True) == "x^{12}-33 x^8 y^4-33 x^4 y^8+y^{12}"
    assert format_homog(HomogPoly(2, {1: Fraction(-2, 3)})) == "-(2/3)xy"
    assert format_homog(HomogPoly.zero(4)) == "0"


def test_homog_json():
    f = HomogPoly(2, {0: 1, 2: Fraction(1, 3)})
    assert f.to_json() == {"n": 2, "coeffs": {"0": "1", "2": "1/3"}}


def test_act_on_poly():
    swap = Mat2(0, 1, 1, 0)
    f = x * x * y
    assert act_on_poly(swap, f) == y * y * x
    flip = Mat2.diag(1, -1)
    assert act_on_poly(flip, f) == f.scale(-1)
    rotate = Mat2.diag(1, cyclo_symbol("I"))
    assert act_on_poly(rotate, y**4) == y**4


def test_unipoly_basics():
    p = UniPoly([1, 0, 2, 0, 0])
    assert p.degree == 2
    assert p.coeffs == (Fraction(1), Fraction(0), Fraction(2))
    assert UniPoly().degree == -1
    assert (p * UniPoly([1, 1])).coeffs == (1, 1, 2, 2)
    assert p.evaluate(Fraction(1, 2)) == Fraction(3, 2)
    assert p.evaluate(1j) == pytest.approx(-1)


def test_format_unipoly():
    p = UniPoly([Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)])
    assert format_unipoly(p) == "1/5+2T/5+2T^2/5"
    assert format_unipoly(p, latex=True) == "\\frac{1}{5}+\\frac{2 T}{5}+\\frac{2 T^2}{5}"
    q = UniPoly([Fraction(-1, 15), Fraction(-2, 15), Fraction(-2, 15), 0, Fraction(4, 15)])
    assert format_unipoly(q) == "-1/15-2T/15-2T^2/15+4T^4/15"
    assert format_unipoly(UniPoly([0, 1])) == "T"
    assert format_unipoly(UniPoly()) == "0"


def test_series_arithmetic():
    s = TruncSeries.from_list([1, -1], 4)
    assert series_inv(s) == TruncSeries.from_list([1, 1, 1, 1], 4)
    assert (s * s.inv()) == TruncSeries.one(4)
    assert (s**2).items() == [(0, 1), (1, -2), (2, 1)]
    short = TruncSeries.from_list([1, 1, 1], 2)
    assert (s * short).order == 2


def test_series_order_guard():
    s = TruncSeries.from_list([1, 2, 3], 3)
    assert s.coefficient(2) == 3
    with pytest.raises(OrderExceededError):
        s.coefficient(3)


def test_series_inverse_needs_constant_term():
    with pytest.raises(ZeroDivisionError):
        series_inv(TruncSeries.from_list([0, 1], 3))


def test_lattices():
    s = TruncSeries({0: 1, 4: 2}, 10, denom=4)
    coarse = s.to_lattice(1)
    assert coarse == TruncSeries({0: 1, 1: 2}, 3)
    assert coarse.to_lattice(4).items() == [(0, 1), (4, 2)]
    with pytest.raises(LatticeMismatchError):
        TruncSeries({1: 1}, 4, denom=4).to_lattice(1)
    with pytest.raises(LatticeMismatchError):
        s + TruncSeries.one(10)


def test_compose_t_over_one_minus_t():
    s = TruncSeries.from_list([1, 0, 1], 5)
    assert series_compose_T_over_1mT(s) == TruncSeries.from_list([1, 0, 1, 2, 3], 5)
    s = TruncSeries.from_list([1, 1, 1], 5)
    assert series_compose_T_over_1mT(s) == TruncSeries.from_list([1, 1, 2, 3, 4], 5)
    with pytest.raises(LatticeMismatchError):
        series_compose_T_over_1mT(TruncSeries.one(4, denom=4))


def test_series_json():
    s = TruncSeries({0: 1, 3: Fraction(-1, 2)}, 8, denom=4)
    assert s.to_json() == {"D": 4, "order": 8, "coeffs": {"0": "1", "3": "-1/2"}}


def random_series(rng, order, denom=1, unit=False):
    values = {e: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for e in range(order) if rng.random() < 0.6}
    if unit:
        values[0] = Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 4))
    return TruncSeries(values, order, denom)


@pytest.mark.parametrize("denom", [1, 4])
def test_series_ring_identities_on_random_series(denom):
    rng = random.Random(denom)
    for _ in range(100):
        order = rng.randint(1, 12)
        a = random_series(rng, order, denom, unit=True)
        b = random_series(rng, order, denom, unit=True)
        c = random_series(rng, order, denom)
        one = TruncSeries.one(order, denom)
        assert a * series_inv(a) == one
        assert series_inv(series_inv(a)) == a
        assert series_inv(a * b) == series_inv(a) * series_inv(b)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a**3 == a * a * a


def test_compose_geometric_series():
    # 1/(1-t^2) with t = T/(1-T) is (1-T)^2/(1-2T)
    s = series_inv(TruncSeries.from_list([1, 0, -1], 6))
    assert series_compose_T_over_1mT(s) == TruncSeries.from_list([1, 0, 1, 2, 4, 8], 6)
    t = TruncSeries.from_list([0, 1], 4)
    assert series_compose_T_over_1mT(t) == TruncSeries.from_list([0, 1, 1, 1], 4)


@pytest.mark.parametrize(
    "kernel, expected",
    [
        # 1/(1-(2t)^3)
        ([1, 0, 0, -8, 0, 0, 0], [1, 0, 0, 8, 24, 48, 144]),
        # 1/(1-(3t)^2)
        ([1, 0, -9, 0, 0, 0], [1, 0, 9, 18, 108, 360]),
    ],
)
def test_compose_kernels(kernel, expected):
    s = TruncSeries.from_list(kernel, len(kernel))
    composed = series_compose_T_over_1mT(series_inv(s))
    assert composed == TruncSeries.from_list(expected, len(expected))
    assert composed == series_inv(series_compose_T_over_1mT(s))


def test_compose_is_multiplicative():
    rng = random.Random(11)
    for _ in range(50):
        order = rng.randint(1, 10)
        a, b = random_series(rng, order), random_series(rng, order)
        assert series_compose_T_over_1mT(a * b) == series_compose_T_over_1mT(a) * series_compose_T_over_1mT(b)


def test_common_factor_and_exact_quotient():
    # (1+2T^2)(1+2T+2T^2) and (1+2T^2)(1-2T^2)
    a = UniPoly([1, 2, 4, 4, 4])
    b = UniPoly([1, 0, 0, 0, -4])
    shared = common_factor(a, b)
    assert shared == UniPoly([Fraction(1, 2), 0, 1])
    assert a.exact_quotient(shared) == UniPoly([2, 4, 4])
    assert common_factor(UniPoly([1, 1]), UniPoly([1, -1])) == UniPoly([1])
    with pytest.raises(ValueError):
        b.exact_quotient(UniPoly([1, 1]))
