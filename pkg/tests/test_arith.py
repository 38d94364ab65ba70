import random
from fractions import Fraction

import pytest

from eisenzeta.arith.cyclotomic import ONE, ZERO, CycloNumber, cyclo_inv, cyclo_symbol
from eisenzeta.arith.linalg import solve_unique
from eisenzeta.arith.rational import VP_INFINITY, as_rational, format_rational, parse_rational, vp
from eisenzeta.errors import CycloDivisionByZero, NotPrimeError, NotRationalError, SingularSystemError


def test_vp():
    assert vp(Fraction(50, 3), 5) == 2
    assert vp(Fraction(50, 3), 3) == -1
    assert vp(Fraction(50, 3), 7) == 0
    assert vp(0, 5) == VP_INFINITY


def test_vp_rejects_non_prime():
    with pytest.raises(NotPrimeError):
        vp(Fraction(1, 2), 4)
    with pytest.raises(ValueError):
        vp(3, 1)


def test_as_rational_refuses_floats():
    assert as_rational(3) == Fraction(3)
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_rational_serialization():
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(7) == "7"
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational(" 12 ") == Fraction(12)


@pytest.mark.parametrize(
    "name, square",
    [("SQRT2", 2), ("SQRT3", 3), ("I", -1)],
)
def test_symbol_squares(name, square):
    assert cyclo_symbol(name) ** 2 == square


def test_roots_of_unity():
    zeta3 = cyclo_symbol("ZETA3")
    assert zeta3**3 == ONE
    assert zeta3**2 + zeta3 + 1 == ZERO
    assert cyclo_symbol("ZETA8") ** 8 == ONE
    assert cyclo_symbol("ZETA8") ** 4 == -1
    assert CycloNumber.zeta_power(24) == ONE
    assert CycloNumber.zeta_power(-1) * CycloNumber.zeta_power(1) == ONE


def test_inverse():
    sqrt2 = cyclo_symbol("SQRT2")
    assert (sqrt2 + 1).inv() == sqrt2 - 1
    assert sqrt2 * sqrt2.inv() == ONE
    assert ONE / sqrt2 == sqrt2 / 2
    with pytest.raises(CycloDivisionByZero):
        ZERO.inv()
    with pytest.raises(ZeroDivisionError):
        sqrt2 / ZERO


def test_rational_narrowing():
    assert (cyclo_symbol("SQRT3") ** 2).to_rational() == Fraction(3)
    with pytest.raises(NotRationalError):
        cyclo_symbol("SQRT3").to_rational()


def test_embedding():
    assert cyclo_symbol("SQRT2").embed() == pytest.approx(2**0.5)
    assert cyclo_symbol("I").embed() == pytest.approx(1j)
    assert cyclo_symbol("ZETA3").embed() == pytest.approx(complex(-0.5, 3**0.5 / 2))


def test_equality_with_rationals():
    assert CycloNumber.from_rational(Fraction(1, 2)) == Fraction(1, 2)
    assert CycloNumber([0, 1]) != 0
    assert hash(CycloNumber([Fraction(2, 4)])) == hash(CycloNumber.from_rational(Fraction(1, 2)))


def test_solve_unique():
    rows = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)], [Fraction(2), Fraction(0)]]
    assert solve_unique(rows, [Fraction(3), Fraction(1), Fraction(4)]) == [Fraction(2), Fraction(1)]


def test_solve_unique_rejects_singular_and_inconsistent():
    with pytest.raises(SingularSystemError):
        solve_unique([[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]], [Fraction(1), Fraction(2)])
    with pytest.raises(SingularSystemError):
        solve_unique([[Fraction(1)], [Fraction(1)]], [Fraction(1), Fraction(2)])


def random_cyclo(rng, allow_zero=False):
    while True:
        x = CycloNumber([Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(8)])
        if allow_zero or not x.is_zero():
            return x


def test_inverse_round_trip_on_random_elements():
    rng = random.Random(24)
    for _ in range(1000):
        x = random_cyclo(rng)
        assert x * cyclo_inv(x) == ONE


def test_field_axioms_on_random_elements():
    rng = random.Random(8)
    for _ in range(200):
        a, b, c = (random_cyclo(rng, allow_zero=True) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ZERO
        assert a * ONE == a


def test_embedding_is_a_ring_homomorphism():
    rng = random.Random(3)
    for _ in range(200):
        a, b = random_cyclo(rng), random_cyclo(rng)
        assert (a + b).embed() == pytest.approx(a.embed() + b.embed(), abs=1e-9)
        assert (a * b).embed() == pytest.approx(a.embed() * b.embed(), rel=1e-9, abs=1e-9)
        assert a.inv().embed() == pytest.approx(1 / a.embed(), rel=1e-7)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_vp_properties_on_random_rationals(p):
    rng = random.Random(p)
    for _ in range(300):
        a = Fraction(rng.choice([-1, 1]) * rng.randint(1, 10**6), rng.randint(1, 10**6))
        b = Fraction(rng.choice([-1, 1]) * rng.randint(1, 10**6), rng.randint(1, 10**6))
        assert vp(a * b, p) == vp(a, p) + vp(b, p)
        assert vp(a / b, p) == vp(a, p) - vp(b, p)
        assert vp(a * p**3, p) == vp(a, p) + 3
        if a + b:
            assert vp(a + b, p) >= min(vp(a, p), vp(b, p))
        if vp(a, p) != vp(b, p):
            assert vp(a + b, p) == min(vp(a, p), vp(b, p))
