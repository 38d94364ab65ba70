from fractions import Fraction

import pytest

from eisenzeta.eisenstein.core import (
    average,
    closed_form,
    closed_form_vanishes,
    eisenstein_poly,
    min_distance,
    valid_weights,
)
from eisenzeta.errors import NoMinimumDistanceError
from eisenzeta.groups.core import TYPE_LABELS, averaging_group, builtin_group, generate_closure
from eisenzeta.groups.matrix import Mat2
from eisenzeta.poly.homog import HomogPoly


def test_type_ii_table_rows():
    assert eisenstein_poly("II", 8).tilde == HomogPoly(8, {0: 1, 4: 14, 8: 1})
    assert eisenstein_poly("II", 12).tilde == HomogPoly(12, {0: 1, 4: -33, 8: -33, 12: 1})


def test_type_ii_vanishing():
    assert eisenstein_poly("II", 4).is_zero()
    assert eisenstein_poly("II", 6).is_zero()
    # the full group kills every weight not divisible by 8
    assert average(builtin_group("II"), 12).is_zero()


def test_both_type_ii_groups_agree_when_8_divides_the_weight():
    assert average(builtin_group("II"), 16).tilde == eisenstein_poly("II", 16).tilde


def test_type_i_examples():
    assert eisenstein_poly("I", 4).tilde == HomogPoly(4, {0: 1, 2: 2, 4: 1})
    assert eisenstein_poly("I", 8).tilde == HomogPoly(
        8, {0: 1, 2: Fraction(28, 9), 4: Fraction(70, 9), 6: Fraction(28, 9), 8: 1}
    )
    assert eisenstein_poly("I", 5).is_zero()


def test_type_iv_examples():
    assert eisenstein_poly("IV", 2).tilde == HomogPoly(2, {0: 1, 2: 3})
    assert eisenstein_poly("IV", 4).tilde == HomogPoly(4, {0: 1, 2: 6, 4: 9})


def test_type_iii_example():
    assert eisenstein_poly("III", 4).tilde == HomogPoly(4, {0: 1, 3: 8})
    assert eisenstein_poly("III", 6).is_zero()


def test_average_is_invariant():
    poly = eisenstein_poly("III", 8)
    assert poly.is_invariant(averaging_group("III"))
    assert poly.is_invariant(averaging_group("III"), exhaustive=True)


def test_trivial_group_average():
    trivial = generate_closure([Mat2.identity()])
    poly = average(trivial, 3)
    assert poly.tilde == HomogPoly(3, {0: 1})


def test_weight_zero():
    assert eisenstein_poly("I", 0).tilde == HomogPoly(0, {0: 1})
    assert closed_form("IV", 0) == HomogPoly(0, {0: 1})


def test_negative_weight():
    with pytest.raises(ValueError):
        average(builtin_group("I"), -2)


@pytest.mark.parametrize("label, ell", [("I", 10), ("III", 8), ("III", 12), ("IV", 6), ("IV", 10)])
def test_closed_form_matches_average(label, ell):
    assert closed_form(label, ell) == eisenstein_poly(label, ell).tilde


def test_type_iii_printed_bound_drops_the_top_term():
    full = closed_form("III", 12)
    printed = closed_form("III", 12, bound="printed")
    assert full.coefficient(12) == Fraction(1024, 61)
    assert printed.coefficient(12) == 0
    assert full != printed
    # no admissible y^l term below 12 | l
    assert closed_form("III", 8, bound="printed") == closed_form("III", 8)


def test_type_iv_printed_bound():
    assert closed_form("IV", 4, bound="printed") == HomogPoly(4, {0: 1, 2: 6})


def test_closed_form_vanishing():
    assert closed_form("I", 7) is None
    assert closed_form("III", 10) is None
    assert closed_form_vanishes("III", 6)
    assert not closed_form_vanishes("IV", 6)


def test_closed_form_rejects_bad_input():
    with pytest.raises(ValueError):
        closed_form("II", 8)
    with pytest.raises(ValueError):
        closed_form("I", 8, bound="other")


def test_min_distance():
    assert min_distance(eisenstein_poly("II", 8).tilde) == 4
    assert min_distance(eisenstein_poly("III", 4).tilde) == 3
    with pytest.raises(NoMinimumDistanceError):
        min_distance(HomogPoly(3, {0: 1}))


def test_valid_weights():
    assert valid_weights("I", 10) == [2, 4, 6, 8, 10]
    assert valid_weights("II", 20) == [8, 12, 16, 20]
    assert valid_weights("III", 16) == [4, 8, 12, 16]
    assert valid_weights("IV", 7, ell_min=3) == [4, 6]


def test_eisenstein_json():
    doc = eisenstein_poly("II", 8).to_json()
    assert doc["group"] == "G_II*"
    assert doc["tilde"] == {"n": 8, "coeffs": {"0": "1", "4": "14", "8": "1"}}


@pytest.mark.parametrize("label", TYPE_LABELS)
def test_raw_average_is_invariant_under_every_element(label):
    group = averaging_group(label)
    for ell in range(2, 13, 2):
        assert eisenstein_poly(label, ell).is_invariant(group, exhaustive=True)


@pytest.mark.slow
@pytest.mark.parametrize("label", TYPE_LABELS)
def test_raw_average_is_invariant_up_to_weight_40(label):
    group = averaging_group(label)
    for ell in range(14, 41, 2):
        assert eisenstein_poly(label, ell).is_invariant(group, exhaustive=True)


def test_full_type_ii_group_fixes_weights_divisible_by_8():
    group = builtin_group("II")
    for ell in (8, 16):
        assert average(group, ell).is_invariant(group, exhaustive=True)


def test_type_i_normalized_polynomials_are_palindromic():
    for ell in valid_weights("I", 40):
        tilde = eisenstein_poly("I", ell).tilde
        assert all(tilde.coefficient(i) == tilde.coefficient(ell - i) for i in range(ell + 1))
