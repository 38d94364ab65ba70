import random
from fractions import Fraction

import pytest
from sympy import primerange

from eisenzeta.arith.rational import VP_INFINITY, vp
from eisenzeta.errors import EvenPrimeError, NotPrimeError
from eisenzeta.padic.core import (
    integrality_sweep,
    lemma_constant,
    lemma_mod_check,
    poly_integrality,
    report_status,
)
from eisenzeta.utils.report import Status


def test_poly_integrality():
    report = poly_integrality([Fraction(1, 3), Fraction(0), Fraction(2, 9)], 3)
    assert not report.passed
    assert report.min_valuation == -2
    assert report.offending_terms == [(0, -1), (2, -2)]
    assert poly_integrality([Fraction(1, 3), Fraction(5)], 5).passed


def test_poly_integrality_of_zero():
    report = poly_integrality([Fraction(0)], 5)
    assert report.passed
    assert report.min_valuation == VP_INFINITY
    assert report.to_json()["min_valuation"] == "inf"


@pytest.mark.parametrize(
    "label, p, value, residue",
    [("I", 5, 18, 3), ("III", 5, 84, 4), ("IV", 5, 258, 3), ("I", 7, 66, 3)],
)
def test_lemma_mod_check_passes(label, p, value, residue):
    assert lemma_constant(label, p) == value
    (item,) = lemma_mod_check(label, p).items
    assert item.status is Status.PASS
    assert item.witness["residue"] == residue


@pytest.mark.parametrize("p", list(primerange(5, 101)))
def test_lemma_constants_never_vanish_mod_p(p):
    # Fermat: 2^(p-1) = 3^(p-1) = 1 mod p
    for label, residue in (("I", 3), ("III", 4), ("IV", 3)):
        (item,) = lemma_mod_check(label, p).items
        assert item.status is Status.PASS
        assert item.witness["residue"] == residue
        assert not item.witness["vanishes"]


@pytest.mark.parametrize("label, value", [("I", 6), ("III", 12), ("IV", 18)])
def test_lemma_mod_check_flags_p3(label, value):
    (item,) = lemma_mod_check(label, 3).items
    assert item.status is Status.FLAGGED
    assert item.witness["value"] == str(value)
    assert item.witness["vanishes"]


def test_lemma_mod_check_rejects_bad_primes():
    with pytest.raises(EvenPrimeError):
        lemma_mod_check("I", 2)
    with pytest.raises(NotPrimeError):
        lemma_mod_check("I", 9)
    with pytest.raises(ValueError):
        lemma_constant("II", 5)


def test_sweep_passes_at_p5():
    reports = integrality_sweep(["I", "III", "IV"], [5], "EIS")
    assert [r.target for r in reports] == ["EIS I l=8", "EIS III l=8", "EIS IV l=8"]
    assert all(report_status(r) is Status.PASS for r in reports)


def test_sweep_flags_documented_exceptions():
    (zeta_i,) = integrality_sweep(["I"], [3], "ZETA")
    assert zeta_i.flagged
    assert zeta_i.offending_terms == [(0, -1), (2, -1)]
    assert report_status(zeta_i) is Status.FLAGGED

    (zeta_ii,) = integrality_sweep(["II"], [5], "ZETA")
    assert zeta_ii.flagged
    assert not zeta_ii.passed

    (eis_ii,) = integrality_sweep(["II"], [3], "EIS")
    assert eis_ii.flagged
    assert "zero" in eis_ii.note


def test_sweep_theta():
    (report,) = integrality_sweep(["II"], [7], "THETA", series_order=40)
    assert report.passed
    assert report.target == "THETA II l=12"


def test_sweep_rejects_bad_input():
    with pytest.raises(EvenPrimeError):
        integrality_sweep(["I"], [2])
    with pytest.raises(ValueError):
        integrality_sweep(["V"], [5])
    with pytest.raises(ValueError):
        integrality_sweep(["I"], [5], "OTHER")


@pytest.mark.parametrize("p", [3, 5, 7])
def test_poly_integrality_agrees_with_vp(p):
    rng = random.Random(p)
    for _ in range(100):
        coeffs = [Fraction(rng.randint(-50, 50), rng.randint(1, 60)) for _ in range(rng.randint(1, 8))]
        report = poly_integrality(coeffs, p)
        valuations = [vp(c, p) for c in coeffs if c]
        assert report.min_valuation == min(valuations, default=VP_INFINITY)
        assert report.passed == all(v >= 0 for v in valuations)
        assert report.offending_terms == [(k, vp(c, p)) for k, c in enumerate(coeffs) if c and vp(c, p) < 0]
