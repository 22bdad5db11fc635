from fractions import Fraction

import pytest
from hypothesis import given

from dunkl.hermite import generalized_hermite, hermite, to_hermite
from dunkl.intertwiner import (
    BASE_MU_SAMPLES,
    Realization,
    certification_mus,
    corollary_residual,
    intertwining_residual,
    monomial_multiplier,
    v_mu_apply,
    v_mu_boson,
    v_mu_hermite,
    v_mu_monomial,
)
from dunkl.ops import dunkl, derivative
from dunkl.poly import ONE, X, ZERO, Poly, monomial, parity_split, scale

from conftest import SAMPLE_MUS, admissible_mus, polys, rationals

REALIZATIONS = [v_mu_monomial, v_mu_hermite, v_mu_boson]


def brute_multiplier(mu, d):
    # (1/2)_j / (mu+1/2)_j with j = ceil(d/2), by explicit products
    j = (d + 1) // 2
    num = den = Fraction(1)
    for i in range(j):
        num *= Fraction(1, 2) + i
        den *= mu + Fraction(1, 2) + i
    return num / den


def test_monomial_examples():
    mu = Fraction(4, 9)
    assert v_mu_monomial(mu, ONE) == ONE
    assert v_mu_monomial(mu, monomial(2)) == scale(1 / (2 * mu + 1), monomial(2))


@given(polys(20))
def test_mu_zero_is_identity(p):
    for f in REALIZATIONS:
        assert f(0, p) == p


@pytest.mark.parametrize("mu", SAMPLE_MUS + [Fraction(-1, 3), Fraction(-9, 4)], ids=str)
def test_monomial_multipliers(mu):
    for d in range(25):
        assert v_mu_monomial(mu, monomial(d)) == scale(brute_multiplier(mu, d), monomial(d))
        assert monomial_multiplier(mu, (d + 1) // 2) == brute_multiplier(mu, d)


def test_hermite_examples():
    mu = Fraction(7, 2)
    assert v_mu_hermite(mu, hermite(2)) == scale(1 / (2 * mu + 1), hermite(2) - scale(4 * mu, hermite(0)))
    assert v_mu_hermite(mu, hermite(1)) == scale(1 / (2 * mu + 1), hermite(1))
    assert v_mu_hermite(mu, hermite(0)) == hermite(0)
    # the same value by hand from the monomial action on 4x^2 - 2
    assert v_mu_monomial(mu, hermite(2)) == Poly([-2, 0, 4 / (2 * mu + 1)])


def test_boson_examples():
    mu = Fraction(7, 2)
    assert v_mu_boson(mu, hermite(0)) == hermite(0)
    assert v_mu_boson(mu, hermite(2)) == scale(1 / (2 * mu + 1), hermite(2) - scale(4 * mu, hermite(0)))


def test_apply_dispatch():
    mu = Fraction(1, 2)
    outs = {m: v_mu_apply(mu, monomial(3), m) for m in ("monomial", "hermite", "boson")}
    assert len(set(outs.values())) == 1
    assert v_mu_apply(mu, ZERO, Realization.BOSON) == ZERO
    with pytest.raises(ValueError):
        v_mu_apply(mu, X, Realization.INTEGRAL)
    with pytest.raises(ValueError):
        v_mu_apply(mu, X, "nonsense")


@pytest.mark.parametrize("mu", BASE_MU_SAMPLES, ids=str)
def test_realizations_agree_on_bases(mu):
    for d in range(26):
        for p in (monomial(d), hermite(d)):
            a = v_mu_monomial(mu, p)
            assert v_mu_hermite(mu, p) == a
            assert v_mu_boson(mu, p) == a


@given(admissible_mus, polys(14))
def test_realizations_agree_random(mu, p):
    a = v_mu_monomial(mu, p)
    assert v_mu_hermite(mu, p) == a
    assert v_mu_boson(mu, p) == a


@given(admissible_mus, polys(12), polys(12), rationals())
def test_linear_and_structure(mu, p, q, c):
    v = v_mu_monomial(mu, c * p + q)
    assert v == c * v_mu_monomial(mu, p) + v_mu_monomial(mu, q)
    image = v_mu_monomial(mu, p)
    assert image.degree == p.degree
    pv, iv = parity_split(p), parity_split(image)
    assert v_mu_monomial(mu, pv.even) == iv.even
    assert v_mu_monomial(mu, pv.odd) == iv.odd


def test_invertible_multipliers():
    for mu in certification_mus(40):
        for j in range(21):
            assert monomial_multiplier(mu, j) != 0


def test_intertwining_examples():
    mu = Fraction(3, 5)
    lhs = dunkl(mu, v_mu_monomial(mu, monomial(2)))
    assert lhs == scale(2 / (2 * mu + 1), X) == v_mu_monomial(mu, derivative(monomial(2)))
    assert intertwining_residual(mu, ONE) == ZERO


@pytest.mark.parametrize("method", ["monomial", "hermite", "boson"])
@pytest.mark.parametrize("mu", SAMPLE_MUS, ids=str)
def test_intertwining_residual_vanishes(mu, method):
    for n in range(0, 41, 5):
        assert intertwining_residual(mu, hermite(n), method) == ZERO
        assert intertwining_residual(mu, monomial(n), method) == ZERO


@given(admissible_mus, polys(16))
def test_intertwining_random(mu, p):
    assert intertwining_residual(mu, p) == ZERO


def test_corollary_examples():
    assert corollary_residual(Fraction(2), 0) == ZERO
    assert corollary_residual(Fraction(3, 2), 5) == ZERO
    for n in range(12):
        assert corollary_residual(0, n) == ZERO


@pytest.mark.parametrize("mu", SAMPLE_MUS + [Fraction(-1, 3)], ids=str)
def test_corollary(mu):
    for n in range(31):
        assert v_mu_boson(mu, hermite(n)) == generalized_hermite(mu, n)


def test_certification_set():
    assert len(BASE_MU_SAMPLES) == 14
    mus = certification_mus(40)
    assert len(mus) == 22 and len(set(mus)) == 22
    assert mus[:14] == list(BASE_MU_SAMPLES)
    assert all(m > 0 for m in mus)
    assert len(certification_mus(4)) == 14
    assert len(certification_mus(100)) == 52


def test_hermite_row_closed_form():
    # coefficient of H_(2(n-l)+eps) read off by expansion
    mu = Fraction(5, 4)
    n, eps = 4, 1
    image = to_hermite(v_mu_monomial(mu, hermite(2 * n + eps)))
    pref = brute_multiplier(mu, 2 * n + eps)
    from math import comb

    poch = Fraction(1)
    for l in range(n + 1):
        assert image.coeff(2 * (n - l) + eps) == pref * (-4) ** l * comb(n, l) * poch
        poch *= mu + l
