"""The Dunkl intertwining operator V_mu in three exact realizations.

* ``monomial``: diagonal action on x^(2n+eps),
* ``hermite``: closed-form action on the Hermite basis,
* ``boson``: terminating 1F0(mu;;-b) series in the lowering operator ``b``.

All three return identical polynomials for every input. The integral
realization is floating point and lives in :mod:`dunkl.quadrature`.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from .algebra import HALF, MuParam, binomial, factorial, pochhammer
from .hermite import HermiteVector, generalized_hermite, hermite, to_hermite, to_poly
from .ops import b_op_hermite, derivative, dunkl
from .poly import Poly

__all__ = [
    "Realization",
    "BASE_MU_SAMPLES",
    "certification_mus",
    "monomial_multiplier",
    "v_mu_monomial",
    "v_mu_hermite",
    "v_mu_boson",
    "v_mu_apply",
    "intertwining_residual",
    "corollary_residual",
]


class Realization(enum.Enum):
    MONOMIAL = "monomial"
    HERMITE = "hermite"
    BOSON = "boson"
    INTEGRAL = "integral"


BASE_MU_SAMPLES = tuple(
    Fraction(s)
    for s in (
        "1/7", "1/3", "1/2", "1", "3/2", "2", "19/4",
        "7", "23/2", "31/3", "41/5", "101/7", "13", "17",
    )
)


def certification_mus(max_degree: int) -> list[Fraction]:
    """Distinct admissible mu values, at least ``max_degree // 2 + 2`` of them.

    Each entry of V_mu on polynomials of degree <= d is a rational function
    of mu with numerator and denominator degree <= d//2 + 1, so agreement
    at this many points certifies an identity for every mu.
    """
    need = max_degree // 2 + 2
    mus = list(BASE_MU_SAMPLES)
    j = 1
    while len(mus) < need:
        cand = Fraction(3 * j + 2, 3)
        if cand not in mus:
            mus.append(cand)
        j += 1
    return mus


@lru_cache(maxsize=4096)
def monomial_multiplier(mu: Fraction, j: int) -> Fraction:
    """``(1/2)_j / (mu + 1/2)_j``: V_mu scales x^(2n+eps) by this with
    ``j = n + eps``."""
    return pochhammer(HALF, j) / pochhammer(mu + HALF, j)


def _mu(mu) -> Fraction:
    return MuParam(mu).value


def v_mu_monomial(mu, p: Poly) -> Poly:
    mu = _mu(mu)
    out = []
    for d, c in enumerate(p.coeffs):
        n, eps = divmod(d, 2)
        out.append(c * monomial_multiplier(mu, n + eps) if c else c)
    return Poly._trusted(out)


@lru_cache(maxsize=4096)
def _hermite_row(mu: Fraction, n: int, eps: int) -> tuple:
    # coefficients of H_(2(n-l)+eps), l = 0..n, in V_mu H_(2n+eps)
    pref = monomial_multiplier(mu, n + eps)
    return tuple(
        pref * (-1) ** l * 4 ** l * binomial(n, l) * pochhammer(mu, l)
        for l in range(n + 1)
    )


def v_mu_hermite(mu, p: Poly) -> Poly:
    mu = _mu(mu)
    h = to_hermite(p)
    out = [Fraction(0)] * len(h.coeffs)
    for m, c in enumerate(h.coeffs):
        if not c:
            continue
        n, eps = divmod(m, 2)
        for l, w in enumerate(_hermite_row(mu, n, eps)):
            out[2 * (n - l) + eps] += c * w
    return to_poly(HermiteVector(out))


def v_mu_boson(mu, p: Poly) -> Poly:
    """Sum over l of ``(mu)_l / l! * (-b)^l``, preceded by the diagonal
    normalization ``(1/2)_(n+eps) / (mu+1/2)_(n+eps)`` on each H_(2n+eps)
    component of the input.

    The series stops at ``l = deg(p) // 2``; every higher power of ``b``
    annihilates ``p``.
    """
    mu = _mu(mu)
    h = to_hermite(p)
    term = HermiteVector(
        c * monomial_multiplier(mu, (m + 1) // 2) for m, c in enumerate(h.coeffs)
    )
    acc = list(term.coeffs)
    for l in range(1, max(p.degree, 0) // 2 + 1):
        term = b_op_hermite(term)
        weight = (-1) ** l * pochhammer(mu, l) / factorial(l)
        if not weight:
            break
        for m, c in enumerate(term.coeffs):
            acc[m] += weight * c
    return to_poly(HermiteVector(acc))


_DISPATCH = {
    Realization.MONOMIAL: v_mu_monomial,
    Realization.HERMITE: v_mu_hermite,
    Realization.BOSON: v_mu_boson,
}


def v_mu_apply(mu, p: Poly, method) -> Poly:
    method = Realization(method)
    if method is Realization.INTEGRAL:
        raise ValueError(
            "the integral realization is floating point; use "
            "dunkl.quadrature.v_mu_integral"
        )
    return _DISPATCH[method](mu, p)


def intertwining_residual(mu, p: Poly, method=Realization.MONOMIAL) -> Poly:
    """``D_mu V_mu p - V_mu p'``; identically zero."""
    return dunkl(mu, v_mu_apply(mu, p, method)) - v_mu_apply(mu, derivative(p), method)


def corollary_residual(mu, n: int) -> Poly:
    """``V_mu H_n - H^mu_n``; identically zero."""
    return v_mu_monomial(mu, hermite(n)) - generalized_hermite(mu, n)
