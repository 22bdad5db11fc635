"""Operators acting on polynomials: derivative, reflection, Dunkl operator,
number operator, the squared lowering operator and the two-step lowering
operator ``b``, plus the gauge-transformed Dunkl oscillator Hamiltonian."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import HALF, MuParam
from .hermite import HermiteVector, to_hermite, to_poly
from .poly import Poly, divide_by_x, reflect, scale

__all__ = [
    "OperatorName",
    "OperatorTag",
    "derivative",
    "mul_x",
    "reflection",
    "dunkl",
    "projector",
    "number_op",
    "a_squared",
    "b_op",
    "b_op_hermite",
    "b_denominator",
    "gauged_hamiltonian",
    "apply_operator",
]


class OperatorName(enum.Enum):
    DERIVATIVE = "derivative"
    MUL_X = "mulx"
    REFLECTION = "reflection"
    PROJECTOR = "projector"
    DUNKL = "dunkl"
    NUMBER_OP = "number"
    A_SQUARED = "asquared"
    B_OP = "bop"
    GAUGED_HAMILTONIAN = "hamiltonian"


_NEEDS_MU = {OperatorName.DUNKL, OperatorName.GAUGED_HAMILTONIAN}


@dataclass(frozen=True)
class OperatorTag:
    name: OperatorName
    mu: Optional[MuParam] = None

    def __post_init__(self):
        if (self.name in _NEEDS_MU) != (self.mu is not None):
            if self.mu is None:
                raise ValueError(f"operator {self.name.value} requires mu")
            raise ValueError(f"operator {self.name.value} takes no mu")


def derivative(p: Poly) -> Poly:
    return Poly._trusted([i * c for i, c in enumerate(p.coeffs)][1:])


def mul_x(p: Poly) -> Poly:
    if not p:
        return p
    return Poly._trusted([Fraction(0), *p.coeffs])


def reflection(p: Poly) -> Poly:
    return reflect(p)


def dunkl(mu, p: Poly) -> Poly:
    """``p' + mu (p(x) - p(-x)) / x``."""
    mu = MuParam(mu).value
    diff = divide_by_x(p - reflect(p))
    return derivative(p) + scale(mu, diff)


def projector(p: Poly) -> Poly:
    """``(1 - R)/2``, i.e. the odd part."""
    return scale(HALF, p - reflect(p))


def number_op(p: Poly) -> Poly:
    """``(-p'' + 2x p') / 2``; H_n is an eigenvector with eigenvalue n."""
    d1 = derivative(p)
    return scale(HALF, scale(2, mul_x(d1)) - derivative(d1))


def a_squared(p: Poly) -> Poly:
    return scale(HALF, derivative(derivative(p)))


def b_denominator(m: int) -> int:
    """Eigenvalue of N + P + 1 on H_m, that is ``2k + 2*eps + 1`` for
    ``m = 2k + eps``; never zero."""
    return m + m % 2 + 1


def b_op_hermite(h: HermiteVector) -> HermiteVector:
    """``b`` in Hermite coordinates: H_m -> 2m(m-1)/(m + [m odd] - 1) H_(m-2)."""
    out = [Fraction(0)] * max(len(h.coeffs) - 2, 0)
    for m in range(2, len(h.coeffs)):
        c = h.coeffs[m]
        if c:
            # a^2 H_m = 2 m (m-1) H_(m-2), then invert N + P + 1 on H_(m-2)
            out[m - 2] = c * Fraction(2 * m * (m - 1), b_denominator(m - 2))
    return HermiteVector(out)


def b_op(p: Poly) -> Poly:
    """``(N + P + 1)^(-1) a^2`` applied to ``p``.

    ``a^2`` is applied in the monomial basis, the result expanded in Hermite
    polynomials where the inverse is diagonal, and mapped back.
    """
    h = to_hermite(a_squared(p))
    out = [c / b_denominator(m) for m, c in enumerate(h.coeffs)]
    return to_poly(HermiteVector(out))


def gauged_hamiltonian(mu, q: Poly) -> Poly:
    """``e^(x^2/2) H_mu e^(-x^2/2)`` on the polynomial ``q``.

    Conjugating by the gaussian turns the Dunkl operator into ``D_mu - x``,
    so this is ``(-(D_mu - x)^2 q + x^2 q) / 2``.
    """
    mu = MuParam(mu)

    def shifted(r: Poly) -> Poly:
        return dunkl(mu, r) - mul_x(r)

    return scale(HALF, mul_x(mul_x(q)) - shifted(shifted(q)))


def apply_operator(tag: OperatorTag, p: Poly) -> Poly:
    name = tag.name
    if name is OperatorName.DERIVATIVE:
        return derivative(p)
    if name is OperatorName.MUL_X:
        return mul_x(p)
    if name is OperatorName.REFLECTION:
        return reflection(p)
    if name is OperatorName.PROJECTOR:
        return projector(p)
    if name is OperatorName.DUNKL:
        return dunkl(tag.mu, p)
    if name is OperatorName.NUMBER_OP:
        return number_op(p)
    if name is OperatorName.A_SQUARED:
        return a_squared(p)
    if name is OperatorName.B_OP:
        return b_op(p)
    if name is OperatorName.GAUGED_HAMILTONIAN:
        return gauged_hamiltonian(tag.mu, p)
    raise ValueError(f"unknown operator {name!r}")

