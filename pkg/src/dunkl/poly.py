"""Dense univariate polynomials over the rationals, monomial basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import as_rational, format_rational, parse_rational

__all__ = [
    "Poly",
    "ParityVector",
    "X",
    "ONE",
    "ZERO",
    "monomial",
    "add",
    "scale",
    "mul",
    "evaluate",
    "reflect",
    "parity_split",
    "divide_by_x",
    "parse_poly",
    "format_poly",
]


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    Trailing zeros are trimmed on construction, so the zero polynomial has
    an empty coefficient tuple and equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def _trusted(cls, cs: list) -> "Poly":
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(cs))
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{format_poly(self)}])"

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return Poly._trusted([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __call__(self, x0):
        return evaluate(self, x0)


@dataclass(frozen=True)
class ParityVector:
    even: Poly
    odd: Poly


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def monomial(k: int, c=1) -> Poly:
    if k < 0:
        raise ValueError("negative exponent")
    return Poly([0] * k + [c])


def add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    cs = list(a)
    for i, c in enumerate(b):
        cs[i] += c
    return Poly._trusted(cs)


def scale(c, p: Poly) -> Poly:
    c = as_rational(c)
    if not c:
        return ZERO
    return Poly._trusted([c * a for a in p.coeffs])


def mul(p: Poly, q: Poly) -> Poly:
    if not p.coeffs or not q.coeffs:
        return ZERO
    cs = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j, b in enumerate(q.coeffs):
            cs[i + j] += a * b
    return Poly._trusted(cs)


def evaluate(p: Poly, x0):
    """Horner evaluation; exact for rational ``x0``.

    A float ``x0`` is accepted and gives a float result (the quadrature
    module relies on this).
    """
    if not isinstance(x0, float):
        x0 = as_rational(x0)
    acc = 0 * x0
    for c in reversed(p.coeffs):
        acc = acc * x0 + (float(c) if isinstance(x0, float) else c)
    return acc


def reflect(p: Poly) -> Poly:
    """``p(-x)``."""
    return Poly._trusted([-c if i % 2 else c for i, c in enumerate(p.coeffs)])


def parity_split(p: Poly) -> ParityVector:
    zero = Fraction(0)
    even = [c if i % 2 == 0 else zero for i, c in enumerate(p.coeffs)]
    odd = [c if i % 2 else zero for i, c in enumerate(p.coeffs)]
    return ParityVector(Poly._trusted(even), Poly._trusted(odd))


def divide_by_x(p: Poly) -> Poly:
    if not p.coeffs:
        return ZERO
    if p.coeffs[0]:
        raise ValueError(
            "divide_by_x: nonzero constant term, quotient is not a polynomial"
        )
    return Poly._trusted(list(p.coeffs[1:]))


def parse_poly(text: str) -> Poly:
    """Parse the comma-separated low-to-high form, e.g. ``"-2,0,4"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    return Poly(parse_rational(part) for part in text.split(","))


def format_poly(p: Poly) -> str:
    if not p.coeffs:
        return "0"
    return ",".join(format_rational(c) for c in p.coeffs)
