"""Exact rational scalars, Pochhammer symbols and the lemma checkers.

Everything here works over :class:`fractions.Fraction`; no floating point
and no Gamma function is ever touched.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial as _int_factorial

__all__ = [
    "Rational",
    "MuParam",
    "as_rational",
    "format_rational",
    "parse_rational",
    "pochhammer",
    "factorial",
    "binomial",
    "lemma1_sum",
    "gauss_2f1_terminating",
    "lemma2_check",
    "lemma3_check",
]

Rational = Fraction

HALF = Fraction(1, 2)


def as_rational(value) -> Fraction:
    """Coerce int, Fraction or a ``"p/q"`` string to a Fraction.

    Floats are refused so that inexact values never leak into the exact
    pipeline.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class MuParam:
    """Deformation parameter, an exact rational away from -1/2, -3/2, ..."""

    __slots__ = ("_value",)

    def __init__(self, value):
        if isinstance(value, MuParam):
            value = value.value
        q = as_rational(value)
        shifted = q + HALF
        if shifted.denominator == 1 and shifted <= 0:
            raise ValueError(
                f"mu = {format_rational(q)} is a pole of 1/(mu+1/2)_k"
            )
        object.__setattr__(self, "_value", q)

    def __setattr__(self, name, value):
        raise AttributeError("MuParam is immutable")

    @property
    def value(self) -> Fraction:
        return self._value

    def __eq__(self, other):
        if isinstance(other, MuParam):
            return self._value == other._value
        return NotImplemented

    def __hash__(self):
        return hash(("MuParam", self._value))

    def __repr__(self):
        return f"MuParam({format_rational(self._value)!r})"

    def __str__(self):
        return format_rational(self._value)


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+n-1)``; 1 for ``n == 0``."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    a = as_rational(a)
    p, q = a.numerator, a.denominator
    # product of (p + i q) / q, reduced once at the end
    num = 1
    for i in range(n):
        num *= p + i * q
        if not num:
            return Fraction(0)
    return Fraction(num, q ** n)


def _int_rising(a: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= a + i
        if not out:
            break
    return out


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return Fraction(_int_factorial(n))


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return _int_factorial(n) // (_int_factorial(k) * _int_factorial(n - k))


def lemma1_sum(m: int, k: int) -> Fraction:
    """Term-by-term value of ``sum_{n=0}^{m} (-m)_n (-n)_k / n!``.

    Expected to equal ``m!`` when ``m == k`` and zero otherwise.
    """
    # all factors are integers, so the sum stays in int arithmetic;
    # (-m)_n / n! is updated by its term ratio (n - m - 1) / n
    total = 0
    ratio = 1
    for n in range(m + 1):
        if n:
            ratio = ratio * (n - 1 - m) // n
        total += ratio * _int_rising(-n, k)
    return Fraction(total)


def gauss_2f1_terminating(a, b, c) -> Fraction:
    """Terminating 2F1(a, b; c; 1) with ``a = -N`` a nonpositive integer."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    if a.denominator != 1 or a > 0:
        raise ValueError("first parameter must be a nonpositive integer")
    big_n = -a.numerator
    if c.denominator == 1 and -(big_n - 1) <= c <= 0:
        raise ValueError(
            f"c = {format_rational(c)} hits a pole before the series terminates"
        )
    total = Fraction(0)
    term = Fraction(1)
    for s in range(big_n + 1):
        total += term
        if s == big_n:
            break
        term = term * (a + s) * (b + s) / ((c + s) * (s + 1))
    return total


@lru_cache(maxsize=8192)
def _multiplier(mu: Fraction, j: int) -> Fraction:
    # (1/2)_j / (mu + 1/2)_j
    return pochhammer(HALF, j) / pochhammer(mu + HALF, j)


def lemma2_check(n: int, k: int, eps: int, mu) -> bool:
    """Evaluate both sides of the monomial-multiplier expansion exactly."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    mu = MuParam(mu).value
    lhs = _multiplier(mu, k + eps)
    # term_s = (mu)_s (k-n)_s / (s! (1/2-n-eps)_s), accumulated over the
    # running common denominator of the terms
    a, b = mu.numerator, mu.denominator
    term_num, den, acc = 1, 1, 1
    for s in range(n - k):
        ratio_num = 2 * (a + s * b) * (k - n + s)
        ratio_den = b * (s + 1) * (2 * (s - n - eps) + 1)
        term_num *= ratio_num
        acc = acc * ratio_den + term_num
        den *= ratio_den
    rhs = _multiplier(mu, n + eps) * Fraction(acc, den)
    return lhs == rhs


def lemma3_check(n: int, l: int, eps: int) -> bool:
    if not 0 <= l <= n:
        raise ValueError("need 0 <= l <= n")
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    lhs = factorial(2 * n - 2 * l + eps) * pochhammer(-n - eps + HALF, l)
    rhs = (
        (-1) ** l * factorial(2 * n + eps) * factorial(n - l)
        / (2 ** (2 * l) * factorial(n))
    )
    return lhs == rhs
