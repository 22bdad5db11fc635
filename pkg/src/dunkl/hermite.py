"""Hermite, Laguerre and generalized Hermite polynomials, and the
monomial <-> Hermite change-of-basis matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .algebra import HALF, MuParam, as_rational, factorial, pochhammer
from .poly import Poly, ZERO

__all__ = [
    "HermiteVector",
    "BasisMatrix",
    "hermite",
    "laguerre",
    "generalized_hermite",
    "c_matrix",
    "d_matrix",
    "c_entry",
    "d_entry",
    "to_hermite",
    "to_poly",
]


class HermiteVector:
    """Coefficients in the basis H_0, H_1, ...; trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("HermiteVector is immutable")

    def coeff(self, m: int) -> Fraction:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, HermiteVector):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("H", self.coeffs))

    def __repr__(self):
        return f"HermiteVector({[str(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class BasisMatrix:
    """Lower-triangular block of C or D for one parity.

    ``entries[n][k]`` is the (n, k) entry; entries above the diagonal are 0.
    """

    kind: str
    eps: int
    size: int
    entries: tuple

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __matmul__(self, other: "BasisMatrix"):
        n = self.size
        if other.size != n:
            raise ValueError("size mismatch")
        # both factors lower-triangular: only j <= k <= i contributes
        return [
            [sum((self.entries[i][k] * other.entries[k][j]
                  for k in range(j, i + 1)), Fraction(0)) if j <= i else Fraction(0)
             for j in range(n)]
            for i in range(n)
        ]


def _check_eps(eps: int) -> None:
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")


@lru_cache(maxsize=None)
def c_entry(n: int, k: int, eps: int) -> Fraction:
    """Coefficient of x^(2k+eps) in H_(2n+eps)."""
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(
        (-1) ** (n - k) * 2 ** (2 * k + eps) * factorial(2 * n + eps),
    ) / (factorial(2 * k + eps) * factorial(n - k))


@lru_cache(maxsize=None)
def d_entry(k: int, l: int, eps: int) -> Fraction:
    """Coefficient of H_(2l+eps) in x^(2k+eps)."""
    if l < 0 or l > k:
        return Fraction(0)
    return factorial(2 * k + eps) / (
        2 ** (2 * k + eps) * factorial(2 * l + eps) * factorial(k - l)
    )


@lru_cache(maxsize=None)
def _matrix(kind: str, size: int, eps: int) -> BasisMatrix:
    entry = c_entry if kind == "C" else d_entry
    rows = tuple(
        tuple(entry(i, j, eps) for j in range(size)) for i in range(size)
    )
    return BasisMatrix(kind, eps, size, rows)


def c_matrix(size: int, eps: int) -> BasisMatrix:
    if size < 1:
        raise ValueError("size must be positive")
    _check_eps(eps)
    return _matrix("C", size, eps)


def d_matrix(size: int, eps: int) -> BasisMatrix:
    if size < 1:
        raise ValueError("size must be positive")
    _check_eps(eps)
    return _matrix("D", size, eps)


@lru_cache(maxsize=None)
def hermite(n: int) -> Poly:
    """Physicists' Hermite polynomial H_n, leading coefficient 2**n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    half, eps = divmod(n, 2)
    cs = [Fraction(0)] * (n + 1)
    for k in range(half + 1):
        cs[2 * k + eps] = c_entry(half, k, eps)
    return Poly(cs)


def laguerre(n: int, alpha) -> Poly:
    """Generalized Laguerre polynomial L_n^alpha as a polynomial in its own
    variable, from the terminating 1F1 expansion."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha = as_rational(alpha)
    if alpha.denominator == 1 and -n <= alpha <= -1:
        raise ValueError(
            f"alpha = {alpha} makes (alpha+1)_k vanish for some k <= n"
        )
    lead = pochhammer(alpha + 1, n) / factorial(n)
    cs = []
    for k in range(n + 1):
        cs.append(
            lead * pochhammer(-n, k) / (pochhammer(alpha + 1, k) * factorial(k))
        )
    return Poly(cs)


@lru_cache(maxsize=None)
def _generalized_hermite(mu: Fraction, n: int) -> Poly:
    m, eps = divmod(n, 2)
    prefactor = (
        (-1) ** m * factorial(2 * m + eps) / pochhammer(mu + HALF, m + eps)
    )
    lag = laguerre(m, mu - HALF + eps)
    cs = [Fraction(0)] * (n + 1)
    # x^eps * L(x^2)
    for k, c in enumerate(lag.coeffs):
        cs[2 * k + eps] = prefactor * c
    return Poly(cs)


def generalized_hermite(mu, n: int) -> Poly:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return _generalized_hermite(MuParam(mu).value, n)


def to_hermite(p: Poly) -> HermiteVector:
    """Expand ``p`` in the Hermite basis using the closed-form D entries."""
    out = [Fraction(0)] * len(p.coeffs)
    for j, c in enumerate(p.coeffs):
        if not c:
            continue
        k, eps = divmod(j, 2)
        for l in range(k + 1):
            out[2 * l + eps] += c * d_entry(k, l, eps)
    return HermiteVector(out)


def to_poly(h: HermiteVector) -> Poly:
    acc = ZERO
    for m, c in enumerate(h.coeffs):
        if c:
            acc = acc + c * hermite(m)
    return acc
