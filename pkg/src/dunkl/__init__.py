"""Exact one-dimensional Dunkl calculus.

The Dunkl operator, classical and generalized Hermite polynomials and the
Dunkl intertwining operator V_mu, realized exactly over the rationals in
three ways (monomial, Hermite basis, boson series) and numerically through
Gauss-Jacobi quadrature.
"""

from .algebra import MuParam, pochhammer
from .hermite import generalized_hermite, hermite, to_hermite, to_poly
from .intertwiner import (
    Realization,
    v_mu_apply,
    v_mu_boson,
    v_mu_hermite,
    v_mu_monomial,
)
from .ops import b_op, dunkl
from .poly import Poly, parse_poly, format_poly

__version__ = "0.1.0"

__all__ = [
    "MuParam",
    "Poly",
    "Realization",
    "b_op",
    "dunkl",
    "format_poly",
    "generalized_hermite",
    "hermite",
    "parse_poly",
    "pochhammer",
    "to_hermite",
    "to_poly",
    "v_mu_apply",
    "v_mu_boson",
    "v_mu_hermite",
    "v_mu_monomial",
]
