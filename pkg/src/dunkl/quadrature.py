"""Floating-point V_mu through its integral representation.

The integral runs against the normalized measure proportional to
``(1-t)**(mu-1) * (1+t)**mu`` on ``(-1, 1)``. Nodes and weights come from
the Golub-Welsch eigenproblem for the Jacobi recurrence with
``(alpha, beta) = (mu - 1, mu)``; weights are rescaled to unit mass, which
stands in for the Gamma-function normalization constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .hermite import hermite
from .intertwiner import v_mu_monomial
from .poly import Poly, evaluate, monomial

__all__ = [
    "QuadRule",
    "jacobi_recurrence",
    "build_rule",
    "v_mu_integral",
    "required_nodes",
    "compare_realizations",
    "tolerance_for",
    "DEFAULT_GRID",
    "ComparisonReport",
]

DEFAULT_GRID = (-1.0, -0.5, 0.0, 0.5, 1.0)


@dataclass(frozen=True)
class QuadRule:
    mu: float
    nodes: tuple
    weights: tuple

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    def as_arrays(self):
        return np.asarray(self.nodes), np.asarray(self.weights)


def jacobi_recurrence(alpha: float, beta: float, n: int):
    """Diagonal and off-diagonal of the Jacobi matrix for the monic Jacobi
    polynomials orthogonal w.r.t. ``(1-t)**alpha (1+t)**beta``."""
    k = np.arange(n, dtype=float)
    s = 2.0 * k + alpha + beta
    diag = np.empty(n)
    # k = 0 is special-cased: s vanishes there when alpha + beta == 0
    diag[0] = (beta - alpha) / (alpha + beta + 2.0)
    if n > 1:
        sk = s[1:]
        diag[1:] = (beta**2 - alpha**2) / (sk * (sk + 2.0))
    if n <= 1:
        return diag, np.empty(0)
    k = np.arange(1, n, dtype=float)
    s = 2.0 * k + alpha + beta
    off_sq = (
        4.0 * k * (k + alpha) * (k + beta) * (k + alpha + beta)
        / (s**2 * (s + 1.0) * (s - 1.0))
    )
    return diag, np.sqrt(off_sq)


def build_rule(mu: float, n_nodes: int) -> QuadRule:
    mu = float(mu)
    if not mu > 0.0 or not math.isfinite(mu):
        raise ValueError(f"quadrature needs mu > 0, got {mu}")
    if n_nodes < 1:
        raise ValueError("need at least one node")
    diag, off = jacobi_recurrence(mu - 1.0, mu, n_nodes)
    if n_nodes == 1:
        nodes = diag.copy()
        weights = np.ones(1)
    else:
        try:
            nodes, vecs = eigh_tridiagonal(diag, off)
        except LinAlgError as exc:
            raise RuntimeError("tridiagonal eigensolver did not converge") from exc
        weights = vecs[0, :] ** 2
    order = np.argsort(nodes)
    nodes = nodes[order]
    weights = weights[order]
    weights = weights / weights.sum()
    return QuadRule(mu, tuple(nodes.tolist()), tuple(weights.tolist()))


def required_nodes(degree: int) -> int:
    return max(1, math.ceil((degree + 1) / 2))


def v_mu_integral(rule: QuadRule, p: Poly, x0: float) -> float:
    """Quadrature value of ``(V_mu p)(x0)``."""
    x0 = float(x0)
    total = math.fsum(
        w * evaluate(p, x0 * t) for t, w in zip(rule.nodes, rule.weights)
    )
    return total


def tolerance_for(mu) -> float:
    return 1e-11 if mu >= 0.5 else 1e-10


@dataclass
class ComparisonReport:
    mu: str
    degree_cap: int
    grid: list
    worst: float
    worst_case: dict
    per_degree: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "mu": self.mu,
            "degree_cap": self.degree_cap,
            "grid": self.grid,
            "worst_relative_error": self.worst,
            "worst_case": self.worst_case,
            "per_degree": {str(k): v for k, v in sorted(self.per_degree.items())},
        }


def compare_realizations(
    mu, degree_cap: int, grid: Sequence[float] = DEFAULT_GRID, n_nodes: int | None = None
) -> ComparisonReport:
    """Max of ``|integral - exact| / (1 + |exact|)`` over monomials and
    Hermite polynomials up to ``degree_cap`` and all grid points."""
    # a float mu is read through its shortest decimal repr, so 0.25 -> 1/4
    exact_mu = Fraction(repr(mu)) if isinstance(mu, float) else Fraction(mu)
    if exact_mu <= 0:
        raise ValueError("quadrature comparison needs mu > 0")
    rule = build_rule(float(exact_mu), n_nodes or required_nodes(degree_cap))
    worst = 0.0
    worst_case: dict = {}
    per_degree: dict = {}
    for d in range(degree_cap + 1):
        for basis, p in (("monomial", monomial(d)), ("hermite", hermite(d))):
            image = v_mu_monomial(exact_mu, p)
            for x0 in grid:
                exact = float(evaluate(image, Fraction(x0)))
                approx = v_mu_integral(rule, p, x0)
                err = abs(approx - exact) / (1.0 + abs(exact))
                per_degree[d] = max(per_degree.get(d, 0.0), err)
                if err > worst or not worst_case:
                    worst = max(worst, err)
                    worst_case = {"basis": basis, "degree": d, "x": x0,
                                  "exact": exact, "integral": approx}
    return ComparisonReport(
        mu=str(exact_mu), degree_cap=degree_cap, grid=list(grid),
        worst=worst, worst_case=worst_case, per_degree=per_degree,
    )
