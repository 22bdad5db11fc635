"""Verification suites run by ``dunkl verify``.

Each suite is a flat list of independent cases. A case is a module-level
check function plus its arguments, so cases can be fanned out to worker
processes and the report stays identical regardless of scheduling.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import (
    factorial,
    format_rational,
    gauss_2f1_terminating,
    lemma1_sum,
    lemma2_check,
    lemma3_check,
    pochhammer,
)
from .hermite import c_matrix, d_matrix, generalized_hermite, hermite, to_hermite, to_poly
from .intertwiner import (
    certification_mus,
    corollary_residual,
    intertwining_residual,
    v_mu_boson,
    v_mu_hermite,
    v_mu_monomial,
)
from .ops import (
    a_squared,
    b_op,
    derivative,
    dunkl,
    gauged_hamiltonian,
    number_op,
    projector,
)
from .poly import Poly, format_poly, monomial, scale
from .quadrature import compare_realizations, tolerance_for

__all__ = ["SUITES", "VerifyReport", "run_suite", "build_cases"]

SUITES = ("lemmas", "basis", "intertwine", "oscillator", "quadrature")

# quadrature tolerances are only pinned for degree <= 20
QUADRATURE_DEGREE_CAP = 20


@dataclass(frozen=True)
class Case:
    case_id: str
    check: Callable
    args: tuple


@dataclass
class VerifyReport:
    suite: str
    cases_run: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    per_suite: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "schema_version": 1,
            "suite": self.suite,
            "cases_run": self.cases_run,
            "failures": self.failures,
            "wall_time": self.wall_time,
            "per_suite": self.per_suite,
        }


def _s(q) -> str:
    if isinstance(q, Poly):
        return format_poly(q)
    if isinstance(q, Fraction):
        return format_rational(q)
    return str(q)


# check functions return (ok, inputs, expected, actual)

def _check_lemma1(m, k):
    expected = factorial(m) if m == k else Fraction(0)
    actual = lemma1_sum(m, k)
    return actual == expected, {"m": m, "k": k}, _s(expected), _s(actual)


def _check_lemma2(n, eps, mu):
    bad = [k for k in range(n + 1) if not lemma2_check(n, k, eps, mu)]
    return not bad, {"n": n, "eps": eps, "mu": _s(mu)}, "[]", str(bad)


def _check_lemma3(n, eps):
    bad = [l for l in range(n + 1) if not lemma3_check(n, l, eps)]
    return not bad, {"n": n, "eps": eps}, "[]", str(bad)


def _check_gauss(big_n, b, c):
    actual = gauss_2f1_terminating(-big_n, b, c)
    expected = pochhammer(c - b, big_n) / pochhammer(c, big_n)
    inputs = {"N": big_n, "b": _s(b), "c": _s(c)}
    return actual == expected, inputs, _s(expected), _s(actual)


def _check_cd_identity(size, eps):
    prod = c_matrix(size, eps) @ d_matrix(size, eps)
    bad = [
        (i, j) for i in range(size) for j in range(size)
        if prod[i][j] != (1 if i == j else 0)
    ]
    return not bad, {"size": size, "eps": eps}, "identity", str(bad[:5])


def _check_hermite_facts(n):
    h = hermite(n)
    problems = []
    if h.degree != n or h.coeffs[-1] != 2 ** n:
        problems.append("leading coefficient")
    if n and derivative(h) != scale(2 * n, hermite(n - 1)):
        problems.append("Appell")
    if number_op(h) != scale(n, h):
        problems.append("number operator")
    if generalized_hermite(0, n) != h:
        problems.append("mu=0 reduction")
    x_n = monomial(n)
    if to_poly(to_hermite(x_n)) != x_n:
        problems.append("basis round trip")
    return not problems, {"n": n}, "[]", str(problems)


def _check_realizations(mu, d):
    problems = []
    for label, p in (("x", monomial(d)), ("H", hermite(d))):
        a = v_mu_monomial(mu, p)
        if v_mu_hermite(mu, p) != a:
            problems.append(f"{label}^{d} hermite")
        if v_mu_boson(mu, p) != a:
            problems.append(f"{label}^{d} boson")
        if intertwining_residual(mu, p):
            problems.append(f"{label}^{d} intertwining")
    if corollary_residual(mu, d):
        problems.append(f"corollary n={d}")
    return not problems, {"mu": _s(mu), "degree": d}, "[]", str(problems)


def _check_mu_zero(d):
    problems = []
    for p in (monomial(d), hermite(d)):
        if dunkl(0, p) != derivative(p):
            problems.append("dunkl(0) != derivative")
        if v_mu_monomial(0, p) != p or v_mu_boson(0, p) != p or v_mu_hermite(0, p) != p:
            problems.append("V_0 != identity")
    return not problems, {"degree": d}, "[]", str(problems)


def _check_lowering(n, eps):
    h = hermite(2 * n + eps)
    expected = scale(4 * n, hermite(2 * (n - 1) + eps)) if n else Poly()
    actual = b_op(h)
    problems = []
    if actual != expected:
        problems.append("b H")
    power = h
    for _ in range(n + 1):
        power = b_op(power)
    if power:
        problems.append("b^(n+1) H != 0")
    # (N + P + 1) b = a^2
    if n:
        lhs = actual
        lhs = number_op(lhs) + projector(lhs) + lhs
        if lhs != a_squared(h):
            problems.append("(N+P+1) b != a^2")
    return not problems, {"n": n, "eps": eps}, "[]", str(problems)


def _check_spectrum(mu, n, eps):
    q = generalized_hermite(mu, 2 * n + eps)
    energy = 2 * n + eps + mu + Fraction(1, 2)
    actual = gauged_hamiltonian(mu, q)
    expected = scale(energy, q)
    inputs = {"mu": _s(mu), "n": n, "eps": eps}
    return actual == expected, inputs, _s(expected), _s(actual)


def _check_quadrature(mu, cap):
    report = compare_realizations(mu, cap)
    tol = tolerance_for(mu)
    inputs = {"mu": _s(mu), "degree_cap": cap, "tolerance": tol}
    return report.worst <= tol, inputs, f"<= {tol}", repr(report.worst)


def build_cases(suite: str, max_degree: int, mus: Sequence[Fraction]) -> list[Case]:
    mus = list(mus)
    half = max_degree // 2
    cases: list[Case] = []
    if suite == "lemmas":
        for m in range(max_degree + 1):
            for k in range(max_degree + 1):
                cases.append(Case(f"lemma1/m={m}/k={k}", _check_lemma1, (m, k)))
        for n in range(max_degree + 1):
            for eps in (0, 1):
                cases.append(Case(f"lemma3/n={n}/eps={eps}", _check_lemma3, (n, eps)))
                for mu in mus:
                    cases.append(Case(f"lemma2/n={n}/eps={eps}/mu={_s(mu)}",
                                      _check_lemma2, (n, eps, mu)))
        for big_n in range(min(max_degree, 20) + 1):
            for b, c in ((Fraction(7, 3), Fraction(1, 5)), (Fraction(1), Fraction(-5, 2)),
                         (Fraction(-3, 4), Fraction(9, 2))):
                cases.append(Case(f"gauss/N={big_n}/b={_s(b)}/c={_s(c)}",
                                  _check_gauss, (big_n, b, c)))
    elif suite == "basis":
        for size in range(1, half + 2):
            for eps in (0, 1):
                cases.append(Case(f"CD/size={size}/eps={eps}",
                                  _check_cd_identity, (size, eps)))
        for n in range(max_degree + 1):
            cases.append(Case(f"hermite/n={n}", _check_hermite_facts, (n,)))
    elif suite == "intertwine":
        for mu in mus:
            for d in range(max_degree + 1):
                cases.append(Case(f"V/mu={_s(mu)}/d={d}", _check_realizations, (mu, d)))
        for d in range(max_degree + 1):
            cases.append(Case(f"mu0/d={d}", _check_mu_zero, (d,)))
    elif suite == "oscillator":
        for n in range(half + 1):
            for eps in (0, 1):
                cases.append(Case(f"b/n={n}/eps={eps}", _check_lowering, (n, eps)))
                for mu in mus:
                    cases.append(Case(f"H/mu={_s(mu)}/n={n}/eps={eps}",
                                      _check_spectrum, (mu, n, eps)))
    elif suite == "quadrature":
        cap = min(max_degree, QUADRATURE_DEGREE_CAP)
        for mu in mus:
            if mu > 0:
                cases.append(Case(f"quad/mu={_s(mu)}", _check_quadrature, (mu, cap)))
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return cases


def _run_case(case: Case):
    ok, inputs, expected, actual = case.check(*case.args)
    return case.case_id, ok, inputs, expected, actual


def run_suite(
    suite: str,
    max_degree: int,
    mus: Sequence[Fraction] | None = None,
    jobs: int = 1,
) -> VerifyReport:
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if mus is None:
        mus = certification_mus(max_degree)
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
    start = time.perf_counter()
    report = VerifyReport(suite=suite)
    for name in names:
        cases = build_cases(name, max_degree, mus)
        if jobs > 1 and len(cases) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_run_case, cases, chunksize=8))
        else:
            results = [_run_case(c) for c in cases]
        failures = [
            {"case_id": cid, "inputs": inputs, "expected": exp, "actual": act}
            for cid, ok, inputs, exp, act in results
            if not ok
        ]
        report.cases_run += len(results)
        report.failures.extend(failures)
        report.per_suite[name] = {"cases_run": len(results), "failures": len(failures)}
    report.wall_time = time.perf_counter() - start
    return report
