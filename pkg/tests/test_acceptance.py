"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line with its wall time and asserts
both the mathematical statement and the time budget.
"""

import time
from fractions import Fraction

import pytest

from dunkl.algebra import factorial, lemma1_sum, lemma2_check, lemma3_check
from dunkl.hermite import c_matrix, d_matrix, generalized_hermite, hermite
from dunkl.intertwiner import (
    BASE_MU_SAMPLES,
    certification_mus,
    v_mu_boson,
    v_mu_hermite,
    v_mu_monomial,
)
from dunkl.ops import b_op, derivative, dunkl, gauged_hamiltonian
from dunkl.poly import ZERO, evaluate, monomial, scale
from dunkl.quadrature import DEFAULT_GRID, build_rule, required_nodes, v_mu_integral

MAX_DEGREE = 40
CERT_MUS = certification_mus(MAX_DEGREE)
BASES = [(kind, d, p) for d in range(MAX_DEGREE + 1)
         for kind, p in (("x^", monomial(d)), ("H_", hermite(d)))]


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed, budget, detail=""):
        status = "PASS" if ok and elapsed < budget else "FAIL"
        shown = detail if (status == "FAIL" or number == 9) else ""
        line = f"[acceptance {number:>2}] {status} {title} ({elapsed:.2f}s / <{budget}s){shown}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, f"criterion {number} failed: {detail}"
        assert elapsed < budget, f"criterion {number} over time budget"
    return emit


def test_01_lemma1(report):
    t = time.perf_counter()
    bad = [(m, k) for m in range(41) for k in range(41)
           if lemma1_sum(m, k) != (factorial(m) if m == k else 0)]
    report(1, "alternating sum = m! delta(m,k), m,k <= 40", not bad, time.perf_counter() - t, 1, f" bad={bad[:3]}")


def test_02_lemmas_2_3(report):
    assert len(BASE_MU_SAMPLES) == 14
    t = time.perf_counter()
    bad = []
    for n in range(31):
        for j in range(n + 1):
            for eps in (0, 1):
                if not lemma3_check(n, j, eps):
                    bad.append(("L3", n, j, eps))
                for mu in BASE_MU_SAMPLES:
                    if not lemma2_check(n, j, eps, mu):
                        bad.append(("L2", n, j, eps, mu))
    report(2, "multiplier expansion and factorial identity, n <= 30, 14 mu", not bad, time.perf_counter() - t, 5, f" bad={bad[:3]}")


def test_03_basis_inversion(report):
    t = time.perf_counter()
    ok = True
    for eps in (0, 1):
        for size in range(1, 21):
            prod = c_matrix(size, eps) @ d_matrix(size, eps)
            ok &= all(prod[i][j] == (i == j) for i in range(size) for j in range(size))
    report(3, "C D = I, both parities, size <= 20", ok, time.perf_counter() - t, 1)


def test_04_realization_agreement(report):
    assert len(CERT_MUS) >= MAX_DEGREE // 2 + 2 == 22
    t = time.perf_counter()
    bad = []
    for mu in CERT_MUS:
        for kind, d, p in BASES:
            a = v_mu_monomial(mu, p)
            if v_mu_hermite(mu, p) != a or v_mu_boson(mu, p) != a:
                bad.append((str(mu), kind + str(d)))
    report(4, f"monomial = hermite = boson, degree <= 40, {len(CERT_MUS)} mu",
           not bad, time.perf_counter() - t, 60, f" bad={bad[:3]}")


def test_05_intertwining(report):
    t = time.perf_counter()
    bad = []
    for mu in CERT_MUS:
        for kind, d, p in BASES:
            if dunkl(mu, v_mu_monomial(mu, p)) != v_mu_monomial(mu, derivative(p)):
                bad.append((str(mu), kind + str(d)))
    report(5, "D_mu V_mu p = V_mu p'", not bad, time.perf_counter() - t, 30, f" bad={bad[:3]}")


def test_06_corollary(report):
    t = time.perf_counter()
    bad = [(str(mu), n) for mu in CERT_MUS for n in range(31)
           if v_mu_monomial(mu, hermite(n)) != generalized_hermite(mu, n)]
    report(6, "V_mu H_n = generalized Hermite, n <= 30", not bad, time.perf_counter() - t, 10, f" bad={bad[:3]}")


def test_07_boson_lowering(report):
    t = time.perf_counter()
    bad = []
    for n in range(21):
        for eps in (0, 1):
            h = hermite(2 * n + eps)
            expected = scale(4 * n, hermite(2 * (n - 1) + eps)) if n else ZERO
            if b_op(h) != expected:
                bad.append(("b", n, eps))
            power = h
            for _ in range(n + 1):
                power = b_op(power)
            if power != ZERO:
                bad.append(("b^(n+1)", n, eps))
    report(7, "b H_(2n+eps) = 4n H_(2n-2+eps), b^(n+1) H = 0, n <= 20",
           not bad, time.perf_counter() - t, 5, f" bad={bad[:3]}")


def test_08_oscillator_spectrum(report):
    t = time.perf_counter()
    bad = []
    for mu in CERT_MUS:
        for n in range(16):
            for eps in (0, 1):
                g = generalized_hermite(mu, 2 * n + eps)
                energy = 2 * n + eps + mu + Fraction(1, 2)
                if gauged_hamiltonian(mu, g) != scale(energy, g):
                    bad.append((str(mu), n, eps))
    report(8, "gauged H_mu eigenvalues 2n+eps+mu+1/2, n <= 15", not bad, time.perf_counter() - t, 10, f" bad={bad[:3]}")


def test_09_integral_representation(report):
    t = time.perf_counter()
    worst = {}
    ok = True
    for mu in (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(5, 2), Fraction(7)):
        tol = 1e-11 if mu >= Fraction(1, 2) else 1e-10
        rule = build_rule(float(mu), required_nodes(20))
        err_mu = 0.0
        for d in range(21):
            for p in (monomial(d), hermite(d)):
                image = v_mu_monomial(mu, p)
                for x0 in DEFAULT_GRID:
                    exact = float(evaluate(image, Fraction(x0)))
                    err = abs(v_mu_integral(rule, p, x0) - exact) / (1 + abs(exact))
                    err_mu = max(err_mu, err)
        worst[str(mu)] = err_mu
        ok &= err_mu <= tol
    detail = " worst=" + ", ".join(f"{k}:{v:.1e}" for k, v in worst.items())
    report(9, "quadrature vs exact, degree <= 20, 5 grid points", ok, time.perf_counter() - t, 10, detail)


def test_10_mu_zero(report):
    t = time.perf_counter()
    bad = []
    for kind, d, p in BASES:
        if dunkl(0, p) != derivative(p):
            bad.append(("dunkl", kind + str(d)))
        if not (v_mu_monomial(0, p) == v_mu_hermite(0, p) == v_mu_boson(0, p) == p):
            bad.append(("V_0", kind + str(d)))
    report(10, "mu = 0: dunkl = derivative, V_0 = identity", not bad, time.perf_counter() - t, 1, f" bad={bad[:3]}")
