"""Exit criteria. Each test records one PASS/FAIL line for the summary."""

import math
import random
import time
from fractions import Fraction as F

import numpy as np
import pytest

from matpow.closed_form import (
    PAIR,
    RATIONAL,
    build_interpolation_system,
    closed_form,
    eval_closed_form,
    find_roots,
    markov_limit,
    stationary_distribution,
)
from matpow.densemat import Mat, eval_poly_at_matrix, mat_mul
from matpow.minpoly import build_power_stack, charpoly, minimal_polynomial
from matpow.polynomial import Poly, poly_divrem
from matpow.quotient_pow import PowerMethod, matrix_power

from conftest import ACCEPTANCE_LINES, MARKOV, MINPOLY_EX1, REPEATED_EIG
from test_densemat import B_EX1, B_EX2


def record(label, checks):
    failed = [name for name, ok in checks if not ok]
    status = "PASS" if not failed else "FAIL"
    detail = "" if not failed else "  failed: " + ", ".join(failed)
    ACCEPTANCE_LINES.append(f"{status}  {label}{detail}")
    print(ACCEPTANCE_LINES[-1])
    assert not failed, detail


def grid(rows):
    return tuple(tuple(F(x) for x in row) for row in rows)


def timed_minpoly(a, repeats=5):
    best = math.inf
    for _ in range(repeats):
        minimal_polynomial.cache_clear()
        charpoly.cache_clear()
        t0 = time.perf_counter()
        rep = minimal_polynomial(a)
        best = min(best, time.perf_counter() - t0)
    return rep, best


def test_ac1_minpoly_example_one():
    rep, elapsed = timed_minpoly(MINPOLY_EX1)
    record(
        f"AC1 minimal polynomial k^3+4k^2+3k-8, r=3, reduced rows exact, {elapsed * 1e3:.2f} ms < 10 ms",
        [
            ("q", rep.q == Poly([-8, 3, 4, 1])),
            ("r", rep.r == 3),
            ("rows", rep.b_hat.leading_rows() == grid([[1, 0, 0, 8], [0, 1, 0, -3], [0, 0, 1, -4]])),
            ("runtime", elapsed < 0.010),
        ],
    )


def test_ac2_minpoly_example_two():
    rep = minimal_polynomial(REPEATED_EIG)
    record(
        "AC2 minimal polynomial k^2+2k-15, r=2, reduced rows and both power stacks exact",
        [
            ("q", rep.q == Poly([-15, 2, 1])),
            ("r", rep.r == 2),
            ("rows", rep.b_hat.leading_rows() == grid([[1, 0, 15, -30], [0, 1, -2, 19]])),
            ("stack ex1", build_power_stack(MINPOLY_EX1) == grid(B_EX1)),
            ("stack ex2", build_power_stack(REPEATED_EIG) == grid(B_EX2)),
        ],
    )


def test_ac3_repeated_eigenvalue_closed_form():
    delta = charpoly(REPEATED_EIG)
    roots = find_roots(delta)
    system = build_interpolation_system(roots, 3)
    cf = closed_form(REPEATED_EIG, modulus="charpoly")
    # unknowns ordered (c, b, a) for v(k) = a k^2 + b k + c
    rhs_ok = all(
        system.rhs(n) == [F(3) ** n, F(-5) ** n, n * F(3) ** (n - 1) if n else F(0)] for n in range(31)
    )
    record(
        "AC3 charpoly (k-3)^2(k+5), roots 3x2 / -5x1, confluent system, exact closed form n=0..30",
        [
            ("charpoly", delta == Poly([-3, 1]) ** 2 * Poly([5, 1])),
            ("roots", [(r.kind, r.value, r.multiplicity) for r in roots] == [(RATIONAL, 3, 2), (RATIONAL, -5, 1)]),
            ("system matrix", system.matrix == grid([[1, 3, 9], [1, -5, 25], [0, 1, 6]])),
            ("system rhs", rhs_ok),
            ("exact path", cf.exact),
            ("closed form", all(cf.evaluate_exact(n) == matrix_power(REPEATED_EIG, n) for n in range(31))),
        ],
    )


def printed_coefficients(n):
    s3 = math.sqrt(3)
    c = math.cos(n * math.pi / 3) / 3**n
    s = math.sin(n * math.pi / 3) / 3**n
    a = -3 * s3 / 7 * (s3 * c - s3 + 5 * s)
    b = s3 / 7 * (s3 * c - s3 + 19 * s)
    cc = s3 / 21 * (6 * s3 * c + s3 - 12 * s)
    return a, b, cc


def test_ac4_complex_pair_closed_form():
    cf = closed_form(MARKOV)
    roots = cf.roots
    pair = [r for r in roots if r.kind == PAIR]
    ones = [r for r in roots if r.kind == RATIONAL]
    coeff_err = 0.0
    for n in (0, 1, 2, 5, 10):
        c0, c1, c2 = cf.coefficients(n)
        coeff_err = max(coeff_err, max(abs(x - y) for x, y in zip((c2, c1, c0), printed_coefficients(n))))
    eval_err = max(
        float(np.max(np.abs(eval_closed_form(cf, n) - matrix_power(MARKOV, n).to_numpy()))) for n in range(61)
    )
    record(
        "AC4 roots {1, pair(1/3, pi/3)}, printed a,b,c within 1e-10, closed form n=0..60 within 1e-10",
        [
            ("root 1", len(ones) == 1 and ones[0].value == 1 and ones[0].multiplicity == 1),
            ("pair count", len(pair) == 1 and pair[0].multiplicity == 1),
            ("pair r", abs(pair[0].r - 1 / 3) <= 1e-12),
            ("pair phi", abs(pair[0].phi - math.pi / 3) <= 1e-12),
            (f"coefficients err {coeff_err:.2e}", coeff_err <= 1e-10),
            (f"closed form err {eval_err:.2e}", eval_err <= 1e-10),
        ],
    )


def test_ac5_markov_limit():
    lim = markov_limit(MARKOV)
    pi = stationary_distribution(MARKOV)
    target = np.array([1 / 7, 3 / 7, 3 / 7])
    record(
        "AC5 Markov limit rows (1/7, 3/7, 3/7) within 1e-10, agreeing with exact stationary solve",
        [
            ("stationary solve", pi == (F(1, 7), F(3, 7), F(3, 7))),
            ("limit rows", float(np.max(np.abs(lim - target))) <= 1e-10),
            ("agreement", float(np.max(np.abs(lim - np.array([float(x) for x in pi])))) <= 1e-10),
        ],
    )


def test_ac6_random_property_suite():
    rng = random.Random(20261016)
    t0 = time.perf_counter()
    counts = dict(annihilates=0, divides=0, methods=0, semigroup=0, closed_form=0, closed_form_checked=0)
    n_matrices = 200
    for _ in range(n_matrices):
        m = rng.randint(1, 5)
        a = Mat([[rng.randint(-3, 3) for _ in range(m)] for _ in range(m)])
        rep = minimal_polynomial(a)
        counts["annihilates"] += eval_poly_at_matrix(rep.q, a).is_zero()
        counts["divides"] += poly_divrem(rep.delta, rep.q)[1].is_zero()
        agree = True
        for n in range(17):
            results = [matrix_power(a, n, method) for method in PowerMethod]
            agree &= all(x == results[0] for x in results[1:])
        counts["methods"] += agree
        x, y = rng.randint(0, 20), rng.randint(0, 20)
        counts["semigroup"] += matrix_power(a, x + y) == mat_mul(matrix_power(a, x), matrix_power(a, y))
        cf = closed_form(a)
        if all(r.modulus <= 5 for r in cf.roots):
            counts["closed_form_checked"] += 1
            ok = True
            for n in range(26):
                exact = matrix_power(a, n).to_numpy()
                tol = 1e-9 * max(1.0, float(np.max(np.abs(exact))))
                ok &= float(np.max(np.abs(eval_closed_form(cf, n) - exact))) <= tol
            counts["closed_form"] += ok
    elapsed = time.perf_counter() - t0
    checked = counts["closed_form_checked"]
    record(
        f"AC6 property suite on {n_matrices} random matrices "
        f"({checked} closed forms checked) in {elapsed:.1f} s < 60 s",
        [
            ("q(A)=0", counts["annihilates"] == n_matrices),
            ("q | delta", counts["divides"] == n_matrices),
            ("four methods agree", counts["methods"] == n_matrices),
            ("semigroup", counts["semigroup"] == n_matrices),
            ("closed form", counts["closed_form"] == checked and checked > 0),
            ("runtime", elapsed < 60),
        ],
    )


def test_ac7_quotient_ring_multiplication_count():
    n = 2**20
    stats = {}
    fast = matrix_power(REPEATED_EIG, n, PowerMethod.VIA_MINPOLY, stats=stats)
    slow = matrix_power(REPEATED_EIG, n, PowerMethod.BINARY_MATRIX)
    record(
        f"AC7 n=2^20 via minimal polynomial: {stats.get('mulmod')} ring multiplications <= 40, equals binary powering",
        [
            ("count", stats.get("mulmod", math.inf) <= 2 * 20),
            ("equal", fast == slow),
        ],
    )
