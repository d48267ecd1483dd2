import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matpow.densemat import Mat, eval_poly_at_matrix, identity, mat_inverse, mat_mul, rref, vec_columns
from matpow.minpoly import build_power_stack, charpoly, minimal_polynomial
from matpow.polynomial import Poly, poly_divrem

from conftest import MARKOV, MINPOLY_EX1, REPEATED_EIG, int_matrices
from test_densemat import B_EX1, B_EX2


def as_grid(rows):
    return tuple(tuple(F(x) for x in row) for row in rows)


def test_power_stack_matches_printed():
    assert build_power_stack(MINPOLY_EX1) == as_grid(B_EX1)
    assert build_power_stack(REPEATED_EIG) == as_grid(B_EX2)


def test_power_stack_identity():
    stack = build_power_stack(identity(2))
    assert len(stack) == 4 and len(stack[0]) == 3
    for col in zip(*stack):
        assert col == vec_columns(identity(2))


def test_minimal_polynomial_examples():
    rep = minimal_polynomial(MINPOLY_EX1)
    assert rep.q == Poly([-8, 3, 4, 1])
    assert rep.r == 3
    assert rep.q == rep.delta
    rep = minimal_polynomial(REPEATED_EIG)
    assert rep.q == Poly([-15, 2, 1])
    assert rep.r == 2
    assert rep.b_hat.leading_rows() == ((1, 0, 15, -30), (0, 1, -2, 19))
    rep = minimal_polynomial(identity(3))
    assert rep.q == Poly([-1, 1])
    assert rep.r == 1


def test_minimal_polynomial_edge_cases():
    assert minimal_polynomial(Mat([[7]])).q == Poly([-7, 1])
    assert minimal_polynomial(Mat([[0, 0], [0, 0]])).q == Poly([0, 1])
    nilpotent = Mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert minimal_polynomial(nilpotent).q == Poly.monomial(3)


def test_charpoly_examples():
    assert charpoly(REPEATED_EIG) == Poly([45, -21, -1, 1])
    assert charpoly(REPEATED_EIG) == Poly.from_roots([3, 3, -5])
    assert charpoly(identity(2)) == Poly([1, -2, 1])
    assert charpoly(Mat([[1, 2], [3, 4]])) == Poly([-2, -5, 1])
    assert charpoly(MARKOV).degree == 3


def _check_report(a):
    rep = minimal_polynomial(a)
    assert rep.q.is_monic()
    assert rep.q.degree == rep.r == rep.b_hat.rank
    assert eval_poly_at_matrix(rep.q, a).is_zero()
    assert poly_divrem(rep.delta, rep.q)[1].is_zero()
    # I, A, ..., A^{r-1} are independent
    lower = [row[: rep.r] for row in build_power_stack(a)]
    assert rref(lower).rank == rep.r


@settings(max_examples=80, deadline=None)
@given(int_matrices(max_dim=5, lo=-5, hi=5))
def test_minpoly_properties(a):
    _check_report(a)


@pytest.mark.parametrize(
    "diag, roots",
    [([2, -1, 5], [2, -1, 5]), ([2, 2, 3], [2, 3]), ([4, 4, 4, 4], [4]), ([0, F(1, 2)], [0, F(1, 2)])],
)
def test_diagonal_oracle(diag, roots):
    m = len(diag)
    a = Mat([[diag[i] if i == j else 0 for j in range(m)] for i in range(m)])
    assert minimal_polynomial(a).q == Poly.from_roots(roots)


@settings(max_examples=40, deadline=None)
@given(int_matrices(max_dim=4), st.integers(0, 2**32))
def test_similarity_invariance(a, seed):
    rnd = random.Random(seed)
    m = a.dim
    while True:
        s = Mat([[rnd.randint(-3, 3) for _ in range(m)] for _ in range(m)])
        if rref(s.rows).rank == m:
            break
    conj = mat_mul(mat_mul(mat_inverse(s), a), s)
    assert minimal_polynomial(conj).q == minimal_polynomial(a).q
