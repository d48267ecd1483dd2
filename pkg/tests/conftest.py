from fractions import Fraction as F

import pytest
from hypothesis import strategies as st

from matpow import Mat

# matrices from the worked examples
MINPOLY_EX1 = Mat([[-4, 2, 0], [-2, -1, 0], [0, 0, 1]])
REPEATED_EIG = Mat([[-3, 6, 0], [2, 1, 0], [0, 0, 3]])
MARKOV = Mat([[0, 1, 0], [0, F(2, 3), F(1, 3)], [F(1, 3), 0, F(2, 3)]])


@pytest.fixture
def minpoly_ex1():
    return MINPOLY_EX1


@pytest.fixture
def repeated_eig():
    return REPEATED_EIG


@pytest.fixture
def markov():
    return MARKOV


small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=6)


@st.composite
def int_matrices(draw, max_dim=4, lo=-3, hi=3):
    m = draw(st.integers(1, max_dim))
    return Mat([[draw(st.integers(lo, hi)) for _ in range(m)] for _ in range(m)])


@st.composite
def polys(draw, max_deg=6, nonzero=False):
    coeffs = draw(st.lists(small_rationals, min_size=1, max_size=max_deg + 1))
    if nonzero and all(c == 0 for c in coeffs):
        coeffs[-1] = F(1)
    from matpow import Poly

    return Poly(coeffs)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
