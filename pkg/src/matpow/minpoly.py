"""Minimal polynomial by Gauss elimination on vectorized powers.

The columns ``vec(I), vec(A), ..., vec(A^m)`` are stacked into one matrix
``B`` and reduced once. The leading ones sit in the first ``r`` columns, where
``r`` is the degree of the minimal polynomial, and column ``r`` of the reduced
matrix holds the coordinates of ``vec(A^r)`` in the basis of lower powers.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .densemat import Mat, RrefResult, identity, mat_add, mat_mul, mat_scale, rref, vec_columns, zeros
from .polynomial import Poly


@dataclass(frozen=True)
class MinPolyReport:
    q: Poly
    r: int
    b_hat: RrefResult
    delta: Poly


def build_power_stack(a):
    """The ``m^2 x (m+1)`` matrix whose column ``j`` is ``vec(A^j)``."""
    cols = []
    power = identity(a.dim)
    for j in range(a.dim + 1):
        if j:
            power = mat_mul(power, a)
        cols.append(vec_columns(power))
    return tuple(zip(*cols))


@lru_cache(maxsize=512)
def minimal_polynomial(a: Mat) -> MinPolyReport:
    b_hat = rref(build_power_stack(a))
    r = b_hat.rank
    if b_hat.pivot_cols != tuple(range(r)):
        raise AssertionError(f"leading ones not in the first {r} columns: {b_hat.pivot_cols}")
    # q(k) = k^r - sum_i B̂[i][r] k^i
    coeffs = [-b_hat.rref[i][r] for i in range(r)] + [Fraction(1)]
    return MinPolyReport(q=Poly(coeffs), r=r, b_hat=b_hat, delta=charpoly(a))


@lru_cache(maxsize=512)
def charpoly(a: Mat) -> Poly:
    """Characteristic polynomial ``det(kI - A)`` by Faddeev-LeVerrier."""
    m = a.dim
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[m] = Fraction(1)
    eye = identity(m)
    aux = zeros(m)
    for k in range(1, m + 1):
        # aux_k = A aux_{k-1} + c_{m-k+1} I
        aux = mat_add(mat_mul(a, aux), mat_scale(coeffs[m - k + 1], eye))
        coeffs[m - k] = -mat_mul(a, aux).trace() / k
    return Poly(coeffs)
