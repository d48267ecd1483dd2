"""Dense square matrices over the rationals and exact row reduction."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimMismatch, SingularSystem
from .scalar import format_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class Mat:
    """Immutable ``m x m`` matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "dim")

    def __init__(self, rows):
        rows = tuple(tuple(_frac(x) for x in row) for row in rows)
        m = len(rows)
        if m == 0:
            raise DimMismatch("matrix must have at least one row")
        if any(len(row) != m for row in rows):
            raise DimMismatch(f"matrix is not square: row lengths {[len(r) for r in rows]}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "dim", m)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def _raw(cls, rows):
        a = object.__new__(cls)
        object.__setattr__(a, "rows", rows)
        object.__setattr__(a, "dim", len(rows))
        return a

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, Mat):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rational(x) for x in row) + "]" for row in self.rows)
        return f"Mat([{body}])"

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_add(self, mat_scale(-1, other))

    def __neg__(self):
        return mat_scale(-1, self)

    def transpose(self):
        return Mat._raw(tuple(zip(*self.rows)))

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.dim)), _ZERO)

    def to_numpy(self):
        return np.array([[float(x) for x in row] for row in self.rows], dtype=float)

    def is_zero(self):
        return all(x == 0 for row in self.rows for x in row)


def identity(m):
    return Mat._raw(tuple(tuple(_ONE if i == j else _ZERO for j in range(m)) for i in range(m)))


def zeros(m):
    return Mat._raw(tuple((_ZERO,) * m for _ in range(m)))


def _check_dims(a, b):
    if a.dim != b.dim:
        raise DimMismatch(f"dimension mismatch: {a.dim} vs {b.dim}")


def mat_mul(a, b):
    _check_dims(a, b)
    cols = tuple(zip(*b.rows))
    return Mat._raw(
        tuple(tuple(sum((x * y for x, y in zip(row, col) if x and y), _ZERO) for col in cols) for row in a.rows)
    )


def mat_add(a, b):
    _check_dims(a, b)
    return Mat._raw(tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)))


def mat_scale(c, a):
    c = _frac(c)
    return Mat._raw(tuple(tuple(c * x for x in row) for row in a.rows))


def vec_columns(a):
    """Stack the columns of ``a`` into one vector of length ``m*m``."""
    return tuple(a.rows[i][j] for j in range(a.dim) for i in range(a.dim))


def eval_poly_at_matrix(p, a):
    """``p(a)`` by Horner's rule; the constant term multiplies the identity."""
    m = a.dim
    acc = zeros(m)
    for c in reversed(p.coeffs):
        acc = mat_mul(acc, a)
        if c:
            rows = [list(row) for row in acc.rows]
            for i in range(m):
                rows[i][i] += c
            acc = Mat._raw(tuple(tuple(r) for r in rows))
    return acc


@dataclass(frozen=True)
class RrefResult:
    rref: tuple
    pivot_cols: tuple
    rank: int

    def leading_rows(self, count=None):
        count = self.rank if count is None else count
        return self.rref[:count]


def rref(rows):
    """Exact reduced row echelon form of a rectangular grid.

    The pivot for each column is the first row at or below the current one
    with a nonzero entry; with exact arithmetic no magnitude pivoting is
    needed and the elimination path is reproducible.
    """
    work = [[_frac(x) for x in row] for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            work[r], work[p] = work[p], work[r]
        prow = work[r]
        inv = _ONE / prow[c]
        if inv != 1:
            prow = work[r] = [x * inv for x in prow]
        for i in range(nrows):
            if i == r:
                continue
            f = work[i][c]
            if f == 0:
                continue
            row = work[i]
            for j in range(c, ncols):
                if prow[j]:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return RrefResult(
        rref=tuple(tuple(row) for row in work),
        pivot_cols=tuple(pivots),
        rank=len(pivots),
    )


def mat_inverse(a):
    """Exact inverse via RREF of ``[a | I]``."""
    m = a.dim
    aug = [list(row) + [_ONE if i == j else _ZERO for j in range(m)] for i, row in enumerate(a.rows)]
    res = rref(aug)
    if res.pivot_cols[:m] != tuple(range(m)):
        raise SingularSystem("matrix is singular")
    return Mat._raw(tuple(tuple(row[m:]) for row in res.rref))
