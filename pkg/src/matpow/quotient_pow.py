"""Exact integer powers of rational matrices.

The fast path reduces ``k**n`` modulo an annihilating polynomial of ``A``
(the minimal polynomial by default) and evaluates the remainder at ``A``.
Plain repeated squaring and a naive product loop are kept as oracles.
"""

import csv
import enum
import io
import time
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .densemat import Mat, eval_poly_at_matrix, identity, mat_mul
from .errors import MismatchDetected
from .minpoly import charpoly, minimal_polynomial
from .polynomial import MAX_EXPONENT, poly_modpow
from .scalar import bit_length


class PowerMethod(str, enum.Enum):
    VIA_MINPOLY = "via_minpoly"
    VIA_CHARPOLY = "via_charpoly"
    BINARY_MATRIX = "binary_matrix"
    NAIVE = "naive"


def _check_exponent(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0 or n > MAX_EXPONENT:
        raise ValueError(f"exponent must be an integer in [0, 2**63 - 1], got {n!r}")


def remainder_poly(a, n, method=PowerMethod.VIA_MINPOLY, stats=None):
    """The remainder ``v`` with ``A^n = v(A)`` for the two polynomial methods."""
    method = PowerMethod(method)
    if method is PowerMethod.VIA_MINPOLY:
        modulus = minimal_polynomial(a).q
    elif method is PowerMethod.VIA_CHARPOLY:
        modulus = charpoly(a)
    else:
        raise ValueError(f"{method.value} does not use a remainder polynomial")
    return poly_modpow(n, modulus, stats=stats)


def _binary_power(a, n):
    result = identity(a.dim)
    base = a
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def _naive_power(a, n):
    # n sequential products on the integer matrix d*A, rescaled by d**n at the end
    d = 1
    for row in a.rows:
        for x in row:
            d = lcm(d, x.denominator)
    ints = [[int(x * d) for x in row] for row in a.rows]
    cols = list(zip(*ints))
    m = a.dim
    result = [[int(i == j) for j in range(m)] for i in range(m)]
    for _ in range(n):
        result = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in result]
    scale = Fraction(1, d**n)
    return Mat._raw(tuple(tuple(x * scale for x in row) for row in result))


def matrix_power(a, n, method=PowerMethod.VIA_MINPOLY, stats=None):
    """Exact ``A^n``.

    ``stats``, when given, is a dict that receives the number of
    quotient-ring multiplications (``"mulmod"``) for the polynomial methods.
    """
    _check_exponent(n)
    method = PowerMethod(method)
    if n == 0:
        return identity(a.dim)
    if method in (PowerMethod.VIA_MINPOLY, PowerMethod.VIA_CHARPOLY):
        v = remainder_poly(a, n, method, stats=stats)
        return eval_poly_at_matrix(v, a)
    if method is PowerMethod.BINARY_MATRIX:
        return _binary_power(a, n)
    return _naive_power(a, n)


def max_bits(a):
    return max(bit_length(x) for row in a.rows for x in row)


@dataclass(frozen=True)
class BenchRow:
    method: str
    n: int
    wall_ns: int
    max_bits: int


def bench_power_methods(a, n_values, methods=tuple(PowerMethod)):
    """Time every method on every ``n``.

    All methods are first checked for exact agreement at each ``n``; a
    disagreement raises :class:`MismatchDetected` before any row is returned.
    Rows are sorted by method tag, then ``n``.
    """
    methods = [PowerMethod(m) for m in methods]
    rows = []
    for n in n_values:
        _check_exponent(n)
        results = {}
        for method in methods:
            t0 = time.perf_counter_ns()
            results[method] = matrix_power(a, n, method)
            elapsed = time.perf_counter_ns() - t0
            rows.append(BenchRow(method.value, n, elapsed, 0))
        first = results[methods[0]]
        for method, value in results.items():
            if value != first:
                raise MismatchDetected(f"{method.value} disagrees with {methods[0].value} at n={n}")
        bits = max_bits(first)
        rows[-len(methods):] = [BenchRow(r.method, r.n, r.wall_ns, bits) for r in rows[-len(methods):]]
    rows.sort(key=lambda r: (r.method, r.n))
    return rows


def bench_to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["method", "n", "wall_ns", "max_bits"])
    for r in rows:
        writer.writerow([r.method, r.n, r.wall_ns, r.max_bits])
    return buf.getvalue()
