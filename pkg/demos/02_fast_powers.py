"""Exact A^n from the remainder of k^n modulo the minimal polynomial.

Run with ``python demos/02_fast_powers.py``.
"""

import time

from matpow import Mat, PowerMethod, matrix_power
from matpow.quotient_pow import bench_power_methods, bench_to_csv, remainder_poly

P = Mat([[-3, 6, 0], [2, 1, 0], [0, 0, 3]])

# k^3 = (k - 2)(k^2 + 2k - 15) + 19k - 30, so P^3 = 19 P - 30 I.
print("v(k) for n=3:", remainder_poly(P, 3))
print(matrix_power(P, 3))

# The remainder is computed by repeated squaring in Q[k]/(q), so the number
# of polynomial multiplications grows with log2(n).
stats = {}
t0 = time.perf_counter()
big = matrix_power(P, 2**16, stats=stats)
print(f"\nn = 2^16: {stats['mulmod']} ring multiplications, {time.perf_counter() - t0:.3f} s")
print("entry (2,2) has", big[2, 2].numerator.bit_length(), "bits")

# Every method is checked against the others before timings are reported.
rows = bench_power_methods(P, [16, 256, 4096], methods=[PowerMethod.VIA_MINPOLY, PowerMethod.BINARY_MATRIX, PowerMethod.NAIVE])
print()
print(bench_to_csv(rows))
