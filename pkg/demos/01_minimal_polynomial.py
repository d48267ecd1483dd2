"""Minimal polynomial by row reduction of stacked matrix powers.

Run with ``python demos/01_minimal_polynomial.py``.
"""

from matpow import Mat, build_power_stack, charpoly, minimal_polynomial
from matpow.scalar import format_rational

A = Mat([[-4, 2, 0], [-2, -1, 0], [0, 0, 1]])

# Each column of B is one power of A, flattened column by column:
# vec(I), vec(A), vec(A^2), vec(A^3).
B = build_power_stack(A)
for row in B:
    print(" ".join(f"{format_rational(x):>4}" for x in row))

# After reduction the leading ones fill the first r columns; the next column
# expresses A^r in terms of I, ..., A^(r-1).
report = minimal_polynomial(A)
print("\nrank r =", report.r)
for row in report.b_hat.leading_rows():
    print(" ".join(f"{format_rational(x):>4}" for x in row))
print("q(k) =", report.q)

# Here q is the characteristic polynomial. For a matrix with a repeated
# eigenvalue that is diagonalizable it is strictly smaller.
P = Mat([[-3, 6, 0], [2, 1, 0], [0, 0, 3]])
print("\ncharacteristic:", charpoly(P))
print("minimal:       ", minimal_polynomial(P).q)
