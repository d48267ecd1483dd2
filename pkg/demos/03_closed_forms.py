"""A^n as an explicit function of n.

Run with ``python demos/03_closed_forms.py``.
"""

import numpy as np

from matpow import Mat, closed_form, eval_closed_form, matrix_power

# Repeated eigenvalue 3 and eigenvalue -5. Over the characteristic polynomial
# the eigenvalue 3 contributes a derivative equation, giving a term n*3^(n-1).
P = Mat([[-3, 6, 0], [2, 1, 0], [0, 0, 3]])
cf = closed_form(P, modulus="charpoly")
for root in cf.roots:
    print("root", root)
print(cf)

# Over the minimal polynomial the system is smaller and the derivative term
# disappears: P is diagonalizable.
print()
print(closed_form(P))

# A Jordan block keeps its derivative term under either modulus.
J = Mat([[2, 1], [0, 2]])
print()
print(closed_form(J))

# Complex eigenvalues (1 +- i sqrt 3)/6 appear as a damped rotation.
M = Mat([[0, 1, 0], [0, "2/3", "1/3"], ["1/3", 0, "2/3"]])
cf = closed_form(M)
print()
print(cf)
err = max(np.max(np.abs(eval_closed_form(cf, n) - matrix_power(M, n).to_numpy())) for n in range(60))
print(f"\nmax deviation from the exact powers over n < 60: {err:.2e}")

# Coefficients of v(k) = c0 + c1 k + c2 k^2 at a few n
for n in (0, 1, 2, 5):
    print(n, ["%.6f" % c for c in cf.coefficients(n)])
