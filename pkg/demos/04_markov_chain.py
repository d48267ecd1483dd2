"""Long-run behaviour of a Markov chain from its closed form.

Run with ``python demos/04_markov_chain.py``.
"""

import numpy as np

from matpow import Mat, markov_limit, matrix_power, stationary_distribution
from matpow.errors import NoLimit
from matpow.scalar import format_rational

P = Mat([[0, 1, 0], [0, "2/3", "1/3"], ["1/3", 0, "2/3"]])

# Dropping every decaying term of the closed form leaves the limit matrix.
print(markov_limit(P))

# The exact stationary distribution, solved independently by row reduction.
print([format_rational(x) for x in stationary_distribution(P)])

# The 20-step transition matrix is already close to the limit.
print(np.round(matrix_power(P, 20).to_numpy(), 8))

# A period-2 chain oscillates forever.
try:
    markov_limit(Mat([[0, 1], [1, 0]]))
except NoLimit as exc:
    print("no limit:", exc)
