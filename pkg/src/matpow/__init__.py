"""Exact matrix powers, minimal polynomials and closed forms of A^n."""

from .closed_form import (
    ClosedForm,
    Root,
    Term,
    build_interpolation_system,
    closed_form,
    eval_closed_form,
    find_roots,
    markov_limit,
    stationary_distribution,
)
from .densemat import (
    Mat,
    RrefResult,
    eval_poly_at_matrix,
    identity,
    mat_add,
    mat_inverse,
    mat_mul,
    mat_scale,
    rref,
    vec_columns,
)
from .errors import MatpowError
from .minpoly import MinPolyReport, build_power_stack, charpoly, minimal_polynomial
from .polynomial import (
    Poly,
    poly_derivative,
    poly_divrem,
    poly_eval,
    poly_gcd,
    poly_modpow,
    square_free_decompose,
)
from .quotient_pow import PowerMethod, bench_power_methods, matrix_power
from .scalar import Rational, parse_rational, rational_arith, to_polar

__version__ = "0.1.0"
