"""Closed forms of ``A^n`` as explicit functions of ``n``.

Writing ``k^n = q(k) t(k) + v(k)`` with ``v(k) = c_0 + c_1 k + ... +
c_{r-1} k^{r-1}`` and substituting each root of ``q`` (and, for a root of
multiplicity ``mu``, the first ``mu - 1`` derivatives in ``k``) gives a
confluent Vandermonde system for the ``c_p`` whose right-hand side consists
of the basis functions ``n^(j) * lam^(n-j)``. Here ``n^(j)`` is the falling
factorial ``n (n-1) ... (n-j+1)``. A conjugate pair ``r e^{+-i phi}`` is
replaced by the half-sum and half-difference of its two equations, which
gives the real basis functions ``n^(j) r^(n-j) cos((n-j) phi)`` and the
matching ``sin``.

Inverting the system once expresses every ``c_p`` as a fixed combination of
the basis functions; ``A^n = sum_p c_p(n) A^p`` then yields each matrix entry
as a list of :class:`Term`.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .densemat import Mat, identity, mat_mul, rref
from .errors import NoLimit, NotStochastic, RootFindingDiverged, SingularSystem
from .minpoly import charpoly, minimal_polynomial
from .polynomial import Poly, poly_divrem, poly_eval, square_free_decompose
from .scalar import format_rational, to_polar

RATIONAL = "rational"
REAL = "real_irrational"
PAIR = "complex_pair"
_KIND_ORDER = {RATIONAL: 0, REAL: 1, PAIR: 2}

DK_STEP_TOL = 1e-13
DK_MAX_ITER = 500
RESIDUAL_TOL = 1e-10
CONJUGATE_TOL = 1e-10
DEDUP_TOL = 1e-8
LIMIT_MARGIN = 1e-12


@dataclass(frozen=True)
class Root:
    """An eigenvalue with its multiplicity.

    ``value`` is a Fraction for rational roots and a float for real
    irrational ones. Complex pairs carry ``r`` and ``phi`` (``0 < phi < pi``)
    and stand for both conjugates. ``r_exact`` holds ``r`` as a Fraction when
    it happens to be rational. ``source`` is the polynomial the root was
    extracted from.
    """

    kind: str
    multiplicity: int
    source: Poly
    value: object = None
    r: float = None
    phi: float = None
    r_exact: Fraction = None

    @property
    def modulus(self):
        if self.kind == PAIR:
            return self.r
        return abs(float(self.value))

    @property
    def complex_value(self):
        if self.kind == PAIR:
            return cmath.rect(self.r, self.phi)
        return complex(float(self.value))

    @property
    def count(self):
        """Number of eigenvalues represented (pairs count twice), with multiplicity."""
        return self.multiplicity * (2 if self.kind == PAIR else 1)

    def __str__(self):
        if self.kind == RATIONAL:
            s = format_rational(self.value)
        elif self.kind == REAL:
            s = f"{self.value:.12g}"
        else:
            s = f"pair(r={self.r:.12g}, phi={self.phi:.12g})"
        return f"{s} x{self.multiplicity}"


def _falling(n, j):
    out = 1
    for i in range(j):
        out *= n - i
    return out


# ---------------------------------------------------------------- roots


def _divisors(n):
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _integer_coeffs(p):
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


def rational_roots(p):
    """All distinct rational roots of ``p`` (rational root theorem)."""
    roots = []
    while p.degree >= 1 and p.coeffs[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        p = Poly(p.coeffs[1:])
    if p.degree < 1:
        return roots
    ints = _integer_coeffs(p)
    found = []
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            if gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in found and poly_eval(p, cand) == 0:
                    found.append(cand)
    return roots + sorted(found)


def durand_kerner(p):
    """All complex roots of a square-free ``p`` by Durand-Kerner iteration."""
    coeffs = np.array(p.monic().to_float(), dtype=complex)
    d = len(coeffs) - 1
    radius = 1.0 + float(np.max(np.abs(coeffs[:-1])))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(d) / d + 0.4))
    horner = coeffs[::-1]
    for _ in range(DK_MAX_ITER):
        vals = np.polyval(horner, z)
        diffs = z[:, None] - z[None, :]
        np.fill_diagonal(diffs, 1.0)
        step = vals / np.prod(diffs, axis=1)
        z = z - step
        if np.max(np.abs(step)) < DK_STEP_TOL * max(1.0, float(np.max(np.abs(z)))):
            break
    else:
        raise RootFindingDiverged(f"Durand-Kerner did not converge for {p}")
    scale = np.polyval(np.abs(horner), np.abs(z))
    resid = np.abs(np.polyval(horner, z)) / np.maximum(scale, 1.0)
    if np.max(resid) >= RESIDUAL_TOL:
        raise RootFindingDiverged(f"root residual {np.max(resid):.3g} too large for {p}")
    return z


def _exact_sqrt(x):
    """``sqrt(x)`` as a Fraction when ``x >= 0`` is a rational square, else None."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _quadratic_roots(quad, mult):
    """Roots of an irreducible monic quadratic ``k^2 + b k + c``."""
    c, b = quad.coeffs[0], quad.coeffs[1]
    disc = b * b - 4 * c
    if disc > 0:
        s = math.sqrt(disc)
        bf = float(b)
        # avoid cancellation in the smaller root
        big = (-bf - s) / 2 if bf > 0 else (-bf + s) / 2
        small = float(c) / big
        return [Root(REAL, mult, quad, value=v) for v in sorted((big, small))]
    re = -float(b) / 2
    im = math.sqrt(-float(disc)) / 2
    r, phi = to_polar(complex(re, im))
    return [Root(PAIR, mult, quad, r=r, phi=phi, r_exact=_exact_sqrt(c))]


def _numeric_roots(factor, mult):
    z = durand_kerner(factor)
    reals = []
    upper = []
    lower = []
    for w in z:
        if abs(w.imag) <= CONJUGATE_TOL * max(1.0, abs(w)):
            reals.append(w.real)
        elif w.imag > 0:
            upper.append(w)
        else:
            lower.append(w)
    if len(upper) != len(lower):
        raise RootFindingDiverged(f"unpaired complex roots for {factor}")
    out = [Root(REAL, mult, factor, value=float(x)) for x in sorted(reals)]
    for w in upper:
        partner = min(lower, key=lambda u: abs(u - w.conjugate()))
        if abs(partner - w.conjugate()) > CONJUGATE_TOL * max(1.0, abs(w)):
            raise RootFindingDiverged(f"no conjugate partner for {w} in {factor}")
        lower.remove(partner)
        mid = (w + partner.conjugate()) / 2
        r, phi = to_polar(mid)
        out.append(Root(PAIR, mult, factor, r=r, phi=phi))
    return out


def _sort_key(root):
    if root.kind == PAIR:
        val = (root.r, root.phi)
    else:
        val = (float(root.value), 0.0)
    return (-root.multiplicity, _KIND_ORDER[root.kind], val)


def find_roots(q):
    """Eigenvalues of ``q`` with exact multiplicities.

    Multiplicities come from the square-free decomposition. Within each
    square-free factor, rational roots are found exactly, a leftover
    quadratic is solved by its discriminant, and anything of higher degree
    goes to Durand-Kerner.
    """
    roots = []
    for factor, mult in square_free_decompose(q):
        rest = factor
        for x in rational_roots(factor):
            roots.append(Root(RATIONAL, mult, factor, value=x))
            rest, rem = poly_divrem(rest, Poly([-x, 1]))
            assert rem.is_zero()
        rest = rest.monic()
        if rest.degree == 2:
            roots.extend(_quadratic_roots(rest, mult))
        elif rest.degree >= 3:
            roots.extend(_numeric_roots(rest, mult))
    numeric = [r.complex_value for r in roots if r.kind != RATIONAL]
    for i, u in enumerate(numeric):
        for w in numeric[i + 1:]:
            if abs(u - w) < DEDUP_TOL:
                raise RootFindingDiverged(f"numeric roots {u} and {w} collapsed together")
    if sum(r.count for r in roots) != q.degree:
        raise RootFindingDiverged(f"found {sum(r.count for r in roots)} roots for degree {q.degree}")
    return sorted(roots, key=_sort_key)


# -------------------------------------------------- interpolation system


@dataclass(frozen=True)
class BasisFunction:
    """``n^(order) * root^(n - order)``, or its cos/sin part for a pair."""

    root: Root
    order: int
    trig: str = "none"

    def __call__(self, n):
        j = self.order
        if n < j:
            return Fraction(0) if self.root.kind == RATIONAL else 0.0
        ff = _falling(n, j)
        if self.root.kind == RATIONAL:
            return ff * self.root.value ** (n - j)
        if self.root.kind == REAL:
            return ff * self.root.value ** (n - j)
        mag = ff * self.root.r ** (n - j)
        ang = (n - j) * self.root.phi
        return mag * (math.cos(ang) if self.trig == "cos" else math.sin(ang))


def _row(root, j, trig, r):
    """Coefficients of ``d^j/dk^j k^p`` at the root, for ``p = 0..r-1``."""
    row = []
    for p in range(r):
        if p < j:
            row.append(Fraction(0) if root.kind == RATIONAL else 0.0)
            continue
        ff = _falling(p, j)
        if root.kind == RATIONAL:
            row.append(ff * root.value ** (p - j))
        elif root.kind == REAL:
            row.append(ff * root.value ** (p - j))
        else:
            mag = ff * root.r ** (p - j)
            ang = (p - j) * root.phi
            row.append(mag * (math.cos(ang) if trig == "cos" else math.sin(ang)))
    return row


@dataclass(frozen=True)
class InterpolationSystem:
    """``matrix @ (c_0, ..., c_{r-1}) = (basis_i(n))_i`` for every ``n``.

    Rows are ordered by derivative order first, then by root, so that the
    plain value equations come before the derivative ones.
    """

    matrix: tuple
    basis: tuple
    exact: bool

    def rhs(self, n):
        return [b(n) for b in self.basis]


def build_interpolation_system(roots, modulus_degree):
    r = modulus_degree
    if sum(root.count for root in roots) != r:
        raise ValueError(f"roots account for {sum(x.count for x in roots)} eigenvalues, expected {r}")
    exact = all(root.kind == RATIONAL for root in roots)
    rows, basis = [], []
    for j in range(max((root.multiplicity for root in roots), default=0)):
        for root in roots:
            if j >= root.multiplicity:
                continue
            if root.kind == PAIR:
                for trig in ("cos", "sin"):
                    rows.append(tuple(_row(root, j, trig, r)))
                    basis.append(BasisFunction(root, j, trig))
            else:
                rows.append(tuple(_row(root, j, "none", r)))
                basis.append(BasisFunction(root, j))
    if not exact:
        rows = [tuple(float(x) for x in row) for row in rows]
    return InterpolationSystem(matrix=tuple(rows), basis=tuple(basis), exact=exact)


def _solve_full_pivot(a, b):
    """Solve ``a x = b`` (``b`` may be a matrix) by Gaussian elimination with full pivoting."""
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    n = a.shape[0]
    perm = np.arange(n)
    scale = np.max(np.abs(a)) if a.size else 1.0
    for k in range(n):
        sub = np.abs(a[k:, k:])
        i, j = np.unravel_index(np.argmax(sub), sub.shape)
        i += k
        j += k
        if sub[i - k, j - k] <= 1e-14 * scale:
            raise SingularSystem("interpolation system is numerically singular")
        a[[k, i]] = a[[i, k]]
        b[[k, i]] = b[[i, k]]
        a[:, [k, j]] = a[:, [j, k]]
        perm[[k, j]] = perm[[j, k]]
        f = a[k + 1:, k] / a[k, k]
        a[k + 1:, k:] -= np.outer(f, a[k, k:])
        b[k + 1:] -= np.outer(f, b[k]) if b.ndim == 2 else f * b[k]
    x = np.zeros_like(b)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1:] @ x[k + 1:]) / a[k, k]
    out = np.empty_like(x)
    out[perm] = x
    return out


def solve_weights(system):
    """The inverse of the system matrix: ``c_p(n) = sum_b W[p][b] basis_b(n)``."""
    r = len(system.matrix)
    if system.exact:
        aug = [list(row) + [Fraction(int(i == j)) for j in range(r)] for i, row in enumerate(system.matrix)]
        res = rref(aug)
        if res.pivot_cols[:r] != tuple(range(r)):
            raise SingularSystem("interpolation system is singular")
        return tuple(tuple(row[r:]) for row in res.rref)
    w = _solve_full_pivot(system.matrix, np.eye(r))
    return tuple(tuple(float(x) for x in row) for row in w)


# ----------------------------------------------------------- closed form


@dataclass(frozen=True)
class Term:
    """``coeff * n^(n_power) * base^(n - n_power)``, or its cos/sin variant."""

    coeff: object
    n_power: int
    base: Root
    trig: str = "none"

    def __call__(self, n):
        return self.coeff * BasisFunction(self.base, self.n_power, self.trig)(n)


@dataclass(frozen=True)
class ClosedForm:
    dim: int
    modulus: Poly
    roots: tuple
    system: InterpolationSystem
    weights: tuple
    powers: tuple
    terms: tuple

    @property
    def exact(self):
        return self.system.exact

    def coefficients(self, n):
        """Values of ``c_0, ..., c_{r-1}`` (the remainder's coefficients) at ``n``."""
        rhs = self.system.rhs(n)
        return [sum((w * v for w, v in zip(row, rhs)), 0 * rhs[0]) for row in self.weights]

    def evaluate_exact(self, n):
        if not self.exact:
            raise TypeError("closed form has irrational roots; use eval_closed_form")
        return Mat._raw(
            tuple(
                tuple(sum((t(n) for t in self.terms[i][j]), Fraction(0)) for j in range(self.dim))
                for i in range(self.dim)
            )
        )

    def __str__(self):
        return render_closed_form(self)


def closed_form(a, modulus="minpoly"):
    """Closed form of ``A^n`` built over the minimal or characteristic polynomial."""
    if modulus == "minpoly":
        q = minimal_polynomial(a).q
    elif modulus == "charpoly":
        q = charpoly(a)
    else:
        raise ValueError(f"modulus must be 'minpoly' or 'charpoly', got {modulus!r}")
    roots = tuple(find_roots(q))
    system = build_interpolation_system(roots, q.degree)
    weights = solve_weights(system)
    powers = [identity(a.dim)]
    for _ in range(1, q.degree):
        powers.append(mat_mul(powers[-1], a))
    m = a.dim
    zero = Fraction(0) if system.exact else 0.0
    terms = []
    for i in range(m):
        row_terms = []
        for j in range(m):
            entry = []
            for b, basis in enumerate(system.basis):
                coeff = zero
                for p in range(q.degree):
                    x = powers[p][i, j]
                    if x:
                        coeff += weights[p][b] * (x if system.exact else float(x))
                if coeff != 0:
                    entry.append(Term(coeff, basis.order, basis.root, basis.trig))
            row_terms.append(tuple(entry))
        terms.append(tuple(row_terms))
    return ClosedForm(
        dim=m,
        modulus=q,
        roots=roots,
        system=system,
        weights=weights,
        powers=tuple(powers),
        terms=tuple(terms),
    )


def eval_closed_form(cf, n):
    """The closed form at ``n`` as a float array."""
    if cf.exact:
        return cf.evaluate_exact(n).to_numpy()
    out = np.zeros((cf.dim, cf.dim))
    for i in range(cf.dim):
        for j in range(cf.dim):
            out[i, j] = sum(float(t(n)) for t in cf.terms[i][j])
    return out


# ------------------------------------------------------------- rendering


def _fmt_coeff(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    return f"{x:#.6g}"


def _fmt_base(root):
    if root.kind == RATIONAL:
        v = root.value
        s = format_rational(v)
        return s if (v >= 0 and v.denominator == 1) else f"({s})"
    if root.kind == REAL:
        return f"({root.value:#.6g})"
    if root.r_exact is not None:
        s = format_rational(root.r_exact)
        return s if root.r_exact.denominator == 1 else f"({s})"
    return f"({root.r:#.6g})"


def _fmt_term_body(t):
    j = t.n_power
    exponent = "n" if j == 0 else f"(n-{j})"
    factors = []
    if j:
        factors.append("*".join(["n"] + [f"(n-{i})" for i in range(1, j)]))
    factors.append(f"{_fmt_base(t.base)}^{exponent}")
    if t.trig != "none":
        factors.append(f"{t.trig}({exponent}*{t.base.phi:.6f})")
    return " * ".join(factors)


def render_closed_form(cf, name="A"):
    lines = []
    for i in range(cf.dim):
        for j in range(cf.dim):
            parts = []
            for t in cf.terms[i][j]:
                c = t.coeff
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = _fmt_term_body(t)
                text = body if (isinstance(mag, Fraction) and mag == 1) else f"{_fmt_coeff(mag)} * {body}"
                parts.append((sign, text))
            if not parts:
                rhs = "0"
            else:
                rhs = ("-" if parts[0][0] == "-" else "") + parts[0][1]
                for sign, text in parts[1:]:
                    rhs += f" {sign} {text}"
            lines.append(f"{name}^n[{i}][{j}] = {rhs}")
    return "\n".join(lines)


# ---------------------------------------------------------------- Markov


def is_row_stochastic(a):
    return all(x >= 0 for row in a.rows for x in row) and all(sum(row) == 1 for row in a.rows)


def markov_limit(a):
    """``lim A^n`` for a row-stochastic ``A`` whose other eigenvalues decay.

    Keeps only the terms generated by the eigenvalue 1; every other term
    tends to zero.
    """
    if not is_row_stochastic(a):
        raise NotStochastic("rows must be nonnegative and sum to exactly 1")
    cf = closed_form(a)
    one = [r for r in cf.roots if r.kind == RATIONAL and r.value == 1]
    if not one or one[0].multiplicity != 1:
        raise NoLimit("eigenvalue 1 is not a simple root of the minimal polynomial")
    for root in cf.roots:
        if root is one[0]:
            continue
        if root.modulus >= 1 - LIMIT_MARGIN:
            raise NoLimit(f"eigenvalue {root} does not decay")
    out = np.zeros((cf.dim, cf.dim))
    for i in range(cf.dim):
        for j in range(cf.dim):
            out[i, j] = sum(float(t.coeff) for t in cf.terms[i][j] if t.base is one[0])
    return out


def stationary_distribution(a):
    """Exact solution of ``pi A = pi``, ``sum(pi) = 1`` by row reduction."""
    m = a.dim
    # unknowns pi_0..pi_{m-1}; equations sum_i pi_i (A - I)[i][j] = 0 and sum pi = 1
    eqs = [[a[i, j] - (1 if i == j else 0) for i in range(m)] + [Fraction(0)] for j in range(m)]
    eqs.append([Fraction(1)] * m + [Fraction(1)])
    res = rref(eqs)
    if m in res.pivot_cols:
        raise NoLimit("inconsistent stationary equations")
    if res.rank != m:
        raise NoLimit("stationary distribution is not unique")
    return tuple(res.rref[i][m] for i in range(m))
