"""Dense univariate polynomials over the rationals.

A :class:`Poly` stores its coefficients in ascending order, so ``coeffs[i]``
multiplies ``k**i``. Trailing zeros are always stripped and the zero
polynomial is the empty tuple, with degree ``-1``.
"""

from fractions import Fraction

from .errors import BothZero, DivisionByZero, InvalidInput, InvalidModulus
from .scalar import format_rational

MAX_EXPONENT = 2**63 - 1


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial in ``k`` with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(
            self, "coeffs", _strip(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs):
        # coeffs must already be stripped Fractions
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def monomial(cls, n, c=1):
        return cls([0] * n + [c])

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.lead == 1

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return Poly._raw(tuple(c / lc for c in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        return poly_divrem(self, _coerce(other))

    def __floordiv__(self, other):
        return poly_divrem(self, _coerce(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, _coerce(other))[1]

    def __call__(self, x):
        return poly_eval(self, x)

    def derivative(self):
        return poly_derivative(self)

    def to_float(self):
        """Coefficients as floats, ascending order."""
        return [float(c) for c in self.coeffs]


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([x])
    return NotImplemented


K = Poly([0, 1])


def poly_divrem(num, den):
    """Long division: ``num = den * quot + rem`` with ``deg(rem) < deg(den)``."""
    if den.is_zero():
        raise DivisionByZero("polynomial division by zero")
    rem = list(num.coeffs)
    dd = den.degree
    if len(rem) - 1 < dd:
        return Poly._raw(()), num
    lead = den.coeffs[-1]
    dcoeffs = den.coeffs
    quot = [Fraction(0)] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        c = c / lead
        quot[i - dd] = c
        for j in range(dd + 1):
            rem[i - dd + j] -= c * dcoeffs[j]
    return Poly._raw(_strip(quot)), Poly._raw(_strip(rem[:dd]))


def _mulmod(a, b, q):
    """``a * b mod q`` for monic ``q``, reducing the product in place."""
    d = len(q.coeffs) - 1
    if not a.coeffs or not b.coeffs:
        return Poly._raw(())
    prod = (a * b).coeffs
    if len(prod) <= d:
        return Poly._raw(prod)
    prod = list(prod)
    qc = q.coeffs
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if c:
            base = i - d
            for j in range(d):
                if qc[j]:
                    prod[base + j] -= c * qc[j]
        prod[i] = 0
    return Poly._raw(_strip(prod[:d]))


def poly_modpow(n, q, stats=None):
    """Remainder of ``k**n`` modulo ``q``, by left-to-right square-and-multiply.

    The quotient of the division is never formed. ``q`` is made monic first,
    which does not change the remainder. If ``stats`` is a dict, the number of
    quotient-ring multiplications is accumulated under ``"mulmod"``.
    """
    if not isinstance(n, int) or n < 0 or n > MAX_EXPONENT:
        raise ValueError(f"exponent must be an integer in [0, 2**63 - 1], got {n!r}")
    if q.degree < 1:
        raise InvalidModulus(f"modulus must have degree >= 1, got {q!r}")
    q = q.monic()
    if n == 0:
        return Poly([1]) % q
    count = 0
    x_mod = K % q
    result = x_mod
    for bit in bin(n)[3:]:
        result = _mulmod(result, result, q)
        count += 1
        if bit == "1":
            result = _mulmod(result, x_mod, q)
            count += 1
    if stats is not None:
        stats["mulmod"] = stats.get("mulmod", 0) + count
    return result


def poly_gcd(a, b):
    """Monic greatest common divisor (Euclid over Q)."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def poly_derivative(p):
    return Poly._raw(tuple(i * c for i, c in enumerate(p.coeffs))[1:])


def poly_eval(p, x):
    """Horner evaluation. Works for Fraction, int, float and complex ``x``."""
    if isinstance(x, int):
        x = Fraction(x)
    acc = 0 * x
    for c in reversed(p.coeffs):
        if isinstance(x, (float, complex)):
            c = float(c)
        acc = acc * x + c
    return acc


def square_free_decompose(q):
    """Yun's algorithm.

    Returns ``[(factor, multiplicity), ...]`` ordered by multiplicity, with
    monic, square-free, pairwise coprime factors whose product (with powers)
    equals ``q.monic()``.
    """
    if q.degree < 1:
        raise InvalidInput(f"square-free decomposition needs degree >= 1, got {q!r}")
    f = q.monic()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b // a
        c = d // a
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def format_poly(p, var="k"):
    """Render as e.g. ``k^3 + 4*k^2 + 3*k - 8`` (descending powers)."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
