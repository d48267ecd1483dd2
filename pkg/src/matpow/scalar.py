"""Scalars: exact rationals and double-precision complex numbers.

``Rational`` is :class:`fractions.Fraction`, which already keeps a canonical
form (positive denominator, reduced, zero as ``0/1``) and reduces eagerly
after every operation. ``ComplexF`` is the builtin :class:`complex`.
"""

import cmath
import math
import operator
import re
from fractions import Fraction

from .errors import DivisionByZero, ParseError, ZeroArgument

Rational = Fraction
ComplexF = complex

_RATIONAL_RE = re.compile(r"^\s*([+-]?)(\d+)(?:/(\d+))?\s*$")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rational_arith(a, b, op):
    """Apply ``op`` (one of ``add``, ``sub``, ``mul``, ``div``) exactly."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "div" and b == 0:
        raise DivisionByZero(f"{a} / 0")
    return fn(Fraction(a), Fraction(b))


def parse_rational(text):
    """Parse ``"p/q"`` or ``"p"`` with an optional sign into a Fraction.

    Both the ASCII hyphen and the unicode minus sign are accepted. Decimal
    notation is rejected on purpose: inputs must be exact.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text.replace("−", "-"))
    if m is None:
        raise ParseError(f"not a rational number: {text!r}")
    sign, num, den = m.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    value = Fraction(int(num), den)
    return -value if sign == "-" else value


def format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def to_polar(z):
    """Return ``(r, phi)`` with ``r > 0`` and ``phi`` in ``(-pi, pi]``.

    The angle comes from the two-argument arctangent so that every quadrant,
    including the imaginary axis, is handled.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex number {z!r}")
    if z == 0:
        raise ZeroArgument("polar form of 0 is undefined")
    r, phi = cmath.polar(z)
    if phi == -math.pi:
        # -0.0 imaginary part lands on the excluded endpoint
        phi = math.pi
    return r, phi


def bit_length(x):
    """Largest bit length of the numerator or denominator of ``x``."""
    x = Fraction(x)
    return max(abs(x.numerator).bit_length(), x.denominator.bit_length())
