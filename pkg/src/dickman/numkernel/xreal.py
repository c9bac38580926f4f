"""Extended-precision scalar used by every analytic module.

Values are ``mpf``/``mpc`` objects of a private mpmath context ``xp`` running
at 113 bits (the IEEE binary128 significand), so relative unit roundoff is
2**-113 and elementary functions are correctly rounded to within a few ulps.
A private context keeps the global ``mpmath.mp`` untouched.
"""

from __future__ import annotations

import contextlib
import numbers
from fractions import Fraction

import mpmath
from mpmath import libmp

WORKING_PRECISION = 113
DECIMAL_DIGITS = 36

xp = mpmath.MPContext()
xp.prec = WORKING_PRECISION

XReal = xp.mpf
XComplex = xp.mpc


def xreal(value) -> XReal:
    """Convert ints, floats, Fractions, decimal strings and mpf values."""
    if isinstance(value, Fraction):
        return xp.mpf(value.numerator) / value.denominator
    if isinstance(value, str):
        return from_decimal(value)
    return xp.mpf(value)


def xcomplex(value, imag=None) -> XComplex:
    if imag is not None:
        return xp.mpc(xreal(value), xreal(imag))
    if isinstance(value, numbers.Complex) and not isinstance(value, numbers.Real):
        return xp.mpc(value.real, value.imag)
    if isinstance(value, xp.mpc):
        return value
    return xp.mpc(xreal(value), 0)


def to_decimal(x, digits: int = DECIMAL_DIGITS) -> str:
    """Scientific-notation ASCII string that round-trips at working precision."""
    x = xreal(x) if not isinstance(x, xp.mpf) else x
    return libmp.to_str(
        x._mpf_, digits, strip_zeros=False, min_fixed=0, max_fixed=0,
        show_zero_exponent=True,
    )


def from_decimal(text: str) -> XReal:
    return xp.mpf(text.strip())


def is_finite(v) -> bool:
    return bool(xp.isfinite(v))


@contextlib.contextmanager
def precision(bits: int):
    """Temporarily change the working precision (``--fast`` uses 53 bits)."""
    old = xp.prec
    xp.prec = bits
    try:
        yield
    finally:
        xp.prec = old


def unit_roundoff():
    return xp.ldexp(xp.mpf(1), -xp.prec)
