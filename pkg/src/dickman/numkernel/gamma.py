"""Reciprocal gamma function for complex arguments.

Stirling series after an upward shift of the argument, with the reflection
formula for Re w < 1/2. Exact zeros at the non-positive integers come out of
``sinpi`` in the reflection branch.
"""

from __future__ import annotations

from .xreal import xcomplex, xp
from .zeta import bernoulli

_SHIFT_TARGET = 40
_STIRLING_TERMS = 30


def _stirling_log_gamma(w):
    # valid for |w| >= _SHIFT_TARGET, |arg w| < pi/2
    B = bernoulli(2 * _STIRLING_TERMS)
    acc = (w - xp.mpf(1) / 2) * xp.log(w) - w + xp.log(2 * xp.pi) / 2
    w2 = w * w
    wp = w
    for j in range(1, _STIRLING_TERMS + 1):
        q = B[2 * j]
        acc += (xp.mpf(q.numerator) / q.denominator) / (2 * j * (2 * j - 1) * wp)
        wp *= w2
    return acc


def log_gamma_right(w):
    """log Gamma(w) (up to a branch multiple of 2*pi*i) for Re w >= 1/2."""
    shift = max(0, _SHIFT_TARGET - int(xp.floor(xp.re(w))))
    prod = xp.mpc(1)
    for i in range(shift):
        prod *= w + i
    return _stirling_log_gamma(w + shift) - xp.log(prod)


def rgamma(w):
    """1 / Gamma(w); entire, so no errors."""
    w = xcomplex(w)
    if xp.re(w) < xp.mpf(1) / 2:
        return xp.sinpi(w) / xp.pi * xp.exp(log_gamma_right(1 - w))
    return xp.exp(-log_gamma_right(w))
