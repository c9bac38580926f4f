"""Bernoulli numbers, Euler's constant and zeta values at integers.

Even arguments use the Bernoulli closed form; odd arguments and gamma use
Euler-Maclaurin summation. Both paths share the exact rational Bernoulli
table, and a truncation of N = 32 terms with 30 correction terms leaves a
remainder far below 2**-113.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .xreal import XReal, xp

_EM_TERMS = 32
_EM_CORRECTIONS = 30


@lru_cache(maxsize=None)
def bernoulli(m: int) -> tuple:
    """Exact B_0..B_m as Fractions (B_1 = -1/2)."""
    b = [Fraction(1)]
    for n in range(1, m + 1):
        b.append(-sum(comb(n + 1, j) * b[j] for j in range(n)) / Fraction(n + 1))
    return tuple(b)


def _fraction(q: Fraction):
    return xp.mpf(q.numerator) / q.denominator


@lru_cache(maxsize=None)
def _euler_gamma(prec: int):
    n, p = _EM_TERMS, _EM_CORRECTIONS
    B = bernoulli(2 * p)
    N = xp.mpf(n)
    harmonic = xp.fsum(xp.mpf(1) / k for k in range(1, n + 1))
    corr = xp.fsum(_fraction(B[2 * j]) / (2 * j * N ** (2 * j)) for j in range(1, p + 1))
    return harmonic - xp.log(N) - 1 / (2 * N) + corr


def euler_gamma() -> XReal:
    """Euler-Mascheroni constant at the working precision."""
    return _euler_gamma(xp.prec)


def zeta_even(n: int) -> XReal:
    if n < 2 or n % 2:
        raise ValueError("zeta_even needs an even n >= 2")
    m = n // 2
    B = bernoulli(n)[n]
    sign = 1 if m % 2 else -1
    return sign * _fraction(B) * (2 * xp.pi) ** n / (2 * xp.factorial(n))


def zeta_em(n: int) -> XReal:
    """zeta(n) for integer n >= 2 by Euler-Maclaurin summation."""
    if n < 2:
        raise ValueError("zeta_em needs n >= 2")
    N, p = _EM_TERMS, _EM_CORRECTIONS
    B = bernoulli(2 * p)
    s = xp.mpf(n)
    head = xp.fsum(xp.mpf(k) ** -s for k in range(1, N))
    NN = xp.mpf(N)
    tail = NN ** (1 - s) / (s - 1) + NN ** -s / 2
    # rising factorial s(s+1)...(s+2j-2) / (2j)!
    rising = s
    terms = []
    for j in range(1, p + 1):
        terms.append(_fraction(B[2 * j]) / xp.factorial(2 * j) * rising * NN ** (-s - 2 * j + 1))
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return head + tail + xp.fsum(terms)


@dataclass(frozen=True)
class ZetaTable:
    """``values[n]`` holds zeta(n) for 2 <= n <= n_max (entries 0, 1 are None)."""

    values: tuple
    gamma: XReal

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> XReal:
        if n < 2 or n > self.n_max:
            raise IndexError(f"zeta({n}) not in table (2..{self.n_max})")
        return self.values[n]


@lru_cache(maxsize=None)
def _zeta_values(n_max: int, prec: int) -> ZetaTable:
    vals = [None, None]
    for n in range(2, n_max + 1):
        vals.append(zeta_even(n) if n % 2 == 0 else zeta_em(n))
    return ZetaTable(tuple(vals), euler_gamma())


def zeta_values(n_max: int = 64) -> ZetaTable:
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    return _zeta_values(n_max, xp.prec)
