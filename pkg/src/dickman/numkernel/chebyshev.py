"""Chebyshev interpolation on an interval, in working precision.

Polynomials are stored as coefficients of T_0..T_n in the scaled variable
x = (2v - a - b) / (b - a) in [-1, 1]. Sampling uses Chebyshev-Lobatto
points, which include both endpoints, so an interpolant reproduces its
endpoint samples to rounding.
"""

from __future__ import annotations

from functools import lru_cache

from .xreal import xp, xreal


@lru_cache(maxsize=None)
def _lobatto(n: int, prec: int):
    # x_j = cos(pi j / n), j = 0..n, descending from 1 to -1
    pts = [xp.cospi(xp.mpf(j) / n) for j in range(n + 1)]
    pts[0], pts[n] = xp.mpf(1), xp.mpf(-1)
    if n % 2 == 0:
        pts[n // 2] = xp.mpf(0)
    table = [[xp.cospi(xp.mpf(j * k % (2 * n)) / n) for j in range(n + 1)] for k in range(n + 1)]
    return tuple(pts), tuple(tuple(row) for row in table)


def lobatto_points(n: int):
    return _lobatto(n, xp.prec)[0]


def interpolate_values(values):
    """Chebyshev coefficients from samples at ``lobatto_points(len(values) - 1)``."""
    n = len(values) - 1
    if n == 0:
        return (values[0],)
    _, table = _lobatto(n, xp.prec)
    half = [values[0] / 2, *values[1:-1], values[-1] / 2]
    coeffs = []
    for k in range(n + 1):
        c = 2 * xp.fsum(f * t for f, t in zip(half, table[k])) / n
        if k == 0 or k == n:
            c /= 2
        coeffs.append(c)
    return tuple(coeffs)


def clenshaw(coeffs, x):
    b1 = b2 = xp.mpf(0)
    two_x = 2 * x
    for c in reversed(coeffs[1:]):
        b1, b2 = c + two_x * b1 - b2, b1
    return coeffs[0] + x * b1 - b2


def derivative_coeffs(coeffs):
    """Coefficients of d/dx of the series (degree drops by one)."""
    n = len(coeffs) - 1
    if n == 0:
        return (xp.mpf(0),)
    d = [xp.mpf(0)] * (n + 1)
    for k in range(n, 0, -1):
        d[k - 1] = (d[k + 1] if k + 1 <= n else 0) + 2 * k * coeffs[k]
    d[0] /= 2
    return tuple(d[:n])


def antiderivative_coeffs(coeffs):
    """Coefficients of the antiderivative in x that vanishes at x = -1."""
    n = len(coeffs) - 1
    c = list(coeffs) + [xp.mpf(0), xp.mpf(0)]
    b = [xp.mpf(0)] * (n + 2)
    for k in range(1, n + 2):
        lead = 2 * c[0] if k == 1 else c[k - 1]
        b[k] = (lead - c[k + 1]) / (2 * k)
    b[0] = -xp.fsum(bk if k % 2 == 0 else -bk for k, bk in enumerate(b) if k > 0)
    return tuple(b)


class ChebPiece:
    """Polynomial on [a, b] held in the Chebyshev basis of the scaled variable."""

    __slots__ = ("a", "b", "coeffs", "_dcoeffs")

    def __init__(self, a, b, coeffs):
        self.a = xreal(a)
        self.b = xreal(b)
        self.coeffs = tuple(coeffs)
        self._dcoeffs = None

    @classmethod
    def fit(cls, f, a, b, degree: int):
        """Interpolate ``f`` at the degree+1 Lobatto points of [a, b]."""
        a, b = xreal(a), xreal(b)
        pts = lobatto_points(degree)
        vals = [f(cls._to_v(a, b, x)) for x in pts]
        return cls(a, b, interpolate_values(vals))

    @staticmethod
    def _to_v(a, b, x):
        return (a + b) / 2 + (b - a) / 2 * x

    def scaled(self, v):
        return (2 * xreal(v) - self.a - self.b) / (self.b - self.a)

    def __call__(self, v):
        return clenshaw(self.coeffs, self.scaled(v))

    def derivative(self, v):
        if self._dcoeffs is None:
            self._dcoeffs = derivative_coeffs(self.coeffs)
        return clenshaw(self._dcoeffs, self.scaled(v)) * 2 / (self.b - self.a)

    def antiderivative(self) -> ChebPiece:
        """Piece for ``∫_a^v``, zero at v = a."""
        scale = (self.b - self.a) / 2
        return ChebPiece(self.a, self.b, [scale * c for c in antiderivative_coeffs(self.coeffs)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def tail_magnitude(self, count: int = 3):
        return max(abs(c) for c in self.coeffs[-count:])
