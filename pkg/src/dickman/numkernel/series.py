"""Truncated formal power series with extended-precision coefficients."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConstantTermNonzero
from .xreal import xp, xreal


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients a_0..a_K of a series in z, truncated at order K."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_coerce(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a power series needs at least one coefficient")

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls((0,) * (order + 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        return PowerSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return PowerSeries(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(tuple(a * other for a in self.coeffs))
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        return PowerSeries(tuple(
            xp.fsum(a[j] * b[k - j] for j in range(k + 1)) for k in range(len(a))
        ))

    __rmul__ = __mul__

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc


def _coerce(c):
    if isinstance(c, (xp.mpf, xp.mpc)):
        return c
    if isinstance(c, complex):
        return xp.mpc(c.real, c.imag)
    return xreal(c)


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp of a series with zero constant term.

    b_0 = 1, b_k = (1/k) * sum_{j=1}^{k} j a_j b_{k-j}
    """
    if a[0] != 0:
        raise ConstantTermNonzero(f"series_exp needs a_0 = 0, got {a[0]}")
    b = [xp.mpf(1)]
    for k in range(1, len(a)):
        b.append(xp.fsum(j * a[j] * b[k - j] for j in range(1, k + 1)) / k)
    return PowerSeries(tuple(b))


def series_log(b: PowerSeries) -> PowerSeries:
    """Inverse of :func:`series_exp`; needs b_0 = 1."""
    if b[0] != 1:
        raise ConstantTermNonzero(f"series_log needs b_0 = 1, got {b[0]}")
    a = [xp.mpf(0)]
    for k in range(1, len(b)):
        s = xp.fsum(j * a[j] * b[k - j] for j in range(1, k))
        a.append(b[k] - s / k)
    return PowerSeries(tuple(a))
