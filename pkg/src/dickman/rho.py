"""The Dickman function rho(u) and Broadhurst's F(alpha) = rho(1/alpha).

Two independent routes:

* :func:`rho_steps` integrates u rho'(u) = -rho(u-1) one unit interval at a
  time, sampling rho(u) = rho(n) - ∫_n^u rho(t-1)/t dt by adaptive
  quadrature at Chebyshev-Lobatto points and interpolating.
* :func:`rho_series` sums sum_k (-1)^k I_k(u)/k!, which is finite because
  I_k(u) = 0 for k >= u.

Spline files are ASCII: a header line ``RHOSPLINE v1`` followed by one line
``n d c_0 ... c_d`` per interval [n, n+1], where c_i are the Chebyshev
coefficients of the piece in x = 2(u - n) - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import DickmanError, IntervalBuildFailed, OutOfRange
from .iterated import I_k, default_evaluator
from .numkernel import (
    DEFAULT_CONFIG,
    ChebPiece,
    PrecisionConfig,
    from_decimal,
    integrate,
    to_decimal,
    xp,
    xreal,
)
from .numkernel.chebyshev import interpolate_values, lobatto_points

SPLINE_HEADER = "RHOSPLINE v1"
KNOT_TOL = xreal("1e-16")
DEFAULT_DEGREE = 24
_MAX_DEGREE = 64


@dataclass(frozen=True)
class RhoSpline:
    """Piecewise polynomial rho on [0, u_max], one Chebyshev piece per [n, n+1]."""

    pieces: tuple
    method: str = "steps"

    @property
    def u_max(self):
        return self.pieces[-1].b

    def _piece(self, u):
        n = int(xp.floor(u))
        if n == len(self.pieces):
            n -= 1
        return self.pieces[n]

    def __call__(self, u):
        u = xreal(u)
        if u < 0:
            raise OutOfRange(f"rho is defined for u >= 0, got {u}")
        if u <= 1:
            return xp.mpf(1)
        if u > self.u_max:
            raise OutOfRange(f"u = {u} beyond spline u_max = {self.u_max}")
        return self._piece(u)(u)

    def derivative(self, u):
        """rho'(u) from the polynomial derivative of the piece containing u."""
        u = xreal(u)
        if u < 1:
            return xp.mpf(0)
        if u > self.u_max:
            raise OutOfRange(f"u = {u} beyond spline u_max = {self.u_max}")
        return self._piece(u).derivative(u)

    def knot_jumps(self):
        return [abs(self.pieces[n - 1](n) - self.pieces[n](n)) for n in range(1, len(self.pieces))]


def _unit_piece():
    return ChebPiece(0, 1, [xp.mpf(1)])


def _build_interval(n, prev: ChebPiece, cfg, degree):
    """Piece on [n, n+1] for rho(u) = rho(n) - ∫_n^u prev(t-1)/t dt."""
    a, b = xp.mpf(n), xp.mpf(n + 1)
    start = prev(a)

    def integrand(t):
        return prev(t - 1) / t

    def sample(points):
        # points ascending; integrate between neighbours and accumulate
        vals, acc, left = [], xp.mpf(0), a
        for p in points:
            acc += integrate(integrand, left, p, cfg)
            vals.append(start - acc)
            left = p
        return vals

    while True:
        xs = list(reversed(lobatto_points(degree)))
        us = [(a + b) / 2 + x / 2 for x in xs]
        vals = sample(us)
        piece = ChebPiece(a, b, interpolate_values(list(reversed(vals))))
        # off-node check against fresh quadrature samples
        mids = [(us[i] + us[i + 1]) / 2 for i in range(0, len(us) - 1, 3)]
        resid = max(abs(piece(m) - v) for m, v in zip(mids, sample(mids)))
        if resid <= max(cfg.abs_tol, xp.ldexp(xp.mpf(1), 16 - xp.prec)):
            return piece
        if degree >= _MAX_DEGREE:
            raise IntervalBuildFailed(
                f"rho interval [{n}, {n + 1}] residual {resid} at degree {degree}", interval=n)
        degree += 8


def rho_steps(u_max=10, cfg: PrecisionConfig = DEFAULT_CONFIG, degree: int = DEFAULT_DEGREE) -> RhoSpline:
    """Method-of-steps spline covering [0, ceil(u_max)]."""
    u_max = xreal(u_max)
    if u_max < 1:
        raise ValueError("u_max must be >= 1")
    last = max(1, int(xp.ceil(u_max)))
    pieces = [_unit_piece()]
    for n in range(1, last):
        try:
            pieces.append(_build_interval(n, pieces[-1], cfg, degree))
        except IntervalBuildFailed:
            raise
        except DickmanError as exc:
            raise IntervalBuildFailed(f"rho interval [{n}, {n + 1}]: {exc}", interval=n) from exc
    return RhoSpline(tuple(pieces), "steps")


def rho_series(u, cfg: PrecisionConfig = DEFAULT_CONFIG):
    """rho(u) = sum_{k < u} (-1)^k I_k(u) / k!."""
    u = xreal(u)
    if u < 0:
        raise ValueError("rho_series needs u >= 0")
    ev = default_evaluator(cfg)
    terms = []
    k = 0
    while k == 0 or k < u:
        terms.append((-1) ** k * I_k(k, u, cfg, evaluator=ev) / xp.factorial(k))
        k += 1
    return xp.fsum(terms)


def rho_series_spline(u_max=10, cfg: PrecisionConfig = DEFAULT_CONFIG, degree: int = 32) -> RhoSpline:
    """Spline interpolating :func:`rho_series` at Lobatto points of each unit interval."""
    last = max(1, int(xp.ceil(xreal(u_max))))
    pieces = [_unit_piece()]
    for n in range(1, last):
        pieces.append(ChebPiece.fit(lambda u: rho_series(u, cfg), n, n + 1, degree))
    return RhoSpline(tuple(pieces), "series")


@lru_cache(maxsize=4)
def _default_spline(u_max: int, prec: int) -> RhoSpline:
    return rho_steps(u_max)


def default_spline(u_max: int = 10) -> RhoSpline:
    return _default_spline(u_max, xp.prec)


def rho(u, spline: RhoSpline | None = None):
    """rho(u) from a spline (the cached default covers [0, 10])."""
    u = xreal(u)
    if spline is None:
        spline = default_spline(max(10, int(math.ceil(float(u)))))
    return spline(u)


class FView:
    """F(alpha) = rho(1/alpha) over a spline."""

    def __init__(self, spline: RhoSpline | None = None):
        self.spline = spline or default_spline()

    def __call__(self, alpha):
        alpha = xreal(alpha)
        if not alpha > 0:
            raise ValueError("F needs alpha > 0")
        if alpha >= 1:
            return xp.mpf(1)
        u = 1 / alpha
        if u > self.spline.u_max:
            raise OutOfRange(f"1/alpha = {u} beyond spline u_max = {self.spline.u_max}")
        return self.spline(u)

    def derivative(self, alpha):
        """F'(alpha) = -rho'(1/alpha) / alpha^2."""
        alpha = xreal(alpha)
        if alpha >= 1:
            return xp.mpf(0)
        return -self.spline.derivative(1 / alpha) / (alpha * alpha)


def F(alpha, spline: RhoSpline | None = None):
    return FView(spline)(alpha)


def save_spline(spline: RhoSpline, path) -> None:
    lines = [SPLINE_HEADER]
    for n, piece in enumerate(spline.pieces):
        coeffs = " ".join(to_decimal(c) for c in piece.coeffs)
        lines.append(f"{n} {piece.degree} {coeffs}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def load_spline(path, method: str = "steps") -> RhoSpline:
    """Read a spline file and check knot continuity."""
    text = Path(path).read_text(encoding="ascii").splitlines()
    if not text or text[0].strip() != SPLINE_HEADER:
        raise ValueError(f"{path}: missing '{SPLINE_HEADER}' header")
    pieces = []
    for lineno, line in enumerate(text[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        n, d = int(fields[0]), int(fields[1])
        if n != len(pieces):
            raise ValueError(f"{path}:{lineno}: expected interval {len(pieces)}, got {n}")
        coeffs = [from_decimal(f) for f in fields[2:]]
        if len(coeffs) != d + 1:
            raise ValueError(f"{path}:{lineno}: degree {d} but {len(coeffs)} coefficients")
        pieces.append(ChebPiece(n, n + 1, coeffs))
    spline = RhoSpline(tuple(pieces), method)
    for n, jump in enumerate(spline.knot_jumps(), start=1):
        if jump > KNOT_TOL:
            raise ValueError(f"{path}: discontinuity {jump} at knot {n}")
    return spline
