"""Adaptive panel Gauss-Legendre quadrature in working precision.

Each panel is integrated twice, with ``quad_order`` and ``quad_order // 2``
nodes; the difference is the panel's error estimate (pessimistic, since it
really measures the coarse rule). Panels are refined worst-first until the
summed estimate drops below ``max(abs_tol, rel_tol * |Q|)``.

Integrands may return real or complex values.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from ..errors import DepthExceeded, NonFiniteSample
from .xreal import XReal, xp, xreal

MAX_PANELS = 200_000


@dataclass(frozen=True)
class PrecisionConfig:
    abs_tol: XReal = field(default_factory=lambda: xreal("1e-18"))
    rel_tol: XReal = field(default_factory=lambda: xreal("1e-18"))
    max_subdivision_depth: int = 40
    quad_order: int = 32

    def __post_init__(self):
        object.__setattr__(self, "abs_tol", xreal(self.abs_tol))
        object.__setattr__(self, "rel_tol", xreal(self.rel_tol))
        if not self.abs_tol > 0 or not self.rel_tol > 0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivision_depth < 1:
            raise ValueError("max_subdivision_depth must be >= 1")
        if self.quad_order < 2:
            raise ValueError("quad_order must be >= 2")

    def with_tol(self, tol) -> PrecisionConfig:
        return PrecisionConfig(tol, tol, self.max_subdivision_depth, self.quad_order)


DEFAULT_CONFIG = PrecisionConfig()
# exploratory settings behind the CLI --fast switch; no accuracy promise
FAST_CONFIG = PrecisionConfig("1e-12", "1e-12", 30, 16)


def _legendre(n, x):
    p0, p1 = xp.mpf(1), x
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    dp = n * (x * p1 - p0) / (x * x - 1)
    return p1, dp


@lru_cache(maxsize=None)
def _gauss_legendre(n: int, prec: int):
    nodes, weights = [None] * n, [None] * n
    eps = xp.ldexp(xp.mpf(1), -prec + 4)
    for i in range((n + 1) // 2):
        x = xp.cos(xp.pi * (i + xp.mpf(3) / 4) / (n + xp.mpf(1) / 2))
        for _ in range(100):
            p, dp = _legendre(n, x)
            dx = p / dp
            x -= dx
            if abs(dx) <= eps:
                break
        p, dp = _legendre(n, x)
        w = 2 / ((1 - x * x) * dp * dp)
        nodes[i], nodes[n - 1 - i] = x, -x
        weights[i] = weights[n - 1 - i] = w
    if n % 2:
        nodes[n // 2] = xp.mpf(0)
    return tuple(nodes), tuple(weights)


def gauss_legendre(n: int):
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]."""
    return _gauss_legendre(n, xp.prec)


def fixed_gauss(f, a, b, n: int):
    """Non-adaptive n-point Gauss-Legendre rule on [a, b]."""
    nodes, weights = gauss_legendre(n)
    a, b = xreal(a), xreal(b)
    h = (b - a) / 2
    m = (a + b) / 2
    return h * xp.fsum(w * f(m + h * x) for x, w in zip(nodes, weights))


def _panel(f, a, b, order):
    hi_rule = gauss_legendre(order)
    lo_rule = gauss_legendre(max(order // 2, 1))
    h = (b - a) / 2
    m = (a + b) / 2
    out = []
    for nodes, weights in (hi_rule, lo_rule):
        vals = [f(m + h * x) for x in nodes]
        s = h * xp.fsum(w * v for w, v in zip(weights, vals))
        if not xp.isfinite(s):
            for x, v in zip(nodes, vals):
                if not xp.isfinite(v):
                    raise NonFiniteSample(f"integrand is {v} at {m + h * x}", node=m + h * x)
        out.append(s)
    q_hi, q_lo = out
    return q_hi, float(abs(q_hi - q_lo))


def integrate_with_error(f, a, b, cfg: PrecisionConfig = DEFAULT_CONFIG, breakpoints=()):
    """Adaptive integral of ``f`` over [a, b]; returns ``(value, error_estimate)``.

    ``breakpoints`` are interior points where the integrand is known to be
    rough (kinks, oscillation periods); they seed the initial panels.
    """
    a, b = xreal(a), xreal(b)
    if a > b:
        raise ValueError("integrate requires a <= b")
    if a == b:
        return xp.mpf(0), 0.0
    cuts = sorted({xreal(p) for p in breakpoints if a < xreal(p) < b})
    edges = [a, *cuts, b]

    counter = itertools.count()
    heap = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        q, err = _panel(f, lo, hi, cfg.quad_order)
        heapq.heappush(heap, (-err, next(counter), lo, hi, 0, q))

    abs_tol, rel_tol = float(cfg.abs_tol), float(cfg.rel_tol)
    total_err = sum(-item[0] for item in heap)
    approx = complex(xp.fsum(item[5] for item in heap))
    while True:
        tol = max(abs_tol, rel_tol * abs(approx))
        if total_err <= tol:
            return xp.fsum(item[5] for item in heap), total_err
        neg_err, _, lo, hi, depth, q_old = heap[0]
        if depth >= cfg.max_subdivision_depth or len(heap) >= MAX_PANELS:
            total = xp.fsum(item[5] for item in heap)
            raise DepthExceeded(
                f"quadrature on [{a}, {b}] stalled at depth {depth}: "
                f"estimate {total}, error {total_err:.3g} > {tol:.3g}",
                estimate=total, error=total_err,
            )
        heapq.heappop(heap)
        total_err += neg_err
        approx -= complex(q_old)
        mid = (lo + hi) / 2
        for l, r in ((lo, mid), (mid, hi)):
            q, err = _panel(f, l, r, cfg.quad_order)
            total_err += err
            approx += complex(q)
            heapq.heappush(heap, (-err, next(counter), l, r, depth + 1, q))
        # float drift from repeated += / -=
        if len(heap) % 64 == 0:
            total_err = sum(-item[0] for item in heap)


def integrate(f, a, b, cfg: PrecisionConfig = DEFAULT_CONFIG, breakpoints=()):
    """``∫_a^b f`` to ``max(abs_tol, rel_tol*|Q|)`` under the panel error estimate."""
    return integrate_with_error(f, a, b, cfg, breakpoints)[0]
