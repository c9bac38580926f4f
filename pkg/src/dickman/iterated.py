"""Iterated integrals I_k(u), Dickman polylogarithms L_k(t), Ramanujan's nested integrals.

I_k(u) is the integral of dt_1/t_1 ... dt_k/t_k over {t_i >= 1, sum t_i <= u}.
Its Laplace-Stieltjes transform is E_1(s)**k, and differentiating in s gives

    u * I_k'(u) = k * I_{k-1}(u - 1),   I_k(k) = 0,

a delay equation of the same shape as Dickman's. :class:`IkEvaluator` solves
it by the method of steps. I_k is analytic on (k, inf) and its continuation
is singular only at the integers below k, so I_k is stored as Chebyshev
pieces on the panels [k - 1 + 2**m, k - 1 + 2**(m+1)]; every panel sees its
nearest singularity at the same relative distance, and panel m of I_k reads
I_{k-1} exactly on panel m of I_{k-1}. Reaching u = 1e4 takes 14 panels.

The convolution recursion I_k(u) = ∫_1^{u-k+1} I_{k-1}(u-t) dt/t is kept as
an independent route (``method="convolution"``). I_0 = 1 and I_1 = log u are
used in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DepthExceeded, RecursionBudgetExceeded
from .numkernel import (
    DEFAULT_CONFIG,
    ChebPiece,
    PrecisionConfig,
    gauss_legendre,
    integrate,
    xp,
    xreal,
)

_MIN_DEGREE = 32
_MAX_DEGREE = 256


class IkEvaluator:
    """Memoized piecewise-polynomial representation of I_0, ..., I_k.

    Panels are built lazily the first time a (k, u) pair needs them and never
    change afterwards, so reads after construction are thread-safe.
    """

    def __init__(self, k_max: int = 0, cfg: PrecisionConfig = DEFAULT_CONFIG):
        self.cfg = cfg
        self.k_max = 0
        self._pieces: dict[int, list[ChebPiece]] = {}
        self.cache: dict[tuple, object] = {}
        self._fit_tol = max(min(cfg.abs_tol, cfg.rel_tol) * xreal("1e-4"),
                            xp.ldexp(xp.mpf(1), 20 - xp.prec))
        for k in range(2, k_max + 1):
            self._ensure(k, xp.mpf(k + 1))

    @staticmethod
    def panel_edges(k: int, m: int):
        return xp.mpf(k - 1 + 2 ** m), xp.mpf(k - 1 + 2 ** (m + 1))

    @staticmethod
    def _panel_index(k: int, u) -> int:
        d = float(u - (k - 1))
        m = max(0, math.frexp(d)[1] - 1)
        # float rounding can land one panel off at an edge
        while m > 0 and k - 1 + 2 ** m > u:
            m -= 1
        while k - 1 + 2 ** (m + 1) < u:
            m += 1
        return m

    def _build_panel(self, k: int, m: int) -> ChebPiece:
        a, b = self.panel_edges(k, m)
        if m == 0:
            start = xp.mpf(0)
        else:
            start = self._pieces[k][m - 1](a)

        def slope(v):
            return k * self.value(k - 1, v - 1) / v

        degree = _MIN_DEGREE
        while True:
            piece = ChebPiece.fit(slope, a, b, degree)
            scale = max(abs(c) for c in piece.coeffs)
            if piece.tail_magnitude() <= self._fit_tol * scale:
                break
            if degree >= _MAX_DEGREE:
                raise DepthExceeded(
                    f"I_{k} panel [{a}, {b}] did not resolve at degree {degree}",
                    error=float(piece.tail_magnitude()),
                )
            degree *= 2
        prim = piece.antiderivative()
        coeffs = list(prim.coeffs)
        coeffs[0] += start
        return ChebPiece(a, b, coeffs)

    def _ensure(self, k: int, u) -> None:
        if k <= 1:
            return
        if k - 1 > 1:
            self._ensure(k - 1, u - 1)
        pieces = self._pieces.setdefault(k, [])
        need = self._panel_index(k, u)
        while len(pieces) <= need:
            pieces.append(self._build_panel(k, len(pieces)))
        self.k_max = max(self.k_max, k)

    def value(self, k: int, u):
        """I_k(u) from the stored pieces."""
        if k < 0:
            raise ValueError("k must be >= 0")
        if k == 0:
            return xp.mpf(1)
        u = xreal(u)
        if u <= k:
            return xp.mpf(0)
        if k == 1:
            return xp.log(u)
        key = (k, u)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        self._ensure(k, u)
        val = self._pieces[k][self._panel_index(k, u)](u)
        self.cache[key] = val
        return val

    def derivative(self, k: int, u):
        """I_k'(u) = k I_{k-1}(u-1) / u."""
        u = xreal(u)
        if k == 0 or u <= k:
            return xp.mpf(0)
        return k * self.value(k - 1, u - 1) / u

    def pieces(self, k: int):
        return tuple(self._pieces.get(k, ()))


@lru_cache(maxsize=8)
def _shared_evaluator(cfg: PrecisionConfig, prec: int) -> IkEvaluator:
    return IkEvaluator(cfg=cfg)


def default_evaluator(cfg: PrecisionConfig = DEFAULT_CONFIG) -> IkEvaluator:
    return _shared_evaluator(cfg, xp.prec)


def _convolution(k: int, u, cfg: PrecisionConfig, ev: IkEvaluator):
    upper = u - (k - 1)
    cuts = []
    m = 0
    while 2 ** m < upper:
        cuts.append(xp.mpf(2 ** m))
        # u - t on an edge of I_{k-1}'s panels
        cuts.append(u - (k - 2) - 2 ** m)
        m += 1
    return integrate(lambda t: ev.value(k - 1, u - t) / t, 1, upper, cfg, breakpoints=cuts)


def I_k(k: int, u, cfg: PrecisionConfig = DEFAULT_CONFIG, method: str = "steps",
        evaluator: IkEvaluator | None = None):
    """I_k(u). ``method`` is "steps" (delay equation) or "convolution"."""
    if k < 0:
        raise ValueError("k must be >= 0")
    u = xreal(u)
    if k == 0:
        return xp.mpf(1)
    if u <= k:
        return xp.mpf(0)
    ev = evaluator or default_evaluator(cfg)
    if method == "steps":
        return ev.value(k, u)
    if method == "convolution":
        return _convolution(k, u, cfg, ev)
    raise ValueError(f"unknown method {method!r}")


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.spent = 0


def _polylog_recursive(k, t, nodes, weights, budget):
    if k == 0:
        return xp.mpf(1)
    if t * k >= 1:
        return xp.mpf(0)
    budget.spent += len(nodes)
    if budget.spent > budget.limit:
        raise RecursionBudgetExceeded(f"more than {budget.limit} integrand evaluations")
    # x = e^w turns dx/x into dw
    lo, hi = xp.log(t), -xp.log(k)
    h = (hi - lo) / 2
    mid = (hi + lo) / 2
    acc = []
    for x, w in zip(nodes, weights):
        ex = xp.exp(mid + h * x)
        acc.append(w * _polylog_recursive(k - 1, ex / (1 - ex), nodes, weights, budget))
    return -h * xp.fsum(acc)


def L_k(k: int, t, cfg: PrecisionConfig = DEFAULT_CONFIG, method: str = "identity",
        order: int = 24, budget: int = 2_000_000):
    """Dickman polylogarithm L_k(t).

    ``method="identity"`` uses L_k(t) = (-1)^k / k! * I_k(1/t).
    ``method="recursion"`` evaluates L_k(t) = -∫_t^{1/k} L_{k-1}(x/(1-x)) dx/x
    directly with an ``order``-point Gauss rule per level; its cost is about
    order**k evaluations, capped by ``budget``.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    t = xreal(t)
    if not t > 0:
        raise ValueError("L_k needs t > 0")
    if k == 0:
        return xp.mpf(1)
    if t * k >= 1:
        return xp.mpf(0)
    if method == "identity":
        return (-1) ** k * I_k(k, 1 / t, cfg) / xp.factorial(k)
    if method == "recursion":
        if order ** k > budget:
            raise RecursionBudgetExceeded(
                f"L_{k} by recursion needs ~{order ** k} evaluations, budget {budget}")
        nodes, weights = gauss_legendre(order)
        return _polylog_recursive(k, t, nodes, weights, _Budget(budget))
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class RamanujanTerm:
    depth: int
    epsilon: object
    value: object


def ramanujan_nested(j: int, epsilon, cfg: PrecisionConfig = DEFAULT_CONFIG,
                     limits: str = "simplex") -> RamanujanTerm:
    """Ramanujan's j-fold nested integral of dλ_0/λ_0 ... dλ_{j-1}/λ_{j-1}.

    The outer variable runs over [ε, 1/j] and each inner λ_i over
    [λ_{i+1}, upper_i]. With ``limits="simplex"`` upper_i is
    (1 - λ_{i+1} - ... - λ_{j-1}) / (i+1), which is the ordered form of
    {λ >= ε, sum λ <= 1} and equals I_j(1/ε)/j!. ``limits="quoted"`` uses
    the literal pattern (1 - λ_{i+1}) / (i+1) at every level; the two agree for
    j <= 2 and differ from j = 3 on.
    """
    if j < 1:
        raise ValueError("depth must be >= 1")
    if limits not in ("simplex", "quoted"):
        raise ValueError(f"unknown limits {limits!r}")
    eps = xreal(epsilon)
    if not eps > 0:
        raise ValueError("epsilon must be positive")

    def upper_limit(i, prev, consumed):
        if i == j - 1:
            return xp.mpf(1) / j
        if limits == "simplex":
            return (1 - consumed) / (i + 1)
        return (1 - prev) / (i + 1)

    def level(i, lower, prev, consumed):
        hi = upper_limit(i, prev, consumed)
        if not hi > lower:
            return xp.mpf(0)
        if i == 0:
            return xp.log(hi / lower)

        def integrand(w):
            lam = xp.exp(w)
            return level(i - 1, lam, lam, consumed + lam)

        return integrate(integrand, xp.log(lower), xp.log(hi), cfg)

    value = level(j - 1, eps, None, xp.mpf(0))
    return RamanujanTerm(j, eps, value)
