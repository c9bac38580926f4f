"""Dickman constants C_k, D_k = (-1)^k k! C_k and their generating function.

Two routes to C_k:

* zeta series: log(e^{γz}/Γ(1-z)) = -sum_{n>=2} zeta(n) z^n / n, so C_k are
  the coefficients of the exponential of that series.
* contour: the absolutely convergent integral

      C_k = 1/k! * 1/(2πi) ∫ e^s [(log s + γ)^k - k (log s + γ)^{k-1}] / s^2 ds

  along either the vertical line Re s = c (truncated at |Im s| = T) or a
  Hankel loop around the negative real axis.

CSV export columns: ``k,C_k,D_k,method,err_bound``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import BranchCutTouched, InsufficientZetaTable, TailTooLarge
from .numkernel import (
    PowerSeries,
    PrecisionConfig,
    ZetaTable,
    euler_gamma,
    integrate_with_error,
    rgamma,
    series_exp,
    to_decimal,
    unit_roundoff,
    xcomplex,
    xp,
    xreal,
    zeta_values,
)

METHODS = ("zeta_series", "contour_vertical", "contour_hankel")
CONTOUR_CONFIG = PrecisionConfig("1e-16", "1e-16", 50, 32)


@dataclass(frozen=True)
class CoeffTable:
    k_max: int
    C: tuple
    D: tuple
    method: str
    err_bound: tuple

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if not len(self.C) == len(self.D) == len(self.err_bound) == self.k_max + 1:
            raise ValueError("table arrays must have k_max + 1 entries")

    @classmethod
    def from_C(cls, C, method, err_bound=None) -> CoeffTable:
        C = tuple(C)
        D = tuple((-1) ** j * xp.factorial(j) * c for j, c in enumerate(C))
        if err_bound is None:
            err_bound = (xp.mpf(0),) * len(C)
        return cls(len(C) - 1, C, D, method, tuple(err_bound))

    def series(self, z):
        """Partial sum sum_{k <= k_max} C_k z^k."""
        z = xcomplex(z)
        acc = xp.mpc(0)
        for c in reversed(self.C):
            acc = acc * z + c
        return acc

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "C_k", "D_k", "method", "err_bound"])
        for k in range(self.k_max + 1):
            w.writerow([k, to_decimal(self.C[k]), to_decimal(self.D[k]), self.method,
                        to_decimal(self.err_bound[k])])
        return buf.getvalue()


def constants_from_zeta(k_max: int, zt: ZetaTable | None = None) -> CoeffTable:
    """C_0..C_{k_max} from exp(-sum_{n>=2} zeta(n) z^n / n)."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    if zt is None:
        zt = zeta_values(max(k_max, 2))
    if zt.n_max < k_max:
        raise InsufficientZetaTable(f"need zeta(n) up to n = {k_max}, table stops at {zt.n_max}")
    log_series = [xp.mpf(0)] * (k_max + 1)
    for n in range(2, k_max + 1):
        log_series[n] = -zt[n] / n
    C = series_exp(PowerSeries(tuple(log_series))).coeffs
    # exact rationals over exact zeta values: only rounding remains
    eps = unit_roundoff()
    err = tuple(eps * (k + 1) * max(1, abs(c)) for k, c in enumerate(C))
    return CoeffTable.from_C(C, "zeta_series", err)


@dataclass(frozen=True)
class ContourSpec:
    """Integration path for the contour route.

    ``kind="vertical"``: s = c + it, |t| <= T.
    ``kind="hankel"``: s = -x - iδ for x from x_max to 0, the right half of
    |s| = δ, then s = -x + iδ back out to x_max.
    """

    kind: str
    c: object = None
    T: object = None
    delta: object = None
    x_max: object = None
    node_budget: int = 5_000_000

    def __post_init__(self):
        if self.kind == "vertical":
            if not xreal(self.c) > 0 or not xreal(self.T) > 0:
                raise ValueError("vertical contour needs c > 0 and T > 0")
        elif self.kind == "hankel":
            if not 0 < xreal(self.delta) < 1 or not xreal(self.x_max) > 1:
                raise ValueError("hankel contour needs 0 < delta < 1 and x_max > 1")
        else:
            raise ValueError(f"unknown contour kind {self.kind!r}")

    @classmethod
    def vertical(cls, c=1, T=10 ** 6, node_budget: int = 5_000_000) -> ContourSpec:
        return cls("vertical", c=c, T=T, node_budget=node_budget)

    @classmethod
    def hankel(cls, delta="1e-3", x_max=60) -> ContourSpec:
        return cls("hankel", delta=delta, x_max=x_max)


def _alt_integrand(k, gamma):
    def h(s):
        L = xp.log(s) + gamma
        body = L ** k - k * L ** (k - 1) if k else xp.mpf(1)
        return xp.exp(s) * body / (s * s)
    return h


def _hankel_one(k, spec, cfg, gamma):
    delta, x_max = xreal(spec.delta), xreal(spec.x_max)
    h = _alt_integrand(k, gamma)
    # rays: conjugate symmetry folds both into -(1/π) ∫_0^xmax Im h(-x + iδ) dx
    cuts = []
    p = delta
    while p < x_max:
        cuts.append(p)
        p *= 4
    ray, ray_err = integrate_with_error(
        lambda x: xp.im(h(xp.mpc(-x, delta))), 0, x_max, cfg, breakpoints=cuts)
    # arc s = δ e^{iθ}, θ in [-π/2, π/2]: (1/π) ∫_0^{π/2} Re[h(s) s] dθ
    arc, arc_err = integrate_with_error(
        lambda th: xp.re(h(delta * xp.expj(th)) * delta * xp.expj(th)), 0, xp.pi / 2, cfg)
    value = (arc - ray) / xp.pi / xp.factorial(k)
    # |h(-x)| <= e^{-x} (k+1) (log x + γ + π + 1)^k / x^2 beyond x_max
    tail = xp.exp(-x_max) * (k + 1) * (xp.log(x_max) + gamma + xp.pi + 1) ** k / x_max ** 2
    err = (xp.mpf(ray_err + arc_err) / xp.pi + tail / xp.pi) / xp.factorial(k)
    return value, err, tail


def vertical_tail_bound(k, c, T, gamma):
    """(2/2π) e^c (log T + γ + π/2 + k)^k / (k! T)."""
    c, T = xreal(c), xreal(T)
    return 2 / (2 * xp.pi) * xp.exp(c) * (xp.log(T) + gamma + xp.pi / 2 + k) ** k / (xp.factorial(k) * T)


def _far_field(k_max, c, t0, T, node_budget, gamma, original=False):
    """(1/π) ∫_{t0}^T Re h_k(c + it) dt for all k <= k_max, in float64.

    The integrand there is O((log t)^k / t^2) and oscillates with period 2π,
    so one 16-point Gauss rule per period is ample and double precision
    carries the required absolute accuracy.
    """
    out = np.zeros(k_max + 1)
    if T <= t0:
        return out
    periods = int(np.ceil((T - t0) / (2 * np.pi)))
    if periods * 16 > node_budget:
        raise ValueError(f"vertical contour needs {periods * 16} far-field nodes, budget {node_budget}")
    x, w = np.polynomial.legendre.leggauss(16)
    edges_all = np.minimum(t0 + 2 * np.pi * np.arange(periods + 1), T)
    chunk = 20_000
    for start in range(0, periods, chunk):
        edges = edges_all[start:start + chunk + 1]
        lo, hi = edges[:-1, None], edges[1:, None]
        t = ((lo + hi) / 2 + (hi - lo) / 2 * x).ravel()
        wt = ((hi - lo) / 2 * w).ravel()
        s = c + 1j * t
        L = np.log(s) + gamma
        base = np.exp(s) / s
        if not original:
            base = base / s
        Lpow_prev = np.zeros_like(L)
        Lpow = np.ones_like(L)
        fact = 1.0
        for k in range(k_max + 1):
            if k:
                fact *= k
            vals = base * Lpow if original else base * (Lpow - k * Lpow_prev)
            out[k] += np.dot(wt, vals.real) / np.pi / fact
            Lpow_prev, Lpow = Lpow, Lpow * L
    return out


def _vertical(k_max, spec, cfg, gamma, tol):
    c, T = xreal(spec.c), xreal(spec.T)
    if not c > 0:
        raise BranchCutTouched("vertical contour must stay in Re s > 0")
    t0 = min(T, 64 * 2 * xp.pi)
    near_cuts = [2 * xp.pi * i for i in range(1, 64)]
    far = _far_field(k_max, float(c), float(t0), float(T), spec.node_budget, float(gamma))
    C, errs = [], []
    for k in range(k_max + 1):
        h = _alt_integrand(k, gamma)
        # conjugate symmetry: (1/2πi) ∫_{-T}^{T} h i dt = (1/π) ∫_0^T Re h dt
        near, near_err = integrate_with_error(
            lambda t: xp.re(h(xp.mpc(c, t))), 0, t0, cfg, breakpoints=near_cuts)
        val = near / xp.pi / xp.factorial(k) + xreal(far[k])
        tail = vertical_tail_bound(k, c, T, gamma)
        if tol is not None and tail > xreal(tol):
            raise TailTooLarge(f"C_{k}: vertical tail bound {tail} exceeds {tol}", k=k, tail=tail)
        C.append(val)
        errs.append(tail + xreal(near_err) / xp.pi / xp.factorial(k) + xreal("1e-15"))
    return C, errs


def constants_from_contour(k_max: int, spec: ContourSpec | None = None,
                           cfg: PrecisionConfig = CONTOUR_CONFIG, tol=None) -> CoeffTable:
    """C_k by contour integration; ``err_bound`` records quadrature + truncation error.

    ``tol`` (optional) makes a truncation bound above it raise TailTooLarge.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    spec = spec or ContourSpec.hankel()
    gamma = euler_gamma()
    if spec.kind == "hankel":
        C, errs = [], []
        for k in range(k_max + 1):
            val, err, tail = _hankel_one(k, spec, cfg, gamma)
            if tol is not None and tail > xreal(tol):
                raise TailTooLarge(f"C_{k}: Hankel tail {tail} exceeds {tol}", k=k, tail=tail)
            C.append(val)
            errs.append(err)
        return CoeffTable.from_C(C, "contour_hankel", errs)
    C, errs = _vertical(k_max, spec, cfg, gamma, tol)
    return CoeffTable.from_C(C, "contour_vertical", errs)


def contour_original_diagnostic(k: int, c=1, T=10 ** 5):
    """Symmetric truncation of the conditionally convergent defining integral

        1/k! * 1/(2πi) ∫_{c-iT}^{c+iT} e^s/s (log s + γ)^k ds.

    Diagnostic only: the truncation error decays like (log T)^k / T with no
    accuracy promise. Evaluated in float64.
    """
    gamma = float(euler_gamma())
    x, w = np.polynomial.legendre.leggauss(24)
    near_edges = np.linspace(0.0, min(float(T), 2 * np.pi * 8), 65)
    lo, hi = near_edges[:-1, None], near_edges[1:, None]
    t = ((lo + hi) / 2 + (hi - lo) / 2 * x).ravel()
    wt = ((hi - lo) / 2 * w).ravel()
    s = float(c) + 1j * t
    near = np.dot(wt, (np.exp(s) / s * (np.log(s) + gamma) ** k).real) / np.pi / float(xp.factorial(k))
    far = _far_field(k, float(c), float(near_edges[-1]), float(T), 10 ** 8, gamma, original=True)
    return near + far[k]


def genfun(z):
    """e^{γz} / Γ(1 - z) by a direct reciprocal-gamma evaluation."""
    z = xcomplex(z)
    return xp.exp(euler_gamma() * z) * rgamma(1 - z)
