"""A quick self-check of the invariants every module promises.

Each check returns a :class:`Check`; :func:`run_all` collects them. Random
sample points come from ``numpy.random.default_rng(seed)`` so a run is
reproducible. The whole suite takes a few seconds at default precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import asymptotic, constants, iterated, rho, sieve
from .numkernel import (
    DEFAULT_CONFIG,
    PowerSeries,
    euler_gamma,
    series_exp,
    series_log,
    xp,
    xreal,
    zeta_em,
    zeta_even,
)


@dataclass(frozen=True)
class Check:
    module: str
    name: str
    ok: bool
    detail: str = ""


def _close(a, b, tol) -> tuple[bool, str]:
    diff = abs(a - b)
    return bool(diff <= xreal(tol)), f"|diff| = {xp.nstr(diff, 3)} (tol {tol})"


def _numkernel(rng, cfg):
    ok, d = _close(zeta_em(4), zeta_even(4), "1e-25")
    yield Check("numkernel", "zeta(4) two routes", ok, d)
    a = PowerSeries(tuple(xreal(v) for v in [0, *rng.uniform(-1, 1, 7)]))
    back = series_log(series_exp(a))
    ok, d = _close(max(abs(x - y) for x, y in zip(back.coeffs, a.coeffs)), 0, "1e-25")
    yield Check("numkernel", "log(exp(a)) = a", ok, d)


def _constants(rng, cfg):
    table = constants.constants_from_zeta(30)
    yield Check("constants", "C_0 = 1, C_1 = 0", table.C[0] == 1 and table.C[1] == 0)
    ok, d = _close(table.C[2], -xp.pi ** 2 / 12, "1e-25")
    yield Check("constants", "C_2 = -pi^2/12", ok, d)
    ok, d = _close(table.series(-1), xp.exp(-euler_gamma()), "1e-6")
    yield Check("constants", "sum C_k (-1)^k = e^-gamma", ok, d)
    worst = max(abs(c) / (k + 1) for k, c in enumerate(table.C))
    yield Check("constants", "|C_k| <= 10 (k+1)", bool(worst <= 10), f"max |C_k|/(k+1) = {xp.nstr(worst, 4)}")
    hank = constants.constants_from_contour(3)
    ok, d = _close(max(abs(x - y) for x, y in zip(hank.C, table.C)), 0, "1e-8")
    yield Check("constants", "Hankel route = zeta route (k <= 3)", ok, d)


def _iterated(rng, cfg):
    u = xreal(float(rng.uniform(3.2, 6.0)))
    ok, d = _close(iterated.I_k(2, u, cfg, method="convolution"), iterated.I_k(2, u, cfg), "1e-15")
    yield Check("iterated", f"I_2({float(u):.4f}) steps = convolution", ok, d)
    t = xreal(float(rng.uniform(0.1, 0.45)))
    ok, d = _close(iterated.L_k(2, t, cfg, method="recursion"), iterated.L_k(2, t, cfg), "1e-15")
    yield Check("iterated", f"L_2({float(t):.4f}) recursion = identity", ok, d)
    term = iterated.ramanujan_nested(2, "0.4", cfg)
    ok, d = _close(term.value, iterated.I_k(2, xreal("2.5"), cfg) / 2, "1e-15")
    yield Check("iterated", "nested_2(0.4) = I_2(2.5)/2", ok, d)


def _rho(rng, cfg):
    spline = rho.default_spline(10)
    ok, d = _close(spline(2), 1 - xp.log(2), "1e-15")
    yield Check("rho", "rho(2) = 1 - log 2", ok, d)
    pts = [xreal(float(p)) for p in rng.uniform(1, 10, 20)]
    worst = max(abs(u * spline.derivative(u) + spline(u - 1)) for u in pts)
    yield Check("rho", "u rho'(u) + rho(u-1) = 0", bool(worst <= xreal("1e-12")), f"max residual {xp.nstr(worst, 3)}")
    u = xreal(float(rng.uniform(2, 6)))
    ok, d = _close(spline(u), rho.rho_series(u, cfg), "1e-15")
    yield Check("rho", f"steps = series at u = {float(u):.4f}", ok, d)


def _asymptotic(rng, cfg):
    D = constants.constants_from_zeta(4)
    exact = all(asymptotic.expand_Ik(1, u, D).abs_error == 0 for u in (10, 100, 1000))
    yield Check("asymptotic", "k = 1 expansion exact", exact)
    res = asymptotic.perron_integral(0)
    ok, d = _close(res.value, res.closed_form, "1e-10")
    yield Check("asymptotic", "Perron lambda = 0 matches arctan(T/c)/pi", ok, d)
    s = xp.mpc(float(rng.uniform(0.1, 5)), float(rng.uniform(-20, 20)))
    g = asymptotic.g_diag(float(rng.uniform(1, 50)), s)
    yield Check("asymptotic", "G(u,s) bounds", g.G_ok and g.dG_ok)


def _sieve(rng, cfg):
    res = sieve.smooth_count(100, 2)
    brute = sum(1 for n in range(1, 101) if _largest_prime(n) <= 10)
    yield Check("sieve", "Psi(100, 10) = brute force", res.count == brute, f"{res.count} vs {brute}")
    x = 10 ** 5
    counts = [sieve.psi(x, y) for y in (10, 100, 1000, x)]
    yield Check("sieve", "Psi monotone in y", counts == sorted(counts) and counts[-1] == x)
    ap = sieve.almost_prime_count(10 ** 4, 2)
    yield Check("sieve", "count_Omega <= count_omega", ap.count_Omega <= ap.count_omega)
    ok, d = _close(sieve.ramanujan_sum("0.45", 2, cfg), rho.rho(1 / xreal("0.45")), "1e-9")
    yield Check("sieve", "Ramanujan sum = rho(1/0.45)", ok, d)


def _largest_prime(n: int) -> int:
    best, p = 1, 2
    while p * p <= n:
        while n % p == 0:
            best, n = p, n // p
        p += 1
    return max(best, n) if n > 1 else best


SUITES = (_numkernel, _constants, _iterated, _rho, _asymptotic, _sieve)


def run_all(seed: int = 0, cfg=DEFAULT_CONFIG) -> list[Check]:
    rng = np.random.default_rng(seed)
    out = []
    for suite in SUITES:
        out.extend(suite(rng, cfg))
    return out
