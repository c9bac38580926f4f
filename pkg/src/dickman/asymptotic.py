"""The log-power expansion of I_k(u) and L_k(t), its error, and proof diagnostics.

    I_k(u) = sum_j binom(k, j) D_j (log u)^{k-j} + O((log u)^k / u)
    L_k(t) = sum_j C_j (log t)^{k-j} / (k-j)!   + O(t |log t|^k)

Reports export as CSV ``k,u,expansion,truth,abs_error,scaled_error`` or as a
JSON array of objects with the same fields.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import comb

from .iterated import I_k, L_k
from .numkernel import (
    PrecisionConfig,
    euler_gamma,
    gauss_legendre,
    integrate_with_error,
    to_decimal,
    xcomplex,
    xp,
    xreal,
)
from .constants import CoeffTable

REPORT_FIELDS = ("k", "u", "expansion", "truth", "abs_error", "scaled_error")


@dataclass(frozen=True)
class ExpansionReport:
    k: int
    u: object
    terms: tuple
    expansion_sum: object
    truth: object
    abs_error: object
    scaled_error: object

    def row(self) -> dict:
        return {
            "k": self.k,
            "u": self.u,
            "expansion": self.expansion_sum,
            "truth": self.truth,
            "abs_error": self.abs_error,
            "scaled_error": self.scaled_error,
        }


def _check_table(table: CoeffTable, k: int):
    if table.k_max < k:
        raise ValueError(f"coefficient table stops at k = {table.k_max}, need {k}")


def expand_Ik(k: int, u, D: CoeffTable, cfg: PrecisionConfig | None = None) -> ExpansionReport:
    """Compare sum_j binom(k,j) D_j (log u)^{k-j} with I_k(u)."""
    u = xreal(u)
    if not u > 1:
        raise ValueError("expand_Ik needs u > 1")
    _check_table(D, k)
    lu = xp.log(u)
    terms = tuple(comb(k, j) * D.D[j] * lu ** (k - j) for j in range(k + 1))
    total = xp.fsum(terms)
    truth = I_k(k, u) if cfg is None else I_k(k, u, cfg)
    err = abs(truth - total)
    return ExpansionReport(k, u, terms, total, truth, err, u * err / lu ** k)


def expand_Lk(k: int, t, C: CoeffTable, method: str = "identity") -> ExpansionReport:
    """Compare sum_j C_j (log t)^{k-j}/(k-j)! with L_k(t).

    ``scaled_error`` here is abs_error / (t |log t|^k), the L-form O-term.
    """
    t = xreal(t)
    if not 0 < t < 1:
        raise ValueError("expand_Lk needs 0 < t < 1")
    _check_table(C, k)
    lt = xp.log(t)
    terms = tuple(C.C[j] * lt ** (k - j) / xp.factorial(k - j) for j in range(k + 1))
    total = xp.fsum(terms)
    truth = L_k(k, t, method=method)
    err = abs(truth - total)
    return ExpansionReport(k, t, terms, total, truth, err, err / (t * abs(lt) ** k))


def geometric_grid(start, stop, npoints: int):
    start, stop = xreal(start), xreal(stop)
    if npoints == 1:
        return [start]
    ratio = (stop / start) ** (xp.mpf(1) / (npoints - 1))
    grid = [start * ratio ** i for i in range(npoints)]
    grid[-1] = stop
    # 10:10000:4 should give exact decades, not 99.999...
    snap = xp.ldexp(xp.mpf(1), 12 - xp.prec)
    return [xp.nint(g) if abs(g - xp.nint(g)) <= snap * g else g for g in grid]


@dataclass(frozen=True)
class DecayScan:
    reports: tuple
    bounded: bool
    ratio_to_first: object

    @property
    def scaled_errors(self):
        return [r.scaled_error for r in self.reports]


def error_decay_scan(k: int, u_grid, D: CoeffTable) -> DecayScan:
    """Reports over an ascending grid with u > e.

    ``bounded`` is True when the largest scaled error on the upper half of the
    grid does not exceed the largest on the lower half. ``ratio_to_first`` is
    max(scaled_error) / scaled_error(first grid point).
    """
    grid = [xreal(u) for u in u_grid]
    if any(u <= xp.e for u in grid):
        raise ValueError("grid values must exceed e")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be ascending")
    reports = tuple(expand_Ik(k, u, D) for u in grid)
    scaled = [r.scaled_error for r in reports]
    half = len(scaled) // 2
    lower, upper = scaled[:max(half, 1)], scaled[half:]
    bounded = max(upper) <= max(lower)
    first = scaled[0]
    ratio = max(scaled) / first if first > 0 else (xp.mpf(0) if max(scaled) == 0 else xp.inf)
    return DecayScan(reports, bounded, ratio)


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_FIELDS)
    for r in reports:
        row = r.row()
        w.writerow([row["k"], *(to_decimal(row[f]) for f in REPORT_FIELDS[1:])])
    return buf.getvalue()


def reports_to_json(reports) -> str:
    items = []
    for r in reports:
        row = r.row()
        fields = [f'"k": {row["k"]}'] + [f'"{f}": {to_decimal(row[f])}' for f in REPORT_FIELDS[1:]]
        items.append("{" + ", ".join(fields) + "}")
    return "[" + ",\n ".join(items) + "]\n"


# -- Perron's formula -------------------------------------------------------

@dataclass(frozen=True)
class PerronResult:
    value: object
    imag: object
    truncation_estimate: object
    closed_form: object = None


PERRON_CONFIG = PrecisionConfig("1e-12", "1e-12", 30, 16)


def _periodic_sum(lam, c, first, last, order):
    """Gauss rule over whole periods [jP, (j+1)P] for first <= |j| < last, P = 2π/|λ|.

    e^{iλt} takes the same values at corresponding nodes of every period, so
    it is computed once per node offset. Returns the sum and the difference
    from the half-order rule.
    """
    period = 2 * xp.pi / abs(lam)
    js = [j for j in range(-last, last) if first <= j or j < -first]
    sums = []
    for rule in (gauss_legendre(order), gauss_legendre(max(order // 2, 1))):
        nodes, weights = rule
        offsets = [period * (1 + x) / 2 for x in nodes]
        phase = [w * xp.exp(lam * c) * xp.expj(lam * o) for o, w in zip(offsets, weights)]
        acc = []
        for j in js:
            base = j * period
            acc.append(xp.fsum(ph / xp.mpc(c, base + o) for o, ph in zip(offsets, phase)))
        sums.append(period / 2 * xp.fsum(acc))
    return sums[0], float(abs(sums[0] - sums[1]))


def perron_integral(lam, c=1, T=10 ** 4, cfg: PrecisionConfig = PERRON_CONFIG) -> PerronResult:
    """(1/2πi) ∫_{c-iT}^{c+iT} e^{λs}/s ds evaluated over t in [-T, T].

    Truncation estimate e^{cλ}/(πT|λ|) for λ != 0; for λ = 0 the truncated
    integral is arctan(T/c)/π exactly, reported as ``closed_form``.
    """
    lam, c, T = xreal(lam), xreal(c), xreal(T)
    if not c > 0 or not T > 0:
        raise ValueError("perron needs c > 0 and T > 0")

    def f(t):
        s = xp.mpc(c, t)
        return xp.exp(lam * s) / s

    # ds = i dt cancels the i in 1/(2πi)
    if lam != 0:
        period = 2 * xp.pi / abs(lam)
        n = int(xp.floor(T / period))
        # periods near t = 0 feel the pole at t = ic; leave those to the adaptive rule
        central = min(n, 8)
        val, _ = _periodic_sum(lam, c, central, n, cfg.quad_order)
        cuts = [j * period for j in range(-central, central + 1)]
        mid, _ = integrate_with_error(f, -central * period, central * period, cfg, breakpoints=cuts)
        val += mid
        edge = n * period
        if edge < T:
            left, _ = integrate_with_error(f, -T, -edge, cfg)
            right, _ = integrate_with_error(f, edge, T, cfg)
            val += left + right
        trunc = xp.exp(c * lam) / (xp.pi * T * abs(lam))
        closed = None
    else:
        cuts = [c * m for m in (-100, -10, -1, 0, 1, 10, 100)]
        val, _ = integrate_with_error(f, -T, T, cfg, breakpoints=cuts)
        closed = xp.atan(T / c) / xp.pi
        trunc = abs(xp.mpf(1) / 2 - closed)
    val = val / (2 * xp.pi)
    return PerronResult(xp.re(val), xp.im(val), trunc, closed)


def perron(lam, c=1, T=10 ** 4, cfg: PrecisionConfig = PERRON_CONFIG):
    """Real part of the truncated Perron integral; the imaginary part must vanish."""
    res = perron_integral(lam, c, T, cfg)
    if abs(res.imag) > xreal("1e-10"):
        raise ArithmeticError(f"Perron integral has imaginary part {res.imag}")
    return res.value


# -- G(u, s) -----------------------------------------------------------------

@dataclass(frozen=True)
class GDiag:
    u: object
    s: object
    G: object
    dG: object
    G_bound: object
    dG_bound: object

    @property
    def G_ok(self) -> bool:
        return abs(self.G) <= self.G_bound

    @property
    def dG_ok(self) -> bool:
        return abs(self.dG) <= self.dG_bound


def ein(z):
    """Ein(z) = ∫_0^z (1 - e^{-w})/w dw = sum_{n>=1} (-1)^{n+1} z^n / (n n!)."""
    z = xcomplex(z)
    if abs(z) <= 24:
        # terms peak near e^{|z|}; 113 bits leave >= 20 digits at |z| = 24
        term = xp.mpc(1)
        acc = xp.mpc(0)
        tiny = xp.ldexp(xp.mpf(1), -xp.prec - 4)
        n = 0
        while True:
            n += 1
            term *= z / n
            inc = term / n if n % 2 else -term / n
            acc += inc
            if n > abs(z) and abs(inc) <= tiny * abs(acc):
                return acc
    return xp.e1(z) + xp.log(z) + euler_gamma()


def g_value(u, s):
    """G(u, s) = ∫_0^{1/u} (1 - e^{-ts})/t dt = Ein(s/u)."""
    return ein(xcomplex(s) / xreal(u))


def g_diag(u, s) -> GDiag:
    """G(u,s), dG/ds = (1 - e^{-s/u})/s and the two bounds used on them."""
    u = xreal(u)
    s = xcomplex(s)
    if not xp.re(s) > 0 or not u > 0:
        raise ValueError("g_diag needs Re s > 0 and u > 0")
    G = g_value(u, s)
    dG = -xp.expm1(-s / u) / s
    G_bound = 2 * xp.log(1 + abs(s) / u) + 1
    dG_bound = 2 * min(1 / abs(s), 1 / u)
    return GDiag(u, s, G, dG, G_bound, dG_bound)


def log_gamma_identity(s=1, cfg: PrecisionConfig | None = None):
    """∫_0^1 (1-e^{-ts})/t dt - ∫_1^∞ e^{-ts}/t dt by quadrature; equals log s + γ.

    The infinite tail is mapped to (0, 1] by t = 1/v.
    """
    s = xcomplex(s)
    cfg = cfg or PrecisionConfig("1e-25", "1e-25", 40, 32)
    head, _ = integrate_with_error(lambda t: -xp.expm1(-t * s) / t, 0, 1, cfg)
    tail, _ = integrate_with_error(
        lambda v: xp.exp(-s / v) / v if v > 0 else xp.mpf(0), 0, 1, cfg)
    return head - tail, xp.log(s) + euler_gamma()
