"""Empirical counts: smooth numbers, almost-primes, Ramanujan's phi(x).

The sieve works one segment of 2**22 integers at a time. For each segment
it divides out every prime power p**e <= hi with p <= sqrt(x); what is left
of n is 1 or a single prime above sqrt(x). That yields the largest prime
factor of every n in the segment plus omega(n) (distinct primes) and
Omega(n) (with multiplicity). Memory is O(segment), not O(x).

Conventions: 1 is y-smooth for every y and omega(1) = Omega(1) = 0.
"""

from __future__ import annotations

import csv
import io
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimit
from .iterated import ramanujan_nested
from .numkernel import PrecisionConfig, DEFAULT_CONFIG, to_decimal, xp, xreal

SEGMENT_SIZE = 1 << 22
DEFAULT_MAX_X = 10 ** 9
MAX_X_ENV = "DICKMAN_MAX_X"


def max_x() -> int:
    env = os.environ.get(MAX_X_ENV)
    return int(float(env)) if env else DEFAULT_MAX_X


def _check_limit(x: int) -> None:
    limit = max_x()
    if x > limit:
        raise ResourceLimit(f"x = {x} exceeds the sieve limit {limit} (set {MAX_X_ENV} to raise it)")


def small_primes(n: int) -> np.ndarray:
    """Primes <= n by the sieve of Eratosthenes."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    mark = np.ones(n + 1, dtype=bool)
    mark[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if mark[p]:
            mark[p * p::p] = False
    return np.flatnonzero(mark).astype(np.int64)


@dataclass
class Segment:
    lo: int
    largest: np.ndarray
    omega: np.ndarray | None = None
    Omega: np.ndarray | None = None


def segments(x: int, segment_size: int = SEGMENT_SIZE, with_counts: bool = False,
             progress: bool = False):
    """Yield :class:`Segment` records covering 1..x in order."""
    primes = small_primes(math.isqrt(x))
    n_seg = -(-x // segment_size)
    for i, lo in enumerate(range(1, x + 1, segment_size)):
        hi = min(lo + segment_size, x + 1)
        rem = np.arange(lo, hi, dtype=np.int64)
        largest = np.ones(hi - lo, dtype=np.int64)
        omega = np.zeros(hi - lo, dtype=np.int8) if with_counts else None
        Omega = np.zeros(hi - lo, dtype=np.int8) if with_counts else None
        for p in primes.tolist():
            q = p
            start = (-lo) % p
            if start >= hi - lo:
                continue
            largest[start::p] = p
            if with_counts:
                omega[start::p] += 1
            while q < hi:
                start = (-lo) % q
                rem[start::q] //= p
                if with_counts:
                    Omega[start::q] += 1
                q *= p
        big = rem > 1
        largest[big] = rem[big]
        if with_counts:
            omega[big] += 1
            Omega[big] += 1
        if progress:
            print(f"sieve: segment {i + 1}/{n_seg} [{lo}, {hi - 1}]", file=sys.stderr)
        yield Segment(lo, largest, omega, Omega)


def largest_prime_factors(x: int) -> np.ndarray:
    """P(n) for n = 1..x (P(1) = 1); convenience for small x."""
    return np.concatenate([s.largest for s in segments(x)])


def smoothness_bound(x: int, u) -> int:
    """floor(x**(1/u)), exact for integer x."""
    u = xreal(u)
    y = int(xp.floor(xp.power(x, 1 / u)))
    # settle rounding at perfect powers in log space
    while y > 1 and u * xp.log(y) > xp.log(x):
        y -= 1
    while u * xp.log(y + 1) <= xp.log(x):
        y += 1
    return y


@dataclass(frozen=True)
class SieveResult:
    x: int
    y: int
    count: int

    @property
    def ratio(self):
        return xp.mpf(self.count) / self.x


def psi(x: int, y: int, progress: bool = False) -> int:
    """Psi(x, y) = #{n <= x : every prime factor of n is <= y}."""
    if x < 1:
        return 0
    _check_limit(x)
    return int(sum(int(np.count_nonzero(s.largest <= y)) for s in segments(x, progress=progress)))


def smooth_count(x: int, u, progress: bool = False) -> SieveResult:
    """Exact Psi(x, floor(x^(1/u)))."""
    if x < 2:
        raise ValueError("smooth_count needs x >= 2")
    if xreal(u) < 1:
        raise ValueError("smooth_count needs u >= 1")
    y = smoothness_bound(x, u)
    if y < 2:
        raise ValueError(f"x^(1/u) = {y} < 2")
    return SieveResult(x, y, psi(x, y, progress))


@dataclass(frozen=True)
class AlmostPrimeResult:
    x: int
    k: int
    count_omega: int
    count_Omega: int
    landau_value: object


def landau_value(x: int, k: int):
    """(x / log x) * sum_{j < k} (log log x)^j / j!."""
    lx = xp.log(x)
    llx = xp.log(lx)
    return x / lx * xp.fsum(llx ** j / xp.factorial(j) for j in range(k))


def almost_prime_count(x: int, k: int, progress: bool = False) -> AlmostPrimeResult:
    """Counts of n <= x with omega(n) <= k and with Omega(n) <= k."""
    if x < 3:
        raise ValueError("almost_prime_count needs x >= 3")
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_limit(x)
    c_omega = c_Omega = 0
    for s in segments(x, with_counts=True, progress=progress):
        c_omega += int(np.count_nonzero(s.omega <= k))
        c_Omega += int(np.count_nonzero(s.Omega <= k))
    return AlmostPrimeResult(x, k, c_omega, c_Omega, landau_value(x, k))


@dataclass(frozen=True)
class RamanujanCheck:
    x: int
    epsilon: object
    depth: int
    sieve_ratio: object
    ramanujan_sum: object


def ramanujan_sum(epsilon, depth: int, cfg: PrecisionConfig = DEFAULT_CONFIG):
    """1 + sum_{j=1}^{depth} (-1)^j * nested_j(epsilon)."""
    eps = xreal(epsilon)
    return 1 + xp.fsum((-1) ** j * ramanujan_nested(j, eps, cfg).value for j in range(1, depth + 1))


def ramanujan_phi_check(x: int, epsilon, depth: int, cfg: PrecisionConfig = DEFAULT_CONFIG) -> RamanujanCheck:
    """Sieve density of x^epsilon-smooth n <= x next to Ramanujan's alternating sum."""
    eps = xreal(epsilon)
    if not 0 < eps <= 1:
        raise ValueError("epsilon must lie in (0, 1]")
    if eps * (depth + 1) < 1:
        raise ValueError(f"depth {depth} is too shallow for epsilon {eps}; need epsilon >= 1/(depth+1)")
    ratio = smooth_count(x, 1 / eps).ratio
    return RamanujanCheck(x, eps, depth, ratio, ramanujan_sum(eps, depth, cfg))


SIEVE_CSV_FIELDS = ("x", "y", "count", "ratio", "rho_u", "abs_diff")


def sieve_csv(results, rho_values) -> str:
    """CSV rows ``x,y,count,ratio,rho_u,abs_diff`` for paired results and rho(u)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SIEVE_CSV_FIELDS)
    for r, rho_u in zip(results, rho_values):
        w.writerow([r.x, r.y, r.count, to_decimal(r.ratio), to_decimal(rho_u),
                    to_decimal(abs(r.ratio - rho_u))])
    return buf.getvalue()
