"""``dickman`` command line.

Every subcommand prints CSV (header row first) or a JSON array of records.
Numbers are written in the 36-digit decimal format of the library. Exit
codes: 0 on success, 1 on a usage error, 2 when a computation fails (the
error class name goes to stderr).

``--fast`` drops to 53-bit arithmetic with loose quadrature tolerances for
quick exploration; no accuracy is promised in that mode. ``verify`` always
runs at the default precision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import nullcontext
from importlib import metadata

import numpy as np

from . import asymptotic, constants, iterated, rho, sieve, verify
from .errors import DickmanError
from .numkernel import (
    DEFAULT_CONFIG,
    FAST_CONFIG,
    precision,
    to_decimal,
    xp,
    xreal,
)

FAST_BITS = 53


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def tool_version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "unknown"


# -- grids and formatting ----------------------------------------------------

def parse_grid(text: str, geometric: bool = False):
    """``start:stop:n`` as a list of XReal values (geometric or linear spacing)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--grid expects start:stop:npoints, got {text!r}")
    try:
        start, stop, n = xreal(parts[0]), xreal(parts[1]), int(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad --grid {text!r}: {exc}") from None
    if n < 1:
        raise UsageError("--grid needs npoints >= 1")
    if geometric:
        if not (start > 0 and stop > 0):
            raise UsageError("a geometric grid needs positive endpoints")
        return asymptotic.geometric_grid(start, stop, n)
    if n == 1:
        return [start]
    step = (stop - start) / (n - 1)
    return [start + i * step for i in range(n - 1)] + [stop]


def _points(args, name: str, geometric: bool = False):
    value = getattr(args, name)
    if args.grid is not None:
        if value is not None:
            raise UsageError(f"give either --{name} or --grid, not both")
        return parse_grid(args.grid, geometric)
    if value is None:
        raise UsageError(f"one of --{name} or --grid is required")
    return [xreal(value)]


def _cell(v):
    if v is None:
        return None
    if isinstance(v, (bool, str)):
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, xp.mpc):
        return to_decimal(xp.re(v)) if xp.im(v) == 0 else f"{to_decimal(xp.re(v))}{to_decimal(xp.im(v)):+}j"
    return to_decimal(xreal(v))


def _json_value(v) -> str:
    c = _cell(v)
    if c is None:
        return "null"
    if isinstance(c, bool):
        return "true" if c else "false"
    if isinstance(c, int):
        return str(c)
    if isinstance(v, str) or not xp.isfinite(xreal(v)):
        return json.dumps(c)
    return c


def render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        items = ["{" + ", ".join(f"{json.dumps(k)}: {_json_value(v)}" for k, v in r.items()) + "}"
                 for r in records]
        return "[" + ",\n ".join(items) + "]\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    fields = list(records[0]) if records else []
    w.writerow(fields)
    for r in records:
        w.writerow(["" if _cell(r[f]) is None else _cell(r[f]) for f in fields])
    return buf.getvalue()


# -- subcommands -------------------------------------------------------------

def cmd_constants(args, cfg):
    if args.method == "zeta":
        table = constants.constants_from_zeta(args.kmax)
    elif args.method == "hankel":
        spec = constants.ContourSpec.hankel(delta=args.delta, x_max=args.xmax)
        table = constants.constants_from_contour(args.kmax, spec, cfg=_contour_cfg(args))
    else:
        spec = constants.ContourSpec.vertical(c=args.c, T=args.T)
        table = constants.constants_from_contour(args.kmax, spec, cfg=_contour_cfg(args))
    return [{"k": k, "C_k": table.C[k], "D_k": table.D[k], "method": table.method,
             "err_bound": table.err_bound[k]} for k in range(table.k_max + 1)]


def _contour_cfg(args):
    return FAST_CONFIG if args.fast else constants.CONTOUR_CONFIG


def cmd_rho(args, cfg):
    us = _points(args, "u")
    top = max(10, int(xp.ceil(max(us))))
    if args.method == "steps":
        spline = rho.rho_steps(top, cfg)
        return [{"u": u, "rho": spline(u), "method": "steps"} for u in us]
    return [{"u": u, "rho": rho.rho_series(u, cfg), "method": "series"} for u in us]


def cmd_ik(args, cfg):
    us = _points(args, "u")
    ev = iterated.IkEvaluator(cfg=cfg)
    return [{"k": args.k, "u": u, "I_k": iterated.I_k(args.k, u, cfg, args.method, ev),
             "method": args.method} for u in us]


def cmd_polylog(args, cfg):
    ts = _points(args, "t")
    return [{"k": args.k, "t": t, "L_k": iterated.L_k(args.k, t, cfg, args.method),
             "method": args.method} for t in ts]


def cmd_expand(args, cfg):
    us = _points(args, "u", geometric=True)
    D = constants.constants_from_zeta(args.k)
    return [asymptotic.expand_Ik(args.k, u, D, cfg).row() for u in us]


def cmd_perron(args, cfg):
    lams = _points(args, "lam")
    pcfg = FAST_CONFIG if args.fast else asymptotic.PERRON_CONFIG
    out = []
    for lam in lams:
        r = asymptotic.perron_integral(lam, args.c, args.T, pcfg)
        out.append({"lam": lam, "c": xreal(args.c), "T": xreal(args.T), "value": r.value,
                    "imag": r.imag, "truncation_estimate": r.truncation_estimate,
                    "closed_form": r.closed_form})
    return out


def cmd_sieve(args, cfg):
    us = _points(args, "u")
    spline = rho.default_spline(max(10, int(xp.ceil(max(us)))))
    out = []
    for u in us:
        r = sieve.smooth_count(args.x, u, progress=args.progress)
        rho_u = spline(u)
        out.append({"x": r.x, "y": r.y, "count": r.count, "ratio": r.ratio,
                    "rho_u": rho_u, "abs_diff": abs(r.ratio - rho_u)})
    return out


def cmd_almostprime(args, cfg):
    r = sieve.almost_prime_count(args.x, args.k, progress=args.progress)
    return [{"x": r.x, "k": r.k, "count_omega": r.count_omega, "count_Omega": r.count_Omega,
             "landau_value": r.landau_value,
             "ratio_omega": r.count_omega / r.landau_value,
             "ratio_Omega": r.count_Omega / r.landau_value}]


def cmd_ramanujan(args, cfg):
    eps = xreal(args.eps)
    terms = [iterated.ramanujan_nested(j, eps, cfg, args.limits).value for j in range(1, args.depth + 1)]
    total = 1 + xp.fsum((-1) ** j * t for j, t in enumerate(terms, start=1))
    rec = {"epsilon": eps, "depth": args.depth, "limits": args.limits}
    for j, t in enumerate(terms, start=1):
        rec[f"nested_{j}"] = t
    rec["ramanujan_sum"] = total
    if args.x is not None:
        rec["x"] = args.x
        rec["sieve_ratio"] = sieve.smooth_count(args.x, 1 / eps, progress=args.progress).ratio
    return [rec]


def cmd_verify(args, cfg):
    return [{"module": c.module, "check": c.name, "ok": c.ok, "detail": c.detail}
            for c in verify.run_all(args.seed)]


# -- parser ------------------------------------------------------------------

def build_parser() -> Parser:
    common = Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    common.add_argument("--fast", action="store_true",
                        help="53-bit arithmetic, loose tolerances, no accuracy promise")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--meta", metavar="PATH", help="write a JSON metadata sidecar")

    p = Parser(prog="dickman", description="Dickman function, constants and checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    s = sub.add_parser("constants", parents=[common], help="C_k and D_k")
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--method", choices=("zeta", "hankel", "vertical"), default="zeta")
    s.add_argument("--c", default="1", help="vertical line abscissa")
    s.add_argument("--T", default="1e6", help="vertical truncation height")
    s.add_argument("--delta", default="1e-3", help="Hankel offset")
    s.add_argument("--xmax", default="60", help="Hankel ray length")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("rho", parents=[common], help="Dickman rho(u)")
    s.add_argument("--u")
    s.add_argument("--grid")
    s.add_argument("--method", choices=("steps", "series"), default="steps")
    s.set_defaults(func=cmd_rho)

    s = sub.add_parser("ik", parents=[common], help="iterated integral I_k(u)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--u")
    s.add_argument("--grid")
    s.add_argument("--method", choices=("steps", "convolution"), default="steps")
    s.set_defaults(func=cmd_ik)

    s = sub.add_parser("polylog", parents=[common], help="Dickman polylogarithm L_k(t)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--t")
    s.add_argument("--grid")
    s.add_argument("--method", choices=("identity", "recursion"), default="identity")
    s.set_defaults(func=cmd_polylog)

    s = sub.add_parser("expand", parents=[common], help="log-power expansion of I_k(u)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--u")
    s.add_argument("--grid", help="geometric start:stop:npoints")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("perron", parents=[common], help="truncated Perron integral")
    s.add_argument("--lam")
    s.add_argument("--grid")
    s.add_argument("--c", default="1")
    s.add_argument("--T", default="1e4")
    s.set_defaults(func=cmd_perron)

    s = sub.add_parser("sieve", parents=[common], help="smooth-number count vs rho(u)")
    s.add_argument("--x", type=int, required=True)
    s.add_argument("--u")
    s.add_argument("--grid")
    s.add_argument("--progress", action="store_true", help="segment progress on stderr")
    s.set_defaults(func=cmd_sieve)

    s = sub.add_parser("almostprime", parents=[common], help="almost-prime counts vs Landau")
    s.add_argument("--x", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--progress", action="store_true")
    s.set_defaults(func=cmd_almostprime)

    s = sub.add_parser("ramanujan", parents=[common], help="Ramanujan's nested integrals")
    s.add_argument("--eps", required=True)
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--x", type=int, help="also sieve up to x")
    s.add_argument("--limits", choices=("simplex", "quoted"), default="simplex")
    s.add_argument("--progress", action="store_true")
    s.set_defaults(func=cmd_ramanujan)

    s = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    s.set_defaults(func=cmd_verify)
    return p


def _metadata(args, cfg) -> dict:
    return {
        "tool": "dickman",
        "version": tool_version(),
        "command": args.command,
        "precision_bits": xp.prec,
        "fast": args.fast,
        "config": {"abs_tol": to_decimal(cfg.abs_tol), "rel_tol": to_decimal(cfg.rel_tol),
                   "max_subdivision_depth": cfg.max_subdivision_depth, "quad_order": cfg.quad_order},
        "method": getattr(args, "method", None),
        "seed": args.seed,
    }


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(str(exc))
        return 1
    except SystemExit as exc:
        # --help exits 0 through argparse
        return int(exc.code or 0)

    fast = args.fast and args.command != "verify"
    cfg = FAST_CONFIG if fast else DEFAULT_CONFIG
    try:
        with precision(FAST_BITS) if fast else nullcontext():
            records = args.func(args, cfg)
            text = render(records, args.format)
            meta = _metadata(args, cfg)
    except UsageError as exc:
        sys.stderr.write(f"dickman {args.command}: {exc}\n")
        return 1
    except (DickmanError, ArithmeticError, ValueError) as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.meta:
        with open(args.meta, "w", encoding="utf-8") as fh:
            json.dump(meta, fh, indent=2)
            fh.write("\n")
    if args.command == "verify" and not all(r["ok"] for r in records):
        return 2
    return 0


def main() -> None:
    sys.exit(run())
