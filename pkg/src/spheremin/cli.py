"""Command-line interface.

Subcommands: nmin, emin, expected-min, asymptotic, sphere-mean, sweep,
verify.  Data rows go to stdout (csv, json, or an aligned table);
diagnostics go to stderr.  Exit codes: 0 ok, 1 verify failure, 2 parse
error, 3 nonconvergent integral, 4 violated asymptotic hypothesis.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from . import distributions as dists
from . import minima, transfer
from .distributions import Distribution
from .errors import HypothesisViolatedError, NonConvergentError
from .special import SQRT_PI, gamma_ratio

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_NONCONVERGENT = 3
EXIT_HYPOTHESIS = 4


@dataclass
class RunConfig:
    command: str
    ns: List[int]
    dist: Optional[Distribution]
    function: Optional[str]
    tol: float
    samples: int
    seed: int
    fmt: str
    output: Optional[str]
    sweep_command: Optional[str] = None
    columns: Optional[List[str]] = None


class CliParseError(ValueError):
    pass


def parse_distribution(spec: str) -> Distribution:
    """Parse `half-normal`, `exponential:<rate>`, `uniform01`,
    `power-law:<k>`, `heavy-tail:<alpha>`."""
    name, _, arg = spec.partition(":")
    try:
        if name == "half-normal":
            return dists.half_normal()
        if name == "uniform01":
            return dists.uniform01()
        if name == "exponential":
            return dists.exponential(float(arg))
        if name == "power-law":
            return dists.power_law(float(arg))
        if name == "heavy-tail":
            return dists.heavy_tail(float(arg))
    except ValueError as exc:
        raise CliParseError(f"bad distribution spec {spec!r}: {exc}") from exc
    raise CliParseError(f"unknown distribution {name!r}")


def parse_n_range(spec: str) -> List[int]:
    """`start:stop:x10` (multiplicative) or `start:stop:5` (additive),
    inclusive of stop when it is hit exactly."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise CliParseError(f"n-range must be start:stop:step, got {spec!r}")
    try:
        start, stop = int(parts[0]), int(parts[1])
        step_spec = parts[2]
        multiplicative = step_spec.startswith("x")
        step = int(step_spec[1:]) if multiplicative else int(step_spec.lstrip("+"))
    except ValueError as exc:
        raise CliParseError(f"bad n-range {spec!r}: {exc}") from exc
    if start < 1 or stop < start or step < (2 if multiplicative else 1):
        raise CliParseError(f"bad n-range {spec!r}")
    out, n = [], start
    while n <= stop:
        out.append(n)
        n = n * step if multiplicative else n + step
    return out


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _emit(rows: List[dict], columns: List[str], fmt: str, out: io.TextIOBase) -> None:
    if fmt == "csv":
        out.write(",".join(columns) + "\n")
        for row in rows:
            out.write(",".join(_fmt(row[c]) for c in columns) + "\n")
    elif fmt == "json":
        payload = [{c: row[c] for c in columns} for row in rows]
        out.write(json.dumps(payload, indent=2) + "\n")
    else:  # table
        cells = [[_fmt(row[c]) for c in columns] for row in rows]
        widths = [max(len(c), *(len(r[i]) for r in cells)) if cells else len(c)
                  for i, c in enumerate(columns)]
        out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
        for r in cells:
            out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _min_row(res: minima.MinResult) -> dict:
    return {
        "n": res.n,
        "value": res.value,
        "error_bound": res.error_bound if res.error_bound is not None else "unknown",
        "method": res.method,
    }


def _compute_min(command: str, dist: Optional[Distribution], n: int, tol: float) -> minima.MinResult:
    if command == "emin":
        return minima.emin(n, tol)
    if command == "nmin":
        return minima.nmin(n, tol)
    if command == "expected-min":
        return minima.expected_min(dist, n, tol)
    if command == "asymptotic":
        return minima.asymptotic_min(dist, n)
    raise CliParseError(f"command {command!r} is not sweepable")


SWEEP_COLUMNS = ("n", "value", "error_bound", "method", "scaled")


def _run_min_command(cfg: RunConfig, out: io.TextIOBase) -> int:
    command = cfg.sweep_command or cfg.command
    if command in ("expected-min", "asymptotic") and cfg.dist is None:
        raise CliParseError(f"{command} requires --dist")
    columns = cfg.columns or ["n", "value", "error_bound", "method"]
    rows = []
    for n in cfg.ns:
        res = _compute_min(command, cfg.dist, n, cfg.tol)
        row = _min_row(res)
        row["scaled"] = (n + 1) * res.value
        rows.append(row)
    _emit(rows, columns, cfg.fmt, out)
    return EXIT_OK


def _run_sphere_mean(cfg: RunConfig, out: io.TextIOBase) -> int:
    f = transfer.builtin_function(cfg.function or "min-abs")
    rows = []
    for i, n in enumerate(cfg.ns):
        seed = np.random.SeedSequence(cfg.seed).spawn(len(cfg.ns))[i]
        est = transfer.sphere_mean_direct(f, n, cfg.samples, seed)
        rows.append({
            "n": n,
            "function": f.name,
            "point": est.point,
            "std_error": est.std_error,
            "samples": est.samples,
        })
    _emit(rows, ["n", "function", "point", "std_error", "samples"], cfg.fmt, out)
    return EXIT_OK


def _run_verify(cfg: RunConfig, out: io.TextIOBase) -> int:
    """Cross-validation suite: quadrature vs closed forms, the gamma-route
    sphere value vs direct sphere Monte Carlo, and the transfer identity
    for every built-in function."""
    checks = []

    def check(name: str, ok: bool, detail: str) -> None:
        checks.append(ok)
        out.write(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}\n")

    tol = cfg.tol
    for n in (1, 10, 100):
        v = minima.expected_min(dists.exponential(1.0), n, tol).value
        check(f"quadrature-exponential-n{n}", abs(v - 1.0 / n) <= 1e-9,
              f"value={_fmt(v)} expect={_fmt(1.0 / n)}")
    for n in (1, 9, 99):
        v = minima.expected_min(dists.uniform01(), n, tol).value
        check(f"quadrature-uniform01-n{n}", abs(v - 1.0 / (n + 1)) <= 1e-9,
              f"value={_fmt(v)} expect={_fmt(1.0 / (n + 1))}")
    v = minima.nmin(1, tol).value
    check("quadrature-half-normal-n1", abs(v - 1.0 / SQRT_PI) <= 1e-9,
          f"value={_fmt(v)} expect={_fmt(1.0 / SQRT_PI)}")
    v = minima.nmin(2, tol).value
    ref = (2.0 - math.sqrt(2.0)) / SQRT_PI
    check("quadrature-half-normal-n2", abs(v - ref) <= 1e-9,
          f"value={_fmt(v)} expect={_fmt(ref)}")

    bad = [n for n in range(1, 1001)
           if abs(gamma_ratio(n, 2) * (n / 2.0) - 1.0) > 1e-12]
    check("gamma-identity-degree2", not bad, f"violations={len(bad)}")

    root = np.random.SeedSequence(cfg.seed)
    min_abs = transfer.builtin_function("min-abs")
    for n, child in zip((2, 5, 10), root.spawn(3)):
        est = transfer.sphere_mean_direct(min_abs, n, cfg.samples, child)
        ref = minima.emin(n, tol).value
        z = abs(est.point - ref) / est.std_error if est.std_error > 0 else 0.0
        check(f"sphere-vs-quadrature-n{n}", z <= 4.0,
              f"mc={_fmt(est.point)} quad={_fmt(ref)} z={z:.3f}")

    for f, child in zip(transfer.builtin_functions(), root.spawn(8)[3:]):
        rep = transfer.transfer_identity_check(f, 3, cfg.samples, child)
        check(f"transfer-identity-{f.name}-n3", rep.agree,
              f"z={rep.z_score:.3f}")

    ok = all(checks)
    out.write(f"{'OK' if ok else 'FAILED'}  {sum(checks)}/{len(checks)} checks passed\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spheremin",
        description="Spherical minimum means and expected minima of iid "
                    "nonnegative variables, with cross-validated routes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dist=False, fn=False, mc=False):
        p.add_argument("--n", type=int)
        p.add_argument("--n-range", type=str)
        p.add_argument("--tol", type=float, default=minima.DEFAULT_TOL)
        if dist:
            p.add_argument("--dist", type=str)
        if fn:
            p.add_argument("--fn", type=str, default="min-abs")
        if mc:
            p.add_argument("--samples", type=int, default=1_000_000)
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", dest="fmt", choices=("csv", "json", "table"),
                       default="table")
        p.add_argument("--output", type=str)

    common(sub.add_parser("emin", help="mean min |x_i| over the unit sphere"))
    common(sub.add_parser("nmin", help="expected min |Z_i|, Z_i ~ N(0, 1/2)"))
    common(sub.add_parser("expected-min", help="expected minimum for a distribution"),
           dist=True)
    common(sub.add_parser("asymptotic", help="asymptotic law 1/(f(0)(n+1))"),
           dist=True)
    common(sub.add_parser("sphere-mean", help="direct Monte Carlo sphere mean"),
           fn=True, mc=True)
    sweep = sub.add_parser("sweep", help="run a command over an n-range")
    common(sweep, dist=True)
    sweep.add_argument("--command", dest="sweep_command", required=True,
                       choices=("emin", "nmin", "expected-min", "asymptotic"))
    sweep.add_argument("--columns", type=str,
                       default="n,value,error_bound,method")
    verify = sub.add_parser("verify", help="cross-validation suite; exit 1 on failure")
    verify.add_argument("--tol", type=float, default=minima.DEFAULT_TOL)
    verify.add_argument("--samples", type=int, default=200_000)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--output", type=str)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "verify":
        return RunConfig(command="verify", ns=[], dist=None, function=None,
                         tol=args.tol, samples=args.samples, seed=args.seed,
                         fmt="table", output=args.output)
    if args.n is not None and args.n_range is not None:
        raise CliParseError("--n and --n-range are mutually exclusive")
    if args.n is not None:
        if args.n < 1:
            raise CliParseError("--n must be >= 1")
        ns = [args.n]
    elif args.n_range is not None:
        ns = parse_n_range(args.n_range)
    else:
        raise CliParseError("one of --n or --n-range is required")
    if not (0.0 < args.tol <= 1e-2):
        raise CliParseError("--tol must be in (0, 1e-2]")
    dist = parse_distribution(args.dist) if getattr(args, "dist", None) else None
    columns = None
    if getattr(args, "columns", None):
        columns = [c.strip() for c in args.columns.split(",") if c.strip()]
        unknown = [c for c in columns if c not in SWEEP_COLUMNS]
        if unknown:
            raise CliParseError(f"unknown columns: {', '.join(unknown)}")
    samples = getattr(args, "samples", 0)
    if args.command == "sphere-mean" and samples < 2:
        raise CliParseError("--samples must be >= 2")
    return RunConfig(
        command=args.command,
        ns=ns,
        dist=dist,
        function=getattr(args, "fn", None),
        tol=args.tol,
        samples=samples,
        seed=getattr(args, "seed", 0),
        fmt=args.fmt,
        output=args.output,
        sweep_command=getattr(args, "sweep_command", None),
        columns=columns,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE_ERROR
    try:
        cfg = _config_from_args(args)
    except CliParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR

    buffer = io.StringIO()
    try:
        if cfg.command == "verify":
            code = _run_verify(cfg, buffer)
        elif cfg.command == "sphere-mean":
            code = _run_sphere_mean(cfg, buffer)
        else:
            code = _run_min_command(cfg, buffer)
    except CliParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except NonConvergentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENT
    except HypothesisViolatedError as exc:
        print(f"error: hypothesis ({exc.condition}) violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS

    text = buffer.getvalue()
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
