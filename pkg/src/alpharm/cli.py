"""Command-line front end.

Subcommands::

    alpharm bound            tabulate B, b (and C, c, df0 with --deriv) over radii
    alpharm extend           evaluate an extension and compare with the bounds
    alpharm schwarz          Schwarz majorant against its quadrature oracle
    alpharm verify           run closed-form vs brute-force verification suites
    alpharm scan-conjecture  locate argmax_t Phi(t) for the gradient conjecture

Exit codes: 0 success, 1 verification failure or bound violation,
2 configuration or domain error.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__, bounds, oracle, suites
from .errors import DomainError, NonConvergenceError, PreconditionError, QuadratureError
from .kernel import BoundaryFunction, DiskPoint, Params, c_alpha, deriv_matrix, extend
from .oracle import GridSpec
from .quadrature import QuadratureConfig


class ConfigError(Exception):
    """Bad command-line configuration (exit code 2)."""


# argument parsing

def parse_p(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity", "∞"):
        return math.inf
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid p: {text!r}") from None
    if not p >= 1.0:
        raise argparse.ArgumentTypeError(f"p must be >= 1, got {text}")
    return p


def parse_floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number list: {text!r}") from None


def parse_p_list(text: str) -> list[float]:
    return [parse_p(x) for x in text.split(",") if x.strip()]


def parse_grid(text: str) -> GridSpec:
    try:
        return GridSpec.parse(text)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"invalid grid {text!r}: {exc}") from None


def parse_point(text: str) -> DiskPoint:
    try:
        r, s = (float(x) for x in text.split(","))
        return DiskPoint(r, s)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"invalid point {text!r} (want r,s): {exc}") from None


def worker_count() -> int:
    cap = os.environ.get("ALPHARM_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise ConfigError(f"ALPHARM_THREADS must be an integer, got {cap!r}") from None
    return n


def _radii(args) -> list[float]:
    rs = []
    for chunk in args.r or []:
        rs.extend(chunk)
    if args.r_grid is not None:
        rs.extend(float(x) for x in args.r_grid.points())
    if not rs:
        raise ConfigError("give radii with --r or --r-grid")
    return rs


def _quad(args) -> QuadratureConfig:
    try:
        return QuadratureConfig(args.abs_tol, args.rel_tol, args.max_depth)
    except DomainError as exc:
        raise ConfigError(str(exc)) from None


# serialization

def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, GridSpec):
        return obj.to_dict()
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else ("nan" if math.isnan(x) else
                                           ("inf" if x > 0 else "-inf"))
    if isinstance(obj, complex):
        return {"re": _jsonable(obj.real), "im": _jsonable(obj.imag)}
    return obj


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def render(fmt: str, config: dict, rows: list[dict] | None = None,
           reports: list[dict] | None = None) -> str:
    if fmt == "json":
        doc = {"config": config}
        if rows is not None:
            doc["rows"] = rows
        if reports is not None:
            doc["reports"] = reports
        doc["tool_version"] = __version__
        return json.dumps(_jsonable(doc), indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = rows or []
    header = list(rows[0]) if rows else []
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row.get(k)) for k in header])
    return buf.getvalue()


def emit(text: str, path: str | None) -> None:
    """Write the whole output at once; files are replaced atomically."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".alpharm-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _config(args, **extra) -> dict:
    skip = {"handler", "output", "format"}
    cfg = {k: v for k, v in vars(args).items() if k not in skip}
    cfg.update(extra)
    return cfg


# commands

def _pmap(func, items):
    return oracle._map(func, items, worker_count())


def cmd_bound(args):
    params = Params(args.alpha, args.p)
    quad = _quad(args)
    rs = _radii(args)
    if args.deriv:
        if params.p == 1:
            raise DomainError("the gradient bound C needs p > 1 (q finite)")
        if params.alpha < 0:
            raise DomainError("the gradient bound C needs alpha >= 0")
        c_big = bounds.c_const(params, quad)
        d0 = bounds.df0_bound(params)
    if params.p == 1:
        b = c_alpha(params.alpha) * 2.0 ** (params.alpha + 2.0)
    else:
        b = bounds.b_const(params)

    def row(r):
        pw = bounds.pointwise_bound(params, r)
        out = {"r": r, "B": pw.coefficient, "b": b, "value_bound": pw.total}
        if args.deriv:
            gb = bounds.gradient_bound(params, r, quad)
            out.update(C=gb.coefficient, c=c_big, gradient_bound=gb.total, df0=d0)
        return out

    return render(args.format, _config(args), rows=_pmap(row, rs)), 0


def load_samples(path: str) -> BoundaryFunction:
    vals = []
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                parts = line.split()
                if not parts or parts[0].startswith("#"):
                    continue
                if len(parts) != 2:
                    raise ConfigError(f"{path}:{lineno}: expected 're im'")
                vals.append(complex(float(parts[0]), float(parts[1])))
    except OSError as exc:
        raise ConfigError(f"cannot read samples: {exc}") from None
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return BoundaryFunction.sampled(vals)


def boundary_function(text: str, params: Params, z: DiskPoint, quad) -> BoundaryFunction:
    name, _, arg = text.partition(":")
    if name == "constant":
        return BoundaryFunction.constant(complex(arg) if arg else 1.0)
    if name == "cosine":
        return BoundaryFunction.cosine()
    if name == "sign_of_sine":
        return BoundaryFunction.sign_of_sine()
    if name == "holder_extremal":
        return BoundaryFunction.holder_extremal(params, z, quad)
    if name == "gradient_extremal":
        return BoundaryFunction.gradient_extremal(
            params, z, float(arg) if arg else None, quad)
    if name == "samples":
        if not arg:
            raise ConfigError("samples needs a path: samples:PATH")
        return load_samples(arg)
    raise ConfigError(f"unknown boundary function {name!r}")


def cmd_extend(args):
    params = Params(args.alpha, args.p)
    quad = _quad(args)
    points = list(args.z or [])
    if args.r_grid is not None:
        for r in args.r_grid.points():
            points.extend(DiskPoint(float(r), s) for s in args.s)
    if not points:
        raise ConfigError("give points with --z r,s or --r-grid")
    f = boundary_function(args.f, params, points[0], quad)
    norm = f.lp_norm(params.p, quad)
    grad_ok = params.p > 1 and params.alpha >= 0

    def row(z):
        val = extend(params.alpha, f, z, quad)
        df = deriv_matrix(params.alpha, f, z, quad).op_norm
        bound = bounds.pointwise_bound(params, z.r).total * norm
        out = {"r": z.r, "s": z.s, "re": val.real, "im": val.imag, "abs": abs(val),
               "df": df, "bound": bound, "slack": bound - abs(val)}
        if grad_ok:
            gb = bounds.gradient_bound(params, z.r, quad).total * norm
            out.update(df_bound=gb, df_slack=gb - df)
        else:
            out.update(df_bound=None, df_slack=None)
        return out

    rows = _pmap(row, points)
    code = 0
    for row_ in rows:
        for key, ref in (("slack", "bound"), ("df_slack", "df_bound")):
            if row_[key] is not None and row_[key] < -args.tol * max(1.0, row_[ref]):
                code = 1
    cfg = _config(args, z=[{"r": z.r, "s": z.s} for z in points], norm=norm)
    return render(args.format, cfg, rows=rows), code


def cmd_schwarz(args):
    quad = _quad(args)
    if not args.alpha > -1:
        raise DomainError(f"alpha must exceed -1, got {args.alpha}")

    def row(r):
        sb = bounds.schwarz_bound(args.alpha, r)
        so = oracle.schwarz_oracle(args.alpha, r, quad)
        return {"r": r, "schwarz_bound": sb, "schwarz_oracle": so,
                "abs_difference": abs(sb - so)}

    return render(args.format, _config(args), rows=_pmap(row, _radii(args))), 0


_VERIFY_OPTIONS = {
    "alpha": "alphas", "p": "ps", "r": "radii", "m": "ms", "q": "qs", "k": "ks",
    "n": "n", "seed": "seed", "count": "count",
}


def _suite_kwargs(func, args, quad) -> dict:
    accepted = inspect.signature(func).parameters
    kwargs = {"quad": quad} if "quad" in accepted else {}
    if func is suites.b_const_suite:
        if args.alpha or args.p:
            kwargs["params_list"] = tuple(Params(a, p) for a in args.alpha or [1.0]
                                          for p in args.p or [2.0])
        return kwargs
    for opt, name in _VERIFY_OPTIONS.items():
        value = getattr(args, opt)
        if value is not None and name in accepted:
            kwargs[name] = tuple(value) if isinstance(value, list) else value
    return kwargs


def cmd_verify(args):
    quad = _quad(args)
    names = args.only or list(suites.SUITES)
    reports = []
    for name in names:
        func = suites.SUITES[name]
        reports.append(func(**_suite_kwargs(func, args, quad)))
    code = 0 if all(r["passed"] for r in reports) else 1
    if args.format == "csv":
        rows = [{"name": r["name"], "max_deviation": r["max_deviation"],
                 "tolerance": r["tolerance"], "passed": r["passed"]} for r in reports]
        return render("csv", {}, rows=rows), code
    return render("json", _config(args), reports=reports), code


def cmd_scan_conjecture(args):
    quad = _quad(args)
    bad = [a for a in args.alpha if not a > 0]
    if bad:
        raise DomainError(f"the conjecture scan needs alpha > 0, got {bad}")
    t_grid = GridSpec(0.0, math.pi / 2, args.t_points)
    workers = worker_count()
    reports = [oracle.conjecture_scan(a, args.r_grid, t_grid, quad, args.tol, workers)
               for a in args.alpha]
    code = 0
    for rep in reports:
        if rep.details["alpha"] in (2.0, 4.0) and not rep.claim_holds:
            code = 1
    if args.format == "csv":
        rows = [{"alpha": rep.details["alpha"], **row}
                for rep in reports for row in rep.details["rows"]]
        return render("csv", {}, rows=rows), code
    docs = []
    for rep in reports:
        d = rep.to_dict()
        d["status"] = "proven" if rep.details["alpha"] in (2.0, 4.0) else "empirical"
        docs.append(d)
    return render("json", _config(args, t_grid=t_grid), reports=docs), code


# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write here (atomically) instead of stdout")
    common.add_argument("--abs-tol", type=float, default=1e-12)
    common.add_argument("--rel-tol", type=float, default=1e-10)
    common.add_argument("--max-depth", type=int, default=24)

    def fmt(p, default):
        p.add_argument("--format", choices=("csv", "json"), default=default)

    def radii(p):
        p.add_argument("--r", type=parse_floats, action="append",
                       help="comma-separated radii (repeatable)")
        p.add_argument("--r-grid", type=parse_grid, help="lo:hi:n inclusive grid")

    parser = argparse.ArgumentParser(prog="alpharm", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"alpharm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="tabulate value/gradient bounds")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--p", type=parse_p, required=True, help="exponent, or 'inf'")
    radii(p)
    p.add_argument("--deriv", action="store_true", help="add C, c, gradient bound, df0")
    fmt(p, "csv")
    p.set_defaults(handler=cmd_bound)

    p = sub.add_parser("extend", parents=[common], help="evaluate an extension")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--p", type=parse_p, default=math.inf,
                   help="norm used for the bound columns (default inf)")
    p.add_argument("--f", required=True,
                   help="constant:c | cosine | sign_of_sine | holder_extremal | "
                        "gradient_extremal[:direction] | samples:PATH")
    p.add_argument("--z", type=parse_point, action="append", help="polar point r,s")
    p.add_argument("--r-grid", type=parse_grid)
    p.add_argument("--s", type=parse_floats, default=[0.0],
                   help="angles used with --r-grid")
    p.add_argument("--tol", type=float, default=1e-8, help="relative slack tolerance")
    fmt(p, "csv")
    p.set_defaults(handler=cmd_extend)

    p = sub.add_parser("schwarz", parents=[common], help="Schwarz majorant vs oracle")
    p.add_argument("--alpha", type=float, required=True)
    radii(p)
    fmt(p, "csv")
    p.set_defaults(handler=cmd_schwarz)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--only", action="append", choices=sorted(suites.SUITES))
    p.add_argument("--alpha", type=parse_floats)
    p.add_argument("--p", type=parse_p_list)
    p.add_argument("--r", type=parse_floats)
    p.add_argument("--m", type=parse_floats)
    p.add_argument("--q", type=parse_floats)
    p.add_argument("--k", type=parse_floats)
    p.add_argument("--n", type=int, help="scan grid points")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, help="random functions per suite")
    fmt(p, "json")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("scan-conjecture", parents=[common],
                       help="scan Phi(t) for the gradient conjecture")
    p.add_argument("--alpha", type=parse_floats, default=[2.0, 4.0])
    p.add_argument("--r-grid", type=parse_grid, default=GridSpec(0.05, 0.95, 19))
    p.add_argument("--t-points", type=int, default=33, help="points on [0, pi/2]")
    p.add_argument("--tol", type=float, default=1e-9)
    fmt(p, "json")
    p.set_defaults(handler=cmd_scan_conjecture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = args.handler(args)
        emit(text, args.output)
    except (ConfigError, DomainError, PreconditionError) as exc:
        print(f"alpharm {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (NonConvergenceError, QuadratureError) as exc:
        print(f"alpharm {args.command}: numerical failure: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
