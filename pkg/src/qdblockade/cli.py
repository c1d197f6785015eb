"""Command-line sweep driver emitting deterministic CSV.

Subcommands: point, sweep, sweep2d, compare, optimum, convergence.  All
floats are printed in scientific notation with 9 significant digits and rows
follow the grid order, so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys
import warnings
from dataclasses import dataclass

import numpy as np

from .analytic import g2_weak_drive, mean_photon_weak_drive, ucpb_roots
from .errors import BlockadeError, CutoffConvergenceError, UndefinedCorrelationError
from .fock_algebra import HilbertSpace
from .model import ModelParams, bimode_limit, jc_limit
from .steady_state import SteadyStateResult, converged_solve, solve_steady_state

__all__ = ["main"]

AXIS_FIELDS = ("delta", "delta_a", "g", "E", "U")
_NONNEG_FIELDS = ("g", "E", "U")
_ENGINES = ("numeric", "analytic")
_MAX_CUTOFF = 40

_CONFIG_KEYS: dict[str, type] = {
    "delta": float, "delta_a": float, "g": float, "E": float, "U": float,
    "kappa": float, "gamma": float, "cutoff": int, "converge_tol": float,
    "axis": str, "axis2": str, "engines": str, "out": str,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class AxisSpec:
    name: str
    start: float
    stop: float
    steps: int

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


def _parse_axis(text: str) -> AxisSpec:
    parts = text.split(":")
    if len(parts) != 4:
        raise _UsageError(f"bad axis spec {text!r}: expected name:start:stop:steps")
    name = parts[0]
    if name not in AXIS_FIELDS:
        raise _UsageError(f"unknown axis {name!r}: choose from {', '.join(AXIS_FIELDS)}")
    try:
        start, stop = float(parts[1]), float(parts[2])
        steps = int(parts[3])
    except ValueError:
        raise _UsageError(f"bad axis spec {text!r}: start/stop must be numbers, steps an int")
    if steps < 2:
        raise _UsageError(f"axis {name!r} needs at least 2 steps, got {steps}")
    if not start < stop:
        raise _UsageError(f"axis {name!r} needs start < stop, got {start} .. {stop}")
    if name in _NONNEG_FIELDS and start < 0:
        raise _UsageError(f"axis over {name!r} must stay nonnegative")
    return AxisSpec(name, start, stop, steps)


def _parse_engines(text: str) -> tuple[str, ...]:
    wanted = [tok.strip() for tok in text.split(",") if tok.strip()]
    for tok in wanted:
        if tok not in _ENGINES:
            raise _UsageError(f"unknown engine {tok!r}: choose from numeric, analytic")
    if not wanted:
        raise _UsageError("at least one engine is required")
    return tuple(e for e in _ENGINES if e in wanted)


def _load_config(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise _UsageError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if key not in _CONFIG_KEYS:
                raise _UsageError(f"{path}:{lineno}: unknown config key {key!r}")
            try:
                out[key] = _CONFIG_KEYS[key](value.strip())
            except ValueError:
                raise _UsageError(f"{path}:{lineno}: bad value for {key!r}: {value.strip()!r}")
    return out


def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    xf = float(x)
    if math.isnan(xf):
        return "nan"
    return f"{xf:.8e}"


def _emit(lines: list[str], out_path: str | None) -> int:
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out_path!r}: {exc}", file=sys.stderr)
        return 2
    return 0


def _write_gnuplot(args, header: list[str], two_d: bool) -> int:
    if args.gnuplot is None:
        return 0
    if args.out is None:
        raise _UsageError("--gnuplot requires --out so the script has data to point at")
    ncol = len(header)
    lines = [
        f"# gnuplot stub for {args.out}",
        "set datafile separator ','",
        "set key autotitle columnhead",
    ]
    if two_d:
        lines += ["set view map", f"splot '{args.out}' using 1:2:3 with points palette"]
    else:
        lines += ["set logscale y", f"plot '{args.out}' using 1:2 with lines"]
    lines.append(f"# columns: {','.join(header)} ({ncol} total)")
    return _emit(lines, args.gnuplot)


def _params_from_args(args) -> ModelParams:
    try:
        return ModelParams(delta=args.delta, delta_a=args.delta_a, g=args.g,
                           E=args.E, U=args.U, kappa=args.kappa, gamma=args.gamma)
    except ValueError as exc:
        raise _UsageError(str(exc))


def _solve_numeric(params: ModelParams, args) -> SteadyStateResult:
    if args.converge_tol is None:
        return solve_steady_state(params, HilbertSpace(args.cutoff))
    return converged_solve(params, initial_cutoff=args.cutoff, rel_tol=args.converge_tol)


def _analytic_cells(params: ModelParams) -> tuple[float, float]:
    n_a = mean_photon_weak_drive(params)
    try:
        g2 = g2_weak_drive(params)
    except UndefinedCorrelationError:
        g2 = math.nan
    return g2, n_a


def _header(engines: tuple[str, ...], axis_names: list[str]) -> list[str]:
    cols = list(axis_names)
    if "numeric" in engines:
        cols.append("g2_numeric")
    if "analytic" in engines:
        cols.append("g2_analytic")
    if "numeric" in engines:
        cols.append("n_a_numeric")
    if "analytic" in engines:
        cols.append("n_a_analytic")
    cols += ["cutoff_used", "residual", "status"]
    return cols


def _row_cells(params: ModelParams, engines: tuple[str, ...], args) -> list:
    """One RecordRow; solver failures become nan cells plus a status flag."""
    status = "ok"
    g2_num = n_num = math.nan
    cutoff_used: int | str = args.cutoff
    residual = math.nan
    if "numeric" in engines:
        try:
            res = _solve_numeric(params, args)
            g2_num, n_num = res.g2_zero, res.n_a
            cutoff_used, residual = res.cutoff_used, res.residual
        except CutoffConvergenceError:
            status = "no_converge"
        except BlockadeError:
            status = "singular"
    g2_an = n_an = math.nan
    if "analytic" in engines:
        try:
            # a full-axis sweep crosses the expansion's breakdown region on
            # purpose; the per-point hierarchy warning is only noise here
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RuntimeWarning)
                g2_an, n_an = _analytic_cells(params)
        except BlockadeError:
            if "numeric" not in engines:
                status = "singular"
    cells = []
    if "numeric" in engines:
        cells.append(g2_num)
    if "analytic" in engines:
        cells.append(g2_an)
    if "numeric" in engines:
        cells.append(n_num)
    if "analytic" in engines:
        cells.append(n_an)
    cells += [cutoff_used, residual, status]
    return cells


def cmd_point(args) -> int:
    params = _params_from_args(args)
    engines = _parse_engines(args.engines)
    header = _header(engines, [])
    status = "ok"
    g2_num = n_num = math.nan
    cutoff_used: int | str = args.cutoff
    residual = math.nan
    if "numeric" in engines:
        try:
            res = _solve_numeric(params, args)
        except BlockadeError as exc:
            print(f"error: steady-state solve failed: {exc}", file=sys.stderr)
            return 3
        g2_num, n_num = res.g2_zero, res.n_a
        cutoff_used, residual = res.cutoff_used, res.residual
    g2_an = n_an = math.nan
    if "analytic" in engines:
        try:
            g2_an, n_an = _analytic_cells(params)
        except BlockadeError as exc:
            print(f"error: weak-drive evaluation failed: {exc}", file=sys.stderr)
            return 3
    cells = []
    if "numeric" in engines:
        cells.append(g2_num)
    if "analytic" in engines:
        cells.append(g2_an)
    if "numeric" in engines:
        cells.append(n_num)
    if "analytic" in engines:
        cells.append(n_an)
    cells += [cutoff_used, residual, status]
    return _emit([",".join(header), ",".join(_fmt(c) for c in cells)], args.out)


def cmd_sweep(args) -> int:
    base = _params_from_args(args)
    engines = _parse_engines(args.engines)
    axis = _parse_axis(args.axis)
    header = _header(engines, [axis.name])
    lines = [",".join(header)]
    for x in axis.values():
        params = dataclasses.replace(base, **{axis.name: float(x)})
        cells = [float(x)] + _row_cells(params, engines, args)
        lines.append(",".join(_fmt(c) for c in cells))
    code = _write_gnuplot(args, header, two_d=False)
    if code:
        return code
    return _emit(lines, args.out)


def cmd_sweep2d(args) -> int:
    base = _params_from_args(args)
    engines = _parse_engines(args.engines)
    axis1 = _parse_axis(args.axis)
    axis2 = _parse_axis(args.axis2)
    if axis1.name == axis2.name:
        raise _UsageError(f"axis and axis2 must differ, both are {axis1.name!r}")
    header = _header(engines, [axis1.name, axis2.name])
    lines = [",".join(header)]
    # axis2-major: the second axis is the slow (outer) index
    for y in axis2.values():
        for x in axis1.values():
            params = dataclasses.replace(base, **{axis1.name: float(x),
                                                  axis2.name: float(y)})
            cells = [float(x), float(y)] + _row_cells(params, engines, args)
            lines.append(",".join(_fmt(c) for c in cells))
    code = _write_gnuplot(args, header, two_d=True)
    if code:
        return code
    return _emit(lines, args.out)


def cmd_compare(args) -> int:
    base = _params_from_args(args)
    axis = _parse_axis(args.axis)
    variants = [("composite", lambda p: p), ("jc", jc_limit), ("bimode", bimode_limit)]
    header = ([axis.name]
              + [f"g2_{name}" for name, _ in variants]
              + [f"n_a_{name}" for name, _ in variants]
              + ["status"])
    lines = [",".join(header)]
    for x in axis.values():
        at_x = dataclasses.replace(base, **{axis.name: float(x)})
        status = "ok"
        g2s, nas = [], []
        for _, limit in variants:
            try:
                res = _solve_numeric(limit(at_x), args)
                g2s.append(res.g2_zero)
                nas.append(res.n_a)
            except CutoffConvergenceError:
                g2s.append(math.nan)
                nas.append(math.nan)
                status = "no_converge" if status == "ok" else status
            except BlockadeError:
                g2s.append(math.nan)
                nas.append(math.nan)
                status = "singular" if status == "ok" else status
        cells = [float(x)] + g2s + nas + [status]
        lines.append(",".join(_fmt(c) for c in cells))
    code = _write_gnuplot(args, header, two_d=False)
    if code:
        return code
    return _emit(lines, args.out)


def cmd_optimum(args) -> int:
    params = _params_from_args(args)
    axis = _parse_axis(args.axis)
    if axis.name not in ("delta", "delta_a"):
        raise _UsageError("optimum searches a detuning: axis must be delta or delta_a")
    grid_step = (axis.stop - axis.start) / (axis.steps - 1)
    roots = ucpb_roots(params, axis.name, (axis.start, axis.stop), grid_step=grid_step)
    lines = ["kind,variable,value,c2g_residual,g2_weak_drive"]
    if not roots:
        lines.append(f"# no blockade roots found in [{_fmt(axis.start)}, {_fmt(axis.stop)}]")
    for root in roots:
        at_root = dataclasses.replace(params, **{root.variable: root.value})
        try:
            g2 = g2_weak_drive(at_root)
        except BlockadeError:
            g2 = math.nan
        lines.append(",".join([root.kind, root.variable, _fmt(root.value),
                               _fmt(root.residual), _fmt(g2)]))
    return _emit(lines, args.out)


def cmd_convergence(args) -> int:
    params = _params_from_args(args)
    tol = 1e-6 if args.converge_tol is None else args.converge_tol
    history: list[SteadyStateResult] = []
    failed = None
    try:
        converged_solve(params, initial_cutoff=args.cutoff, rel_tol=tol,
                        history=history)
    except BlockadeError as exc:
        failed = exc
    lines = ["cutoff,g2_numeric,n_a_numeric,residual"]
    for res in history:
        lines.append(",".join(_fmt(c) for c in
                              [res.cutoff_used, res.g2_zero, res.n_a, res.residual]))
    code = _emit(lines, args.out)
    if code:
        return code
    if failed is not None:
        print(f"error: {failed}", file=sys.stderr)
        return 3
    return 0


def _build_parser() -> tuple[_Parser, dict]:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--delta", type=float, default=0.0,
                        help="dot-drive detuning (units of gamma)")
    shared.add_argument("--delta-a", dest="delta_a", type=float, default=0.0,
                        help="cavity-drive detuning")
    shared.add_argument("--g", type=float, default=0.0, help="dot-cavity coupling")
    shared.add_argument("--E", type=float, default=0.0, help="one-photon drive amplitude")
    shared.add_argument("--U", type=float, default=0.0, help="two-photon drive amplitude")
    shared.add_argument("--kappa", type=float, default=1.0, help="cavity decay rate")
    shared.add_argument("--gamma", type=float, default=1.0,
                        help="dot decay rate (the unit; rescale for absolute rates)")
    shared.add_argument("--cutoff", type=int, default=10,
                        help="Fock cutoff (initial cutoff when --converge-tol is set)")
    shared.add_argument("--converge-tol", dest="converge_tol", type=float, default=None,
                        help="switch to cutoff auto-convergence at this relative tolerance")
    shared.add_argument("--config", default=None,
                        help="key=value file supplying flag defaults")
    shared.add_argument("--out", default=None, help="output path (default: stdout)")

    parser = _Parser(prog="qdblockade",
                     description="Photon-blockade steady-state sweeps and blockade conditions")
    sub = parser.add_subparsers(dest="command", required=True)
    subs = {}

    p = sub.add_parser("point", parents=[shared], help="evaluate one parameter point")
    p.add_argument("--engines", default="numeric,analytic")
    p.set_defaults(func=cmd_point)
    subs["point"] = p

    p = sub.add_parser("sweep", parents=[shared], help="1-D parameter sweep to CSV")
    p.add_argument("--axis", required=True, help="name:start:stop:steps")
    p.add_argument("--engines", default="numeric,analytic")
    p.add_argument("--gnuplot", default=None, help="also write a gnuplot stub here")
    p.set_defaults(func=cmd_sweep)
    subs["sweep"] = p

    p = sub.add_parser("sweep2d", parents=[shared], help="2-D parameter sweep to CSV")
    p.add_argument("--axis", required=True, help="fast axis, name:start:stop:steps")
    p.add_argument("--axis2", required=True, help="slow axis, name:start:stop:steps")
    p.add_argument("--engines", default="numeric,analytic")
    p.add_argument("--gnuplot", default=None, help="also write a gnuplot stub here")
    p.set_defaults(func=cmd_sweep2d)
    subs["sweep2d"] = p

    p = sub.add_parser("compare", parents=[shared],
                       help="sweep the composite model against its U=0 and g=0 limits")
    p.add_argument("--axis", required=True, help="name:start:stop:steps")
    p.add_argument("--gnuplot", default=None, help="also write a gnuplot stub here")
    p.set_defaults(func=cmd_compare)
    subs["compare"] = p

    p = sub.add_parser("optimum", parents=[shared],
                       help="locate CPB/UCPB roots along a detuning axis")
    p.add_argument("--axis", required=True,
                   help="detuning axis, name:start:stop:steps (steps sets the scan grid)")
    p.set_defaults(func=cmd_optimum)
    subs["optimum"] = p

    p = sub.add_parser("convergence", parents=[shared],
                       help="report observables while raising the Fock cutoff")
    p.set_defaults(func=cmd_convergence)
    subs["convergence"] = p

    return parser, subs


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subs = _build_parser()
    try:
        pre = argparse.ArgumentParser(add_help=False)
        pre.add_argument("--config", default=None)
        known, _ = pre.parse_known_args(argv)
        if known.config is not None:
            try:
                defaults = _load_config(known.config)
            except OSError as exc:
                print(f"error: cannot read config {known.config!r}: {exc}", file=sys.stderr)
                return 2
            for p in subs.values():
                p.set_defaults(**defaults)
        args = parser.parse_args(argv)
        if not 2 <= args.cutoff <= _MAX_CUTOFF:
            raise _UsageError(f"cutoff must be in [2, {_MAX_CUTOFF}], got {args.cutoff}")
        if args.converge_tol is not None and args.converge_tol <= 0:
            raise _UsageError("converge tolerance must be positive")
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1


if __name__ == "__main__":
    sys.exit(main())
