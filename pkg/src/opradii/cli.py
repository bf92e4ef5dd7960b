"""Command-line interface.

Exit codes: 0 on success (and all checks passing), 1 when a verification
check reports a violation, 2 on usage or input errors.  Matrix files use the
JSON layout described in matio.  Set RADII_THREADS to cap the worker count
used by the verification commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

import numpy as np

from .delta import build_blocks, delta, make_params
from .linalg import DEFAULT_TOLERANCES, ToleranceConfig, spectral_norm, spectral_radius
from .matio import load_matrix, matrix_to_obj
from .radii import (
    DEFAULT_ANGLE_CONFIG,
    AngleSolverConfig,
    aluthge,
    crawford_number,
    numerical_radius,
    operator_radius_rho,
)
from .suite import (
    FAMILIES,
    EnsembleConfig,
    enumerate_checks,
    run_matrix_checks,
    run_suite,
    search_counterexamples,
)

__all__ = ["main", "build_parser"]

# The library accepts any rho in (0, 2]; the CLI refuses the extreme tail
# where alpha ~ sqrt(8/rho) and beta ~ 2/rho blow up the doubled matrix and
# default solver tolerances stop being meaningful for casual use.
CLI_RHO_FLOOR = 1e-4

_SCALAR_FUNCTIONALS = ("delta", "wrho", "w", "norm", "crawford", "spectral-radius")
_MATRIX_FUNCTIONALS = ("aluthge", "blocks")
_FUNCTIONALS = _SCALAR_FUNCTIONALS + _MATRIX_FUNCTIONALS


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _check_cli_rho(rho: float) -> float:
    if not (CLI_RHO_FLOOR <= rho <= 2.0):
        raise ValueError(f"rho out of range [{CLI_RHO_FLOOR:g}, 2]: got {rho:g}")
    return rho


def _check_nu(nu: float) -> float:
    if not (0.0 <= nu <= 1.0):
        raise ValueError(f"nu out of range [0, 1]: got {nu:g}")
    return nu


def _parse_grid(text: str, name: str) -> tuple[float, ...]:
    """Grid spec: comma-separated values, or start:stop:step (inclusive)."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"{name}: expected start:stop:step, got {text!r}")
        try:
            start, stop, step = (float(p) for p in parts)
        except ValueError:
            raise ValueError(f"{name}: expected start:stop:step with numeric fields, got {text!r}") from None
        if step <= 0.0:
            raise ValueError(f"{name}: step must be positive, got {step:g}")
        if stop < start:
            raise ValueError(f"{name}: stop must be >= start in {text!r}")
        count = int(np.floor((stop - start) / step + 1e-9)) + 1
        return tuple(start + i * step for i in range(count))
    try:
        values = tuple(float(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise ValueError(f"{name}: expected comma-separated numbers, got {text!r}") from None
    if not values:
        raise ValueError(f"{name}: empty grid")
    return values


def _parse_rho_grid(text: str) -> tuple[float, ...]:
    return tuple(_check_cli_rho(v) for v in _parse_grid(text, "--rho-grid"))


def _parse_nu_grid(text: str) -> tuple[float, ...]:
    return tuple(_check_nu(v) for v in _parse_grid(text, "--nu-grid"))


def _parse_only(text: str | None) -> tuple[str, ...] | None:
    if text is None:
        return None
    known = set(enumerate_checks())
    ids = tuple(p.strip() for p in text.split(",") if p.strip())
    if not ids:
        raise ValueError("--only: empty selection")
    for cid in ids:
        if cid not in known:
            raise ValueError(f"--only: unknown check id {cid!r}")
    return ids


def _angle_config(args: argparse.Namespace) -> AngleSolverConfig:
    if getattr(args, "coarse_points", None) is None:
        return DEFAULT_ANGLE_CONFIG
    return AngleSolverConfig(coarse_points=args.coarse_points)


def _tol_config(args: argparse.Namespace) -> ToleranceConfig:
    rel_eq = getattr(args, "tol_eq", None)
    rel_ineq = getattr(args, "tol_ineq", None)
    if rel_eq is None and rel_ineq is None:
        return DEFAULT_TOLERANCES
    return ToleranceConfig(
        rel_eq=rel_eq if rel_eq is not None else DEFAULT_TOLERANCES.rel_eq,
        rel_ineq=rel_ineq if rel_ineq is not None else DEFAULT_TOLERANCES.rel_ineq,
    )


def _write_output(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".opradii-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ----------------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------------


def _cmd_compute(args: argparse.Namespace) -> int:
    X = load_matrix(args.input)
    func = args.functional
    cfg = _angle_config(args)
    rho = nu = None
    if func in ("delta", "blocks"):
        if args.rho is None:
            raise ValueError(f"{func}: --rho is required")
        if args.nu is None:
            raise ValueError(f"{func}: --nu is required")
        rho = _check_cli_rho(args.rho)
        nu = _check_nu(args.nu)
    elif func == "wrho":
        if args.rho is None:
            raise ValueError("wrho: --rho is required")
        rho = _check_cli_rho(args.rho)

    if func == "delta":
        value = delta(X, rho, nu, cfg)
    elif func == "wrho":
        value = operator_radius_rho(X, rho, cfg)
    elif func == "w":
        value = numerical_radius(X, cfg)
    elif func == "norm":
        value = spectral_norm(X)
    elif func == "crawford":
        value = crawford_number(X, cfg)
    elif func == "spectral-radius":
        value = spectral_radius(X)
    elif func == "aluthge":
        _write_output(args.out, _json_text(matrix_to_obj(aluthge(X, _tol_config(args)))))
        return 0
    else:  # blocks
        blocks = build_blocks(X, make_params(rho, nu))
        obj = {"H": matrix_to_obj(blocks.full), "G": matrix_to_obj(blocks.upper)}
        _write_output(args.out, _json_text(obj))
        return 0

    _write_output(args.out, "%.12f\n" % value)
    return 0


def _report_lines(report) -> str:
    lines = []
    for s in report.summaries:
        status = "PASS" if s.passed else "FAIL"
        slack = "n/a" if s.min_slack is None else "%.6g" % s.min_slack
        lines.append(f"{status}  {s.check_id:<18} count={s.count:<6} min_slack={slack}")
    lines.append("overall: " + ("PASS" if report.overall_pass else "FAIL"))
    return "\n".join(lines) + "\n"


def _ensemble_config(args: argparse.Namespace) -> EnsembleConfig:
    kwargs = {"master_seed": args.seed}
    if args.families is not None:
        fams = tuple(p.strip() for p in args.families.split(",") if p.strip())
        if not fams:
            raise ValueError("--families: empty selection")
        kwargs["families"] = fams
    if args.dims is not None:
        try:
            dims = tuple(int(p) for p in args.dims.split(",") if p.strip())
        except ValueError:
            raise ValueError(f"--dims: expected comma-separated integers, got {args.dims!r}") from None
        if not dims:
            raise ValueError("--dims: empty selection")
        kwargs["dims"] = dims
    if args.samples is not None:
        kwargs["samples_per_cell"] = args.samples
    if args.rho_grid is not None:
        kwargs["rho_grid"] = _parse_rho_grid(args.rho_grid)
    if args.nu_grid is not None:
        kwargs["nu_grid"] = _parse_nu_grid(args.nu_grid)
    return EnsembleConfig(**kwargs)


def _emit_report(args: argparse.Namespace, report) -> int:
    if args.out is not None:
        _write_output(args.out, report.to_json_text())
        sys.stdout.write(_report_lines(report))
    else:
        sys.stdout.write(report.to_json_text())
    return 0 if report.overall_pass else 1


def _file_grid_values(args: argparse.Namespace) -> tuple[tuple[float, ...], tuple[float, ...]]:
    if args.rho is not None:
        rho_values = (_check_cli_rho(args.rho),)
    elif args.rho_grid is not None:
        rho_values = _parse_rho_grid(args.rho_grid)
    else:
        rho_values = (0.5, 1.0, 1.5, 2.0)
    if args.nu is not None:
        nu_values = (_check_nu(args.nu),)
    elif args.nu_grid is not None:
        nu_values = _parse_nu_grid(args.nu_grid)
    else:
        nu_values = (0.0, 0.25, 0.5, 0.75, 1.0)
    return rho_values, nu_values


def _cmd_check(args: argparse.Namespace) -> int:
    only = _parse_only(args.only)
    cfg = _angle_config(args)
    tol = _tol_config(args)
    if args.ensemble:
        report = run_suite(_ensemble_config(args), checks=only, angle_cfg=cfg, tol_cfg=tol)
    else:
        if args.input is None:
            raise ValueError("check: provide --ensemble or --input FILE")
        X = load_matrix(args.input)
        rho_values, nu_values = _file_grid_values(args)
        report = run_matrix_checks(
            X,
            checks=only,
            rho_values=rho_values,
            nu_values=nu_values,
            master_seed=args.seed,
            angle_cfg=cfg,
            tol_cfg=tol,
        )
    return _emit_report(args, report)


def _cmd_search(args: argparse.Namespace) -> int:
    only = _parse_only(args.only)
    if args.worst < 1:
        raise ValueError(f"--worst must be positive, got {args.worst}")
    report = search_counterexamples(
        _ensemble_config(args),
        checks=only,
        k=args.worst,
        angle_cfg=_angle_config(args),
        tol_cfg=_tol_config(args),
    )
    return _emit_report(args, report)


def _cmd_sweep(args: argparse.Namespace) -> int:
    X = load_matrix(args.input)
    cfg = _angle_config(args)
    rho_values = _parse_rho_grid(args.rho_grid)
    nu_values = _parse_nu_grid(args.nu_grid) if args.nu_grid is not None else (0.5,)
    norm = spectral_norm(X)
    w = numerical_radius(X, cfg)
    rows = ["rho,nu,delta,spectral_norm,numerical_radius,w_rho"]
    for rho in rho_values:  # lexicographic: rho outer, nu inner
        wr = operator_radius_rho(X, rho, cfg)
        for nu in nu_values:
            d = delta(X, rho, nu, cfg)
            rows.append("%.12g,%.12g,%.12g,%.12g,%.12g,%.12g" % (rho, nu, d, norm, w, wr))
    _write_output(args.out, "\n".join(rows) + "\n")
    return 0


# ----------------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opradii",
        description="Generalized operator radii: compute functionals and verify their identities.",
        epilog="Set RADII_THREADS to cap parallelism of check/search runs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_solver_args(p):
        p.add_argument("--coarse-points", type=int, default=None, help="angle grid size (default 1024)")
        p.add_argument("--tol-eq", type=float, default=None, help="relative equality tolerance (default 1e-9)")
        p.add_argument("--tol-ineq", type=float, default=None, help="relative inequality tolerance (default 1e-8)")

    p_compute = sub.add_parser("compute", help="evaluate one functional on a matrix file")
    p_compute.add_argument("--functional", required=True, choices=_FUNCTIONALS)
    p_compute.add_argument("--input", required=True, help="matrix JSON file")
    p_compute.add_argument("--rho", type=float, default=None)
    p_compute.add_argument("--nu", type=float, default=None)
    p_compute.add_argument("--out", default=None, help="write result here instead of stdout")
    add_solver_args(p_compute)
    p_compute.set_defaults(func=_cmd_compute)

    def add_ensemble_args(p):
        p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
        p.add_argument("--families", default=None, help=f"comma list from: {','.join(FAMILIES)}")
        p.add_argument("--dims", default=None, help="comma list of dimensions (default 2,3,4,5,6)")
        p.add_argument("--samples", type=int, default=None, help="samples per (family, dim) cell")
        p.add_argument("--rho-grid", default=None, help="comma list or start:stop:step")
        p.add_argument("--nu-grid", default=None, help="comma list or start:stop:step")
        p.add_argument("--only", default=None, help="comma list of check ids (default: all)")
        p.add_argument("--out", default=None, help="write the JSON report here; summary goes to stdout")
        add_solver_args(p)

    p_check = sub.add_parser("check", help="run verification checks, exit 1 on any violation")
    p_check.add_argument("--ensemble", action="store_true", help="run over the random ensemble")
    p_check.add_argument("--input", default=None, help="instead: check one matrix JSON file")
    p_check.add_argument("--rho", type=float, default=None, help="single rho for --input mode")
    p_check.add_argument("--nu", type=float, default=None, help="single nu for --input mode")
    add_ensemble_args(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_search = sub.add_parser("search", help="report the tightest evaluations per check")
    add_ensemble_args(p_search)
    p_search.add_argument("--worst", type=int, default=10, help="witnesses per check (default 10)")
    p_search.set_defaults(func=_cmd_search)

    p_sweep = sub.add_parser("sweep", help="CSV sweep of the functionals over (rho, nu) grids")
    p_sweep.add_argument("--input", required=True, help="matrix JSON file")
    p_sweep.add_argument("--rho-grid", required=True, help="comma list or start:stop:step")
    p_sweep.add_argument("--nu-grid", default=None, help="comma list or start:stop:step (default 0.5)")
    p_sweep.add_argument("--out", default=None, help="write CSV here instead of stdout")
    add_solver_args(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
