"""Command-line surface: eigenvalue tables, bound comparisons, profile
exports, and validation runs.  The sole I/O owner of the package.

Exit codes: 0 success, 1 usage error, 2 numerical validation failure,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import greens, oracle
from .eigenfun import laplace_profile, stokes_profile
from .geometry import InvalidGeometry, ShellGeometry
from .spectra import OperatorKind, ball_stokes_root, bounds_for, laplace_first, stokes_first

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3

COMMANDS = ("eig", "table", "bounds", "profile", "greens-validate", "oracle-check")

_SLACK = 1e-14


class ValidationFailure(RuntimeError):
    pass


class UsageError(ValueError):
    pass


@dataclass
class GridSpec:
    min: float = 1e-3
    max: float = 1e3
    points: int = 400
    scale: str = "log"

    def __post_init__(self) -> None:
        if not (self.min < self.max) or self.points < 2:
            raise UsageError("grid requires min < max and points >= 2")
        if self.scale not in ("log", "linear"):
            raise UsageError(f"unknown grid scale {self.scale!r}")

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.min, self.max, self.points)
        return np.linspace(self.min, self.max, self.points)


@dataclass
class RunConfig:
    command: str
    a: float | None = None
    sigma: float | None = None
    grid: GridSpec | None = None
    output_format: str = "csv"
    output_path: str | None = None
    tolerances: dict = field(default_factory=dict)
    operator: str = "laplace"
    samples: int = 512


def fmt(x: float) -> str:
    """Fixed 12-significant-digit decimal formatting for diffable output."""
    return f"{x + 0.0:.12g}"  # + 0.0 normalizes negative zero


def default_gap_grid() -> np.ndarray:
    """Logarithmic grid over [1e-3, 1e3], four times denser below A = 1."""
    low = np.geomspace(1e-3, 1.0, 800, endpoint=False)
    high = np.geomspace(1.0, 1e3, 200)
    return np.concatenate([low, high])


def _geometry(cfg: RunConfig) -> ShellGeometry:
    if cfg.a is not None and cfg.sigma is not None:
        raise UsageError("give either --a or --sigma, not both")
    if cfg.a is not None:
        return ShellGeometry.from_gap_ratio(cfg.a)
    if cfg.sigma is not None:
        return ShellGeometry.from_radius_ratio(cfg.sigma)
    raise UsageError("this command needs --a or --sigma")


def _eigen_row(A: float) -> dict:
    geom = ShellGeometry.from_gap_ratio(A)
    lap = laplace_first(geom)
    sto = stokes_first(geom)
    row = {
        "A": A,
        "sigma": geom.sigma,
        "kappa_L": lap.kappa,
        "lambda_L": lap.eigenvalue,
        "c_p": lap.poincare,
        "kappa_S": sto.kappa,
        "lambda_S": sto.eigenvalue,
        "c_pS": sto.poincare,
    }
    _assert_row_invariants(row)
    return row


def _assert_row_invariants(row: dict) -> None:
    if row["c_pS"] > row["c_p"] + _SLACK:
        raise ValidationFailure(f"c_pS > c_p at A={row['A']}")
    if row["A"] > 0:
        best = bounds_for(ShellGeometry.from_gap_ratio(row["A"])).best
        if row["c_p"] > best + _SLACK:
            raise ValidationFailure(f"c_p exceeds analytic bound at A={row['A']}")
    upper = ball_stokes_root()
    if not (math.pi - 1e-12 <= row["kappa_S"] <= upper + 1e-10):
        raise ValidationFailure(f"kappa_S outside [pi, {upper}] at A={row['A']}")


def _bounds_row(A: float) -> dict:
    geom = ShellGeometry.from_gap_ratio(A)
    b = bounds_for(geom)
    return {
        "A": A,
        "diam_half": b.diam_half,
        "diam_pi_sqrt2": b.diam_over_pi_sqrt2,
        "nazarov": None if math.isinf(b.nazarov) else b.nazarov,
        "best": b.best,
        "c_p": laplace_first(geom).poincare,
    }


def run_eig(cfg: RunConfig) -> tuple[list[str], list[dict]]:
    geom = _geometry(cfg)
    row = _eigen_row(geom.A)
    header = ["A", "sigma", "kappa_L", "lambda_L", "c_p",
              "kappa_S", "lambda_S", "c_pS"]
    return header, [row]


def run_table(cfg: RunConfig) -> tuple[list[str], list[dict]]:
    grid = cfg.grid.values() if cfg.grid is not None else default_gap_grid()
    rows = [_eigen_row(float(A)) for A in grid]
    header = ["A", "sigma", "kappa_L", "lambda_L", "c_p",
              "kappa_S", "lambda_S", "c_pS"]
    return header, rows


def run_bounds(cfg: RunConfig) -> tuple[list[str], list[dict]]:
    grid = cfg.grid.values() if cfg.grid is not None else default_gap_grid()
    rows = [_bounds_row(float(A)) for A in grid]
    return ["A", "diam_half", "diam_pi_sqrt2", "nazarov", "best", "c_p"], rows


def run_profile(cfg: RunConfig) -> tuple[list[str], list[dict]]:
    geom = _geometry(cfg)
    if cfg.operator == "laplace":
        profile = laplace_profile(geom, cfg.samples)
    elif cfg.operator == "stokes":
        profile = stokes_profile(geom, cfg.samples)
    else:
        raise UsageError(f"unknown operator {cfg.operator!r}")
    rows = [{"r": float(r), "value": float(v)}
            for r, v in zip(profile.r, profile.values)]
    return ["r", "value"], rows


def run_greens_validate(cfg: RunConfig) -> dict:
    tol = cfg.tolerances.get("greens", 0.01)
    sigmas = (cfg.sigma,) if cfg.sigma is not None else (0.0, 0.25, 0.5, 0.75)
    results = []
    worst = 0.0
    for sigma in sigmas:
        params = greens.GreensParams(sigma=sigma, radial_nodes=128)
        estimate = greens.inverse_norm_estimate(params)
        exact = (1.0 - sigma) ** 2 / math.pi ** 2
        rel_error = abs(estimate - exact) / exact
        worst = max(worst, rel_error)
        results.append({"sigma": sigma, "estimate": estimate,
                        "exact": exact, "rel_error": rel_error})
    report = {"tolerance": tol, "results": results, "passed": worst <= tol}
    if not report["passed"]:
        raise ValidationFailure(json.dumps(report))
    return report


def run_oracle_check(cfg: RunConfig) -> dict:
    tol = cfg.tolerances.get("oracle", 1e-5)
    gap_ratios = (cfg.a,) if cfg.a is not None else (0.1, 1.0, 10.0)
    n_grid = int(cfg.tolerances.get("n_grid", 4000))
    results = []
    worst = 0.0
    for A in gap_ratios:
        geom = ShellGeometry.from_gap_ratio(A)
        kappa_rootfind = stokes_first(geom).kappa
        lam = oracle.radial_eigenvalue(oracle.RadialProblem(geom, l=1, n_grid=n_grid))
        kappa_oracle = math.sqrt(lam)
        rel_diff = abs(kappa_rootfind - kappa_oracle) / kappa_rootfind
        worst = max(worst, rel_diff)
        results.append({"A": A, "kappa_rootfind": kappa_rootfind,
                        "kappa_oracle": kappa_oracle, "rel_diff": rel_diff})
    report = {"tolerance": tol, "results": results, "passed": worst <= tol}
    if not report["passed"]:
        raise ValidationFailure(json.dumps(report))
    return report


def _render_csv(header: list[str], rows: list[dict]) -> str:
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for key in header:
            value = row[key]
            cells.append("" if value is None else fmt(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _render_json(header: list[str], rows: list[dict]) -> str:
    out = [{k: row[k] for k in header} for row in rows]
    return json.dumps(out, indent=2) + "\n"


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as handle:
        handle.write(text)


def _parser() -> argparse.ArgumentParser:
    class Parser(argparse.ArgumentParser):
        def error(self, message):  # usage errors exit 1, not argparse's 2
            raise UsageError(message)

    parser = Parser(prog="shellspectra", description=__doc__)
    parser.add_argument("--command", choices=COMMANDS)
    parser.add_argument("--a", type=float)
    parser.add_argument("--sigma", type=float)
    parser.add_argument("--grid", type=str,
                        help="min:max:points:log|linear")
    parser.add_argument("--format", choices=("csv", "json"))
    parser.add_argument("--out", type=str)
    parser.add_argument("--tol", action="append", default=[],
                        metavar="NAME=VALUE")
    parser.add_argument("--operator", choices=("laplace", "stokes"))
    parser.add_argument("--samples", type=int)
    parser.add_argument("--config", type=str,
                        help="JSON config file; flags override its entries")
    return parser


def _parse_grid(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) != 4:
        raise UsageError(f"grid spec must be min:max:points:scale, got {text!r}")
    return GridSpec(min=float(parts[0]), max=float(parts[1]),
                    points=int(parts[2]), scale=parts[3])


def _parse_tolerances(entries) -> dict:
    tolerances = {}
    for entry in entries:
        name, _, value = entry.partition("=")
        if not value:
            raise UsageError(f"--tol expects NAME=VALUE, got {entry!r}")
        tolerances[name] = float(value)
    return tolerances


def build_config(argv) -> RunConfig:
    args = _parser().parse_args(argv)
    file_cfg = {}
    if args.config:
        try:
            with open(args.config) as handle:
                file_cfg = json.load(handle)
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed config file: {exc}") from exc

    def pick(flag_value, key, default=None):
        if flag_value is not None:
            return flag_value
        return file_cfg.get(key, default)

    command = pick(args.command, "command")
    if command is None:
        raise UsageError("--command is required")
    if command not in COMMANDS:
        raise UsageError(f"unknown command {command!r}")
    grid_value = pick(args.grid, "grid")
    grid = None
    if grid_value is not None:
        grid = (_parse_grid(grid_value) if isinstance(grid_value, str)
                else GridSpec(**grid_value))
    tolerances = dict(file_cfg.get("tol", {}))
    tolerances.update(_parse_tolerances(args.tol))
    return RunConfig(
        command=command,
        a=pick(args.a, "a"),
        sigma=pick(args.sigma, "sigma"),
        grid=grid,
        output_format=pick(args.format, "format", "csv"),
        output_path=pick(args.out, "out"),
        tolerances=tolerances,
        operator=pick(args.operator, "operator", "laplace"),
        samples=pick(args.samples, "samples", 512),
    )


def run(cfg: RunConfig) -> int:
    if cfg.command in ("eig", "table", "bounds", "profile"):
        runner = {"eig": run_eig, "table": run_table,
                  "bounds": run_bounds, "profile": run_profile}[cfg.command]
        header, rows = runner(cfg)
        if cfg.output_format == "json":
            text = _render_json(header, rows)
        else:
            text = _render_csv(header, rows)
    else:
        runner = {"greens-validate": run_greens_validate,
                  "oracle-check": run_oracle_check}[cfg.command]
        report = runner(cfg)
        text = json.dumps(report, indent=2) + "\n"
    _write(text, cfg.output_path)
    return EXIT_OK


def _fail(code: int, kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": {"type": kind, "message": message}}) + "\n")
    return code


def main(argv=None) -> int:
    try:
        cfg = build_config(argv)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    try:
        return run(cfg)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    except InvalidGeometry as exc:
        return _fail(EXIT_USAGE, "geometry", str(exc))
    except ValidationFailure as exc:
        return _fail(EXIT_VALIDATION, "validation", str(exc))
    except OSError as exc:
        return _fail(EXIT_IO, "io", str(exc))


if __name__ == "__main__":
    sys.exit(main())
