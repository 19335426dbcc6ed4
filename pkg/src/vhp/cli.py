"""Command-line interface.

    vhp energy --c 2 --d -1 --alpha 0.001 --n 0 --l 0
    vhp table --id 2 --format csv
    vhp figure --id 1 --out fig1.csv
    vhp wavefunction --c 1 --mu 1 --l 0

Exit codes: 0 ok, 1 tolerance failure, 2 usage, 3 solver failure, 4 I/O.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import benchmarks
from .ansatz import QuantumNumbers, ansatz_energy, ansatz_wavefunction, match_coefficients
from .errors import DomainError, NetCoulombVanishes, SolverError
from .oracle import RadialGrid, SolverConfig, auto_grid, default_bracket, solve_bound, solve_level
from .potentials import PotentialParams

EXIT_OK, EXIT_TOLERANCE, EXIT_USAGE, EXIT_SOLVER, EXIT_IO = 0, 1, 2, 3, 4

POTENTIAL_KEYS = ("a", "b", "c", "d", "alpha", "mu", "hbar")
DEFAULTS = {"a": 0.0, "b": 0.0, "d": 0.0, "alpha": 0.0, "mu": 0.5, "hbar": 1.0, "n": 0, "l": 0}
CONFIG_KEYS = {**{k: float for k in POTENTIAL_KEYS}, "n": int, "l": int}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: PotentialParams | None
    qn: QuantumNumbers | None
    method: str
    output_format: str
    out: Path | None


def read_config(path: str) -> dict:
    """Parse ``key=value`` lines; blank lines and ``#`` comments are ignored."""
    values = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().lstrip("-").replace("-", "_")
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: expected one of {sorted(CONFIG_KEYS)} as key=value")
        try:
            values[key] = CONFIG_KEYS[key](value.strip())
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {value.strip()!r}") from None
    return values


def _add_potential_args(p: argparse.ArgumentParser, with_n: bool = True):
    g = p.add_argument_group("potential (V = a + (d - ab) exp(-alpha r)/r - c/r)")
    g.add_argument("--config", help="file of key=value lines; explicit flags override it")
    for key in POTENTIAL_KEYS:
        default = DEFAULTS.get(key)
        g.add_argument(f"--{key}", type=float, default=None,
                       help="required" if default is None else f"default {default:g}")
    if with_n:
        p.add_argument("--n", type=int, default=None, help="radial node count (default 0)")
    p.add_argument("--l", type=int, default=None, help="orbital quantum number (default 0)")


def _resolve(args, with_n: bool = True) -> tuple[PotentialParams, QuantumNumbers]:
    merged = dict(DEFAULTS)
    if args.config:
        merged.update(read_config(args.config))
    for key in (*POTENTIAL_KEYS, "n", "l"):
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    if "c" not in merged:
        raise UsageError("missing --c (Coulomb strength)")
    try:
        params = PotentialParams(**{k: merged[k] for k in POTENTIAL_KEYS})
        qn = QuantumNumbers(n=merged["n"] if with_n else 0, l=merged["l"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return params, qn


def _write(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        out.write_text(text)


def cmd_energy(args) -> int:
    params, qn = _resolve(args)
    cfg = RunConfig("energy", params, qn, args.method, "text", args.out)
    lines = []
    if cfg.method in ("ansatz", "both"):
        level = ansatz_energy(params, qn)
        coeffs = match_coefficients(params, qn)
        lines.append(f"ansatz: {level.value:.6f}")
        lines.append(f"ansatz_residual: {coeffs.residual:.6e}")
        if level.extrapolated:
            lines.append("ansatz_note: n >= 2 uses the extrapolated closed form")
    if cfg.method in ("oracle", "both"):
        result = solve_level(params, qn, args.form)
        lines.append(f"oracle: {result.energy:.6f}")
    _write("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


def cmd_table(args) -> int:
    report = benchmarks.run_table(args.id)
    _write(benchmarks.render_report(report, args.format), args.out)
    failures = report.failures()
    for f in failures:
        print(f"tolerance failure: {f}", file=sys.stderr)
    return EXIT_TOLERANCE if failures else EXIT_OK


def cmd_figure(args) -> int:
    _write(benchmarks.render_figure_csv(benchmarks.figure_data(args.id)), args.out)
    return EXIT_OK


def cmd_wavefunction(args) -> int:
    params, qn = _resolve(args, with_n=False)
    if args.r_max is None and args.points is None:
        result = solve_level(params, qn, "full")
    else:
        base = auto_grid(params, qn, solve_level(params, qn, "full").energy)
        try:
            grid = RadialGrid(args.r_min, args.r_max or base.r_max, args.points or base.num_points)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        cfg = SolverConfig(*default_bracket(params, qn.l, "full", grid))
        result = solve_bound(params, qn, "full", grid, cfg)
    r = result.u.grid
    u_oracle = result.u.values
    lines = []
    try:
        ans = ansatz_wavefunction(params, qn.l, r)
        if not ans.normalizable:
            lines.append(f"# warning: ansatz wavefunction is not normalizable (A={ans.meta['A']:.6e}, "
                         f"B={ans.meta['B']:.6e}); u_ansatz is unnormalized")
        u_ansatz = ans.values
    except NetCoulombVanishes:
        lines.append("# warning: ab + c - d = 0, no ansatz wavefunction")
        u_ansatz = np.full_like(r, np.nan)
    lines.append(f"# oracle energy {result.energy:.10f}, l={qn.l}, points={r.size}")
    lines.append("r,u_ansatz,u_oracle")
    lines += [f"{x:.10e},{ua:.10e},{uo:.10e}" for x, ua, uo in zip(r, u_ansatz, u_oracle)]
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vhp",
        description="Bound states of the Varshni-Hellmann potential. "
                    "Defaults follow the hbar = 2 mu = 1 convention (hbar=1, mu=0.5).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", help="energy of one level")
    _add_potential_args(p)
    p.add_argument("--method", choices=("ansatz", "oracle", "both"), default="both")
    p.add_argument("--form", choices=("full", "expanded"), default="full",
                   help="potential used by the oracle (default full)")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("table", help="regenerate a benchmark table")
    p.add_argument("--id", type=int, choices=benchmarks.TABLE_IDS, required=True)
    p.add_argument("--format", choices=("csv", "md", "markdown"), default="csv")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("figure", help="emit figure data as long-format CSV")
    p.add_argument("--id", type=int, choices=benchmarks.FIGURE_IDS, required=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("wavefunction", help="ground-state u(r) for one l, ansatz and oracle")
    _add_potential_args(p, with_n=False)
    p.add_argument("--r-min", type=float, default=1e-6)
    p.add_argument("--r-max", type=float)
    p.add_argument("--points", type=int)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_wavefunction)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"vhp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SolverError, NetCoulombVanishes) as exc:
        print(f"vhp: solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except DomainError as exc:
        print(f"vhp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream reader (e.g. head) closed the pipe
        sys.stdout = open(os.devnull, "w")
        return EXIT_OK
    except OSError as exc:
        print(f"vhp: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
