"""Command-line front end.

Usage::

    hardwall eigen --q0 1.55 --n-max 3
    hardwall scan --q0-start 0 --q0-end 4 --steps 201 --n-max 3 > levels.csv
    hardwall variational --q0 1 --n 8
    hardwall identities --q0 1 --n-max 2 --format json
    hardwall adsorb --preset H-Pd100
    hardwall oracle --q0 5 --n-max 1

Exit codes: 0 success, 2 usage error, 3 numeric-domain error, 4 convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .errors import (
    DomainError,
    GridTooCoarse,
    IllConditioned,
    NonConvergence,
    RootNotFound,
    UnsupportedRange,
)
from .identities import FD_STEP, check_boundary_derivative, check_hypervirial, check_virial
from .oracle import fd_eigenvalues_richardson, fd_states
from .physical import CONSTANTS, PRESETS, AdsorptionSystem, dimensionless, zero_point_energy
from .spectrum import Q0_MAX, WellConfig, eigenvalues, spectrum_scan
from .variational import RitzProblem, ritz_values

__all__ = ["main", "format_value", "render"]

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CONVERGENCE = 0, 2, 3, 4


def format_value(value, precision: int) -> str:
    """Shortest round-trip repr of ``value`` rounded to ``precision`` significant digits."""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(_round(value, precision))
    return str(value)


def _round(value, precision):
    value = float(value)
    return float(f"{value:.{precision}g}") if math.isfinite(value) else value


def render(columns, rows, fmt: str, precision: int, meta: dict) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(v, precision) for v in row])
        return buf.getvalue()

    def plain(v):
        if isinstance(v, (int, np.integer)) and not isinstance(v, (bool, np.bool_)):
            return int(v)
        if isinstance(v, (float, np.floating)):
            return _round(v, precision)
        return v

    doc = {"meta": meta, "rows": [{c: plain(v) for c, v in zip(columns, row)} for row in rows]}
    return json.dumps(doc, indent=2) + "\n"


def _q0(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value) or value < 0:
        raise argparse.ArgumentTypeError(f"q0 must be finite and non-negative, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _precision(text: str) -> int:
    value = int(text)
    if not 6 <= value <= 17:
        raise argparse.ArgumentTypeError(f"precision must be in [6, 17], got {text}")
    return value


def _closed_form_cfg(q0: float) -> WellConfig:
    if q0 > Q0_MAX:
        raise UnsupportedRange(
            f"q0 = {q0} is beyond the closed-form range [0, {Q0_MAX}]; rerun with --oracle"
        )
    return WellConfig(q0)


def cmd_eigen(args):
    columns = ["n", "epsilon", "weber_order", "node_count"]
    if args.oracle:
        cfg = WellConfig(args.q0)
        eps = fd_eigenvalues_richardson(cfg, args.n_max)
        _, vecs = fd_states(cfg, args.n_max)
        nodes = [_sign_changes(vecs[:, n]) for n in range(args.n_max + 1)]
        return columns, [(n, e, e - 0.5, nodes[n]) for n, e in enumerate(eps)]
    sols = eigenvalues(args.n_max, _closed_form_cfg(args.q0))
    return columns, [(s.n, s.epsilon, s.weber_order, s.node_count) for s in sols]


def _sign_changes(v, rel=1e-12):
    v = v[np.abs(v) > rel * np.max(np.abs(v))]
    return int(np.count_nonzero(np.sign(v[1:]) != np.sign(v[:-1])))


def cmd_scan(args):
    if args.q0_start >= args.q0_end:
        raise _Usage("--q0-start must be below --q0-end")
    if args.steps < 2:
        raise _Usage("--steps must be at least 2")
    _closed_form_cfg(args.q0_end)
    grid = np.linspace(args.q0_start, args.q0_end, args.steps)
    table = spectrum_scan(grid, args.n_max)
    return table.columns, [tuple(r) for r in table.rows()]


def cmd_variational(args):
    if args.n < 1:
        raise _Usage("--n (basis size) must be at least 1")
    result = ritz_values(RitzProblem(args.n, args.q0))
    columns = ["n", "w"]
    rows = [[n, w] for n, w in enumerate(result.values)]
    if args.q0 <= Q0_MAX:
        columns.append("w_minus_epsilon")
        exact = eigenvalues(args.n - 1, WellConfig(args.q0))
        for row, sol in zip(rows, exact):
            row.append(row[1] - sol.epsilon)
    return columns, [tuple(r) for r in rows]


def cmd_identities(args):
    cfg = _closed_form_cfg(args.q0)
    columns = ["n", "q0", "identity", "lhs", "rhs", "residual"]
    rows = []
    for n in range(args.n_max + 1):
        reports = [check_virial(n, cfg), check_hypervirial(n, cfg)]
        if cfg.q0 >= FD_STEP:
            reports.append(check_boundary_derivative(n, cfg))
        rows.extend((r.n, r.q0, r.identity_tag.value, r.lhs, r.rhs, r.residual) for r in reports)
    return columns, rows


def cmd_adsorb(args):
    custom = (args.mass_amu, args.k_npm, args.d_angstrom)
    if args.preset and any(v is not None for v in custom):
        raise _Usage("give either --preset or --mass-amu/--k-npm/--d-angstrom, not both")
    if args.preset:
        system = PRESETS[args.preset]
    elif all(v is not None for v in custom):
        try:
            system = AdsorptionSystem.from_lab_units(*custom, label="custom")
        except ValueError as exc:
            raise _Usage(str(exc)) from None
    else:
        raise _Usage("adsorb needs --preset or all of --mass-amu, --k-npm, --d-angstrom")
    form = dimensionless(system)
    zpe = zero_point_energy(system)
    columns = [
        "label", "mass_kg", "k_N_per_m", "d_m", "L_m", "omega_rad_per_s", "q0",
        "epsilon0", "E0_J", "E0_meV",
    ]  # fmt: skip
    row = (
        system.label, system.mass, system.force_constant, system.wall_distance,
        form.length_unit_L, form.omega, form.q0, zpe.epsilon0, zpe.E0_joule, zpe.E0_meV,
    )  # fmt: skip
    return columns, [row]


def cmd_oracle(args):
    eps = fd_eigenvalues_richardson(WellConfig(args.q0), args.n_max)
    return ["n", "epsilon"], [(n, e) for n, e in enumerate(eps)]


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardwall", description="Harmonic oscillator bounded by a hard wall."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--precision", type=_precision, default=12)

    p = sub.add_parser("eigen", parents=[common], help="exact eigenvalues at one q0")
    p.add_argument("--q0", type=_q0, required=True)
    p.add_argument("--n-max", type=_nonneg_int, default=3)
    p.add_argument("--oracle", action="store_true", help="use the finite-difference solver")
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("scan", parents=[common], help="energies and gaps over a q0 grid")
    p.add_argument("--q0-start", type=_q0, default=0.0)
    p.add_argument("--q0-end", type=_q0, default=Q0_MAX)
    p.add_argument("--steps", type=int, default=41)
    p.add_argument("--n-max", type=int, choices=range(7), default=3, metavar="{0..6}")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("variational", parents=[common], help="Rayleigh-Ritz upper bounds")
    p.add_argument("--q0", type=_q0, required=True)
    p.add_argument("--n", type=int, choices=range(1, 21), required=True, metavar="{1..20}")
    p.set_defaults(func=cmd_variational)

    p = sub.add_parser("identities", parents=[common], help="virial and hypervirial checks")
    p.add_argument("--q0", type=_q0, required=True)
    p.add_argument("--n-max", type=_nonneg_int, default=3)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("adsorb", parents=[common], help="zero-point energy of an adsorbed atom")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--mass-amu", type=float)
    p.add_argument("--k-npm", type=float)
    p.add_argument("--d-angstrom", type=float)
    p.set_defaults(func=cmd_adsorb)

    p = sub.add_parser("oracle", parents=[common], help="finite-difference eigenvalues")
    p.add_argument("--q0", type=_q0, required=True)
    p.add_argument("--n-max", type=_nonneg_int, default=3)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        columns, rows = args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"hardwall {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedRange, DomainError, IllConditioned) as exc:
        print(f"hardwall {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (NonConvergence, RootNotFound, GridTooCoarse) as exc:
        print(f"hardwall {args.command}: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    flags = {k: v for k, v in vars(args).items() if k != "func"}
    meta = {"version": __version__, "constants": CONSTANTS, "flags": flags}
    sys.stdout.write(render(columns, rows, args.format, args.precision, meta))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
