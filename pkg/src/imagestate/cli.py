"""Command-line interface.

    imagestate spectrum --nu 1..3 --m 0 --sigma +0.5 --F 0 --H 0
    imagestate stark-scan --nus 20,21,22,23 --assert-ordering
    imagestate sense-field --delta-E 3.21e-6 --nu 50 --k 1 --mode paper
    imagestate oracle-validate --max-nu 5

Exit codes: 0 success, 2 usage error, 3 validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Sequence

import numpy as np

from . import __version__
from .longitudinal import PerturbationWarning, is_perturbative
from .spectrum import (
    DEFAULT_LINEWIDTH,
    FieldConfig,
    SensingSpec,
    infer_field,
    min_detectable_field,
    stark_scan,
    total_energy,
)
from .tables import FORMATS, render
from .units import energy_to_wavenumber, field_to_atomic, magnetic_to_atomic
from .validate import PROFILES, run_validation

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3


class UsageError(Exception):
    pass


def parse_int_range(text: str) -> list[int]:
    """'3', '1..5' (inclusive), '20,21,23' or a mix: '1..3,7'.  'b..a' with b > a is empty."""
    out: list[int] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        try:
            if ".." in part:
                a, b = part.split("..", 1)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer range {text!r}") from None
    return out


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--precision", type=int, default=10, help="significant digits (default 10)")
    p.add_argument("--out", help="write to this path instead of stdout")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pick_unit(args, atomic: str, lab: str, convert) -> float:
    a = getattr(args, atomic)
    b = getattr(args, lab)
    if a is not None and b is not None:
        raise UsageError(f"give either --{atomic.replace('_', '-')} or --{lab.replace('_', '-')}, not both")
    if b is not None:
        return convert(b)
    return 0.0 if a is None else a


# -- subcommands -----------------------------------------------------------------


def cmd_spectrum(args) -> int:
    F = _pick_unit(args, "F", "F_vcm", field_to_atomic)
    H = _pick_unit(args, "H", "H_tesla", magnetic_to_atomic)
    fields = FieldConfig(F, H)
    if any(n < 1 for n in args.nu):
        raise UsageError("quantum numbers must be >= 1")
    if any(m < 0 for m in args.m):
        raise UsageError("oscillator indices must be >= 0")
    if args.sigma not in (-0.5, 0.5):
        raise UsageError("--sigma must be +0.5 or -0.5")
    rows = []
    with warnings.catch_warnings():
        # validity is reported per row instead
        warnings.simplefilter("ignore", PerturbationWarning)
        for nu in args.nu:
            for m in args.m:
                e = total_energy(m, args.sigma, nu, fields)
                rows.append({
                    "nu": nu,
                    "m": m,
                    "sigma": args.sigma,
                    "F_au": fields.F,
                    "H_au": fields.H_field,
                    "E_au": e,
                    "E_cm": energy_to_wavenumber(e),
                    "perturbative": is_perturbative(nu, fields.F),
                })
    cols = ["nu", "m", "sigma", "F_au", "H_au", "E_au", "E_cm", "perturbative"]
    _emit(render(rows, cols, args.format, args.precision), args.out)
    return EXIT_OK


def cmd_stark_scan(args) -> int:
    if args.F_min < 0 or args.F_max < args.F_min:
        raise UsageError("need 0 <= --F-min <= --F-max")
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    if not args.nus or any(n < 1 for n in args.nus):
        raise UsageError("--nus must list quantum numbers >= 1")
    F_values = np.linspace(args.F_min, args.F_max, args.steps) if args.steps > 1 else [args.F_min]
    rows = stark_scan(args.nus, F_values)
    _emit(render([r._asdict() for r in rows], ["nu", "F_au", "dE_au"], args.format, args.precision), args.out)
    if args.assert_ordering:
        by_F: dict[float, list[tuple[int, float]]] = {}
        for r in rows:
            by_F.setdefault(r.F_au, []).append((r.nu, r.dE_au))
        for F, curve in by_F.items():
            if F > 0 and any(b[1] <= a[1] for a, b in zip(curve, curve[1:])):
                print(f"curves not strictly ordered in nu at F={F!r}", file=sys.stderr)
                return EXIT_VALIDATION
    return EXIT_OK


def cmd_sense_field(args) -> int:
    if args.delta_E < 0:
        raise UsageError("--delta-E must be >= 0")
    spec = SensingSpec(args.nu, args.k, args.linewidth, args.mode)
    F = infer_field(args.delta_E, spec.nu, spec.k, spec.mode)
    F_min = min_detectable_field(spec)
    row = {
        "nu": spec.nu,
        "k": spec.k,
        "mode": spec.mode,
        "delta_E_cm": float(args.delta_E),
        "F_vcm": F,
        "linewidth_cm": spec.delta_E,
        "F_min_vcm": F_min,
        "detectable": args.delta_E >= spec.delta_E,
    }
    cols = list(row)
    _emit(render([row], cols, args.format, args.precision), args.out)
    return EXIT_OK


def cmd_oracle_validate(args) -> int:
    if args.max_nu < 1:
        raise UsageError("--max-nu must be >= 1")
    report = run_validation(args.max_nu, args.n_points, args.profile)
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK if report["passed"] else EXIT_VALIDATION


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="imagestate",
        description="Image-potential electron states in perpendicular electric and magnetic fields.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", allow_abbrev=False, help="total energies E(m, nu) on a grid of quantum numbers")
    p.add_argument("--nu", type=parse_int_range, required=True, help="e.g. 1..3 or 20,21")
    p.add_argument("--m", type=parse_int_range, default=[0])
    p.add_argument("--sigma", type=float, default=0.5, help="spin projection, +0.5 or -0.5")
    p.add_argument("--F", type=float, help="electric field, atomic units")
    p.add_argument("--F-vcm", dest="F_vcm", type=float, help="electric field, V/cm")
    p.add_argument("--H", type=float, help="magnetic field, atomic units (omega = H/c)")
    p.add_argument("--H-tesla", dest="H_tesla", type=float, help="magnetic field, tesla")
    _add_output(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("stark-scan", allow_abbrev=False, help="first-order shift vs field for several nu")
    p.add_argument("--nus", type=parse_int_range, default=[20, 21, 22, 23])
    p.add_argument("--F-min", dest="F_min", type=float, default=0.0, help="atomic units")
    p.add_argument("--F-max", dest="F_max", type=float, default=1e-7, help="atomic units")
    p.add_argument("--steps", type=int, default=11)
    p.add_argument("--assert-ordering", action="store_true",
                   help="exit 3 unless curves are strictly ordered in nu at every F > 0")
    _add_output(p)
    p.set_defaults(func=cmd_stark_scan)

    p = sub.add_parser("sense-field", allow_abbrev=False, help="field inferred from an observed transition shift")
    p.add_argument("--delta-E", dest="delta_E", type=float, required=True, help="observed shift, cm^-1")
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--mode", default="paper-constant",
                   choices=["paper-constant", "strict-eq20", "paper", "strict"])
    p.add_argument("--linewidth", type=float, default=DEFAULT_LINEWIDTH, help="resolution, cm^-1")
    _add_output(p)
    p.set_defaults(func=cmd_sense_field)

    p = sub.add_parser("oracle-validate", allow_abbrev=False, help="cross-check closed forms against the numerical oracle")
    p.add_argument("--max-nu", dest="max_nu", type=int, default=5)
    p.add_argument("--n-points", dest="n_points", type=int, help="override the oracle grid size")
    p.add_argument("--profile", choices=sorted(PROFILES), default="default")
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle_validate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"imagestate {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
