"""Command-line front end.

Subcommands: eval, classify, geometry, asym, scan, slope.  Spins are given
as six positional half-integer strings ("2", "3/2", "1.5").  Exit codes:
0 success, 2 usage, 3 admissibility error, 4 degenerate/non-Euclidean
geometry.
"""

from __future__ import annotations

import argparse
import sys

from .asymptotics import asym_for_scaled, asym_standard
from .errors import (
    AdmissibilityError,
    DegenerateFactorError,
    InsufficientExtremaError,
    KParityError,
    NonEuclideanError,
    UndefinedShiftError,
)
from .geometry import tet_from_spins
from .scan import envelope_slope, k_range, read_csv, scan, write_csv, write_json
from .symbols import sixj_exact, sixj_super_exact
from .triangles import SpinSextuple, check_admissible, classify_parity, triangle_sums

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ADMISSIBILITY = 3
EXIT_GEOMETRY = 4


def _add_spin_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("spins", nargs=6, metavar="SPIN", help="six half-integers j1 j2 j3 J1 J2 J3")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sixj",
        description="Exact and asymptotic SU(2) 6j / OSP(1|2) super-6j symbols",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="exact symbol value")
    p_eval.add_argument("--kind", choices=("su2", "super"), default="su2")
    _add_spin_args(p_eval)

    p_classify = sub.add_parser("classify", help="parity and triangle data")
    _add_spin_args(p_classify)

    p_geo = sub.add_parser("geometry", help="tetrahedron volume and dihedral angles")
    _add_spin_args(p_geo)

    p_asym = sub.add_parser("asym", help="asymptotic value at a given k")
    p_asym.add_argument("--kind", choices=("su2", "super"), default="su2")
    p_asym.add_argument("--k", type=int, required=True)
    _add_spin_args(p_asym)

    p_scan = sub.add_parser("scan", help="exact-vs-asymptotic k scan (CSV or JSON)")
    p_scan.add_argument("--kind", choices=("su2", "super"), default="su2")
    p_scan.add_argument("--k", type=int, help="single k (alternative to --k-from/--k-to)")
    p_scan.add_argument("--k-from", type=int)
    p_scan.add_argument("--k-to", type=int)
    p_scan.add_argument("--k-step", type=int, default=1)
    p_scan.add_argument("--out", metavar="FILE", help="write to FILE instead of stdout")
    p_scan.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_spin_args(p_scan)

    p_slope = sub.add_parser("slope", help="envelope slope fit from a scan CSV")
    p_slope.add_argument("csv_file", metavar="CSV", help="scan CSV path, or - for stdin")

    return parser


def _scan_ks(args) -> list[int]:
    if args.k is not None:
        if args.k_from is not None or args.k_to is not None:
            raise ValueError("give either --k or --k-from/--k-to, not both")
        return [args.k]
    if args.k_from is None or args.k_to is None:
        raise ValueError("scan needs --k or both --k-from and --k-to")
    return k_range(args.k_from, args.k_to, args.k_step)


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        return _dispatch(args)
    except (AdmissibilityError, KParityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ADMISSIBILITY
    except (NonEuclideanError, DegenerateFactorError, UndefinedShiftError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except (ValueError, InsufficientExtremaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _parse_sextuple(args) -> SpinSextuple:
    return SpinSextuple.parse(args.spins)


def _dispatch(args) -> int:
    if args.command == "eval":
        s = _parse_sextuple(args)
        value = sixj_exact(s) if args.kind == "su2" else sixj_super_exact(s)
        print(f"coeff     {value.coeff}")
        print(f"radicand  {value.radicand}")
        print(f"value     {float(value)!r}")
        return EXIT_OK

    if args.command == "classify":
        s = _parse_sextuple(args)
        t = triangle_sums(s)
        check_admissible(t, "osp12")
        print(f"parity    {classify_parity(t).value}")
        print("v         " + " ".join(str(x) for x in t.v))
        print("p         " + " ".join(str(x) for x in t.p))
        return EXIT_OK

    if args.command == "geometry":
        s = _parse_sextuple(args)
        geo = tet_from_spins(s)
        print(f"volume    {geo.volume!r}")
        print("theta_ext " + " ".join(repr(t) for t in geo.theta_ext))
        return EXIT_OK

    if args.command == "asym":
        s = _parse_sextuple(args)
        if args.k < 1:
            raise ValueError("--k must be a positive integer")
        res = asym_standard(s, args.k) if args.kind == "su2" else asym_for_scaled(s, args.k)
        print(f"parity    {res.parity_used}")
        print(f"amplitude {res.amplitude!r}")
        print(f"angle     {res.angle!r}")
        print(f"value     {res.value!r}")
        return EXIT_OK

    if args.command == "scan":
        s = _parse_sextuple(args)
        records = scan(s, args.kind, _scan_ks(args))
        writer = write_csv if args.format == "csv" else write_json
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                writer(records, fh)
        else:
            writer(records, sys.stdout)
        return EXIT_OK

    if args.command == "slope":
        if args.csv_file == "-":
            records = read_csv(sys.stdin)
        else:
            with open(args.csv_file, encoding="utf-8") as fh:
                records = read_csv(fh)
        fit = envelope_slope(records)
        print(f"slope      {fit.slope!r}")
        print(f"intercept  {fit.intercept!r}")
        print(f"r_squared  {fit.r_squared!r}")
        print(f"n_points   {fit.n_points}")
        return EXIT_OK

    raise ValueError(f"unknown command {args.command!r}")  # pragma: no cover


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
