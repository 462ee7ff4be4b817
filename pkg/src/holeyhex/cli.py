"""Command-line front end: ``holeyhex {count,kentry,check,correlation,oracle}``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .checks import run_suite
from .closed_form import k_entry, k_matrix, macmahon
from .correlation import correlation_sequence, fit_exponent, fit_json, pair_scan, write_csv
from .counting import Route, count
from .errors import (DegenerateFit, HoleyHexError, NotAdmissible, ParityViolation, RouteDisagreement, TooLarge,
                     UnbalancedColors)
from .lattice import HexDims, Orient, Region, TriTriple, build_region, in_hexagon
from .oracle import oracle_count, oracle_enumerate

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_DISAGREE = 3
EXIT_NOT_ADMISSIBLE = 4


class CliError(Exception):
    def __init__(self, message, code=EXIT_PARSE):
        super().__init__(message)
        self.code = code


@dataclass
class CliConfig:
    subcommand: str
    region_source: str | None = None
    route: str | None = None
    verify: bool = False
    output: str = "json"

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "CliConfig":
        src = getattr(ns, "region", None) or getattr(ns, "json", None)
        return cls(ns.command, src, getattr(ns, "route", None), getattr(ns, "verify", False),
                   getattr(ns, "format", "json"))


def load_region(ns: argparse.Namespace) -> Region:
    if getattr(ns, "json", None):
        text, origin = ns.json, "<inline>"
    elif getattr(ns, "region", None):
        origin = ns.region
        try:
            text = sys.stdin.read() if ns.region == "-" else Path(ns.region).read_text()
        except OSError as exc:
            raise CliError(f"cannot read region file: {exc}") from exc
    else:
        raise CliError("give --region FILE or --json TEXT")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{origin}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        return Region.from_json(obj)
    except (ValueError, TypeError) as exc:
        raise CliError(f"{origin}: {exc}") from exc


def parse_triple(text: str, orient: Orient | None = None) -> TriTriple:
    """``"2l,2l',2l''"`` (optionally followed by ``,L`` or ``,R``)."""
    parts = [p.strip() for p in text.split(",")]
    try:
        if len(parts) == 4:
            return TriTriple(int(parts[0]), int(parts[1]), int(parts[2]), Orient(parts[3]))
        if len(parts) == 3 and orient is not None:
            return TriTriple(int(parts[0]), int(parts[1]), int(parts[2]), orient)
    except (ValueError, HoleyHexError) as exc:
        raise CliError(f"bad triple {text!r}: {exc}") from exc
    raise CliError(f"bad triple {text!r}: expected three doubled labels")


def _emit(obj: dict, fmt: str, out):
    if fmt == "plain":
        print(obj["count"], file=out)
    elif fmt == "csv":
        keys = sorted(obj)
        w = csv.writer(out, lineterminator="\n")
        w.writerow(keys)
        w.writerow(["" if obj[k] is None else obj[k] for k in keys])
    else:
        print(json.dumps(obj, sort_keys=True), file=out)


def cmd_count(ns, out) -> int:
    cfg = CliConfig.from_args(ns)
    region = load_region(ns)
    route = Route(cfg.route) if cfg.route else None
    try:
        result = count(region, route=route, verify=cfg.verify, signed=ns.signed)
    except RouteDisagreement as exc:
        print(json.dumps({"error": "route disagreement", "region": region.to_json(), "counts": exc.counts},
                         sort_keys=True), file=out)
        return EXIT_DISAGREE
    except NotAdmissible as exc:
        print(f"not admissible: {exc} (use --signed for the signed matching count)", file=sys.stderr)
        return EXIT_NOT_ADMISSIBLE
    except (UnbalancedColors, ValueError) as exc:
        raise CliError(str(exc)) from exc
    _emit(result.to_json(), cfg.output, out)
    return EXIT_OK


def _dims_from(ns) -> HexDims:
    if ns.dims:
        try:
            return HexDims(*ns.dims)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    return load_region(ns).dims


def cmd_kentry(ns, out) -> int:
    dims = _dims_from(ns)
    if ns.all:
        try:
            K = k_matrix(dims)
        except TooLarge as exc:
            raise CliError(str(exc)) from exc
        dump = {
            "rows": [t.to_json() for t in K.row_labels],
            "cols": [t.to_json() for t in K.col_labels],
            "entries": [[str(x) for x in row] for row in K.rows],
        }
        print(json.dumps(dump, sort_keys=True), file=out)
        return EXIT_OK
    if not (ns.w and ns.b):
        raise CliError("give --w and --b, or --all")
    w = parse_triple(ns.w, Orient.RIGHT)
    b = parse_triple(ns.b, Orient.LEFT)
    for t in (w, b):
        if not in_hexagon(t, dims):
            raise CliError(f"{t} is not in H_{{{dims.a},{dims.b},{dims.c}}}")
    try:
        e = k_entry(dims, w, b)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    print(json.dumps({"numerator": str(e.value.numerator), "denominator": str(e.value.denominator),
                      "sign_indices": list(e.sign_indices)}, sort_keys=True), file=out)
    return EXIT_OK


def cmd_check(ns, out) -> int:
    results = run_suite(ns.caps, flip=ns.inject_sign_flip, log=lambda s: print(s, file=out))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _parse_holes(text: str) -> list[TriTriple]:
    try:
        raw = json.loads(text)
        return [TriTriple.from_json(h) for h in raw]
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        raise CliError(f"bad --holes: {exc}") from exc


def cmd_correlation(ns, out) -> int:
    base = HexDims(*ns.base)
    holes = _parse_holes(ns.holes)
    if ns.fit:
        try:
            points = pair_scan(base, ns.fit_n, holes, ns.separations)
        except (HoleyHexError, ValueError) as exc:
            raise CliError(str(exc)) from exc
        write_csv(points, out)
        try:
            fit = fit_exponent(points)
        except DegenerateFit as exc:
            raise CliError(str(exc)) from exc
        if ns.fit_out == "-":
            print(fit_json(fit), file=sys.stderr)
        else:
            Path(ns.fit_out).write_text(fit_json(fit) + "\n")
        return EXIT_OK
    try:
        points = correlation_sequence(base, holes, ns.n_max)
    except ParityViolation as exc:
        raise CliError(str(exc)) from exc
    if ns.verify:
        for p in points:
            if p.n > 3:
                continue
            dims = base.scaled(p.n)
            expected = Fraction(oracle_count(build_region(*dims, holes)), macmahon(*dims))
            if expected != p.ratio:
                print(json.dumps({"error": "oracle mismatch", "n": p.n, "kenyon": str(p.ratio),
                                  "oracle": str(expected)}), file=sys.stderr)
                return EXIT_DISAGREE
    write_csv(points, out)
    return EXIT_OK


def cmd_oracle(ns, out) -> int:
    region = load_region(ns)
    try:
        if ns.limit is None:
            _emit({"count": str(oracle_count(region)), "route": Route.ORACLE.value, "epsilon": None},
                  ns.format, out)
        else:
            tilings = oracle_enumerate(region, ns.limit)
            print(json.dumps([[[l.to_json(), r.to_json()] for l, r in t] for t in tilings]), file=out)
    except TooLarge as exc:
        raise CliError(str(exc)) from exc
    return EXIT_OK


def _region_args(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--region", help="region JSON file ('-' for stdin)")
    g.add_argument("--json", help="region JSON given inline")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="holeyhex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count tilings of a holey hexagon")
    _region_args(p)
    p.add_argument("--route", choices=[r.value for r in Route])
    p.add_argument("--verify", action="store_true", help="run every route and compare")
    p.add_argument("--signed", action="store_true", help="allow non-admissible holes (signed count)")
    p.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("kentry", help="entries of the inverse Kasteleyn matrix")
    _region_args(p)
    p.add_argument("--dims", type=int, nargs=3, metavar=("A", "B", "C"))
    p.add_argument("--w", help="right triangle as '2l,2l1,2l2'")
    p.add_argument("--b", help="left triangle as '2l,2l1,2l2'")
    p.add_argument("--all", action="store_true", help="dump the whole matrix")
    p.set_defaults(func=cmd_kentry)

    p = sub.add_parser("check", help="run the exact identity suite")
    p.add_argument("--caps", type=int, default=3)
    p.add_argument("--inject-sign-flip", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("correlation", help="finite-size hole correlations as CSV")
    p.add_argument("--base", type=int, nargs=3, default=[1, 1, 1], metavar=("A0", "B0", "C0"))
    p.add_argument("--holes", default="[]", help="JSON list of [2l,2l',2l'',L|R]")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--verify", action="store_true", help="compare with the oracle for n <= 3")
    p.add_argument("--fit", action="store_true", help="scan two copies of the hole and fit the exponent")
    p.add_argument("--fit-n", type=int, default=30)
    p.add_argument("--separations", type=int, nargs="+", default=[4, 8, 16])
    p.add_argument("--fit-out", default="-", help="where to write the fit JSON ('-' = stderr)")
    p.set_defaults(func=cmd_correlation)

    p = sub.add_parser("oracle", help="brute-force count or enumerate tilings")
    _region_args(p)
    p.add_argument("--limit", type=int)
    p.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return ns.func(ns, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
