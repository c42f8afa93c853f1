"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 verification mismatches under
``verify --strict``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .coloring import (
    SolverTimeout,
    coloring_from_json,
    coloring_to_json,
    find_equitable_coloring,
    is_proper,
    minimum_equitable_coloring,
)
from .families import ConstructionError, Family, FamilyId, constructive_coloring, generate
from .formulas import TheoremId, closed_form, corrected_wheel_odd_variance
from .graph import export
from .oracle import brute_force_chi_e
from .stats import ChromaticStats, ColorDistribution, rational_str, stats_of
from .verify import (
    WHEEL_ODD_VARIANCE_ERRATUM,
    VerifyOptions,
    ecc_range,
    ecc_to_csv,
    ecc_to_json,
    mismatches,
    records_to_csv,
    records_to_json,
    verify_range,
)

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2
        raise InputError(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _family(text: str) -> Family:
    try:
        return Family(text)
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise argparse.ArgumentTypeError(f"unknown family {text!r} (choose from {names})") from None


def _theorem(text: str) -> TheoremId:
    try:
        return TheoremId(text)
    except ValueError:
        names = ", ".join(t.value for t in TheoremId)
        raise argparse.ArgumentTypeError(f"unknown theorem {text!r} (choose from {names})") from None


def _theorem_list(text: str) -> list[TheoremId]:
    if text == "all":
        return list(TheoremId)
    return [_theorem(part.strip()) for part in text.split(",") if part.strip()]


def _family_list(text: str) -> list[Family]:
    if text == "all":
        return list(Family)
    return [_family(part.strip()) for part in text.split(",") if part.strip()]


def _sizes(text: str) -> ColorDistribution:
    try:
        return ColorDistribution(int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--sizes expects comma-separated positive integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="equichroma", description="Equitable coloring parameters of wheel-related graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_args(sp):
        sp.add_argument("--family", type=_family, required=True)
        sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("gen", help="print a family graph")
    family_args(sp)
    sp.add_argument("--format", choices=["dimacs", "json", "dot"], default="dimacs")

    sp = sub.add_parser("color", help="print an equitable coloring as JSON")
    family_args(sp)
    sp.add_argument("--k", type=_positive_int)
    sp.add_argument("--method", choices=["constructive", "solver"])

    sp = sub.add_parser("stats", help="mean and variance of a coloring")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--coloring", type=Path, metavar="FILE")
    src.add_argument("--sizes", type=_sizes, metavar="S1,S2,...")
    sp.add_argument("--format", choices=["json", "table"], default="json")

    sp = sub.add_parser("formula", help="evaluate a published closed form")
    sp.add_argument("--theorem", type=_theorem, required=True)
    sp.add_argument("--n", type=int, required=True)
    variant = sp.add_mutually_exclusive_group()
    variant.add_argument("--corrected", action="store_true", help="repaired odd-wheel variance")
    variant.add_argument("--proof-body", action="store_true", help="odd-wheel variance from the derivation")
    sp.add_argument("--format", choices=["json", "table"], default="json")

    sp = sub.add_parser("chie", help="equitable chromatic number")
    family_args(sp)
    sp.add_argument("--oracle", action="store_true", help="use exhaustive enumeration (<= 13 vertices)")

    sp = sub.add_parser("verify", help="compare computed statistics with the closed forms")
    sp.add_argument("--theorems", type=_theorem_list, default=list(TheoremId), metavar="all|T1,...")
    sp.add_argument("--n-min", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--report", choices=["csv", "json", "table"], default="csv")
    sp.add_argument("--out", type=Path, metavar="FILE")
    sp.add_argument("--strict", action="store_true")
    sp.add_argument("--expect-erratum", action="append", default=[], choices=[WHEEL_ODD_VARIANCE_ERRATUM])
    sp.add_argument("--jobs", type=_positive_int, default=1)
    sp.add_argument("--solver-max-n", type=int, default=10, help="exact chi_e and ECC for n up to this (0 = off)")
    sp.add_argument("--no-oracle", action="store_true", help="skip brute-force chi_e")

    sp = sub.add_parser("ecc", help="check chi_e <= max degree over a range")
    sp.add_argument("--family", type=_family_list, required=True, metavar="all|F1,...")
    sp.add_argument("--n-min", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--report", choices=["csv", "json", "table"], default="csv")
    sp.add_argument("--out", type=Path, metavar="FILE")
    return p


# -- rendering -----------------------------------------------------------------

def _table(csv_text: str) -> str:
    rows = [line.split(",") for line in csv_text.splitlines()]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def _stats_output(s: ChromaticStats, fmt: str) -> str:
    import json

    if fmt == "json":
        return json.dumps(s.to_dict()) + "\n"
    d = s.to_dict()
    return (
        f"mean      {rational_str(s.mean):>16}  {d['mean_decimal']}\n"
        f"variance  {rational_str(s.variance):>16}  {d['variance_decimal']}\n"
    )


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _check_range(n_min: int, n_max: int) -> None:
    if not 3 <= n_min <= n_max:
        raise InputError(f"need 3 <= n-min <= n-max, got {n_min}..{n_max}")


# -- commands ------------------------------------------------------------------

def _cmd_gen(args) -> int:
    sys.stdout.write(export(generate(FamilyId(args.family, args.n)), args.format))
    if args.format == "json":
        sys.stdout.write("\n")
    return EXIT_OK


def _cmd_color(args) -> int:
    fid = FamilyId(args.family, args.n)
    g = generate(fid)
    method = args.method or ("solver" if args.k is not None else "constructive")
    if method == "constructive":
        c = constructive_coloring(fid)
        if args.k is not None and args.k != c.k:
            raise InputError(f"the constructive pattern for {fid} uses {c.k} colors, not {args.k}")
    elif args.k is None:
        c = minimum_equitable_coloring(g)
    else:
        c = find_equitable_coloring(g, args.k)
        if c is None:
            raise InputError(f"{fid} has no equitable {args.k}-coloring")
    sys.stdout.write(coloring_to_json(c, fid.kind.value, fid.n) + "\n")
    return EXIT_OK


def _cmd_stats(args) -> int:
    if args.sizes is not None:
        dist = args.sizes
    else:
        try:
            text = args.coloring.read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {args.coloring}: {exc.strerror}") from None
        c, family, n = coloring_from_json(text)
        if family is not None and n is not None:
            g = generate(FamilyId(_family(family), n))
            if not is_proper(g, c):
                raise InputError(f"coloring in {args.coloring} is not proper on {family}({n})")
        dist = c
    sys.stdout.write(_stats_output(stats_of(dist), args.format))
    return EXIT_OK


def _cmd_formula(args) -> int:
    s = closed_form(args.theorem, args.n, proof_body=args.proof_body)
    if args.corrected and args.theorem is TheoremId.THM1_WHEEL and args.n % 2 == 1:
        s = ChromaticStats(s.mean, corrected_wheel_odd_variance(args.n), source="corrected")
    sys.stdout.write(_stats_output(s, args.format))
    return EXIT_OK


def _cmd_chie(args) -> int:
    g = generate(FamilyId(args.family, args.n))
    value = brute_force_chi_e(g) if args.oracle else minimum_equitable_coloring(g).k
    print(value)
    return EXIT_OK


def _cmd_verify(args) -> int:
    _check_range(args.n_min, args.n_max)
    opts = VerifyOptions(solver_max_n=args.solver_max_n, oracle_max_vertices=0 if args.no_oracle else 13)
    records = verify_range(args.theorems, args.n_min, args.n_max, opts, jobs=args.jobs)
    if args.report == "json":
        text = records_to_json(records)
    else:
        text = records_to_csv(records)
        if args.report == "table":
            text = _table(text)
    _emit(text, args.out)
    if args.strict:
        bad = mismatches(records, args.expect_erratum)
        if bad:
            for rec in bad:
                why = rec.error or "closed form differs from computed statistics"
                print(f"mismatch: {rec.theorem.value} n={rec.n}: {why}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def _cmd_ecc(args) -> int:
    _check_range(args.n_min, args.n_max)
    results = ecc_range(args.family, args.n_min, args.n_max)
    if args.report == "json":
        text = ecc_to_json(results)
    else:
        text = ecc_to_csv(results)
        if args.report == "table":
            text = _table(text)
    _emit(text, args.out)
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "color": _cmd_color,
    "stats": _cmd_stats,
    "formula": _cmd_formula,
    "chie": _cmd_chie,
    "verify": _cmd_verify,
    "ecc": _cmd_ecc,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except (
        InputError,
        argparse.ArgumentTypeError,
        ValueError,  # also GraphError, ColoringError, BudgetError
        ConstructionError,
        SolverTimeout,
    ) as exc:
        print(f"equichroma: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
