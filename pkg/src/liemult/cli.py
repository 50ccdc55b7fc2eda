"""Command-line front end.

Commands::

    liemult info FILE         structural invariants of an algebra file
    liemult multiplier FILE   multiplier dimension and the defects t, s
    liemult classify FILE     catalog family for s in {0, 1, 2}
    liemult catalog NAME [PARAMS] [--plus NAME PARAMS ...] [-o FILE]
    liemult verify --suite NAME [--max-m M] [--max-k K] [--max-n N] [--seed S]

Reports are printed as machine-readable key=value lines and are
byte-identical for identical inputs and seeds.  Exit codes: 0 success or
suite passed; 1 suite failure or theorem violation; 2 syntax error;
3 invalid algebra (antisymmetry/Jacobi); 4 precondition failure (not
nilpotent, abelian gate, not central).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import catalog, verify
from .classifier import AbelianAlgebra, Status, classify
from .liealg import (
    DuplicateBracket,
    IndexOutOfRange,
    JacobiViolation,
    NotAnIdeal,
    NotNilpotent,
    direct_sum,
    lower_central_series,
)
from .lieconst import LieconstSyntaxError, load, render
from .multiplier import NotCentral, schur_multiplier_dim

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_SYNTAX = 2
EXIT_INVALID = 3
EXIT_PRECONDITION = 4


def _cmd_info(args: argparse.Namespace) -> int:
    alg = load(args.file)
    series = lower_central_series(alg)
    print(f"n={alg.dim}")
    print(f"dimL2={series.derived_dim}")
    print(f"dimZ={series.center_dim}")
    print(f"nilpotent={'yes' if series.is_nilpotent else 'no'}")
    if series.is_nilpotent:
        print(f"class={series.nilpotency_class}")
    print(f"lcs={','.join(str(d) for d in series.lcs_dims)}")
    return EXIT_OK


def _cmd_multiplier(args: argparse.Namespace) -> int:
    alg = load(args.file)
    rep = schur_multiplier_dim(alg)
    print(f"n={rep.n}")
    print(f"dimM={rep.dim_m}")
    print(f"t={rep.t}")
    print(f"s={rep.s}")
    print(f"rankd2={rep.rank_d2}")
    print(f"rankd3={rep.rank_d3}")
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    alg = load(args.file)
    res = classify(alg)
    print(f"status={res.status.value}")
    if res.family is not None:
        print(f"family={res.family}")
        if res.family == catalog.FAMILY_H_PLUS_A:
            print(f"m={res.params[0]}")
            print(f"k={res.params[1]}")
    print(f"s={res.s_value}")
    if res.status is not Status.CLASSIFIED:
        fp = res.fingerprint
        print(f"n={fp.n}")
        print(f"dimL2={fp.derived_dim}")
        print(f"dimZ={fp.center_dim}")
        print(f"class={fp.nilpotency_class}")
        print(f"dimM={fp.dim_m}")
        print(f"t={fp.t}")
    print(f"notes={res.notes}")
    return EXIT_FAIL if res.status is Status.THEOREM_VIOLATION else EXIT_OK


def _parse_catalog_spec(name: str, params: Sequence[str]) -> catalog.CatalogEntry:
    try:
        values = tuple(int(p) for p in params)
    except ValueError:
        raise ValueError(f"catalog parameters must be integers, got {params!r}")
    return catalog.entry(name, values)


def _cmd_catalog(args: argparse.Namespace) -> int:
    try:
        entry = _parse_catalog_spec(args.name, args.params)
        alg = entry.algebra
        for extra in args.plus or []:
            more = _parse_catalog_spec(extra[0], extra[1:])
            alg = direct_sum(alg, more.algebra)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = render(alg)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify.run_suite(
        args.suite, max_m=args.max_m, max_k=args.max_k,
        max_n=args.max_n, seed=args.seed,
    )
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liemult",
        description="Exact invariants and multiplier-defect classification "
                    "of finite-dimensional Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="structural invariants of an algebra file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("multiplier", help="multiplier dimension and defects")
    p.add_argument("file")
    p.set_defaults(func=_cmd_multiplier)

    p = sub.add_parser("classify", help="catalog family for s in {0,1,2}")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("catalog", help="write a catalog algebra as lieconst text")
    p.add_argument("name", choices=catalog.FAMILIES)
    p.add_argument("params", nargs="*")
    p.add_argument("--plus", nargs="+", action="append", metavar="NAME [PARAMS]",
                   help="direct-sum another catalog algebra onto the result")
    p.add_argument("-o", "--output", help="write to FILE instead of stdout")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    p.add_argument("--max-m", type=int, default=verify.DEFAULT_MAX_M)
    p.add_argument("--max-k", type=int, default=verify.DEFAULT_MAX_K)
    p.add_argument("--max-n", type=int, default=verify.DEFAULT_MAX_N)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except LieconstSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (JacobiViolation, DuplicateBracket, IndexOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (NotNilpotent, AbelianAlgebra, NotCentral, NotAnIdeal) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
