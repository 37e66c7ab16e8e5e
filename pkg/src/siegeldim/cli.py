"""Command line interface: ``siegeldim {dim, tables, constants}``.

Exit codes: 0 ok, 1 input error, 2 out of proven range, 3 verification
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import dimension as dm
from .errors import OutOfProvenRange, SiegelDimError
from .partitions import WeightVector
from .rational_core import bernoulli, zeta_negative_odd
from .shintani import level_scale, shintani_special
from .tables import TABLES, verify

EXIT_OK, EXIT_INPUT, EXIT_RANGE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _weights_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def approx(q: Fraction, digits: int = 30) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def dumps(obj) -> str:
    """Canonical JSON: insertion-ordered keys, two-space indent."""
    return json.dumps(obj, indent=2)


# -- dim --------------------------------------------------------------------


def _resolve_weight(args) -> WeightVector:
    if args.weights is not None:
        if args.weight is not None:
            raise UsageError("--weight and --weights are mutually exclusive")
        if args.degree is not None and args.degree != len(args.weights):
            raise UsageError(f"--degree {args.degree} disagrees with {len(args.weights)} weights")
        return WeightVector(args.weights)
    if args.weight is None or args.degree is None:
        raise UsageError("give --degree with --weight, or --weights")
    if args.degree < 1:
        raise UsageError("--degree must be positive")
    return WeightVector.scalar(args.weight, args.degree)


def _is_standard_n3(k: WeightVector) -> bool:
    w = k.weights
    return len(w) == 3 and w[0] == w[1] + 1 and w[1] == w[2]


def _paths_for(k: WeightVector) -> list[str]:
    if k.is_scalar:
        paths = ["t115", "c12", "vector"]
        if k.degree <= 6:
            paths.insert(2, "closed")
        return paths
    return ["vector", "closed"] if _is_standard_n3(k) else ["vector"]


def _evaluate(k: WeightVector, N: int, path: str, force: bool) -> dm.DimensionReport:
    n = k.degree
    if path == "vector":
        return dm.dim_vector(k, N, force=force)
    if path == "closed" and not k.is_scalar:
        if not _is_standard_n3(k):
            raise UsageError("closed form exists only for scalar weights and (k+1,k,k) in degree 3")
        return dm.closed_form_vector_n3(k.weights[1], N, force=force)
    if not k.is_scalar:
        raise UsageError(f"path {path!r} needs a scalar weight; use --path vector")
    kk = k.weights[0]
    if path == "t115":
        return dm.dim_scalar(n, kk, N, force=force)
    if path == "c12":
        return dm.dim_scalar_via_shintani(n, kk, N, force=force)
    if path == "closed":
        return dm.dim_closed_form(n, kk, N, force=force)
    raise UsageError(f"unknown path {path!r}")


def _print_report(report: dm.DimensionReport) -> None:
    n, N = report.degree, report.level
    print(f"dim S_rho(Gamma_{n}({N}))  weights={report.weights}  path={report.path}")
    for r, v in report.terms:
        print(f"  r={r}: {v}")
    print(f"total: {report.total}")
    if not report.proven_range:
        print("note: formula value, unproven (outside k_n > n+1, N > 2)")


def cmd_dim(args) -> int:
    k = _resolve_weight(args)
    if args.cross_check or args.path == "all":
        paths = _paths_for(k)
    elif args.path:
        paths = [args.path]
    else:
        paths = [_paths_for(k)[0]]
    reports = [_evaluate(k, args.level, p, args.force) for p in paths]
    main = reports[0]
    mismatch = [r for r in reports if r.total != main.total]
    if not args.quiet:
        if args.json:
            print(dumps(main.to_dict()))
        else:
            _print_report(main)
            if len(reports) > 1:
                for r in reports:
                    flag = "ok" if r.total == main.total else "MISMATCH"
                    print(f"  cross-check {r.path}: {r.total} [{flag}]")
    if mismatch:
        if not args.quiet:
            print("cross-check failed: " + ", ".join(r.path for r in mismatch), file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# -- tables -----------------------------------------------------------------


def cmd_tables(args) -> int:
    only = [args.only] if args.only else None
    results = verify(only, args.path)
    failed = [res for res in results if not res.ok]
    if not args.quiet:
        for res in results:
            c = res.cell
            status = "PASS" if res.ok else "FAIL"
            line = f"{status} {c.table_id} k={c.k} N={c.level} path={c.path} expected={res.expected}"
            if not res.ok:
                line += f" computed={res.computed}"
            print(line)
        print(f"{len(results) - len(failed)}/{len(results)} cells PASS")
    return EXIT_MISMATCH if failed else EXIT_OK


# -- constants --------------------------------------------------------------


def _constant(args) -> Fraction:
    name = args.name
    if name == "bernoulli":
        return bernoulli(args.m)
    if name == "zeta":
        return zeta_negative_odd(args.j)
    if name == "shintani":
        return shintani_special(args.rank, args.degree)
    if name == "level-scale":
        return level_scale(args.rank, args.degree, args.level)
    if name == "ifactor":
        return dm.i_factor(args.degree, args.rank)
    if name == "index":
        return Fraction(dm.index_principal(args.degree, args.level))
    if name == "cscalar":
        return dm.c_scalar(args.weight, args.degree, args.rank)
    if name == "cvector":
        return dm.c_vector(WeightVector(args.weights), args.rank, force=args.force)
    raise UsageError(f"unknown constant {name!r}")


def cmd_constants(args) -> int:
    value = _constant(args)
    if not args.quiet:
        print(value)
        if args.approx:
            print(approx(value))
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="siegeldim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="no output; exit code only")

    p = sub.add_parser("dim", parents=[common], help="dimension of a space of cusp forms")
    p.add_argument("--degree", type=int)
    p.add_argument("--weight", type=int, help="scalar weight k")
    p.add_argument("--weights", type=_weights_arg, help="k1,...,kn (weakly decreasing)")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--path", choices=["t115", "c12", "closed", "vector", "all"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--force", action="store_true", help="evaluate outside the proven range")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("tables", parents=[common], help="recompute the published tables")
    p.add_argument("--path", choices=["t115", "c12", "closed", "vector", "all"], default="all")
    p.add_argument("--only", choices=sorted(TABLES))
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("constants", help="exact auxiliary constants")
    csub = p.add_subparsers(dest="name", required=True, parser_class=_Parser)
    shared = _Parser(add_help=False, parents=[common])
    shared.add_argument("--approx", action="store_true", help="also print a decimal approximation")
    specs = {
        "bernoulli": [("--m", int)],
        "zeta": [("--j", int)],
        "shintani": [("--rank", int), ("--degree", int)],
        "level-scale": [("--rank", int), ("--degree", int), ("--level", int)],
        "ifactor": [("--degree", int), ("--rank", int)],
        "index": [("--degree", int), ("--level", int)],
        "cscalar": [("--weight", int), ("--degree", int), ("--rank", int)],
        "cvector": [("--weights", _weights_arg), ("--rank", int)],
    }
    for name, options in specs.items():
        cp = csub.add_parser(name, parents=[shared])
        for flag, typ in options:
            cp.add_argument(flag, type=typ, required=True)
        if name == "cvector":
            cp.add_argument("--force", action="store_true")
        cp.set_defaults(func=cmd_constants)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OutOfProvenRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (UsageError, SiegelDimError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
