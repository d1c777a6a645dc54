"""Command line interface.

Exit codes: 0 success, 1 bad arguments or unparsable/invalid input,
2 safety cap exceeded, 3 object outside the bijection's domain,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from math import factorial

from . import formats
from .bijection import asm_to_dpp, asm_to_mt, dpp_to_asm, mt_to_asm, partition_to_dpp
from .core import MonotoneTriangle, Permutation, asm_stats, dpp_stats
from .enumeration import (
    dpp_arrangements,
    enumerate_asms,
    enumerate_dpps,
    enumerate_dpps_no_special,
    enumerate_mts,
    enumerate_permutations,
)
from .errors import AsmHasMinusOnes, DppasmError, HasSpecialParts, TriangleHasMinusOnes
from .genfunc import count_formula, empirical_gf, nosp_gf_formula, q_count_formula, q_factorial
from .verify import SUITES, run_suite

DEFAULT_CAP = 8

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3, 4

COUNT_OBJECTS = ("dpp", "dpp-nospecial", "asm", "monotone-triangle", "permutation")
GF_WHICH = ("eq2", "eq3", "qfactorial", "empirical-all", "empirical-nospecial")


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(f"{self.prog}: error: {message}", EXIT_USAGE)


def _check_cap(n, args):
    if n < 0:
        raise CliError("n must be non-negative")
    if n > args.cap:
        raise CliError(f"n={n} exceeds the safety cap {args.cap} (raise it with --cap)", EXIT_CAP)


def _read_object_text(args) -> str:
    if args.input is not None:
        if args.input == "-":
            return sys.stdin.read()
        with open(args.input) as fh:
            return fh.read()
    if args.object is None:
        raise CliError("no input object given (positional argument or --input)")
    return args.object


def _load(kind, args):
    text = _read_object_text(args)
    if args.format == "json":
        obj = formats.loads(text)
        if formats.kind_of(obj) != kind:
            raise CliError(f"expected a {kind} document, got {formats.kind_of(obj)}")
        return obj
    return formats.parse_text(kind, text, args.n)


def _emit(obj, args, n=None, label=None):
    if args.format == "json":
        return json.dumps(formats.to_document(obj, n))
    text = formats.to_text(obj)
    return f"{label}: {text}" if label else text


def cmd_count(args):
    kind, n = args.object_kind, args.n
    if n < 0:
        raise CliError("n must be non-negative")
    if args.mode == "formula":
        value = factorial(n) if kind in ("dpp-nospecial", "permutation") else count_formula(n)
    else:
        _check_cap(n, args)
        family = {
            "dpp": enumerate_dpps,
            "dpp-nospecial": enumerate_dpps_no_special,
            "asm": enumerate_asms,
            "monotone-triangle": enumerate_mts,
            "permutation": enumerate_permutations,
        }[kind](n)
        value = family.count()
    print(value)
    return EXIT_OK


def _trace_from(kind, obj, n):
    if kind == "dpp":
        return dpp_to_asm(obj)
    if kind == "partition":
        if n is None:
            raise CliError("--n is required for partitions")
        return dpp_to_asm(partition_to_dpp(obj, n))
    if kind == "monotone-triangle":
        return asm_to_dpp(mt_to_asm(obj))
    if kind == "asm":
        return asm_to_dpp(obj)
    return asm_to_dpp(obj.to_asm())


def cmd_map(args):
    src, dst = args.from_kind, args.to_kind
    if src == "partition" and args.n is None:
        raise CliError("--n is required for partitions")
    obj = _load(src, args)
    if {src, dst} <= {"monotone-triangle", "asm"} and not args.trace:
        # defined on every ASM, -1 entries included
        if src == dst:
            image = obj
        elif src == "asm":
            image = asm_to_mt(obj)
        else:
            image = mt_to_asm(obj)
        print(_emit(image, args))
        return EXIT_OK
    trace = _trace_from(src, obj, args.n)
    if args.trace:
        stages = trace.stages()
        if args.format == "json":
            print(json.dumps([formats.to_document(o, trace.n) for _, o in stages]))
        else:
            for label, o in stages:
                print(_emit(o, args, trace.n, label))
    else:
        image = dict(trace.stages())[dst]
        print(_emit(image, args, trace.n))
    return EXIT_OK


def cmd_stats(args):
    kind = args.object_kind
    obj = _load(kind, args)
    if kind == "dpp":
        st = dpp_stats(obj)
    else:
        if isinstance(obj, MonotoneTriangle):
            obj = mt_to_asm(obj)
        elif isinstance(obj, Permutation):
            obj = obj.to_asm()
        st = asm_stats(obj)
    if args.format == "json":
        print(json.dumps(asdict(st)))
    else:
        print(" ".join(f"{k}={v}" for k, v in asdict(st).items()))
    return EXIT_OK


def cmd_gf(args):
    n = args.n
    _check_cap(n, args)
    which = args.which
    if which == "eq2":
        poly = q_count_formula(n)
    elif which == "eq3":
        poly = nosp_gf_formula(n)
    elif which == "qfactorial":
        poly = q_factorial(n)
    elif which == "empirical-all":
        poly = empirical_gf(dpp_stats(d).weight for d in enumerate_dpps(n).raw())
    else:
        poly = empirical_gf(dpp_stats(d).weight for d in enumerate_dpps_no_special(n).raw())
    print(poly)
    return EXIT_OK


def cmd_verify(args):
    _check_cap(args.n_max, args)
    results = run_suite(args.suite, args.n_max)
    for r in results:
        print(r)
    failures = [r for r in results if not r.ok]
    if failures:
        first = failures[0]
        print(f"counterexample ({first.suite}, n={first.n}): {first.counterexample}")
        return EXIT_VERIFY
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def cmd_arrangements(args):
    try:
        parts = [int(tok) for tok in args.parts.split()]
    except ValueError:
        raise CliError(f"--parts must be integers, got {args.parts!r}") from None
    if any(v < 1 or v > args.n for v in parts):
        raise CliError(f"parts must lie in 1..{args.n}")
    found = dpp_arrangements(parts, args.n)
    for d in found:
        print(_emit(d, args, args.n))
    print(f"total: {len(found)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dppasm", description=(
        "Descending plane partitions without special parts and permutation matrices."))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cap_arg(p):
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help=f"largest n allowed for enumeration (default {DEFAULT_CAP})")

    def io_args(p):
        p.add_argument("object", nargs="?", help="object in text form (or use --input)")
        p.add_argument("--input", help="read the object from a file, '-' for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--n", type=int, help="order; required for DPPs and partitions")

    p = sub.add_parser("count", help="count objects of order n")
    p.add_argument("--object", dest="object_kind", choices=COUNT_OBJECTS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("formula", "enumerate"), default="enumerate")
    cap_arg(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("map", help="apply the bijection")
    p.add_argument("--from", dest="from_kind", choices=formats.KINDS, required=True)
    p.add_argument("--to", dest="to_kind", choices=formats.KINDS, required=True)
    p.add_argument("--trace", action="store_true", help="print every intermediate stage")
    io_args(p)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("stats", help="print statistics of an object")
    p.add_argument("--object", dest="object_kind", required=True,
                   choices=("dpp", "asm", "monotone-triangle", "permutation"))
    io_args(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gf", help="print a generating function")
    p.add_argument("--which", choices=GF_WHICH, required=True)
    p.add_argument("--n", type=int, required=True)
    cap_arg(p)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n-max", type=int, required=True)
    cap_arg(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("arrangements", help="all DPPs with a given multiset of parts")
    p.add_argument("--parts", required=True, help='space separated parts, e.g. "5 5 5 3 1"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_arrangements)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(exc, file=sys.stderr)
        return exc.code
    except (HasSpecialParts, AsmHasMinusOnes, TriangleHasMinusOnes) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DppasmError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
