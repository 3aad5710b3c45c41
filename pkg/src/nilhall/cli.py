"""Command-line front end.

    nilhall check  -g GROUP.json
    nilhall mul    -g GROUP.json A B [--oracle]
    nilhall pow    -g GROUP.json A X [--oracle]
    nilhall inv    -g GROUP.json A [--oracle]
    nilhall comm   -g GROUP.json A B [--oracle]
    nilhall hall   [-g GROUP.json] --print
    nilhall derive [--both]
    nilhall selftest [--trials N] [--seed S] [--bound B]

Exponent vectors are comma separated integers such as ``1,-2,0,4,5``.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import List, Optional

from nilhall import collector as col
from nilhall import hallpolys as hp
from nilhall.presentation import (BadShape, Inconsistent, conditions,
                                  read_group_spec)

# lets "-1,2,0" pass as a positional argument rather than an option
_NEGATIVE_ARG = re.compile(r"^-\d+(,-?\d+)*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_ARG

    def error(self, message):
        raise UsageError(message)


def _vector(text: str):
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("bad exponent vector %r" % text) from None


def fmt(v) -> str:
    return ",".join(str(e) for e in v)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nilhall", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def group_arg(p, required=True):
        p.add_argument("-g", "--group", required=required, metavar="FILE",
                       help="group spec JSON file")

    p = sub.add_parser("check", help="decide consistency of G(t)")
    group_arg(p)

    for name, args in (("mul", ("A", "B")), ("inv", ("A",)), ("comm", ("A", "B"))):
        p = sub.add_parser(name)
        group_arg(p)
        for a in args:
            p.add_argument(a, type=_vector)
        p.add_argument("--oracle", action="store_true",
                       help="also compute by collection and compare")
    p = sub.add_parser("pow")
    group_arg(p)
    p.add_argument("A", type=_vector)
    p.add_argument("X", type=int)
    p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("hall", help="print the Hall polynomials")
    group_arg(p, required=False)
    p.add_argument("--print", dest="do_print", action="store_true", required=True)

    p = sub.add_parser("derive", help="re-derive the Hall polynomials symbolically")
    p.add_argument("--both", action="store_true",
                   help="reduce by both consistency relations")

    p = sub.add_parser("selftest", help="run the randomized verification suites")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--t-bound", type=int, default=3)
    return parser


def _cmd_check(args, out):
    G = read_group_spec(args.group)
    ok = G.consistent
    out.append("consistent" if ok else "inconsistent")
    if G.n == 5:
        first, second = conditions(G.constants)
        out.append("t123*t345 = %d%s" % (first, "" if first == 0 else " != 0"))
        out.append("t124*t345 + t145*t234 - t134*t245 = %d%s"
                   % (second, "" if second == 0 else " != 0"))
    report = G.report
    if report.failures:
        out.append("failing relations: " + " ".join(report.failing_ids()))
    if report.verdict != ok:
        out.append("error: algebraic and direct consistency checks disagree")
        return 1
    return 0 if ok else 1


def _arith(args, out, hall_fn, oracle_fn, *operands):
    G = read_group_spec(args.group)
    G.require_consistent()
    result = hall_fn(G, *operands)
    if not args.oracle:
        out.append(fmt(result))
        return 0
    expected = oracle_fn(G, *operands)
    out.append("hall:   " + fmt(result))
    out.append("oracle: " + fmt(expected))
    out.append("match" if result == expected else "mismatch")
    return 0 if result == expected else 1


def _cmd_hall(args, out):
    system = hp.theorem_polynomials()
    polys = list(system)
    if args.group:
        G = read_group_spec(args.group)
        polys = [hp.substitute_t(p, G.constants) for p in polys[:G.n]]
    out.extend(str(p) for p in polys)
    return 0


def _cmd_derive(args, out):
    from nilhall.symcollect import derive
    derived, stated, report = derive(both=args.both)
    out.append("derived:")
    out.extend("  p%d = %s" % (i, p) for i, p in enumerate(derived, 1))
    out.append("stated:")
    out.extend("  p%d = %s" % (i, p) for i, p in enumerate(stated, 1))
    out.append("comparison:")
    out.extend("  " + line for line in report.lines())
    return 0 if report.equivalent else 1


def _cmd_selftest(args, out):
    from nilhall.selftest import run_all
    out.append("selftest seed=%d trials=%d bound=%d t-bound=%d backend=%s"
               % (args.seed, args.trials, args.bound, args.t_bound, col.BACKEND))
    results = run_all(args.trials, args.seed, args.bound, args.t_bound)
    out.extend(r.line() for r in results)
    ok = all(r.passed for r in results)
    out.append("all suites passed" if ok else "FAILURES")
    return 0 if ok else 1


def run(argv: Optional[List[str]] = None):
    """Run the CLI; returns ``(exit_code, output_lines)``."""
    out: List[str] = []
    try:
        args = build_parser().parse_args(argv)
        cmd = args.command
        if cmd == "check":
            code = _cmd_check(args, out)
        elif cmd == "mul":
            code = _arith(args, out, hp.hall_multiply, col.collect_multiply, args.A, args.B)
        elif cmd == "inv":
            code = _arith(args, out, hp.hall_inverse, col.collect_invert, args.A)
        elif cmd == "comm":
            code = _arith(args, out, hp.hall_commutator, col.collect_commutator, args.A, args.B)
        elif cmd == "pow":
            code = _arith(args, out, hp.hall_power, col.collect_power, args.A, args.X)
        elif cmd == "hall":
            code = _cmd_hall(args, out)
        elif cmd == "derive":
            code = _cmd_derive(args, out)
        else:
            code = _cmd_selftest(args, out)
    except UsageError as exc:
        return 2, out + ["error: %s" % exc]
    except (BadShape, ValueError, OSError) as exc:
        if isinstance(exc, Inconsistent):
            return 1, out + ["error: %s" % exc]
        return 2, out + ["error: %s" % str(exc).splitlines()[0]]
    return code, out


def main(argv: Optional[List[str]] = None) -> int:
    code, lines = run(argv)
    for line in lines:
        print(line, file=sys.stderr if line.startswith("error:") else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
