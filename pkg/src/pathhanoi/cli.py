"""Command-line front end: ``pathhanoi <command> [options]``."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

import mpmath

from . import bounds, counts, oracle
from .core import Block, IllegalMove, apply_sequence, invert, perfect, read_moves, write_moves
from .partition import partition
from .solvers import PegInterval, general_move, sequence_length, solve


class CommandError(Exception):
    """A validation failure to report on stderr with a non-zero exit."""


def _positive(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _task_args(p: argparse.ArgumentParser, need_sd: bool = True) -> None:
    p.add_argument("--h", type=int, required=True, help="number of pegs")
    p.add_argument("--n", type=_positive, required=True, help="number of disks")
    if need_sd:
        p.add_argument("--s", type=int, required=True, help="source peg (1-based)")
        p.add_argument("--d", type=int, required=True, help="destination peg (1-based)")


def _approx(value: int) -> str:
    if value == 0:
        return "0 (log3 = -inf)"
    log3 = bounds.log3_int(value)
    sci = mpmath.nstr(mpmath.mpf(value), 12, min_fixed=0, max_fixed=0)
    return f"{sci} (log3 = {mpmath.nstr(bounds.midpoint(log3), 15)})"


def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    if args.pegs:
        pegs = PegInterval(*args.pegs)
        if not 1 <= pegs.lo <= pegs.hi <= args.h:
            raise CommandError(f"peg interval {args.pegs} outside 1..{args.h}")
        lo, hi = sorted((args.s, args.d))
        if args.count_only:
            raise CommandError("--count-only is only available for the full peg range")
        moves = general_move(Block.of_size(args.n), lo, hi, pegs)
        if args.s > args.d:
            moves = invert(moves)
        write_moves(moves, out)
        return 0
    if args.count_only:
        out.write(f"{sequence_length(args.h, args.n, args.s, args.d, args.algorithm)}\n")
        return 0
    write_moves(solve(args.h, args.n, args.s, args.d, args.algorithm), out)
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    source = open(args.input) if args.input != "-" else sys.stdin
    try:
        final = apply_sequence(perfect(args.h, args.s, args.n), read_moves(source))
    finally:
        if source is not sys.stdin:
            source.close()
    target = perfect(args.h, args.d, args.n)
    if final != target:
        raise CommandError(f"sequence is legal but ends in [{final}], not all disks on peg {args.d}")
    out.write("OK\n")
    return 0


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    if args.kind == "T":
        value = counts.count_t(args.n)
    elif args.kind == "F":
        _need(args, "h")
        value = counts.count_f(args.h, args.n)
    else:
        _need(args, "h", "s", "d")
        value = counts.count_g(args.h, args.n, args.s, args.d)
    out.write(f"{_approx(value) if args.approx else value}\n")
    return 0


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise CommandError(f"count --kind {args.kind} needs {', '.join(missing)}")


def cmd_oracle(args: argparse.Namespace, out: TextIO) -> int:
    c1, c2 = perfect(args.h, args.s, args.n), perfect(args.h, args.d, args.n)
    out.write(f"{oracle.bfs_distance(c1, c2, args.budget)}\n")
    return 0


def cmd_table1(args: argparse.Namespace, out: TextIO) -> int:
    rows = oracle.regenerate_table1(args.n_max, args.budget)
    out.write(oracle.table1_csv(rows) if args.format == "csv" else oracle.format_table1(rows))
    return 0


def _report(reports: Sequence[counts.CheckReport], err: TextIO) -> int:
    status = 0
    for r in reports:
        err.write(f"{r}\n")
        for v in r.violations[:5]:
            err.write(f"    {v}\n")
        if r.failed:
            status = 1
    return status


def cmd_bounds(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    reports, rows = bounds.compare_bound(args.h, args.n_max)
    out.write(bounds.bounds_csv(rows))
    err.write(
        "informational lower-bound exponent (n (h-2)!)^(1/(h-2)) at n_max, "
        f"not asserted: {bounds.lower_bound_exponent(args.h, args.n_max):.6g}\n"
    )
    return _report(reports, err)


def cmd_partition(args: argparse.Namespace, out: TextIO) -> int:
    if args.n < 1:
        raise CommandError("partition needs at least one disk")
    result = partition(args.h, Block.of_size(args.n, args.lo))
    for j, b in enumerate(result.blocks, 1):
        span = f"[{b.lo}, {b.hi}]" if b else "empty"
        out.write(f"B{j} {b.size} {span}\n")
    return 0


def cmd_check(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    reports = counts.check_identities(args.h_max, args.n_max)
    for h in range(3, args.h_max + 1):
        reports += bounds.compare_bound(h, args.n_max)[0]
    reports += oracle.check_structure(4, args.oracle_n, args.budget)
    return _report(reports, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathhanoi", description="Tower of Hanoi on Path_h graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="stream a move sequence, one '<disk> <from> <to>' per line")
    _task_args(p)
    p.add_argument("--algorithm", choices=["auto", "general", "four"], default="auto")
    p.add_argument("--pegs", type=int, nargs=2, metavar=("LO", "HI"), help="restrict to pegs LO..HI")
    p.add_argument("--count-only", action="store_true", help="print the length without generating moves")

    p = sub.add_parser("verify", help="replay a move sequence against a perfect task")
    _task_args(p)
    p.add_argument("--input", default="-", help="sequence file (default: stdin)")

    p = sub.add_parser("count", help="exact move counts T(n), F(h,n), G_s->d(h,n)")
    p.add_argument("--kind", choices=["T", "F", "G"], required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--h", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--approx", action="store_true", help="scientific notation with log base 3")

    p = sub.add_parser("oracle", help="minimal number of moves between two perfect configurations")
    _task_args(p)
    p.add_argument("--budget", type=int, default=None, help="maximum number of states")

    p = sub.add_parser("table1", help="minimal perfect-task distances on Path_4")
    p.add_argument("--n-max", type=int, default=11)
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("bounds", help="compare F(h,n) with the closed-form bound U(h,n)")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--n-max", type=int, default=100)

    p = sub.add_parser("partition", help="block sizes used by the multi-peg solvers")
    _task_args(p, need_sd=False)
    p.add_argument("--lo", type=int, default=1, help="smallest disk of the block")

    p = sub.add_parser("check", help="run the identity, bound and BFS structure suites")
    p.add_argument("--h-max", type=int, default=8)
    p.add_argument("--n-max", type=int, default=300)
    p.add_argument("--oracle-n", type=int, default=11)
    p.add_argument("--budget", type=int, default=None)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        if args.command == "bounds":
            return cmd_bounds(args, out, err)
        if args.command == "check":
            return cmd_check(args, out, err)
        handler = {
            "solve": cmd_solve,
            "verify": cmd_verify,
            "count": cmd_count,
            "oracle": cmd_oracle,
            "table1": cmd_table1,
            "partition": cmd_partition,
        }[args.command]
        return handler(args, out)
    except (CommandError, IllegalMove, ValueError, oracle.StateBudgetExceeded) as exc:
        err.write(f"pathhanoi {args.command}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
