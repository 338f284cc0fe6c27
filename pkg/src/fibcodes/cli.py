"""Command-line front end.

Exit status: 0 verified/complete, 1 negative verification, 2 input error,
3 capacity exceeded or undecided.
"""
from __future__ import annotations

import argparse
import io
import sys
from collections import Counter

import numpy as np

from .avoidance import CapacityError, MembershipError, gamma, vertex_count
from .bitword import DimensionError, max_run_array
from .codes import (
    CodeStream,
    construct_run_avoiding_code,
    example_gamma7_code,
    hamming_code,
    run_avoiding_bound,
    verify_in_graph,
    verify_perfect_qn,
)
from .io import CodeFileError, read_code, write_code
from .search import conjecture_scan, min_s, search_perfect_codes

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


class InputError(ValueError):
    pass


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


def _histogram_tap(chunks, hist: Counter):
    for chunk in chunks:
        runs, counts = np.unique(max_run_array(chunk), return_counts=True)
        hist.update(dict(zip(runs.tolist(), counts.tolist())))
        yield chunk


class _TappedStream(CodeStream):
    def __init__(self, inner: CodeStream, hist: Counter):
        super().__init__(inner.n, inner.size, lambda: _histogram_tap(inner.chunks(), hist))


def cmd_construct(args, out, err) -> int:
    variant, p = args.variant, args.p
    if variant == "theorem2":
        if p is None or not 2 <= p <= 5:
            raise InputError("theorem2 needs -p in 2..5")
        code = construct_run_avoiding_code(p)
        s = run_avoiding_bound(p)
    elif variant == "hamming":
        if p is None or not 1 <= p <= 4:
            raise InputError("hamming needs -p in 1..4")
        code = hamming_code(p)
        s = code.n + 1
    else:
        code = example_gamma7_code()
        p, s = 3, 5
    n = code.n
    header = {"n": n, "s": s, "variant": variant, "p": p}

    hist: Counter = Counter()
    target = _TappedStream(code, hist) if isinstance(code, CodeStream) else code
    if args.out in (None, "-"):
        summary = err
        if hasattr(out, "buffer"):
            out.flush()
            count = write_code(out.buffer, target, header)
            out.buffer.flush()
        else:
            buf = io.BytesIO()
            count = write_code(buf, target, header)
            out.write(buf.getvalue().decode("ascii"))
    else:
        summary = out
        try:
            with open(args.out, "wb") as fh:
                count = write_code(fh, target, header)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    max_run = max(hist) if hist else code.max_run()
    print(f"n: {n}", file=summary)
    print(f"s: {s}", file=summary)
    print(f"size: {count}", file=summary)
    print(f"max_run: {max_run}", file=summary)
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    try:
        code, _ = read_code(args.code)
    except OSError as exc:
        raise InputError(f"cannot read {args.code}: {exc.strerror}") from None
    if args.mode == "gamma":
        if args.s is None:
            raise InputError("--mode gamma requires -s")
        report = verify_in_graph(code, gamma(code.n, args.s))
    else:
        report = verify_perfect_qn(code)
    out.write(report.to_kv())
    return EXIT_OK if report.perfect else EXIT_NEGATIVE


def cmd_search(args, out, err) -> int:
    outcome = search_perfect_codes(args.n, args.s, limit=args.limit)
    out.write(outcome.to_kv())
    return EXIT_CAPACITY if outcome.undecided else EXIT_OK


def cmd_min_s(args, out, err) -> int:
    value = min_s(args.n, args.s_max)
    print(f"min_s: {'none' if value is None else value}", file=out)
    return EXIT_OK


def cmd_scan(args, out, err) -> int:
    s_range = None if args.s is None else args.s
    report = conjecture_scan(args.n, s_range)
    out.write(report.table())
    out.write(report.to_kv())
    return EXIT_CAPACITY if report.undecided else EXIT_OK


def cmd_count(args, out, err) -> int:
    count = vertex_count(args.n, args.s)
    print(f"vertices: {count}", file=out)
    if args.enumerate:
        enumerated = int(gamma(args.n, args.s).vertex_masks().size)
        print(f"enumerated: {enumerated}", file=out)
        if enumerated != count:
            return EXIT_NEGATIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibcodes",
        description="Perfect codes in hypercubes and generalized Fibonacci cubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a perfect code and write it out")
    p.add_argument("--variant", choices=["theorem2", "hamming", "gamma7-example"],
                   default="theorem2")
    p.add_argument("-p", type=int)
    p.add_argument("-o", "--out", help="output file (default: standard output)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check that a code file is a perfect code")
    p.add_argument("code")
    p.add_argument("--mode", choices=["qn", "gamma"], default="qn")
    p.add_argument("-s", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive perfect-code search in Gamma_n(1^s)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("min-s", help="smallest s admitting a perfect code")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--s-max", type=int, required=True)
    p.set_defaults(func=cmd_min_s)

    p = sub.add_parser("scan", help="conjecture scan over (n, s) cells")
    p.add_argument("-n", type=_int_range, required=True, metavar="LO..HI")
    p.add_argument("-s", type=_int_range, metavar="LO..HI",
                   help="default: 2..n+1 for each n")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("count", help="vertex count of Gamma_n(1^s)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--enumerate", action="store_true", help="cross-check by enumeration")
    p.set_defaults(func=cmd_count)
    return parser


def _validate(args) -> None:
    for name in ("n", "s", "s_max", "limit"):
        value = getattr(args, name, None)
        if isinstance(value, int) and value < 1:
            raise InputError(f"--{name.replace('_', '-')} must be positive")
    for name in ("n", "s"):
        value = getattr(args, name, None)
        if isinstance(value, tuple) and not 1 <= value[0] <= value[1]:
            raise InputError(f"-{name} range must satisfy 1 <= LO <= HI")


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        _validate(args)
        return args.func(args, out, err)
    except (InputError, CodeFileError, DimensionError, MembershipError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity: {exc}", file=err)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
