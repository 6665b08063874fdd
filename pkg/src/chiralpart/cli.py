"""Command-line interface.

Exit codes: 0 for yes/success, 1 for no/empty, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from itertools import islice

from chiralpart import chirality, permrep
from chiralpart.partition import (
    format_frobenius,
    format_partition,
    frobenius,
    parse_partition,
    partition_count,
    v2_dimension,
)
from chiralpart.tower import render, row_weights, tower_of


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _render(lam, use_frobenius: bool) -> str:
    if use_frobenius:
        return format_frobenius(frobenius(lam)) if lam else "([],[])"
    return format_partition(lam)


def cmd_count(args, out) -> int:
    n = args.n
    if args.perm and n < 3:
        raise UsageError("--perm needs n >= 3")
    record = {"n": n, "b": chirality.count_chiral(n)}
    selected = []
    if args.by_valuation:
        report = chirality.CountReport.for_n(n)
        record["b_by_valuation"] = {str(v): c for v, c in report.b_by_valuation.items()}
        selected.append("b_by_valuation")
    if args.self_conjugate:
        record["self_conjugate"] = chirality.count_self_conjugate_chiral(n)
        selected.append("self_conjugate")
    if args.odd:
        record["a"] = chirality.count_odd(n)
        selected.append("a")
    if args.hooks:
        record["hooks"] = chirality.chiral_hook_count(n)
        selected.append("hooks")
    if args.perm:
        record["c"] = permrep.count_perm_chiral(n)
        selected.append("c")
    if args.partition_function:
        record["p"] = partition_count(n)
        selected.append("p")
    if not args.plain:
        print(json.dumps(record, separators=(",", ":")), file=out)
        return 0
    for key in selected or ["b"]:
        value = record[key]
        if isinstance(value, dict):
            for v, c in value.items():
                print(f"{v} {c}", file=out)
        else:
            print(value, file=out)
    return 0


def cmd_check(args, out) -> int:
    try:
        lam = parse_partition(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.perm:
        verdict = permrep.perm_is_chiral(lam)
    else:
        verdict = chirality.is_chiral(lam)
    if args.explain and not args.perm and lam:
        tower = tower_of(lam)
        for line in render(tower):
            print(line, file=out)
        print("weights: " + ",".join(map(str, row_weights(tower))), file=out)
        print(f"v2(f): {v2_dimension(lam)}", file=out)
        config = chirality.classify(lam)
        print(f"case: {config.case if config else 'none'}", file=out)
    elif args.explain and args.perm:
        odd = [p for p in lam if p & 1]
        print(f"odd parts: {len(odd)}", file=out)
    print("chiral" if verdict else "not chiral", file=out)
    return 0 if verdict else 1


def cmd_enumerate(args, out) -> int:
    if args.self_conjugate:
        if args.valuation is not None:
            raise UsageError("--self-conjugate and --valuation are exclusive")
        stream = chirality.enumerate_self_conjugate_chiral(args.n)
    else:
        stream = chirality.enumerate_chiral(args.n, args.valuation)
    if args.limit is not None:
        stream = islice(stream, args.limit)
    emitted = 0
    for lam in stream:
        print(_render(lam, args.frobenius), file=out)
        emitted += 1
    return 0 if emitted else 1


def cmd_sample(args, out) -> int:
    import random

    rng = random.Random(args.seed)
    for _ in range(args.count):
        try:
            lam = chirality.sample_chiral(args.n, args.valuation, rng=rng)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(_render(lam, args.frobenius), file=out)
    return 0


def cmd_plotdata(args, out) -> int:
    header = ["n", "a_n", "b_n_plus_2"]
    if args.log2:
        header += ["log2_a_n", "log2_b_n_plus_2"]
    print(",".join(header), file=out)
    for n in range(1, args.n_max + 1):
        a, b = chirality.count_odd(n), chirality.count_chiral(n + 2)
        row = [n, a, b]
        if args.log2:
            row += [f"{math.log2(a):.6f}", f"{math.log2(b):.6f}"]
        print(",".join(map(str, row)), file=out)
    return 0


def cmd_oeis(args, out) -> int:
    print("n,b_n,p_minus_b", file=out)
    for n in range(1, args.n_max + 1):
        b = chirality.count_chiral(n)
        print(f"{n},{b},{partition_count(n) - b}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chiralpart",
        description="Count, test, enumerate and sample chiral partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form counts for n")
    p.add_argument("n", type=_positive)
    p.add_argument("--by-valuation", action="store_true")
    p.add_argument("--self-conjugate", action="store_true")
    p.add_argument("--odd", action="store_true", help="partitions with odd dimension")
    p.add_argument("--hooks", action="store_true")
    p.add_argument("--perm", action="store_true", help="chiral permutation modules")
    p.add_argument("--partition-function", action="store_true")
    p.add_argument("--plain", action="store_true", help="bare integers instead of JSON")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("check", help="decide chirality of a partition literal like [3,1]")
    p.add_argument("partition")
    p.add_argument("--perm", action="store_true")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list chiral partitions of n")
    p.add_argument("n", type=_positive)
    p.add_argument("--valuation", type=_non_negative)
    p.add_argument("--self-conjugate", action="store_true")
    p.add_argument("--limit", type=_non_negative)
    p.add_argument("--frobenius", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="uniformly random chiral partitions of n")
    p.add_argument("n", type=_positive)
    p.add_argument("--valuation", type=_non_negative)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--frobenius", action="store_true")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("plotdata", help="CSV of a(n) against b(n+2)")
    p.add_argument("n_max", type=_positive)
    p.add_argument("--log2", action="store_true")
    p.set_defaults(func=cmd_plotdata)

    p = sub.add_parser("oeis", help="CSV of b(n) and p(n) - b(n)")
    p.add_argument("n_max", type=_positive)
    p.set_defaults(func=cmd_oeis)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
