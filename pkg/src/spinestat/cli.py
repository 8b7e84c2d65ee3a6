"""spinestat command line: distributions, averages, limits, verification,
sampling, and raw enumeration.

Exit codes: 0 success, 1 usage error, 2 enumeration cap exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import __version__, asymptotics, stats, trees
from .errors import CapExceeded
from .series import catalan
from .stats import render_decimal
from .trees import DEFAULT_CAP

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_VERIFY = 3

METHODS = ("exhaustive", "recurrence", "series", "closed")
FORMATS = ("text", "csv", "json")


@dataclass(frozen=True)
class ReportRow:
    n: int
    k: int
    count: int
    fraction: str
    limit: str


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad arguments; the documented usage code is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _limit_str(k: int, places: int) -> str:
    return render_decimal(Fraction(k, 2 ** (k + 1)), places)


def _dist_rows(dist: stats.SpineDistribution, places: int) -> list[ReportRow]:
    return [
        ReportRow(
            n=dist.n,
            k=k,
            count=c,
            fraction=render_decimal(Fraction(c, dist.total), places),
            limit=_limit_str(k, places),
        )
        for k, c in enumerate(dist.counts, start=1)
    ]


def _emit_rows(dist, method, fmt, places, out):
    rows = _dist_rows(dist, places)
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "k", "count", "fraction", "limit"])
        for r in rows:
            writer.writerow([r.n, r.k, str(r.count), r.fraction, r.limit])
    elif fmt == "json":
        doc = {
            "n": dist.n,
            "total": str(dist.total),
            "method": method,
            "version": __version__,
            "rows": [
                {"k": r.k, "count": str(r.count),
                 "fraction": r.fraction, "limit": r.limit}
                for r in rows
            ],
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        print(f"n={dist.n} method={method} total={dist.total}", file=out)
        if dist.n == 0:
            print("(size 0: the single external node, no spine segments)", file=out)
        for r in rows:
            print(f"{r.count} x {r.k}", file=out)


def _compute_dist(n, method, cap):
    if method == "exhaustive":
        return stats.dist_exhaustive(n, cap=cap)
    if method == "recurrence":
        return stats.dist_recurrence(n)
    if method == "series":
        return stats.dist_series(n)
    return stats.dist_closed_all(n)


def cmd_dist(args, out) -> int:
    try:
        dist = _compute_dist(args.n, args.method, args.cap)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    _emit_rows(dist, args.method, args.format, args.precision, out)
    return EXIT_OK


def _ratio_chain(raw_num: int, raw_den: int, places: int) -> str:
    # "<raw> = <reduced> = <decimal>", dropping the middle form when the raw
    # fraction is already reduced.
    value = Fraction(raw_num, raw_den)
    parts = [f"{raw_num}/{raw_den}"]
    if (value.numerator, value.denominator) != (raw_num, raw_den):
        parts.append(str(value))
    parts.append(render_decimal(value, places))
    return " = ".join(parts)


def cmd_average(args, out) -> int:
    if args.n < 1:
        print("error: --n must be >= 1 for average", file=sys.stderr)
        return EXIT_USAGE
    n = args.n
    value = stats.average(n)
    # The raw Catalan-difference numerator has ~0.6*n digits; past a point
    # the equivalent 3n/(n+2) form reads better.
    c = catalan(n)
    if c < 10 ** 18:
        raw = (catalan(n + 1) - c, c)
    else:
        raw = (3 * n, n + 2)
    if args.format == "json":
        doc = {
            "n": n,
            "numerator": str(raw[0]),
            "denominator": str(raw[1]),
            "reduced": str(value),
            "decimal": render_decimal(value, args.precision),
            "version": __version__,
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        print(_ratio_chain(raw[0], raw[1], args.precision), file=out)
    return EXIT_OK


def cmd_limit(args, out) -> int:
    if args.k < 1:
        print("error: --k must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    k = args.k
    if args.format == "json":
        value = Fraction(k, 2 ** (k + 1))
        doc = {
            "k": k,
            "numerator": str(k),
            "denominator": str(2 ** (k + 1)),
            "reduced": str(value),
            "decimal": render_decimal(value, args.precision),
            "version": __version__,
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        print(_ratio_chain(k, 2 ** (k + 1), args.precision), file=out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    try:
        for t in trees.enumerate_trees(args.n, cap=args.cap):
            print(trees.encode(t), file=out)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def _check_bijection(max_n: int, cap: int) -> tuple[str, bool]:
    top = min(max_n, cap - 1)
    for n in range(0, top + 1):
        images = Counter()
        for t in trees.enumerate_trees(n, cap=cap):
            for s in trees.successors(t):
                images[trees.encode(s)] += 1
        expected = [trees.encode(u) for u in trees.enumerate_trees(n + 1, cap=cap)]
        if sorted(images) != sorted(expected) or any(v != 1 for v in images.values()):
            return f"bijection n={n}", False
        for u in trees.enumerate_trees(n + 1, cap=cap):
            p, d = trees.predecessor(u)
            if trees.successors(p)[d] != u:
                return f"predecessor round trip n={n + 1}", False
    return f"bijection and predecessor round trip (n <= {top})", True


def _check_routes(max_n: int, cap: int) -> tuple[str, bool]:
    rec = stats.dist_recurrence_table(max_n)
    ser = stats.dist_series_table(max_n)
    for n in range(max_n + 1):
        closed = stats.dist_closed_all(n)
        if not rec[n].counts == ser[n].counts == closed.counts:
            return f"route agreement n={n}", False
        if n <= cap and stats.dist_exhaustive(n, cap=cap).counts != rec[n].counts:
            return f"exhaustive agreement n={n}", False
    return f"route agreement (n <= {max_n})", True


def _check_identities(max_n: int) -> tuple[str, bool]:
    for dist in stats.dist_recurrence_table(max_n)[1:]:
        n = dist.n
        if sum(dist.counts) != catalan(n):
            return f"conservation n={n}", False
        weighted = sum(k * c for k, c in enumerate(dist.counts, start=1))
        if weighted != catalan(n + 1) - catalan(n):
            return f"segment-sum identity n={n}", False
    return f"conservation and segment-sum identity (n <= {max_n})", True


def cmd_verify(args, out) -> int:
    checks = [
        _check_bijection(args.max_n, args.cap),
        _check_routes(args.max_n, args.cap),
        _check_identities(args.max_n),
    ]
    failed = False
    for label, ok in checks:
        print(("PASS" if ok else "FAIL") + f" {label}", file=out)
        failed |= not ok
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_sample(args, out) -> int:
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    n, places = args.n, args.precision
    observed = Counter(trees.sample_spines(n, args.samples, args.seed))
    exact = stats.dist_recurrence(n)
    k_top = max(observed) if observed else 0
    rows = []
    for k in range(1, k_top + 1):
        count = observed.get(k, 0)
        rows.append({
            "k": k,
            "observed": count,
            "empirical": render_decimal(Fraction(count, args.samples), places),
            "exact": render_decimal(Fraction(exact.count(k), exact.total), places)
            if k <= n else render_decimal(Fraction(0), places),
            "limit": _limit_str(k, places),
        })
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "k", "observed", "empirical", "exact", "limit"])
        for r in rows:
            writer.writerow([n, r["k"], r["observed"], r["empirical"],
                             r["exact"], r["limit"]])
    elif args.format == "json":
        doc = {
            "n": n,
            "samples": args.samples,
            "seed": args.seed,
            "version": __version__,
            "rows": rows,
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        print(f"n={n} samples={args.samples} seed={args.seed}", file=out)
        for r in rows:
            print(f"k={r['k']} observed={r['observed']} "
                  f"empirical={r['empirical']} exact={r['exact']} "
                  f"limit={r['limit']}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="spinestat",
        description="Right-spine statistics of binary trees, in exact arithmetic.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, precision_default=2):
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--precision", type=int, default=precision_default,
                       help="decimal places for rendered fractions")

    p = sub.add_parser("dist", help="spine-segment distribution for one size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="recurrence")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("average", help="average spine length at one size")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_average)

    p = sub.add_parser("limit", help="limiting fraction k/2^(k+1)")
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("verify", help="cross-route and bijection checks")
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="seeded uniform sampling report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    common(p, precision_default=4)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("enumerate", help="print all tree codes for one size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    if getattr(args, "n", 0) < 0 or getattr(args, "max_n", 0) < 0:
        print("error: sizes must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args, out if out is not None else sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
