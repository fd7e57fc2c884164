"""``unispecht`` command line.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .cache import ResultCache, default_cache_path
from .charpoly import (
    ScanConfig,
    ScanReport,
    charpoly,
    format_coefficients,
    scan,
    verdict,
    verdict_alternating,
)
from .partitions import Partition, enumerate_partitions
from .theorems import SUITES, run_suite, witness_is_valid, witness_subset

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fmt(p: Partition) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _parse_range(tokens: Sequence[str]) -> tuple[int, int]:
    try:
        if len(tokens) == 1 and ".." in tokens[0]:
            lo, hi = tokens[0].split("..", 1)
            lo, hi = int(lo), int(hi)
        elif len(tokens) == 1:
            lo = hi = int(tokens[0])
        elif len(tokens) == 2:
            lo, hi = int(tokens[0]), int(tokens[1])
        else:
            raise ValueError
    except ValueError:
        raise UsageError(f"bad range {' '.join(tokens)!r}; use N, A..B or A B") from None
    if lo < 2:
        raise UsageError(f"scan range must start at n >= 2, got {lo}")
    if lo > hi:
        raise UsageError(f"empty scan range {lo}..{hi}")
    return lo, hi


# -- report rendering --------------------------------------------------------


def render_markdown(reports: Sequence[ScanReport]) -> str:
    lines = [
        "| n | P(n) | Total Unisingular | Exceptional λ | Offending μ |",
        "|---:|---:|---:|---|---|",
    ]
    for rep in reports:
        head = [str(rep.n), str(rep.partition_count), str(rep.unisingular_count)]
        exc = rep.exceptional
        if not exc:
            lines.append("| " + " | ".join(head + ["", ""]) + " |")
            continue
        for i, v in enumerate(exc):
            cells = head if i == 0 else ["", "", ""]
            cells = cells + [_fmt(v.lam), ", ".join(_fmt(mu) for mu in v.offending)]
            lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render_json(reports: Sequence[ScanReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


def parse_json(text: str) -> list[ScanReport]:
    return [ScanReport.from_dict(d) for d in json.loads(text)]


def render_csv(reports: Sequence[ScanReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "lambda", "dimension", "unisingular", "exceptional", "offending"])
    for rep in reports:
        exceptional = {v.lam for v in rep.exceptional}
        for v in rep.verdicts:
            writer.writerow([
                rep.n,
                _fmt(v.lam),
                v.dimension,
                int(v.unisingular),
                int(v.lam in exceptional),
                " ".join(_fmt(mu) for mu in v.offending),
            ])
    return buf.getvalue()


RENDERERS = {"md": render_markdown, "json": render_json, "csv": render_csv}


# -- commands ----------------------------------------------------------------


def _open_cache(args) -> ResultCache | None:
    if args.no_cache:
        return None
    return ResultCache(args.cache or default_cache_path())


def cmd_scan(args, out) -> int:
    lo, hi = _parse_range(args.range)
    config = ScanConfig(min_n=2, max_n=args.max_n, jobs=max(1, args.jobs))
    if hi > config.max_n:
        raise UsageError(f"n = {hi} exceeds the configured maximum {config.max_n} (raise it with --max-n)")
    cache = _open_cache(args)
    status = EXIT_OK
    reports = []
    for n in range(lo, hi + 1):
        known = {}
        if cache is not None:
            for lam in enumerate_partitions(n):
                hit = cache.get(lam)
                if hit is not None:
                    known[lam] = hit
        if args.verify_cache and known:
            for lam, hit in known.items():
                fresh = verdict(lam)
                if fresh.to_dict() != hit.to_dict():
                    print(f"cache mismatch for {_fmt(lam)}: cached {hit.to_dict()} fresh {fresh.to_dict()}", file=sys.stderr)
                    status = EXIT_FAIL
        report = scan(n, config, known)
        if cache is not None:
            for v in report.verdicts:
                cache.put(v)
        reports.append(report)
    if cache is not None:
        cache.save()
    out.write(RENDERERS[args.format](reports))
    return status


def cmd_check(args, out) -> int:
    lam = args.partition
    n = lam.n
    if args.alternating:
        if n < 3:
            raise UsageError("the alternating check needs n >= 3")
        v, group = verdict_alternating(lam), f"A_{n}"
    else:
        if n < 2:
            raise UsageError("unisingularity is only decided for n >= 2")
        cache = _open_cache(args)
        v = cache.get(lam) if cache is not None else None
        if v is None:
            v = verdict(lam)
            if cache is not None:
                cache.put(v)
                cache.save()
        group = f"S_{n}"
    if args.format == "json":
        data = v.to_dict()
        data["group"] = group
        out.write(json.dumps(data, sort_keys=True) + "\n")
        return EXIT_OK
    out.write(f"S^{_fmt(lam)} over {group}, dimension {v.dimension}\n")
    if v.unisingular:
        out.write(f"unisingular over {group}\n")
    else:
        out.write("not unisingular; offending: " + ", ".join(_fmt(mu) for mu in v.offending) + "\n")
    return EXIT_OK


def cmd_charpoly(args, out) -> int:
    lam, mu = args.partition, args.cls
    if lam.n != mu.n:
        raise UsageError(f"{_fmt(lam)} and {_fmt(mu)} are partitions of different n")
    p = charpoly(lam, mu)
    out.write(str(p) + "\n")
    if args.expand:
        out.write(format_coefficients(p.expand()) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    reports = run_suite(args.suite, args.max_n)
    for rep in reports:
        out.write(rep.line() + "\n")
        for note in rep.notes:
            out.write(f"    {note}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_witness(args, out) -> int:
    n, k, mu = args.n, args.k, args.cls
    try:
        w = witness_subset(n, k, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(f"n={n} k={k} mu={_fmt(mu)} recipe={w.recipe}{' (search fallback)' if w.recipe_gap else ''}\n")
    for i, e in w.selections:
        if e == 0:
            out.write("  1  (one of the eigenvalues equal to 1)\n")
        else:
            out.write(f"  z_{mu[i]}^{e}  (cycle {i + 1} of length {mu[i]})\n")
    total = w.product_exponent()
    out.write(f"exponent sum = {total} (integer: {witness_is_valid(w)}); product = 1\n")
    return EXIT_OK if witness_is_valid(w) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unispecht", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def cache_flags(p):
        p.add_argument("--cache", metavar="PATH", help="verdict cache file (default: $UNISPECHT_CACHE or ~/.cache)")
        p.add_argument("--no-cache", action="store_true", help="do not read or write the cache")

    p = sub.add_parser("scan", help="unisingularity table for a range of n")
    p.add_argument("range", nargs="+", help="N, A..B, or A B")
    p.add_argument("--format", choices=sorted(RENDERERS), default="md")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-n", type=int, default=ScanConfig.max_n, help="largest n accepted")
    p.add_argument("--verify-cache", action="store_true", help="recompute cache hits and compare")
    cache_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("check", help="verdict for one Specht module")
    p.add_argument("partition", type=_partition)
    p.add_argument("--alternating", action="store_true", help="restrict to even permutations")
    p.add_argument("--format", choices=("text", "json"), default="text")
    cache_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("charpoly", help="cyclotomic factorisation of a class on S^lambda")
    p.add_argument("partition", type=_partition)
    p.add_argument("cls", metavar="class", type=_partition)
    p.add_argument("--expand", action="store_true", help="also print integer coefficients")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="run a theorem suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITES)}")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="k eigenvalues on the standard module multiplying to 1")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("cls", metavar="class", type=_partition)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"unispecht: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
