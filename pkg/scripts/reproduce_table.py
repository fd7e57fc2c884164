#!/usr/bin/env python3
"""Print the unisingularity table for a range of n, with timings per row."""

import argparse
import time

from unispecht.charpoly import ScanConfig, scan
from unispecht.cli import render_markdown


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    config = ScanConfig(min_n=2, max_n=max(args.max_n, ScanConfig.max_n), jobs=args.jobs)
    reports = []
    for n in range(args.min_n, args.max_n + 1):
        t0 = time.perf_counter()
        reports.append(scan(n, config))
        print(f"n={n:2d}  {time.perf_counter() - t0:6.2f}s")
    print()
    print(render_markdown(reports), end="")


if __name__ == "__main__":
    main()
