#!/usr/bin/env python3
"""Recompute the non-unisingular shapes for small n three independent ways.

1. character solve (the library path)
2. tabloid orbits plus Young's rule
3. explicit polytabloid matrices, exact arithmetic via sympy (n <= 6)

Needs the test extras (sympy) for route 3.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from oracles import explicit_specht_charpoly  # noqa: E402

from unispecht.charpoly import charpoly, verdict  # noqa: E402
from unispecht.oracle import specht_charpoly_oracle  # noqa: E402
from unispecht.partitions import enumerate_partitions  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()

    for n in range(2, args.max_n + 1):
        for lam in enumerate_partitions(n):
            v = verdict(lam)
            if v.unisingular:
                continue
            for mu in v.offending:
                a = charpoly(lam, mu)
                b = specht_charpoly_oracle(lam, mu)
                c = explicit_specht_charpoly(lam, mu) if n <= 6 else None
                agree = a == b and (c is None or c == a)
                print(f"n={n} {str(lam):14s} on {str(mu):12s} {a}   {'agree' if agree else 'DISAGREE'}")


if __name__ == "__main__":
    main()
