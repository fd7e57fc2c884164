#!/usr/bin/env python3
"""Decide S^(4,3,2,1) and show the fixed-space dimension on every class.

Only characters are used, so this runs in well under a second even though
the module has dimension 768.
"""

from unispecht.charpoly import charpoly, fixed_space_dim
from unispecht.partitions import enumerate_partitions
from unispecht.theorems import OPEN_CASE, resolve_open_case


def main() -> None:
    v = resolve_open_case()
    print(f"S^{OPEN_CASE} dimension {v.dimension}")
    smallest = None
    for mu in enumerate_partitions(10):
        fixed = fixed_space_dim(OPEN_CASE, mu)
        print(f"  {str(mu):24s} fixed {fixed:4d}   {charpoly(OPEN_CASE, mu)}")
        if smallest is None or fixed < smallest[1]:
            smallest = (mu, fixed)
    print()
    print("unisingular" if v.unisingular else f"not unisingular, offending {list(map(str, v.offending))}")
    print(f"smallest fixed space: {smallest[1]} on class {smallest[0]}")


if __name__ == "__main__":
    main()
