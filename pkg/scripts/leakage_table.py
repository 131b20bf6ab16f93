#!/usr/bin/env python3
"""Print the leakage map of aligned subsets: g = gcd(d, p(q+1) - 1).

Pure integer arithmetic, no statevectors: for each dimension row the table
shows the solution count per (n, p) cell, with '.' marking g = 1 (nothing
leaks).  Handy for eyeballing where the partially informative region sits.
"""

import argparse
import sys

from cloneleak.modnum import system_gcd


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dmax", type=int, default=12, help="largest dimension (from 2)")
    parser.add_argument("--nmax", type=int, default=5, help="largest pair count")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    cells = [(n, p) for n in range(1, args.nmax + 1) for p in range(n + 1)]
    header = ["d"] + [f"n{n}p{p}" for n, p in cells]
    widths = [max(4, len(h)) for h in header]
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for d in range(2, args.dmax + 1):
        row = [str(d)]
        for n, p in cells:
            g = system_gcd(d, p, n - p)
            row.append("." if g == 1 else str(g))
        print("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    print()
    print("cell value: solution count g of the aligned system; '.' means g=1,")
    print("the subset is completely uninformative; g>1 words leak through")
    return 0


if __name__ == "__main__":
    sys.exit(main())
