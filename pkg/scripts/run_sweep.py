#!/usr/bin/env python3
"""Replay the classifier against the oracle over a configurable grid.

Defaults reproduce the headline verification: aligned subsets for
d in 2..6, n in 1..3, ten seeded inputs per register shape.  Writes the
JSON and CSV reports next to the printed table and exits nonzero on any
analytic/numeric mismatch.
"""

import argparse
import sys
from pathlib import Path

from cloneleak.classify import SweepConfig, run_sweep


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dims", default="2,3,4,5,6", help="comma-separated dimensions")
    parser.add_argument("--ns", default="1,2,3", help="comma-separated pair counts")
    parser.add_argument(
        "--family",
        choices=("aligned", "all", "named"),
        default="aligned",
    )
    parser.add_argument("--subset", action="append", help="labels for --family named")
    parser.add_argument("--samples", type=int, default=10)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out", type=Path, default=Path("results"))
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    config = SweepConfig(
        dims=tuple(int(x) for x in args.dims.split(",")),
        ns=tuple(int(x) for x in args.ns.split(",")),
        family=args.family,
        subsets=tuple(args.subset or ()),
        samples=args.samples,
        seed=args.seed,
    )
    report = run_sweep(config)
    print(report.to_table())
    print(report.summary())

    args.out.mkdir(parents=True, exist_ok=True)
    jpath = args.out / "sweep.json"
    cpath = args.out / "sweep.csv"
    jpath.write_text(report.to_json() + "\n", encoding="utf-8")
    cpath.write_text(report.to_csv(), encoding="utf-8")
    print(f"wrote {jpath} and {cpath}")
    return 0 if report.all_agree else 1


if __name__ == "__main__":
    sys.exit(main())
