"""Command-line front end: classify, reduce, verify, sweep."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .classify import (
    SweepConfig,
    analytic_reduced,
    classify_subset,
    evaluate_subset,
    run_sweep,
)
from .pauli import PureState, random_states
from .protocol import CapacityError, RegisterSubset, encode, oracle_reduced


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(",") if tok.strip())


def _parse_psi(text: str, d: int) -> PureState:
    amps = np.array([complex(tok.strip()) for tok in text.split(",")], dtype=complex)
    if amps.shape != (d,):
        raise ValueError(f"expected {d} amplitudes, got {amps.size}")
    norm = np.linalg.norm(amps)
    if norm == 0:
        raise ValueError("zero vector is not a state")
    return PureState(d, amps / norm)


def _state_from_args(args: argparse.Namespace) -> PureState:
    if args.psi is not None:
        return _parse_psi(args.psi, args.d)
    return random_states(args.d, 1, args.seed)[0]


def _print_classification(args: argparse.Namespace, subset: RegisterSubset) -> None:
    cls = classify_subset(args.d, subset)
    if args.json:
        payload = {
            "d": args.d,
            "n": args.n,
            "subset": str(subset),
            "verdict": cls.verdict,
            "authorized": cls.authorized,
            "maximally_mixed": cls.maximally_mixed,
            "g": cls.g,
            "leak_terms": [t.to_dict() for t in cls.leak],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    print(f"subset {subset} of a d={args.d}, n={args.n} register")
    print(f"verdict: {cls.verdict}")
    print(f"authorized: {'yes' if cls.authorized else 'no'}")
    print(f"maximally mixed: {'yes' if cls.maximally_mixed else 'no'}")
    if cls.g is not None:
        p = subset.signal_count
        print(f"aligned shape: p={p}, q={subset.n - p}, g={cls.g}")
    for term in cls.leak:
        print(
            f"leak: (a={term.a}, b={term.b}) "
            f"coefficient exp(i*pi*{term.phase_exponent}/{term.d})"
        )


def cmd_classify(args: argparse.Namespace) -> int:
    subset = RegisterSubset.from_labels(args.subset, args.n)
    _print_classification(args, subset)
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    subset = RegisterSubset.from_labels(args.subset, args.n)
    psi = _state_from_args(args)
    if args.method == "oracle":
        state = oracle_reduced(psi, args.d, args.n, subset)
    else:
        state = analytic_reduced(args.d, subset, psi)
        if state is None:
            print(
                "no closed form: authorized subsets determine the input state",
                file=sys.stderr,
            )
            return 2
    if args.json:
        print(json.dumps(state.to_dict(), indent=2, sort_keys=True))
        return 0
    print(f"reduced state over ({', '.join(state.labels)}), method={args.method}")
    print(np.array2string(state.matrix, precision=6, suppress_small=True))
    print(f"trace: {np.trace(state.matrix).real:.12f}  purity: {state.purity():.12f}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    subset = RegisterSubset.from_labels(args.subset, args.n)
    states = random_states(args.d, args.samples, args.seed)
    try:
        encoded = [encode(psi, args.d, args.n) for psi in states]
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 2
    row = evaluate_subset(
        args.d, args.n, subset, states, encoded, args.tol, args.witness
    )
    print(f"subset {subset} of a d={args.d}, n={args.n} register")
    print(f"verdict: {row.verdict} (authorized={row.authorized}, g={row.g})")
    print(f"oracle max pairwise distance over {args.samples} inputs: {row.oracle_max_distance:.3e}")
    if row.analytic_oracle_distance is not None:
        print(f"closed form vs oracle, worst distance: {row.analytic_oracle_distance:.3e}")
    print(f"agreement: {'ok' if row.agree else 'MISMATCH'}")
    if row.note:
        print(f"note: {row.note}")
    return 0 if row.agree else 1


def cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig(
        dims=args.dims,
        ns=args.ns,
        family=args.family,
        subsets=tuple(args.subset or ()),
        samples=args.samples,
        seed=args.seed,
        tol=args.tol,
        witness=args.witness,
    )
    report = run_sweep(config)
    print(report.to_table())
    print(report.summary())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
        print(f"wrote {args.json}")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())
        print(f"wrote {args.csv}")
    return 0 if report.all_agree else 1


def _add_register_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-d", type=int, required=True, help="local dimension of each qudit")
    sub.add_argument("-n", type=int, required=True, help="number of signal/noise pairs")
    sub.add_argument(
        "--subset",
        required=True,
        help="kept qudits, comma-separated labels like S1,N2",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cloneleak",
        description=(
            "Classify what subsets of an encrypted-cloning storage register "
            "reveal about the input state, and cross-check the closed forms "
            "against brute-force reduced states."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cls = sub.add_parser("classify", help="arithmetic verdict for one subset")
    _add_register_args(cls)
    cls.add_argument("--json", action="store_true", help="print JSON instead of text")
    cls.set_defaults(func=cmd_classify)

    red = sub.add_parser("reduce", help="print a reduced density matrix")
    _add_register_args(red)
    red.add_argument(
        "--method",
        choices=("oracle", "analytic"),
        default="oracle",
        help="statevector contraction or the closed form",
    )
    red.add_argument("--psi", help="input amplitudes, comma-separated complex numbers")
    red.add_argument("--seed", type=int, default=0, help="seed for a random input state")
    red.add_argument("--json", action="store_true", help="print JSON instead of text")
    red.set_defaults(func=cmd_reduce)

    ver = sub.add_parser("verify", help="replay one subset's verdict against the oracle")
    _add_register_args(ver)
    ver.add_argument("--samples", type=int, default=10)
    ver.add_argument("--seed", type=int, default=7)
    ver.add_argument("--tol", type=float, default=1e-9)
    ver.add_argument("--witness", type=float, default=1e-6)
    ver.set_defaults(func=cmd_verify)

    swp = sub.add_parser("sweep", help="replay a whole grid and report agreement")
    swp.add_argument("--dims", type=_int_list, required=True, help="e.g. 2,3,4")
    swp.add_argument("--ns", type=_int_list, required=True, help="e.g. 1,2,3")
    swp.add_argument(
        "--family",
        choices=("aligned", "all", "named"),
        default="aligned",
        help="which subsets to visit per register shape",
    )
    swp.add_argument(
        "--subset",
        action="append",
        help="subset labels for --family named; repeatable",
    )
    swp.add_argument("--samples", type=int, default=10)
    swp.add_argument("--seed", type=int, default=7)
    swp.add_argument("--tol", type=float, default=1e-9)
    swp.add_argument("--witness", type=float, default=1e-6)
    swp.add_argument("--json", metavar="PATH", help="write the report as JSON")
    swp.add_argument("--csv", metavar="PATH", help="write the report as CSV")
    swp.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
