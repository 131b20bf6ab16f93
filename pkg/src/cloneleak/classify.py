"""Subset taxonomy and the analytic-vs-numeric agreement harness.

Classification is pure arithmetic: the authorization rule, the missing-pair
rule, and the gcd criterion cover every subset exactly once.  The sweep
machinery then replays each verdict against brute-force reduced states of
seeded random inputs, flagging any disagreement, so a green sweep means the
closed forms and the integer criterion both reproduce the statevector
truth.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .analytic import (
    AlignedDescriptor,
    LeakTerm,
    aligned_reduced,
    leaked_words,
    missing_pair_subset_reduced,
)
from .pauli import PureState, random_states
from .protocol import (
    CapacityError,
    ReducedState,
    RegisterSubset,
    MEMBERSHIPS,
    NONE,
    encode,
    reduce_encoded,
)

FULLY_INFORMATIVE = "fully_informative"
PARTIALLY_INFORMATIVE = "partially_informative"
COMPLETELY_UNINFORMATIVE = "completely_uninformative"

VERDICTS = (FULLY_INFORMATIVE, PARTIALLY_INFORMATIVE, COMPLETELY_UNINFORMATIVE)


def is_authorized(subset: RegisterSubset) -> bool:
    """Decodable subsets: contain a complete pair and touch every pair."""
    return subset.has_complete_pair and subset.touches_all_pairs


@dataclass(frozen=True)
class Classification:
    """Arithmetic verdict for one subset at one dimension."""

    verdict: str
    authorized: bool
    maximally_mixed: bool
    g: int | None = None
    leak: tuple[LeakTerm, ...] = ()


def classify_subset(d: int, subset: RegisterSubset) -> Classification:
    """Decide what a subset reveals, by arithmetic alone.

    Authorized subsets determine the input completely.  Subsets missing a
    whole pair are input-independent; they are maximally mixed unless at
    least two complete pairs survive, since a lone surviving Bell mixture
    averages to the identity.  What remains is exactly the aligned case,
    where the gcd criterion decides.
    """
    if is_authorized(subset):
        return Classification(FULLY_INFORMATIVE, True, False)
    if not subset.touches_all_pairs:
        mixed = len(subset.full_pairs) <= 1
        return Classification(COMPLETELY_UNINFORMATIVE, False, mixed)
    desc = AlignedDescriptor(d=d, n=subset.n, p=subset.signal_count)
    leak = leaked_words(desc)
    if leak:
        return Classification(PARTIALLY_INFORMATIVE, False, False, g=desc.g, leak=leak)
    return Classification(COMPLETELY_UNINFORMATIVE, False, True, g=desc.g)


def analytic_reduced(
    d: int, subset: RegisterSubset, psi: PureState | None = None
) -> ReducedState | None:
    """Dispatch to the applicable closed form; None for authorized subsets.

    Aligned subsets need the input state; missing-pair subsets ignore it.
    """
    cls = classify_subset(d, subset)
    if cls.authorized:
        return None
    if not subset.touches_all_pairs:
        return missing_pair_subset_reduced(d, subset.n, subset)
    if psi is None:
        raise ValueError("aligned closed form needs an input state")
    return aligned_reduced(psi, AlignedDescriptor(d=d, n=subset.n, p=subset.signal_count))


def trace_distance(first: ReducedState | np.ndarray, second: ReducedState | np.ndarray) -> float:
    """Half the absolute eigenvalue sum of the difference."""
    a = first.matrix if isinstance(first, ReducedState) else np.asarray(first, dtype=complex)
    b = second.matrix if isinstance(second, ReducedState) else np.asarray(second, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(a - b))))


def maximally_mixed(d: int, num_qudits: int) -> np.ndarray:
    side = d**num_qudits
    return np.eye(side, dtype=complex) / side


class IndependenceResult(NamedTuple):
    independent: bool
    max_distance: float


def numeric_independence_test(
    d: int,
    n: int,
    subset: RegisterSubset,
    samples: int = 10,
    seed: int = 0,
    tol: float = 1e-9,
) -> IndependenceResult:
    """Largest pairwise trace distance of oracle states over seeded inputs."""
    states = random_states(d, samples, seed)
    reduced = [reduce_encoded(encode(psi, d, n), d, n, subset) for psi in states]
    worst = 0.0
    for i in range(len(reduced)):
        for j in range(i + 1, len(reduced)):
            worst = max(worst, trace_distance(reduced[i], reduced[j]))
    return IndependenceResult(worst <= tol, worst)


@dataclass(frozen=True)
class SweepConfig:
    """Grid of register shapes and subsets to replay numerically."""

    dims: tuple[int, ...]
    ns: tuple[int, ...]
    family: str = "aligned"  # aligned | all | named
    subsets: tuple[str, ...] = ()
    samples: int = 10
    seed: int = 7
    tol: float = 1e-9
    witness: float = 1e-6

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "ns", tuple(int(n) for n in self.ns))
        object.__setattr__(self, "subsets", tuple(self.subsets))
        if self.family not in ("aligned", "all", "named"):
            raise ValueError(f"unknown subset family {self.family!r}")
        if self.family == "named" and not self.subsets:
            raise ValueError("family 'named' needs at least one subset")
        if self.samples < 2:
            raise ValueError("need at least two samples to witness input dependence")
        if self.tol <= 0 or self.witness <= 0:
            raise ValueError("tolerances must be positive")

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "ns": list(self.ns),
            "family": self.family,
            "subsets": list(self.subsets),
            "samples": self.samples,
            "seed": self.seed,
            "tol": self.tol,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class SweepRow:
    """One subset's verdict next to its numeric replay."""

    d: int
    n: int
    subset: str
    p: int | None
    q: int | None
    g: int | None
    verdict: str
    authorized: bool
    maximally_mixed: bool
    leak_terms: tuple[LeakTerm, ...]
    oracle_max_distance: float | None
    analytic_oracle_distance: float | None
    agree: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "subset": self.subset,
            "p": self.p,
            "q": self.q,
            "g": self.g,
            "verdict": self.verdict,
            "authorized": self.authorized,
            "maximally_mixed": self.maximally_mixed,
            "leak_terms": [t.to_dict() for t in self.leak_terms],
            "oracle_max_distance": self.oracle_max_distance,
            "analytic_oracle_distance": self.analytic_oracle_distance,
            "agree": self.agree,
            "note": self.note,
        }


@dataclass(frozen=True)
class SweepReport:
    config: SweepConfig
    rows: tuple[SweepRow, ...]

    @property
    def all_agree(self) -> bool:
        return all(row.agree for row in self.rows)

    @property
    def mismatches(self) -> tuple[SweepRow, ...]:
        return tuple(row for row in self.rows if not row.agree)

    @property
    def skipped(self) -> tuple[SweepRow, ...]:
        return tuple(row for row in self.rows if row.note.startswith("capacity"))

    def to_json(self) -> str:
        payload = {
            "config": self.config.to_dict(),
            "rows": [row.to_dict() for row in self.rows],
            "all_agree": self.all_agree,
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        fields = [
            "d",
            "n",
            "subset",
            "p",
            "q",
            "g",
            "verdict",
            "authorized",
            "maximally_mixed",
            "leak_terms",
            "oracle_max_distance",
            "analytic_oracle_distance",
            "agree",
            "note",
        ]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            rec = row.to_dict()
            rec["leak_terms"] = "|".join(
                f"{t.a}:{t.b}:{t.phase_exponent}" for t in row.leak_terms
            )
            writer.writerow(rec)
        return buf.getvalue()

    def to_table(self) -> str:
        headers = [
            "d",
            "n",
            "subset",
            "p",
            "q",
            "g",
            "verdict",
            "auth",
            "mixed",
            "leaks",
            "oracle_max",
            "analytic_dist",
            "ok",
        ]
        body = []
        for row in self.rows:
            body.append(
                [
                    str(row.d),
                    str(row.n),
                    row.subset,
                    "-" if row.p is None else str(row.p),
                    "-" if row.q is None else str(row.q),
                    "-" if row.g is None else str(row.g),
                    row.verdict,
                    "yes" if row.authorized else "no",
                    "yes" if row.maximally_mixed else "no",
                    str(len(row.leak_terms)),
                    _fmt(row.oracle_max_distance),
                    _fmt(row.analytic_oracle_distance),
                    ("ok" if row.agree else "MISMATCH") + (f" [{row.note}]" if row.note else ""),
                ]
            )
        widths = [max(len(h), *(len(r[i]) for r in body)) if body else len(h) for i, h in enumerate(headers)]
        lines = [
            "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)),
            "  ".join("-" * w for w in widths),
        ]
        lines.extend("  ".join(r[i].ljust(widths[i]) for i in range(len(headers))) for r in body)
        return "\n".join(lines)

    def summary(self) -> str:
        return (
            f"{len(self.rows)} rows, {len(self.mismatches)} mismatches, "
            f"{len(self.skipped)} capacity-skipped"
        )


def _fmt(value: float | None) -> str:
    return "-" if value is None else f"{value:.3e}"


def _subsets_for(config: SweepConfig, n: int) -> list[RegisterSubset]:
    if config.family == "aligned":
        return [RegisterSubset.aligned(n, p) for p in range(n + 1)]
    if config.family == "all":
        out = []
        for members in itertools.product(MEMBERSHIPS, repeat=n):
            if all(m == NONE for m in members):
                continue
            out.append(RegisterSubset(members))
        return out
    return [RegisterSubset.from_labels(labels, n) for labels in config.subsets]


def _max_pairwise(states: Sequence[ReducedState]) -> float:
    worst = 0.0
    for i in range(len(states)):
        for j in range(i + 1, len(states)):
            worst = max(worst, trace_distance(states[i], states[j]))
    return worst


def evaluate_subset(
    d: int,
    n: int,
    subset: RegisterSubset,
    states: Sequence[PureState],
    encoded: Sequence[np.ndarray] | None,
    tol: float,
    witness: float,
) -> SweepRow:
    """Classify one subset and replay the verdict against the oracle."""
    cls = classify_subset(d, subset)
    p = subset.signal_count if subset.is_aligned else None
    q = subset.n - p if p is not None else None
    common = dict(
        d=d,
        n=n,
        subset=str(subset),
        p=p,
        q=q,
        g=cls.g,
        verdict=cls.verdict,
        authorized=cls.authorized,
        maximally_mixed=cls.maximally_mixed,
        leak_terms=cls.leak,
    )
    if encoded is None:
        return SweepRow(
            **common,
            oracle_max_distance=None,
            analytic_oracle_distance=None,
            agree=True,
            note="capacity: register too large to encode",
        )
    reduced = [reduce_encoded(vec, d, n, subset) for vec in encoded]
    oracle_max = _max_pairwise(reduced)

    notes: list[str] = []
    analytic_dist: float | None = None
    try:
        if cls.verdict == PARTIALLY_INFORMATIVE or (
            cls.verdict == COMPLETELY_UNINFORMATIVE and subset.is_aligned
        ):
            desc = AlignedDescriptor(d=d, n=n, p=subset.signal_count)
            analytic_dist = max(
                trace_distance(aligned_reduced(psi, desc), rho)
                for psi, rho in zip(states, reduced)
            )
        elif not subset.touches_all_pairs:
            closed = missing_pair_subset_reduced(d, n, subset)
            analytic_dist = max(trace_distance(closed, rho) for rho in reduced)
    except CapacityError as exc:
        notes.append(f"capacity: {exc}")

    agree = True
    if analytic_dist is not None and analytic_dist > tol:
        agree = False
        notes.append("closed form disagrees with oracle")
    independent = oracle_max <= tol
    if cls.verdict == COMPLETELY_UNINFORMATIVE:
        if not independent:
            agree = False
            notes.append("verdict says input-independent, oracle disagrees")
        mixed_dist = max(
            trace_distance(rho, maximally_mixed(d, subset.size)) for rho in reduced
        )
        if cls.maximally_mixed and mixed_dist > tol:
            agree = False
            notes.append("flagged maximally mixed, oracle disagrees")
        if not cls.maximally_mixed and mixed_dist < witness:
            agree = False
            notes.append("flagged non-mixed, oracle looks maximally mixed")
    else:
        if oracle_max < witness:
            agree = False
            notes.append("verdict says input-dependent, oracle looks independent")
    return SweepRow(
        **common,
        oracle_max_distance=oracle_max,
        analytic_oracle_distance=analytic_dist,
        agree=agree,
        note="; ".join(notes),
    )


def run_sweep(config: SweepConfig) -> SweepReport:
    """Replay the classifier over the configured grid; deterministic output."""
    rows: list[SweepRow] = []
    for d in config.dims:
        for n in config.ns:
            subsets = _subsets_for(config, n)
            states = random_states(d, config.samples, config.seed)
            try:
                encoded = [encode(psi, d, n) for psi in states]
            except CapacityError:
                encoded = None
            for subset in subsets:
                rows.append(
                    evaluate_subset(
                        d, n, subset, states, encoded, config.tol, config.witness
                    )
                )
    return SweepReport(config=config, rows=tuple(rows))
