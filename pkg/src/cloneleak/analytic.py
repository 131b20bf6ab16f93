"""Closed-form reduced states of the storage register.

Everything here is evaluated directly from coefficient formulas and the
congruence solution set; no register statevector is ever built.  Agreement
with :func:`cloneleak.protocol.oracle_reduced` is therefore a genuine
two-route consistency check, not a tautology.

Aligned subsets (one qudit per pair, p signals and q = n - p noises) reduce
to

    rho = (1/d^n) * sum_{(a,b)} gamma(a,b) <psi|X^a Z^b|psi>
                    * (X^a Z^b)^{(x)p} (x) (X^{-a} Z^b)^{(x)q}

where the sum runs over the aligned congruence solutions and
gamma(a,b) = exp(-i*pi*(a^2 + b^2 + 2*q*a*b + delta*(a+b))/d).  Subsets that
miss a whole pair instead collapse to an input-independent uniform mixture
of Bell-basis product states.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .modnum import (
    CongruenceSolutionSet,
    delta,
    require_dim,
    satisfies_system,
    solve_aligned_system,
    system_gcd,
)
from .pauli import PauliWord, PureState, expectation, phase_value
from .protocol import (
    ENCODER_DIM_LIMIT,
    CapacityError,
    ReducedState,
    RegisterSubset,
    bell_state,
    kron_all,
    partial_trace,
    permute_subsystems,
)


@dataclass(frozen=True)
class AlignedDescriptor:
    """Shape of an aligned subset: p signal and n - p noise qudits at dimension d."""

    d: int
    n: int
    p: int

    def __post_init__(self) -> None:
        require_dim(self.d)
        if self.n < 1:
            raise ValueError(f"need at least one pair, got n={self.n}")
        if not 0 <= self.p <= self.n:
            raise ValueError(f"signal count {self.p} outside 0..{self.n}")

    @property
    def q(self) -> int:
        return self.n - self.p

    @property
    def g(self) -> int:
        return system_gcd(self.d, self.p, self.q)

    def solutions(self) -> CongruenceSolutionSet:
        return solve_aligned_system(self.d, self.p, self.q)

    @classmethod
    def of_subset(cls, d: int, subset: RegisterSubset) -> "AlignedDescriptor":
        if not subset.is_aligned:
            raise ValueError(f"subset {subset} is not aligned")
        return cls(d=d, n=subset.n, p=subset.signal_count)


def aligned_coefficient_exponent(desc: AlignedDescriptor, a: int, b: int) -> int:
    """Exponent (mod 2d) of gamma(a, b), no solution-set filtering."""
    d = desc.d
    a, b = a % d, b % d
    return (-(a * a + b * b + 2 * desc.q * a * b + delta(d) * (a + b))) % (2 * d)


def aligned_coefficient(desc: AlignedDescriptor, a: int, b: int) -> complex:
    """gamma(a, b) on the congruence solution set, 0 elsewhere.

    Off the solution set the encoder branches interfere to zero, so the
    coefficient of that word in the reduced state vanishes identically.
    """
    if not satisfies_system(desc.d, desc.p, desc.q, a, b):
        return 0.0 + 0.0j
    return phase_value(desc.d, aligned_coefficient_exponent(desc, a, b))


@dataclass(frozen=True)
class LeakTerm:
    """One nontrivial word surviving in an aligned reduced state."""

    d: int
    a: int
    b: int
    phase_exponent: int

    @property
    def coefficient(self) -> complex:
        return phase_value(self.d, self.phase_exponent)

    def signal_word(self) -> PauliWord:
        """Factor applied to each kept signal qudit."""
        return PauliWord(self.d, a=self.a, b=self.b)

    def noise_word(self) -> PauliWord:
        """Factor applied to each kept noise qudit."""
        return PauliWord(self.d, a=-self.a, b=self.b)

    def to_dict(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b, "phase_exponent": self.phase_exponent}


def leaked_words(desc: AlignedDescriptor) -> tuple[LeakTerm, ...]:
    """The nontrivial terms of an aligned reduced state, in generator order.

    Empty exactly when g = gcd(d, p*(q+1) - 1) is 1, i.e. when the subset is
    completely uninformative.
    """
    return tuple(
        LeakTerm(
            d=desc.d,
            a=a,
            b=b,
            phase_exponent=aligned_coefficient_exponent(desc, a, b),
        )
        for a, b in desc.solutions().nontrivial()
    )


def aligned_reduced(psi: PureState, desc: AlignedDescriptor) -> ReducedState:
    """Closed-form reduced state of an aligned subset, canonical qudit order.

    Sums one tensor-product term per congruence solution; the (0, 0)
    solution contributes the maximally mixed background I/d^n.
    """
    if psi.d != desc.d:
        raise ValueError(f"state dimension {psi.d} does not match descriptor d={desc.d}")
    side = desc.d**desc.n
    if side > ENCODER_DIM_LIMIT:
        raise CapacityError(
            f"reduced side d^n = {side} exceeds limit {ENCODER_DIM_LIMIT}"
        )
    acc = np.zeros((side, side), dtype=complex)
    for a, b in desc.solutions().solutions:
        coeff = phase_value(desc.d, aligned_coefficient_exponent(desc, a, b))
        amp = coeff * expectation(psi, PauliWord(desc.d, a=a, b=b))
        sig = PauliWord(desc.d, a=a, b=b).matrix()
        noi = PauliWord(desc.d, a=-a, b=b).matrix()
        acc += amp * kron_all([sig] * desc.p + [noi] * desc.q)
    labels = RegisterSubset.aligned(desc.n, desc.p).kept_labels()
    return ReducedState(d=desc.d, labels=labels, matrix=acc / side)


def single_clone_reduced(psi: PureState, d: int) -> ReducedState:
    """One kept signal qudit at n = 1: (1/d) sum_a w^{-a^2} <X^a Z^{-a}> X^a Z^{-a}.

    Specialization of the aligned formula to p = 1, q = 0, where the
    congruence system pins b = -a and every residue a survives (g = d).
    """
    require_dim(d)
    if psi.d != d:
        raise ValueError(f"state dimension {psi.d} does not match d={d}")
    acc = np.zeros((d, d), dtype=complex)
    for a in range(d):
        word = PauliWord(d, a=a, b=-a)
        acc += phase_value(d, -2 * a * a) * expectation(psi, word) * word.matrix()
    return ReducedState(d=d, labels=("S1",), matrix=acc / d)


def missing_pair_reduced(d: int, n: int, missing: int) -> ReducedState:
    """State of the n-1 surviving pairs when pair ``missing`` is dropped whole.

    Input-independent: a uniform mixture over the d^2 Bell-basis states,
    each surviving pair carrying the same basis label,

        (1/d^2) sum_{k,l} (|phi_kl><phi_kl|)^{(x)(n-1)}.

    Returned over canonical order (signals ascending, then noises), which
    for n > 2 differs from the pairwise order the mixture is naturally built
    in, so the factors are permuted at the end.
    """
    require_dim(d)
    if n < 1:
        raise ValueError(f"need at least one pair, got n={n}")
    if not 1 <= missing <= n:
        raise ValueError(f"missing pair {missing} outside 1..{n}")
    rest = [i for i in range(1, n + 1) if i != missing]
    r = len(rest)
    if r == 0:
        return ReducedState(d=d, labels=(), matrix=np.ones((1, 1), dtype=complex))
    side = d ** (2 * r)
    if side > ENCODER_DIM_LIMIT:
        raise CapacityError(
            f"reduced side d^(2(n-1)) = {side} exceeds limit {ENCODER_DIM_LIMIT}"
        )
    phi = bell_state(d)
    eye = np.eye(d, dtype=complex)
    acc = np.zeros((side, side), dtype=complex)
    for k in range(d):
        for l in range(d):
            pair = np.kron(PauliWord(d, a=k, b=l).matrix(), eye) @ phi
            vec = np.ones(1, dtype=complex)
            for _ in range(r):
                vec = np.kron(vec, pair)
            acc += np.outer(vec, vec.conj())
    acc /= d * d
    pairwise = [lab for i in rest for lab in (f"S{i}", f"N{i}")]
    canonical = [f"S{i}" for i in rest] + [f"N{i}" for i in rest]
    perm = [pairwise.index(lab) for lab in canonical]
    matrix = permute_subsystems(acc, (d,) * (2 * r), perm)
    return ReducedState(d=d, labels=tuple(canonical), matrix=matrix)


def missing_pair_subset_reduced(d: int, n: int, subset: RegisterSubset) -> ReducedState:
    """Closed-form state of any subset missing at least one whole pair.

    Starts from the surviving-pairs mixture of one missing pair and traces
    off the remaining unselected qudits numerically.  Still input-free.
    """
    if subset.n != n:
        raise ValueError(f"subset spans {subset.n} pairs, register has {n}")
    if subset.touches_all_pairs:
        raise ValueError(f"subset {subset} touches every pair; no pair is missing")
    base = missing_pair_reduced(d, n, subset.missing_pairs[0])
    kept = subset.kept_labels()
    keep_idx = [base.labels.index(lab) for lab in kept]
    matrix = partial_trace(base.matrix, (d,) * base.num_qudits, keep_idx)
    return ReducedState(d=d, labels=kept, matrix=matrix)
