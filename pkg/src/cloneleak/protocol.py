"""Register layout, encoding circuit, and the brute-force reduction oracle.

The full register is [A, S1, N1, S2, N2, ..., Sn, Nn]: the source qudit A,
then n signal/noise pairs, each pair prepared in the generalized Bell state
before encoding.  Axis order is fixed and row-major, so A is axis 0 and pair
i occupies axes (2i-1, 2i).

Encoding applies (1/d) * sum_{k,l} c_kl (X^k Z^l) on A and every signal
qudit simultaneously, with c_kl the exact phases from
:func:`cloneleak.pauli.enc_coefficient`.  Reduced states of register subsets
are produced here by direct contraction of the statevector, with no appeal
to any closed form; the analytic module reproduces them the other way
around, which is what makes the cross-check meaningful.

Reduced states keep their qudits in a canonical order: selected signal
qudits ascending by pair index, then selected noise qudits ascending.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .modnum import require_dim
from .pauli import PauliWord, PureState, enc_coefficient_value

# Dense-object size guards.  The encoder is a d^(n+1) square matrix; the
# encoded register is a d^(2n+1) statevector.  Exceeding either raises
# CapacityError instead of silently allocating gigabytes.
ENCODER_DIM_LIMIT = 4096
STATE_AMPLITUDE_LIMIT = 10_000_000

NONE, SIGNAL, NOISE, BOTH = "none", "signal", "noise", "both"
MEMBERSHIPS = (NONE, SIGNAL, NOISE, BOTH)


class CapacityError(RuntimeError):
    """Requested dense object exceeds the configured size guard."""


def _require_pairs(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"pair count must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"need at least one signal/noise pair, got n={n}")


def parse_label(label: str) -> tuple[str, int]:
    """Split a qudit label like 'S1' or 'N12' into (kind, pair index)."""
    lab = label.strip()
    if len(lab) >= 2 and lab[0].upper() in ("S", "N") and lab[1:].isdigit():
        return lab[0].upper(), int(lab[1:])
    raise ValueError(f"bad qudit label {label!r}; expected like S1 or N2")


@dataclass(frozen=True)
class Register:
    """Source qudit plus n signal/noise pairs in the fixed global layout."""

    d: int
    n: int

    def __post_init__(self) -> None:
        require_dim(self.d)
        _require_pairs(self.n)

    @property
    def size(self) -> int:
        """Total number of qudits, source included."""
        return 2 * self.n + 1

    @property
    def total_dim(self) -> int:
        return self.d**self.size

    @property
    def labels(self) -> tuple[str, ...]:
        pairs = [lab for i in range(1, self.n + 1) for lab in (f"S{i}", f"N{i}")]
        return ("A", *pairs)

    def axis(self, label: str) -> int:
        """Tensor axis of a qudit: A -> 0, S_i -> 2i-1, N_i -> 2i."""
        if label.strip().upper() == "A":
            return 0
        kind, i = parse_label(label)
        if not 1 <= i <= self.n:
            raise ValueError(f"pair index {i} outside 1..{self.n}")
        return 2 * i - 1 if kind == "S" else 2 * i


@dataclass(frozen=True)
class RegisterSubset:
    """Which qudits of each signal/noise pair are selected.

    ``members[i]`` records the choice for pair i+1: none, signal, noise, or
    both.  The subset must select at least one qudit.
    """

    members: tuple[str, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if not members:
            raise ValueError("subset needs at least one pair slot")
        bad = [m for m in members if m not in MEMBERSHIPS]
        if bad:
            raise ValueError(f"unknown membership values: {bad}")
        if all(m == NONE for m in members):
            raise ValueError("subset must select at least one qudit")

    @classmethod
    def from_labels(cls, labels: str | Iterable[str], n: int) -> "RegisterSubset":
        """Build from labels like 'S1,N2' (string) or an iterable of labels."""
        _require_pairs(n)
        if isinstance(labels, str):
            labels = [tok for tok in labels.split(",") if tok.strip()]
        members = [NONE] * n
        for label in labels:
            kind, i = parse_label(label)
            if not 1 <= i <= n:
                raise ValueError(f"pair index {i} outside 1..{n}")
            have = members[i - 1]
            add = SIGNAL if kind == "S" else NOISE
            if have in (NONE, add):
                members[i - 1] = add
            else:
                members[i - 1] = BOTH
        return cls(tuple(members))

    @classmethod
    def aligned(cls, n: int, p: int) -> "RegisterSubset":
        """Canonical aligned subset: signals on pairs 1..p, noises after."""
        _require_pairs(n)
        if not 0 <= p <= n:
            raise ValueError(f"signal count {p} outside 0..{n}")
        return cls(tuple([SIGNAL] * p + [NOISE] * (n - p)))

    @property
    def n(self) -> int:
        return len(self.members)

    def _pairs_with(self, *kinds: str) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.members, 1) if m in kinds)

    @property
    def signal_pairs(self) -> tuple[int, ...]:
        """Pairs contributing only their signal qudit."""
        return self._pairs_with(SIGNAL)

    @property
    def noise_pairs(self) -> tuple[int, ...]:
        """Pairs contributing only their noise qudit."""
        return self._pairs_with(NOISE)

    @property
    def full_pairs(self) -> tuple[int, ...]:
        """Pairs contributing both qudits."""
        return self._pairs_with(BOTH)

    @property
    def missing_pairs(self) -> tuple[int, ...]:
        """Pairs contributing nothing."""
        return self._pairs_with(NONE)

    @property
    def touches_all_pairs(self) -> bool:
        return not self.missing_pairs

    @property
    def has_complete_pair(self) -> bool:
        return bool(self.full_pairs)

    @property
    def is_aligned(self) -> bool:
        """One qudit from every pair."""
        return self.touches_all_pairs and not self.has_complete_pair

    @property
    def signal_count(self) -> int:
        return len(self.signal_pairs)

    @property
    def size(self) -> int:
        """Number of selected qudits."""
        return len(self.kept_labels())

    def kept_labels(self) -> tuple[str, ...]:
        """Selected qudits in canonical order: signals ascending, then noises."""
        sig = [f"S{i}" for i in self._pairs_with(SIGNAL, BOTH)]
        noi = [f"N{i}" for i in self._pairs_with(NOISE, BOTH)]
        return tuple(sig + noi)

    def __str__(self) -> str:
        return ",".join(self.kept_labels())


@dataclass(frozen=True)
class ReducedState:
    """Density matrix over kept qudits, labels in canonical order."""

    d: int
    labels: tuple[str, ...]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        require_dim(self.d)
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        mat = np.asarray(self.matrix, dtype=complex)
        side = self.d ** len(labels)
        if mat.shape != (side, side):
            raise ValueError(
                f"matrix shape {mat.shape} does not match {len(labels)} qudits of dimension {self.d}"
            )
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    @property
    def num_qudits(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)

    def check(self, atol: float = 1e-10) -> "ReducedState":
        """Assert hermiticity, unit trace, and positivity; return self."""
        dev = float(np.max(np.abs(self.matrix - self.matrix.conj().T)))
        if dev > atol:
            raise ValueError(f"not hermitian: deviation {dev:.3e}")
        tr = complex(np.trace(self.matrix))
        if abs(tr - 1.0) > atol:
            raise ValueError(f"trace is {tr!r}, expected 1")
        lo = float(np.min(np.linalg.eigvalsh(self.matrix)))
        if lo < -atol:
            raise ValueError(f"negative eigenvalue {lo:.3e}")
        return self

    def to_dict(self) -> dict:
        flat = self.matrix.reshape(-1)
        return {
            "d": self.d,
            "labels": list(self.labels),
            "dim": self.dim,
            "matrix": [[float(z.real), float(z.imag)] for z in flat],
        }


def bell_state(d: int) -> np.ndarray:
    """Maximally entangled pair (1/sqrt(d)) sum_k |kk> as a length-d^2 vector."""
    require_dim(d)
    vec = np.zeros(d * d, dtype=complex)
    vec[:: d + 1] = 1.0 / np.sqrt(d)
    return vec


def kron_all(factors: Sequence[np.ndarray]) -> np.ndarray:
    """Kronecker product of a sequence, empty product being the 1x1 identity."""
    out = np.ones((1, 1), dtype=complex)
    for f in factors:
        out = np.kron(out, f)
    return out


def build_encoder(d: int, n: int) -> np.ndarray:
    """Dense encoding unitary on [A, S1, ..., Sn].

    Sums the d^2 branches c_kl * (X^k Z^l)^{(x)(n+1)} / d.  Unitarity is not
    an input here; it emerges from the phase choice and is what the tests
    pin down.
    """
    require_dim(d)
    _require_pairs(n)
    side = d ** (n + 1)
    if side > ENCODER_DIM_LIMIT:
        raise CapacityError(
            f"encoder side d^(n+1) = {side} exceeds limit {ENCODER_DIM_LIMIT}"
        )
    out = np.zeros((side, side), dtype=complex)
    for k in range(d):
        for l in range(d):
            w = PauliWord(d, a=k, b=l).matrix()
            out += enc_coefficient_value(d, k, l) * kron_all([w] * (n + 1))
    return out / d


def encode(psi: PureState, d: int, n: int) -> np.ndarray:
    """Encoded register statevector in the fixed global layout.

    Built branch by branch: the (k, l) branch is
    c_kl * (X^k Z^l |psi>) (x) ((X^k Z^l (x) I)|Bell>)^{(x)n}, all summed and
    divided by d.  This never materializes the encoder, so it reaches
    register sizes the dense unitary cannot.
    """
    require_dim(d)
    _require_pairs(n)
    if psi.d != d:
        raise ValueError(f"state dimension {psi.d} does not match register dimension {d}")
    total = d ** (2 * n + 1)
    if total > STATE_AMPLITUDE_LIMIT:
        raise CapacityError(
            f"register size d^(2n+1) = {total} exceeds limit {STATE_AMPLITUDE_LIMIT}"
        )
    phi = bell_state(d)
    eye = np.eye(d, dtype=complex)
    acc = np.zeros(total, dtype=complex)
    for k in range(d):
        for l in range(d):
            w = PauliWord(d, a=k, b=l).matrix()
            pair = np.kron(w, eye) @ phi
            branch = w @ psi.amplitudes
            for _ in range(n):
                branch = np.kron(branch, pair)
            acc += enc_coefficient_value(d, k, l) * branch
    return acc / d


def reduce_encoded(vec: np.ndarray, d: int, n: int, subset: RegisterSubset) -> ReducedState:
    """Contract an encoded statevector down to the selected qudits.

    The source qudit and every unselected register qudit are traced out by
    one transpose/reshape/matmul; the d^(2n+1) density matrix is never
    formed.
    """
    reg = Register(d, n)
    if subset.n != n:
        raise ValueError(f"subset spans {subset.n} pairs, register has {n}")
    vec = np.asarray(vec, dtype=complex).reshape(-1)
    if vec.shape != (reg.total_dim,):
        raise ValueError(f"expected {reg.total_dim} amplitudes, got {vec.shape}")
    labels = subset.kept_labels()
    keep_axes = [reg.axis(lab) for lab in labels]
    traced = [ax for ax in range(reg.size) if ax not in keep_axes]
    tensor = vec.reshape((d,) * reg.size)
    m = np.transpose(tensor, keep_axes + traced).reshape(d ** len(keep_axes), -1)
    return ReducedState(d=d, labels=labels, matrix=m @ m.conj().T)


def oracle_reduced(psi: PureState, d: int, n: int, subset: RegisterSubset) -> ReducedState:
    """Encode psi and contract: the ground-truth reduced state of a subset."""
    return reduce_encoded(encode(psi, d, n), d, n, subset)


def partial_trace(matrix: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace a multi-factor density matrix down to the factors in ``keep``.

    ``dims`` lists the factor dimensions; kept factors appear in the order
    given by ``keep``.
    """
    dims = tuple(int(x) for x in dims)
    m = len(dims)
    keep = [int(k) for k in keep]
    if sorted(set(keep)) != sorted(keep) or any(not 0 <= k < m for k in keep):
        raise ValueError(f"keep list {keep} invalid for {m} factors")
    total = math.prod(dims)
    matrix = np.asarray(matrix)
    if matrix.shape != (total, total):
        raise ValueError(f"matrix shape {matrix.shape} does not match dims {dims}")
    traced = [i for i in range(m) if i not in keep]
    d_keep = math.prod(dims[i] for i in keep) if keep else 1
    d_out = math.prod(dims[i] for i in traced) if traced else 1
    perm = keep + traced
    tensor = matrix.reshape(dims + dims)
    tensor = np.transpose(tensor, perm + [ax + m for ax in perm])
    tensor = tensor.reshape(d_keep, d_out, d_keep, d_out)
    return np.einsum("itjt->ij", tensor)


def permute_subsystems(matrix: np.ndarray, dims: Sequence[int], perm: Sequence[int]) -> np.ndarray:
    """Reorder the tensor factors of a square multi-factor matrix.

    ``perm[j]`` is the current position of the factor that ends up at
    position j.
    """
    dims = tuple(int(x) for x in dims)
    m = len(dims)
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(m)):
        raise ValueError(f"{perm} is not a permutation of 0..{m - 1}")
    tensor = np.asarray(matrix).reshape(dims + dims)
    axes = perm + [p + m for p in perm]
    side = math.prod(dims[p] for p in perm)
    return np.transpose(tensor, axes).reshape(side, side)
