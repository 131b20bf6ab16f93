"""Exact modular arithmetic for the aligned-subset congruence system.

Every aligned subset of the storage register (p signal qudits, q noise
qudits, local dimension d) leaks exactly the shift/phase words indexed by
the solutions of

    a + p*b       = 0  (mod d)
    a*(1 + q) + b = 0  (mod d)

over (a, b) in Z_d x Z_d.  The solution set is a cyclic group of order
g = gcd(d, p*(q+1) - 1) generated by (-p*d/g, d/g), so the whole leakage
question reduces to integer arithmetic.  This module keeps that arithmetic
exact and provides a brute-force enumeration as an independent check on the
closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def require_dim(d: int) -> None:
    """Reject local dimensions below 2."""
    if not isinstance(d, int) or isinstance(d, bool):
        raise TypeError(f"qudit dimension must be an int, got {type(d).__name__}")
    if d < 2:
        raise ValueError(f"qudit dimension must be >= 2, got {d}")


def delta(d: int) -> int:
    """Parity offset d mod 2 appearing in the encoder phases."""
    require_dim(d)
    return d % 2


def gcd(u: int, v: int) -> int:
    """Greatest common divisor of |u| and |v|, with gcd(x, 0) = |x|."""
    if u == 0 and v == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(abs(u), abs(v))


def system_gcd(d: int, p: int, q: int) -> int:
    """Number of solutions g = gcd(d, p*(q+1) - 1) of the aligned system."""
    require_dim(d)
    _require_shape(p, q)
    return gcd(d, p * (q + 1) - 1)


def satisfies_system(d: int, p: int, q: int, a: int, b: int) -> bool:
    """Check both congruences directly."""
    return (a + p * b) % d == 0 and (a * (1 + q) + b) % d == 0


def _require_shape(p: int, q: int) -> None:
    if p < 0 or q < 0:
        raise ValueError(f"signal/noise counts must be nonnegative, got p={p}, q={q}")
    if p + q < 1:
        raise ValueError("an aligned subset holds at least one qudit")


@dataclass(frozen=True)
class CongruenceSolutionSet:
    """All (a, b) pairs solving the aligned system for one (d, p, q)."""

    d: int
    p: int
    q: int
    g: int
    solutions: tuple[tuple[int, int], ...]

    def as_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.solutions)

    @property
    def trivial(self) -> bool:
        """True when only (0, 0) solves the system, i.e. nothing leaks."""
        return self.g == 1

    def nontrivial(self) -> tuple[tuple[int, int], ...]:
        return tuple(s for s in self.solutions if s != (0, 0))


def solve_aligned_system(d: int, p: int, q: int) -> CongruenceSolutionSet:
    """Closed-form solution set, ordered along the generator.

    Substituting a = -p*b into the second congruence leaves
    (p*(q+1) - 1) * b = 0 (mod d), whose solutions are the g multiples of
    d/g with g = gcd(d, p*(q+1) - 1).
    """
    require_dim(d)
    _require_shape(p, q)
    g = system_gcd(d, p, q)
    step = d // g
    sols = tuple(((-p * v * step) % d, (v * step) % d) for v in range(g))
    return CongruenceSolutionSet(d=d, p=p, q=q, g=g, solutions=sols)


def enumerate_system(d: int, p: int, q: int) -> CongruenceSolutionSet:
    """Brute-force scan of Z_d x Z_d; independent oracle for the closed form."""
    require_dim(d)
    _require_shape(p, q)
    sols = tuple(
        (a, b)
        for a in range(d)
        for b in range(d)
        if satisfies_system(d, p, q, a, b)
    )
    return CongruenceSolutionSet(d=d, p=p, q=q, g=len(sols), solutions=sols)
