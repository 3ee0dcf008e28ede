"""Ideals of Z_n, their leaders, and atoms.

An ideal of Z_n is identified by its leader: the least non-negative residue
generating it, which is always a divisor of n.  The zero ideal is encoded by the
leader ``n`` (not 0) so that "leader divides n" and "order = n // leader" hold
uniformly.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import InvalidArgument
from .numtheory import divisors, euler_phi


def _check_modulus(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"modulus must be a positive integer, got {n!r}")


def _check_residue(n: int, a: int) -> None:
    _check_modulus(n)
    if not 0 <= a < n:
        raise InvalidArgument(f"residue out of range: {a} is not in [0, {n})")


def check_leader(n: int, d: int, what: str = "leader") -> None:
    _check_modulus(n)
    if isinstance(d, bool) or not isinstance(d, int) or d < 1 or n % d:
        raise InvalidArgument(f"{what} must be a positive divisor of {n}, got {d!r}")


def leader_of(n: int, x: int) -> int:
    """Leader of the ideal generated by residue ``x``; gcd(0, n) = n gives the zero code."""
    return gcd(x % n, n)


@dataclass(frozen=True)
class DivisorIdeal:
    n: int
    leader: int

    def __post_init__(self):
        check_leader(self.n, self.leader)

    @property
    def residue(self) -> int:
        return self.leader % self.n

    @property
    def order(self) -> int:
        """Additive order of the leader in Z_n."""
        return self.n // self.leader

    @property
    def is_zero(self) -> bool:
        return self.leader == self.n


@dataclass(frozen=True)
class AtomSet:
    n: int
    leader: int
    elements: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return self.leader == self.n

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.n and leader_of(self.n, x) == self.leader

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class PartialAtom:
    """Returned by :func:`classify` when a set cuts through an atom."""

    leader: int
    covered: int
    size: int


def ideal_of(n: int, a: int) -> DivisorIdeal:
    _check_residue(n, a)
    return DivisorIdeal(n, leader_of(n, a))


def atom_of_leader(n: int, d: int) -> AtomSet:
    """The atom {d*x mod n : 1 <= x <= n/d, gcd(x, n/d) = 1}; {0} for d = n."""
    check_leader(n, d)
    order = n // d
    if order == 1:
        return AtomSet(n, d, (0,))
    elements = tuple(d * x for x in range(1, order) if gcd(x, order) == 1)
    return AtomSet(n, d, elements)


def atom(n: int, a: int) -> AtomSet:
    _check_residue(n, a)
    return atom_of_leader(n, leader_of(n, a))


def atom_partition(n: int) -> list[AtomSet]:
    """All atoms of Z_n, one per divisor, ordered by leader."""
    _check_modulus(n)
    return [atom_of_leader(n, d) for d in divisors(n)]


def classify(n: int, elements: Iterable[int]) -> list[int] | PartialAtom:
    """Leaders of the atoms whose union is exactly ``elements``.

    If some atom is only partly covered, that atom is reported as a
    :class:`PartialAtom` instead (the one with the smallest leader).
    """
    _check_modulus(n)
    buckets: dict[int, set[int]] = defaultdict(set)
    for x in elements:
        _check_residue(n, x)
        buckets[leader_of(n, x)].add(x)
    for d in sorted(buckets):
        size = euler_phi(n // d)
        if len(buckets[d]) != size:
            return PartialAtom(d, len(buckets[d]), size)
    return sorted(buckets)


def format_leader(n: int, d: int) -> str:
    return f"{d}(zero)" if d == n else str(d)
