"""Decomposition of atom(a) + atom(b) into a disjoint union of atoms."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .repcount import check_query, in_sumset, split_radical
from .numtheory import divisors

CASE_A = "A"
CASE_B = "B"


@dataclass(frozen=True)
class AtomDecomposition:
    n: int
    a: int
    b: int
    g: int
    n_reduced: int
    m3_tilde: int
    case: str
    leaders: tuple[int, ...]

    @property
    def contains_zero(self) -> bool:
        return self.n in self.leaders


def sumset_decompose(n: int, a: int, b: int) -> AtomDecomposition:
    """Leaders (in Z_n) of the atoms making up atom(a) + atom(b).

    With g = gcd(a, b), n' = n/g, a' = a/g, b' = b/g the sumset is the union of
    g * atom(d) over the divisors d of m3_tilde, the largest divisor of
    n'/(a'b') coprime to a'b'.  When n' is even and a'b' odd, only even d occur.
    """
    check_query(n, a, b)
    g = gcd(a, b)
    n_red, a_red, b_red = n // g, a // g, b // g
    m3_tilde = split_radical(n_red, a_red, b_red)[4]

    if n_red % 2 == 0 and (a_red * b_red) % 2 == 1:
        if m3_tilde % 2:
            raise AssertionError(f"case B with odd m3_tilde={m3_tilde} for n={n}, a={a}, b={b}")
        case = CASE_B
        ds = [d for d in divisors(m3_tilde) if d % 2 == 0]
    else:
        case = CASE_A
        ds = divisors(m3_tilde)
    return AtomDecomposition(n, a, b, g, n_red, m3_tilde, case, tuple(g * d for d in ds))


def locate_sum(n: int, a: int, b: int, c: int) -> int | None:
    """Leader of the atom of Z_n containing c, if c lies in atom(a) + atom(b).

    Returns ``n`` (the zero-atom code) for c = 0 and None when c is not a sum.
    """
    if not in_sumset(n, a, b, c):
        return None
    if c == 0:
        return n
    g = gcd(a, b)
    m3_tilde = split_radical(n // g, a // g, b // g)[4]
    return g * gcd(c // g, m3_tilde)
