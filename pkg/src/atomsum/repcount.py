"""Number of ways to write c as u + v with u in atom(a), v in atom(b).

The count is computed in closed form.  First the query is reduced by
g = gcd(a, b) to coprime leaders.  Then
``(m / rad(m)) * phi(m1) * phi(m2) * phi_star(m3, c')`` is evaluated, where
m = n' / (a'b') and rad(m) = m1 * m2 * m3 splits the primes of m into those
dividing a', those dividing b', and the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .atoms import check_leader
from .errors import InvalidArgument, check_int64
from .numtheory import divisors, euler_phi, factorize, phi_star

REASON_G_NMID_C = "g ∤ c"
REASON_COPRIME = "(c', a'b') > 1"
REASON_PARITY = "parity: n' even, a'b'c' odd"


@dataclass(frozen=True)
class ReducedQuery:
    g: int
    n: int
    a: int
    b: int
    c: int | None
    valid: bool


@dataclass(frozen=True)
class RepCountBreakdown:
    reduced: ReducedQuery
    m: int
    m1: int
    m2: int
    m3: int
    m3_tilde: int
    count: int
    reason: str | None = None

    def as_dict(self) -> dict:
        r = self.reduced
        return {
            "g": r.g,
            "n_reduced": r.n,
            "a_reduced": r.a,
            "b_reduced": r.b,
            "c_reduced": r.c,
            "valid": r.valid,
            "m": self.m,
            "m1": self.m1,
            "m2": self.m2,
            "m3": self.m3,
            "m3_tilde": self.m3_tilde,
            "count": self.count,
            "reason": self.reason,
        }


def check_query(n: int, a: int, b: int, c: int | None = None) -> None:
    check_leader(n, a, "a")
    check_leader(n, b, "b")
    if c is not None and not 0 <= c < n:
        raise InvalidArgument(f"residue out of range: {c} is not in [0, {n})")


def reduce(n: int, a: int, b: int, c: int) -> ReducedQuery:
    check_query(n, a, b, c)
    g = gcd(a, b)
    valid = c % g == 0
    return ReducedQuery(g, n // g, a // g, b // g, c // g if valid else None, valid)


def split_radical(n_red: int, a_red: int, b_red: int) -> tuple[int, int, int, int, int]:
    """Return (m, m1, m2, m3, m3_tilde) for a reduced modulus and coprime leaders."""
    ab = a_red * b_red
    m, rem = divmod(n_red, ab)
    if rem:
        raise InvalidArgument(f"a'b' = {ab} does not divide n' = {n_red}")
    m1 = m2 = m3 = m3_tilde = 1
    for p, e in factorize(m).factors:
        if a_red % p == 0:
            m1 *= p
        elif b_red % p == 0:
            m2 *= p
        else:
            m3 *= p
            m3_tilde *= p**e
    return m, m1, m2, m3, m3_tilde


def rep_count(n: int, a: int, b: int, c: int) -> RepCountBreakdown:
    q = reduce(n, a, b, c)
    m, m1, m2, m3, m3_tilde = split_radical(q.n, q.a, q.b)

    if not q.valid:
        return RepCountBreakdown(q, m, m1, m2, m3, m3_tilde, 0, REASON_G_NMID_C)
    # gcd(0, x) = x, so c' = 0 is excluded here unless a' = b' = 1
    if gcd(q.c, q.a * q.b) > 1:
        return RepCountBreakdown(q, m, m1, m2, m3, m3_tilde, 0, REASON_COPRIME)
    rad_m = m1 * m2 * m3
    count = (m // rad_m) * euler_phi(m1) * euler_phi(m2) * phi_star(m3, q.c)
    check_int64(count, "count")
    return RepCountBreakdown(q, m, m1, m2, m3, m3_tilde, count, None if count else REASON_PARITY)


def in_sumset(n: int, a: int, b: int, c: int) -> bool:
    """Membership of c in atom(a) + atom(b), decided by three divisibility tests."""
    q = reduce(n, a, b, c)
    if not q.valid:
        return False
    ab = q.a * q.b
    if gcd(q.c, ab) != 1:
        return False
    return q.n % 2 == 1 or (ab * q.c) % 2 == 0


def count_profile(n: int, a: int, b: int) -> dict[int, int]:
    """Representation count per atom of Z_n, keyed by leader (n is the zero atom).

    The count is constant on each atom, so one representative per atom suffices.
    """
    check_query(n, a, b)
    return {d: rep_count(n, a, b, d % n).count for d in divisors(n)}


def total_pairs(n: int, a: int, b: int) -> int:
    """|atom(a)| * |atom(b)|, the sum of count * atom size over the profile."""
    check_query(n, a, b)
    return prod(euler_phi(n // x) for x in (a, b))
