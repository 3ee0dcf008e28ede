"""Brute-force reference implementations used only for verification.

Nothing here imports the closed-form modules; every quantity is obtained by
literal enumeration over residues or divisors with ``math.gcd`` as the only
helper.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidArgument, enforce_cap

SINGLE_QUERY_CAP = 10**6
SWEEP_CAP = 150


@dataclass(frozen=True)
class RepPair:
    u: int
    v: int


def _check(n: int, a: int, b: int) -> None:
    if n < 1 or a < 1 or b < 1 or n % a or n % b:
        raise InvalidArgument(f"a and b must be positive divisors of n (n={n}, a={a}, b={b})")
    enforce_cap(n, SINGLE_QUERY_CAP)


def _units(order: int) -> list[int]:
    return [x for x in range(1, order + 1) if gcd(x, order) == 1]


def brute_force_S(n: int, a: int, b: int, c: int) -> list[RepPair]:
    """All pairs (a*x mod n, b*y mod n) with x, y coprime to the orders and sum c."""
    _check(n, a, b)
    if not 0 <= c < n:
        raise InvalidArgument(f"residue out of range: {c} is not in [0, {n})")
    pairs = []
    for x in _units(n // a):
        for y in _units(n // b):
            if (a * x + b * y - c) % n == 0:
                pairs.append(RepPair(a * x % n, b * y % n))
    return pairs


def brute_force_counts(n: int, a: int, b: int) -> list[int]:
    """|brute_force_S(n, a, b, c)| for every c, from a single pass over all pairs."""
    _check(n, a, b)
    counts = [0] * n
    ys = [b * y for y in _units(n // b)]
    for x in _units(n // a):
        ax = a * x
        for by in ys:
            counts[(ax + by) % n] += 1
    return counts


def brute_force_sumset(n: int, a: int, b: int) -> list[int]:
    _check(n, a, b)
    us = {a * x % n for x in _units(n // a)}
    vs = {b * y % n for y in _units(n // b)}
    return sorted({(u + v) % n for u in us for v in vs})


def brute_force_phi(n: int) -> int:
    return sum(1 for x in range(1, n + 1) if gcd(x, n) == 1)


def brute_force_divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_force_mobius(n: int) -> int:
    sign, p = 1, 2
    while n > 1:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    return sign


def _is_prime(p: int) -> bool:
    return p > 1 and all(p % q for q in range(2, p))


def _prime_divisors(m: int) -> list[int]:
    return [p for p in range(2, m + 1) if m % p == 0 and _is_prime(p)]


def _phi_star_literal(m: int, primes: list[int], k: int) -> int:
    value = Fraction(m)
    for p in primes:
        value *= 1 - Fraction(1 if k % p == 0 else 2, p)
    assert value.denominator == 1
    return value.numerator


def brute_force_phi_star(m: int, k: int) -> int:
    """Literal product formula evaluated with exact rationals."""
    return _phi_star_literal(m, _prime_divisors(m), k)


def brute_force_phi_star_row(m: int) -> list[int]:
    """[brute_force_phi_star(m, k) for k in 0..m], sharing one prime search."""
    primes = _prime_divisors(m)
    return [_phi_star_literal(m, primes, k) for k in range(m + 1)]


def brute_force_f_count(d: int, r: int, n: int) -> int:
    return sum(1 for y in range(1, n + 1) if gcd(d * y + r, n) == 1)


def _pair_sums(m: int, combine) -> dict[int, Fraction]:
    divs = [(d, brute_force_mobius(d)) for d in brute_force_divisors(m)]
    sums: dict[int, Fraction] = {}
    for d, mu_d in divs:
        for e, mu_e in divs:
            key = combine(d, e)
            sums[key] = sums.get(key, Fraction(0)) + Fraction(mu_d * mu_e, d * e)
    return sums


def brute_force_t_sums(m: int) -> dict[int, Fraction]:
    """k -> sum over divisor pairs (d, e) of m with gcd(d, e) = k of mu(d)mu(e)/(de).

    Values of k absent from the map have an empty sum, i.e. 0.
    """
    return _pair_sums(m, gcd)


def brute_force_lcm_sums(m: int) -> dict[int, Fraction]:
    """As :func:`brute_force_t_sums` but grouping pairs by lcm(d, e)."""
    return _pair_sums(m, lambda d, e: d * e // gcd(d, e))


def brute_force_lcm_cleared_sums(m: int) -> dict[int, int]:
    """k -> sum of mu(d) * mu(e) over divisor pairs of m with lcm(d, e) = k."""
    divs = [(d, brute_force_mobius(d)) for d in brute_force_divisors(m)]
    sums: dict[int, int] = {}
    for d, mu_d in divs:
        for e, mu_e in divs:
            key = d * e // gcd(d, e)
            sums[key] = sums.get(key, 0) + mu_d * mu_e
    return sums


def brute_force_t_sum(m: int, k: int) -> Fraction:
    return brute_force_t_sums(m).get(k, Fraction(0))


def brute_force_lcm_sum(m: int, k: int) -> Fraction:
    return brute_force_lcm_sums(m).get(k, Fraction(0))


def brute_force_q_row(m: int) -> list[Fraction]:
    """[Q(m, k) for k in 0..m] from the defining divisor sum.

    Q(m, k) = sum_{d|m, d|k} |mu(d)|/d * prod_{p|m, p∤d} (1 - 2/p).
    """
    primes = _prime_divisors(m)
    terms = {}
    for d in brute_force_divisors(m):
        if brute_force_mobius(d) == 0:
            continue
        term = Fraction(1, d)
        for p in primes:
            if d % p:
                term *= 1 - Fraction(2, p)
        terms[d] = term
    return [sum((t for d, t in terms.items() if k % d == 0), Fraction(0)) for k in range(m + 1)]


def brute_force_q_sum(m: int, k: int) -> Fraction:
    # only d | gcd(k, m) contribute, so k > m folds back into the row
    return brute_force_q_row(m)[gcd(k, m) if k > m else k]


def brute_force_levels(n: int, D) -> dict[int, int]:
    """Vertex-level BFS distances from 0 in ICG(n, D); unreachable vertices are absent."""
    enforce_cap(n, SINGLE_QUERY_CAP)
    D = set(D)
    symbol = [x for x in range(1, n) if gcd(x, n) in D]
    dist = {0: 0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s in symbol:
            y = (x + s) % n
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist
