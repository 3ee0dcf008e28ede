"""Exact integer arithmetic: factorization, divisors and multiplicative functions.

Every function taking an integer argument also accepts a :class:`FactoredInt`,
so callers that already hold a factorization do not pay for it twice.

Convention for zero: ``gcd(0, n) == n`` and every prime divides ``0``.  This lets
``k = 0`` flow through :func:`phi_star` and :func:`q_sum` without special cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from typing import Union

from .errors import INT64_MAX, InvalidArgument, PreconditionViolation, check_int64, check_int128


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer together with its prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise InvalidArgument(f"FactoredInt value must be >= 1, got {self.value}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise InvalidArgument("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise InvalidArgument("exponents must be >= 1")
        if prod(p**e for p, e in self.factors) != self.value:
            raise InvalidArgument(f"factorization does not multiply to {self.value}")

    def __int__(self) -> int:
        return self.value

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


IntLike = Union[int, FactoredInt]


def _trial_division(n: int) -> tuple[tuple[int, int], ...]:
    factors = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    # 6k +- 1 wheel
    p, step = 5, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


@lru_cache(maxsize=65536)
def _factorize(n: int) -> FactoredInt:
    return FactoredInt(n, _trial_division(n))


def factorize(n: IntLike) -> FactoredInt:
    """Factor ``1 <= n <= 2**63 - 1`` by trial division."""
    if isinstance(n, FactoredInt):
        return n
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidArgument(f"expected an integer, got {n!r}")
    if n < 1:
        raise InvalidArgument(f"cannot factor {n}: argument must be a positive integer")
    if n > INT64_MAX:
        raise InvalidArgument(f"cannot factor {n}: exceeds 2**63 - 1")
    return _factorize(n)


def divisors(n: IntLike) -> list[int]:
    f = factorize(n)
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n: IntLike) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(n: IntLike) -> int:
    f = factorize(n)
    result = f.value
    for p, _ in f.factors:
        result = result // p * (p - 1)
    return result


def radical(n: IntLike) -> int:
    return prod(factorize(n).primes)


def is_squarefree(n: IntLike) -> bool:
    return all(e == 1 for _, e in factorize(n).factors)


def phi_star(m: IntLike, k: int) -> int:
    """Modified totient: m * prod_{p|m, p|k} (1 - 1/p) * prod_{p|m, p∤k} (1 - 2/p).

    Zero exactly when m is even and k is odd.  ``k = 0`` is divisible by every
    prime, so ``phi_star(m, 0) == euler_phi(m)``.
    """
    if k < 0:
        raise InvalidArgument(f"k must be non-negative, got {k}")
    f = factorize(m)
    result = f.value
    for p in f.primes:
        result = result // p * (p - 1 if k % p == 0 else p - 2)
    return result


def f_count(d: int, r: int, n: IntLike) -> int:
    """Number of 1 <= y <= n with gcd(d*y + r, n) == 1, for coprime r and d."""
    if d < 1 or r < 1:
        raise InvalidArgument(f"d and r must be positive, got d={d}, r={r}")
    if gcd(r, d) != 1:
        raise PreconditionViolation(f"f_count requires gcd(r, d) = 1, got gcd({r}, {d}) = {gcd(r, d)}")
    f = factorize(n)
    result = f.value
    for p in f.primes:
        if d % p:
            result = result // p * (p - 1)
    return result


def t_sum(m: IntLike, k: int) -> Fraction:
    """Closed form of sum_{d|m} sum_{e|m, gcd(d,e)=k} mu(d)/d * mu(e)/e."""
    if k < 1:
        raise InvalidArgument(f"k must be positive, got {k}")
    f = factorize(m)
    if f.value % k or not is_squarefree(k):
        return Fraction(0)
    num, den = 1, check_int128(k * k, "k^2")
    for p in f.primes:
        if k % p:
            num *= p - 2
            den = check_int128(den * p, "t_sum denominator")
    return Fraction(num, den)


def mobius_lcm_identity_check(m: IntLike, k: int) -> int:
    """Sum of mu(d)/d * mu(e)/e over divisor pairs of m with lcm(d, e) = k, each
    term multiplied by d*e to clear its denominator.

    The cleared sum is sum mu(d) * mu(e), which always equals mu(k).  Without
    clearing the sum is not mu(k) (see :func:`lcm_weighted_sum`).
    """
    f = factorize(m)
    if k < 1 or f.value % k:
        raise PreconditionViolation(f"mobius_lcm_identity_check requires k | m, got k={k}, m={f.value}")
    divs = divisors(f)
    total = 0
    for d in divs:
        for e in divs:
            if d * e // gcd(d, e) == k:
                total += Fraction(mobius(d), d) * Fraction(mobius(e), e) * (d * e)
    return check_int64(int(total))


def lcm_weighted_sum(m: IntLike, k: int) -> Fraction:
    """Closed form of sum_{d|m} sum_{e|m, lcm(d,e)=k} mu(d)/d * mu(e)/e.

    Zero unless k | m and k is squarefree, else prod_{p|k} (1 - 2p) / k^2.
    """
    if k < 1:
        raise InvalidArgument(f"k must be positive, got {k}")
    f = factorize(m)
    if f.value % k or not is_squarefree(k):
        return Fraction(0)
    return Fraction(prod(1 - 2 * p for p in factorize(k).primes), check_int128(k * k, "k^2"))


def q_sum(m: IntLike, k: int) -> Fraction:
    """phi_star(m, k) / m as an exact rational."""
    f = factorize(m)
    return Fraction(phi_star(f, k), f.value)
