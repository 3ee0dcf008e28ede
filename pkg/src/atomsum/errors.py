"""Exception types and size caps shared across the package."""

from __future__ import annotations

import os

INT64_MAX = 2**63 - 1
INT128_MAX = 2**127 - 1

ENV_MAX_N = "ATOMSUM_MAX_N"


class AtomsumError(ValueError):
    """Base class for argument errors raised by this package."""


class InvalidArgument(AtomsumError):
    pass


class PreconditionViolation(AtomsumError):
    pass


class ResourceLimit(AtomsumError):
    pass


def check_int64(value: int, what: str = "value") -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"{what} = {value} does not fit in a signed 64-bit integer")
    return value


def check_int128(value: int, what: str = "value") -> int:
    if not -INT128_MAX - 1 <= value <= INT128_MAX:
        raise OverflowError(f"{what} exceeds the 128-bit intermediate range")
    return value


def size_cap(default: int) -> int:
    """Return ``default`` lowered by ``$ATOMSUM_MAX_N`` if that is set and smaller.

    The environment variable can only tighten a cap, never raise it.
    """
    raw = os.environ.get(ENV_MAX_N)
    if not raw:
        return default
    try:
        env = int(raw)
    except ValueError:
        raise InvalidArgument(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
    if env < 1:
        raise InvalidArgument(f"{ENV_MAX_N} must be positive, got {env}")
    return min(default, env)


def enforce_cap(n: int, default: int, what: str = "n") -> None:
    cap = size_cap(default)
    if n > cap:
        raise ResourceLimit(f"{what} = {n} exceeds the size cap {cap}")
