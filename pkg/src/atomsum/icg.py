"""Integral circulant graphs ICG(n, D) = Cay(Z_n, S(D)).

The symbol S(D) is the union of the atoms whose leaders lie in D.  Breadth-first
search from vertex 0 can then be done one atom at a time. Each level is a union
of atoms, and the next level comes from decomposing the pairwise atom sumsets.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable

from .atoms import atom_of_leader, format_leader, leader_of
from .decompose import sumset_decompose
from .errors import InvalidArgument, ResourceLimit, size_cap
from .numtheory import divisors, euler_phi
from .repcount import rep_count

EXPORT_CAP = 10**4
EXPORT_FORMATS = ("edges", "dot", "json")


@dataclass(frozen=True)
class ICGraph:
    n: int
    divisors: tuple[int, ...]

    @cached_property
    def symbol(self) -> tuple[int, ...]:
        return tuple(sorted(x for d in self.divisors for x in atom_of_leader(self.n, d)))

    @property
    def degree(self) -> int:
        return sum(euler_phi(self.n // d) for d in self.divisors)

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise InvalidArgument(f"vertex out of range: {x} is not in [0, {self.n})")

    def adjacent(self, x: int, y: int) -> bool:
        self._check_vertex(x)
        self._check_vertex(y)
        return leader_of(self.n, x - y) in self.divisors

    def neighbours(self, x: int) -> list[int]:
        self._check_vertex(x)
        return sorted((x + s) % self.n for s in self.symbol)


def build(n: int, D: Iterable[int]) -> ICGraph:
    D = list(D)
    if not D:
        raise InvalidArgument("divisor set D must be nonempty")
    if len(set(D)) != len(D):
        raise InvalidArgument(f"duplicate divisors in D: {sorted(D)}")
    for d in D:
        if isinstance(d, bool) or not isinstance(d, int) or d < 1 or n % d:
            raise InvalidArgument(f"{d} is not a divisor of {n}")
        if d == n:
            raise InvalidArgument(f"{n} cannot be in D: the zero atom would create loops")
    return ICGraph(n, tuple(sorted(D)))


def adjacency(g: ICGraph, x: int, y: int) -> bool:
    return g.adjacent(x, y)


@dataclass(frozen=True)
class Level:
    """One BFS level from vertex 0, described by atoms.

    ``leaders`` are the atoms first reached at this level.  ``multiplicities``
    counts, for every atom hit while expanding the previous level, how many of
    the distinct atom sums atom(u) + atom(s) (u in the previous level, s in D)
    contain it.  Atoms rediscovered from earlier levels show up here too.
    ``representations`` counts edges arriving at one vertex of the atom from
    the previous level.
    """

    k: int
    leaders: tuple[int, ...]
    multiplicities: dict[int, int] = field(default_factory=dict)
    representations: dict[int, int] = field(default_factory=dict)

    @property
    def rediscovered(self) -> tuple[int, ...]:
        return tuple(d for d in self.multiplicities if d not in self.leaders)


@dataclass(frozen=True)
class LevelReport:
    n: int
    divisors: tuple[int, ...]
    levels: tuple[Level, ...]
    unreachable: tuple[int, ...]

    @property
    def diameter(self) -> int | None:
        """Eccentricity of vertex 0 (the diameter); None if the graph is disconnected."""
        return None if self.unreachable else len(self.levels) - 1

    def level_of(self) -> dict[int, int]:
        """Map leader -> level index for every reached atom."""
        return {d: lv.k for lv in self.levels for d in lv.leaders}

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "D": list(self.divisors),
            "levels": [
                {
                    "k": lv.k,
                    "leaders": list(lv.leaders),
                    "multiplicities": {str(d): c for d, c in sorted(lv.multiplicities.items())},
                    "representations": {str(d): c for d, c in sorted(lv.representations.items())},
                }
                for lv in self.levels
            ],
            "unreachable": list(self.unreachable),
        }


def distance_levels(g: ICGraph) -> LevelReport:
    n = g.n
    levels = [Level(0, (n,), {n: 1}, {n: 1})]
    seen = {n}
    frontier = [n]
    while frontier:
        hits: Counter[int] = Counter()
        for pair in {tuple(sorted((u, s))) for u in frontier for s in g.divisors}:
            hits.update(sumset_decompose(n, *pair).leaders)
        new = tuple(sorted(d for d in hits if d not in seen))
        if not new:
            break
        reps = {
            d: sum(rep_count(n, u, s, d % n).count for u in frontier for s in g.divisors)
            for d in sorted(hits)
        }
        levels.append(Level(len(levels), new, dict(sorted(hits.items())), reps))
        seen.update(new)
        frontier = list(new)
    unreachable = tuple(d for d in divisors(n) if d not in seen)
    return LevelReport(n, g.divisors, tuple(levels), unreachable)


def _levels_upto(g: ICGraph, r: int) -> tuple[LevelReport, list[int], list[int]]:
    if r < 1:
        raise InvalidArgument(f"r must be positive, got {r}")
    report = distance_levels(g)
    cumulative = sorted(d for lv in report.levels[1 : r + 1] for d in lv.leaders if d != g.n)
    exact = list(report.levels[r].leaders) if r < len(report.levels) else []
    return report, cumulative, exact


def distance_power(g: ICGraph, r: int) -> ICGraph:
    """Join vertices whose distance in ``g`` lies in 1..r."""
    _, cumulative, _ = _levels_upto(g, r)
    return ICGraph(g.n, tuple(cumulative))


def distance_level_graph(g: ICGraph, r: int) -> ICGraph | None:
    """Join vertices at distance exactly r; None when no vertex is that far."""
    _, _, exact = _levels_upto(g, r)
    return ICGraph(g.n, tuple(exact)) if exact else None


def power_divisor_sets(g: ICGraph, r: int) -> tuple[list[int], list[int]]:
    """(cumulative, level-exact) divisor sets for the r-th distance power."""
    _, cumulative, exact = _levels_upto(g, r)
    return cumulative, exact


def edges(g: ICGraph) -> list[tuple[int, int]]:
    out = []
    for u in range(g.n):
        for s in g.symbol:
            v = (u + s) % g.n
            if u < v:
                out.append((u, v))
    out.sort()
    return out


def export(g: ICGraph, fmt: str) -> bytes:
    if fmt not in EXPORT_FORMATS:
        raise InvalidArgument(f"unknown export format {fmt!r}; choose from {', '.join(EXPORT_FORMATS)}")
    if fmt == "json":
        summary = {"n": g.n, "D": list(g.divisors), "degree": g.degree}
        return (json.dumps(summary) + "\n").encode("ascii")
    cap = size_cap(EXPORT_CAP)
    if g.n > cap:
        raise ResourceLimit(f"n = {g.n} exceeds the edge-export cap {cap}")
    if fmt == "edges":
        return "".join(f"{u} {v}\n" for u, v in edges(g)).encode("ascii")
    lines = [f"graph ICG_{g.n} {{"]
    lines += [f"  {x};" for x in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in edges(g)]
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("ascii")


def render_levels(report: LevelReport) -> str:
    n = report.n
    out = []
    for lv in report.levels:
        line = f"level {lv.k}: " + " ".join(format_leader(n, d) for d in lv.leaders)
        if lv.k > 0:
            mult = " ".join(f"{format_leader(n, d)}x{c}" for d, c in lv.multiplicities.items())
            line += f" | multiplicities: {mult}"
        out.append(line)
    if report.unreachable:
        out.append("unreachable: " + " ".join(str(d) for d in report.unreachable))
    return "\n".join(out)


def connected(g: ICGraph) -> bool:
    """ICG(n, D) is connected iff the gcd of n and all leaders in D is 1."""
    acc = g.n
    for d in g.divisors:
        acc = gcd(acc, d)
    return acc == 1
