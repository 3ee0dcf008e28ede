"""Exhaustive and sampled sweeps comparing the closed forms with the oracle."""

from __future__ import annotations

import random
from fractions import Fraction
from dataclasses import dataclass, field
from math import gcd

from . import oracle
from .atoms import classify, leader_of
from .decompose import locate_sum, sumset_decompose
from .icg import build, distance_levels
from .numtheory import (
    divisors,
    f_count,
    lcm_weighted_sum,
    mobius,
    mobius_lcm_identity_check,
    phi_star,
    q_sum,
    t_sum,
)
from .repcount import in_sumset, rep_count

MODES = ("count", "sumset", "levels", "lemmas")
MODE_LIMITS = {"count": 150, "sumset": 150, "levels": 120, "lemmas": 500}
MAX_REPORTED = 20


@dataclass
class SweepResult:
    mode: str
    n_max: int
    checked: int = 0
    mismatches: int = 0
    examples: list[str] = field(default_factory=list)

    def record(self, ok: bool, what) -> None:
        self.checked += 1
        if not ok:
            self.mismatches += 1
            if len(self.examples) < MAX_REPORTED:
                self.examples.append(what() if callable(what) else str(what))

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def summary(self) -> str:
        return f"{self.mode}: checked {self.checked} queries up to n={self.n_max}, {self.mismatches} mismatches"


def sweep_count(n_max: int) -> SweepResult:
    """rep_count vs brute force, membership agreement and constancy on atoms."""
    res = SweepResult("count", n_max)
    for n in range(1, n_max + 1):
        divs = divisors(n)
        for a in divs:
            for b in divs:
                brute = oracle.brute_force_counts(n, a, b)
                per_atom: dict[int, int] = {}
                for c in range(n):
                    cnt = rep_count(n, a, b, c).count
                    res.record(cnt == brute[c], lambda: f"rep_count({n},{a},{b},{c})={cnt} brute={brute[c]}")
                    res.record(in_sumset(n, a, b, c) == (cnt > 0), lambda: f"in_sumset({n},{a},{b},{c})")
                    first = per_atom.setdefault(leader_of(n, c), cnt)
                    res.record(first == cnt, lambda: f"count not constant on atom of {c} for ({n},{a},{b})")
    return res


def sweep_sumset(n_max: int) -> SweepResult:
    """Decomposition vs brute-force sumset, plus locate_sum and odd-n surjectivity."""
    res = SweepResult("sumset", n_max)
    for n in range(1, n_max + 1):
        divs = divisors(n)
        for a in divs:
            for b in divs:
                dec = sumset_decompose(n, a, b)
                brute = oracle.brute_force_sumset(n, a, b)
                res.record(classify(n, brute) == list(dec.leaders),
                           lambda: f"sumset({n},{a},{b}) leaders={dec.leaders} brute={classify(n, brute)}")
                members = set(brute)
                for c in range(n):
                    loc = locate_sum(n, a, b, c)
                    expect = leader_of(n, c) if c in members else None
                    res.record(loc == expect, lambda: f"locate_sum({n},{a},{b},{c})={loc} expected {expect}")
        if n % 2:
            res.record(list(sumset_decompose(n, 1, 1).leaders) == divs, lambda: f"odd surjectivity n={n}")
    return res


def sample_divisor_sets(n: int, rng: random.Random, samples: int) -> list[tuple[int, ...]]:
    proper = [d for d in divisors(n) if d < n]
    if len(proper) <= 4:
        out = []
        for mask in range(1, 1 << len(proper)):
            out.append(tuple(d for i, d in enumerate(proper) if mask >> i & 1))
        return out
    out = {(d,) for d in proper}
    while len(out) < len(proper) + samples:
        k = rng.randint(1, len(proper))
        out.add(tuple(sorted(rng.sample(proper, k))))
    return sorted(out)


def sweep_levels(n_max: int, samples: int = 4, seed: int = 0) -> SweepResult:
    """Atom-level BFS vs vertex-level BFS on every n <= n_max and sampled D."""
    res = SweepResult("levels", n_max)
    rng = random.Random(seed)
    for n in range(2, n_max + 1):
        for D in sample_divisor_sets(n, rng, samples):
            report = distance_levels(build(n, D))
            dist = oracle.brute_force_levels(n, D)
            by_leader = report.level_of()
            for x in range(n):
                got = by_leader.get(leader_of(n, x))
                res.record(got == dist.get(x), lambda: f"ICG({n},{D}) vertex {x}: atoms={got} bfs={dist.get(x)}")
            unreachable = sorted({leader_of(n, x) for x in range(n) if x not in dist})
            res.record(list(report.unreachable) == unreachable, lambda: f"ICG({n},{D}) unreachable sets differ")
    return res


def sweep_lemmas(n_max: int) -> SweepResult:
    """phi_star, f, T, Q and the Moebius lcm identity against enumeration.

    Every k in 0..m is checked for each m <= n_max; f_count uses d, r <= 20.
    """
    res = SweepResult("lemmas", n_max)
    for m in range(1, n_max + 1):
        phi_row = oracle.brute_force_phi_star_row(m)
        q_row = oracle.brute_force_q_row(m)
        t_sums = oracle.brute_force_t_sums(m)
        lcm_sums = oracle.brute_force_lcm_sums(m)
        lcm_cleared = oracle.brute_force_lcm_cleared_sums(m)
        for k in range(0, m + 1):
            ps = phi_star(m, k)
            res.record(ps == phi_row[k], lambda: f"phi_star({m},{k})={ps} literal={phi_row[k]}")
            q = q_sum(m, k)
            res.record(q == q_row[k] == Fraction(ps, m), lambda: f"q_sum({m},{k})={q} defining sum={q_row[k]}")
            if k >= 1:
                t = t_sum(m, k)
                res.record(t == t_sums.get(k, 0), lambda: f"t_sum({m},{k})={t} double sum={t_sums.get(k, 0)}")
        for k in divisors(m):
            lhs = mobius_lcm_identity_check(m, k)
            res.record(lhs == mobius(k) == lcm_cleared.get(k, 0), lambda: f"lcm identity ({m},{k}) gave {lhs}")
            w = lcm_weighted_sum(m, k)
            res.record(w == lcm_sums.get(k, 0), lambda: f"lcm weighted sum ({m},{k})={w}")
        for d in range(1, 21):
            for r in range(1, 21):
                if gcd(r, d) == 1:
                    f = f_count(d, r, m)
                    res.record(f == oracle.brute_force_f_count(d, r, m) and f >= 1, lambda: f"f_count({d},{r},{m})={f}")
    return res


def run(mode: str, n_max: int, **kwargs) -> SweepResult:
    if mode not in MODES:
        raise ValueError(f"unknown verify mode {mode!r}")
    return {"count": sweep_count, "sumset": sweep_sumset, "levels": sweep_levels, "lemmas": sweep_lemmas}[mode](
        n_max, **kwargs
    )
