"""Zero-temperature theory: last-passage values, max-plus transforms, and the
exact bridge between the polymer and last-passage pictures.

Everything here is (max, +) over exact rationals; ties in the max are
meaningful, so no floats.  The inverse-temperature bridge replaces base e by
base 2 so that both sides stay rational: with weights 2^(beta * f) the
log-partition gap above the best path is (1/beta) log2 of an exact rational
S with 1 <= S <= (number of paths), and those two bounds are what is checked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import (
    DEFAULT_MAX_ORACLE,
    DomainProfile,
    EmptyPathSetError,
    Point,
    enumerate_multipaths,
    uparrow,
)
from .numerics import trop_max
from .results import CheckResult

ZERO = Fraction(0)


@dataclass(frozen=True)
class HeightField:
    """n real-valued functions f_i on [r_i, width] with f_i(r_i - 1) = 0."""

    profile: DomainProfile
    width: int
    tables: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.tables) != self.profile.n:
            raise ValueError("one table per level required")
        for i, table in enumerate(self.tables):
            expected = max(0, self.width - self.profile.start(i + 1) + 1)
            if len(table) != expected:
                raise ValueError(
                    f"level {i + 1} table must cover [{self.profile.start(i + 1)}, {self.width}]"
                )

    @property
    def n(self) -> int:
        return self.profile.n

    def value(self, level: int, x: int) -> Fraction:
        r = self.profile.start(level)
        if x == r - 1:
            return ZERO
        if not (r <= x <= self.width):
            raise ValueError(f"column {x} outside table of level {level}")
        return self.tables[level - 1][x - r]

    def increment(self, point: Point) -> Fraction:
        x, level = point
        return self.value(level, x) - self.value(level, x - 1)

    @classmethod
    def from_tables(
        cls, profile: DomainProfile, width: int, tables: Sequence[Sequence[Fraction | int]]
    ) -> "HeightField":
        return cls(
            profile, width, tuple(tuple(Fraction(v) for v in row) for row in tables)
        )

    @classmethod
    def random_integer(
        cls, n: int, width: int, rng: random.Random, spread: int = 9
    ) -> "HeightField":
        prof = DomainProfile.rectangular(n)
        tables = tuple(
            tuple(Fraction(rng.randint(-spread, spread)) for _ in range(width))
            for _ in range(n)
        )
        return cls(prof, width, tables)

    def is_integer_valued(self) -> bool:
        return all(v.denominator == 1 for row in self.tables for v in row)


@dataclass(frozen=True)
class HeightFunction:
    """Single-level view: values on [start, end], 0 at start - 1."""

    start: int
    values: tuple[Fraction, ...]

    @property
    def end(self) -> int:
        return self.start + len(self.values) - 1

    def __call__(self, x: int) -> Fraction:
        if x == self.start - 1:
            return ZERO
        if not (self.start <= x <= self.end):
            raise ValueError(f"column {x} outside [{self.start}, {self.end}]")
        return self.values[x - self.start]


def level_heights(f: HeightField, level: int) -> HeightFunction:
    return HeightFunction(f.profile.start(level), f.tables[level - 1])


# -- last passage values ------------------------------------------------------


def lpp_brute(
    f: HeightField,
    U: Sequence[Point],
    V: Sequence[Point],
    max_oracle: int = DEFAULT_MAX_ORACLE,
) -> Fraction:
    paths = enumerate_multipaths(f.profile, U, V, max_oracle=max_oracle)
    if not paths:
        raise EmptyPathSetError(f"no multipath from {tuple(U)} to {tuple(V)}")
    best: Fraction | None = None
    for multipath in paths:
        pts: set[Point] = set()
        for component in multipath:
            pts.update(component)
        energy = sum((f.increment(p) for p in pts), ZERO)
        best = trop_max(best, energy)
    assert best is not None
    return best


def lpp_dp(f: HeightField, U: Sequence[Point], V: Sequence[Point]) -> Fraction:
    """Max-plus dynamic program over anti-diagonal frontiers."""
    k = len(U)
    dom = f.profile
    for (u, lu), (v, lv) in zip(U, V):
        if v < u or lv > lu or not (dom.contains((u, lu)) and dom.contains((v, lv))):
            raise EmptyPathSetError(f"no multipath from {tuple(U)} to {tuple(V)}")
    if len(set(U)) < k or len(set(V)) < k:
        raise EmptyPathSetError("endpoints must be distinct")
    d_start = [u - lu for u, lu in U]
    d_end = [v - lv for v, lv in V]
    lo, hi = min(d_start), max(d_end)
    states: dict[tuple[int, ...], Fraction] = {(): ZERO}
    prev_active: list[int] = []
    for d in range(lo, hi + 1):
        cur_active = [i for i in range(k) if d_start[i] <= d <= d_end[i]]
        born = [i for i in cur_active if i not in prev_active]
        nxt: dict[tuple[int, ...], Fraction] = {}
        for state, value in states.items():
            lev_of = dict(zip(prev_active, state))
            options: list[list[int]] = []
            for i in cur_active:
                if i in born:
                    options.append([U[i][1]])
                else:
                    opts = [
                        lev
                        for lev in (lev_of[i], lev_of[i] - 1)
                        if lev >= 1 and dom.contains((d + lev, lev))
                    ]
                    options.append(opts)

            def expand(idx: int, chosen: list[int], gain: Fraction) -> None:
                if idx == len(options):
                    if len(set(chosen)) < len(chosen):
                        return
                    for pos, i in enumerate(cur_active):
                        if d_end[i] == d and chosen[pos] != V[i][1]:
                            return
                    key = tuple(chosen)
                    cand = value + gain
                    if key not in nxt or cand > nxt[key]:
                        nxt[key] = cand
                    return
                for lev in options[idx]:
                    chosen.append(lev)
                    expand(idx + 1, chosen, gain + f.increment((d + lev, lev)))
                    chosen.pop()

            expand(0, [], ZERO)
        survivors = [i for i in cur_active if d_end[i] > d]
        merged: dict[tuple[int, ...], Fraction] = {}
        for state, value in nxt.items():
            lev_of = dict(zip(cur_active, state))
            key = tuple(lev_of[i] for i in survivors)
            if key not in merged or value > merged[key]:
                merged[key] = value
        states = merged
        prev_active = survivors
        if not states:
            raise EmptyPathSetError(f"no multipath from {tuple(U)} to {tuple(V)}")
    return max(states.values())


def lpp_value(
    f: HeightField,
    U: Sequence[Point],
    V: Sequence[Point],
    method: str = "both",
    max_oracle: int = DEFAULT_MAX_ORACLE,
) -> Fraction:
    """Last passage value; "both" cross-checks brute force against the DP."""
    if method == "brute":
        return lpp_brute(f, U, V, max_oracle=max_oracle)
    if method == "dp":
        return lpp_dp(f, U, V)
    if method == "both":
        a = lpp_brute(f, U, V, max_oracle=max_oracle)
        b = lpp_dp(f, U, V)
        if a != b:
            raise AssertionError(f"brute force {a} != dynamic program {b}")
        return a
    raise ValueError(f"unknown method {method!r}")


# -- max-plus transforms ------------------------------------------------------


def trop_odot(g: HeightFunction, f: HeightFunction) -> HeightFunction:
    if g.start != f.start:
        raise ValueError("domain starts differ")
    r = f.start
    best: Fraction | None = None
    out = []
    for x in range(r, min(g.end, f.end) + 1):
        best = trop_max(best, g(x) - f(x - 1))
        out.append(f(x) + best)
    return HeightFunction(r, tuple(out))


def trop_otimes(f: HeightFunction, g: HeightFunction) -> HeightFunction:
    if g.start != f.start:
        raise ValueError("domain starts differ")
    r = f.start
    best: Fraction | None = None
    out = []
    for x in range(r, min(g.end, f.end) + 1):
        best = trop_max(best, g(x) - f(x - 1))
        if x >= r + 1:
            out.append(g(x) - best)
    return HeightFunction(r + 1, tuple(out))


def trop_tau(f: HeightFunction, g: HeightFunction) -> tuple[HeightFunction, HeightFunction]:
    return trop_odot(g, f), trop_otimes(f, g)


def trop_tau_rm(f: HeightField, r: int, m: int) -> HeightField:
    """Max-plus slot operator; identical profile bookkeeping to the positive case."""
    if not (1 <= m <= f.n - 1):
        raise ValueError(f"slot {m} out of range for n={f.n}")
    prof = f.profile
    if prof.start(m) != r or prof.start(m + 1) != r:
        raise ValueError(f"profile {prof.r} does not have r_{m} = r_{m + 1} = {r}")
    if m + 2 <= f.n and prof.start(m + 2) <= r:
        raise ValueError(f"profile {prof.r} would stop being weakly increasing")
    top, bottom = trop_tau(level_heights(f, m), level_heights(f, m + 1))
    tables = list(f.tables)
    tables[m - 1] = top.values
    tables[m] = bottom.values
    return HeightField(prof.with_bump(m), f.width, tuple(tables))


def s0_r(f: HeightField, r: int) -> HeightField:
    out = f
    for m in range(f.n - 1, r - 1, -1):
        out = trop_tau_rm(out, r, m)
    return out


def w0(f: HeightField) -> HeightField:
    if not f.profile.is_rectangular:
        raise ValueError("the cascade is defined on rectangular fields")
    if f.width < f.n:
        raise ValueError("truncation width must be at least the level count")
    out = f
    for r in range(1, f.n):
        out = s0_r(out, r)
    return out


def check_dzero(
    f: HeightField,
    U: Sequence[Point],
    V: Sequence[Point],
    max_oracle: int = DEFAULT_MAX_ORACLE,
) -> CheckResult:
    """Exact last-passage invariance under the max-plus cascade."""
    lhs = lpp_value(f, U, V, method="both", max_oracle=max_oracle)
    lifted = uparrow(U, f.n)
    rhs = lpp_value(w0(f), lifted, V, method="both", max_oracle=max_oracle)
    if lhs != rhs:
        return CheckResult(False, str(lhs), str(rhs), f"U={tuple(U)}, V={tuple(V)}")
    return CheckResult(True, str(lhs), str(rhs))


# -- inverse-temperature bridge ----------------------------------------------


@dataclass(frozen=True)
class BetaBridgeResult:
    path_count: int
    best_energy: Fraction
    excess: tuple[tuple[int, Fraction], ...]  # (beta, S) with gap = log2(S)/beta
    ok_lower: bool
    ok_upper: bool
    ok_monotone: bool

    @property
    def ok(self) -> bool:
        return self.ok_lower and self.ok_upper and self.ok_monotone


def beta_bridge(
    f: HeightField,
    U: Sequence[Point],
    V: Sequence[Point],
    betas: Sequence[int] = (1, 2, 4, 8),
    max_oracle: int = DEFAULT_MAX_ORACLE,
) -> BetaBridgeResult:
    """Exact bounds on the inverse-temperature gap in the base-2 convention.

    With D_i = 2^(beta f_i), the scaled log-partition value exceeds the last
    passage value by (1/beta) log2(S_beta) where S_beta sums 2^(beta * (E - E*))
    over paths.  The bracket 1 <= S_beta <= #paths and the monotonicity
    S_a^b >= S_b^a (a < b) are verified as exact rational comparisons.
    """
    if not f.is_integer_valued():
        raise ValueError("the bridge needs an integer-valued height field")
    if any(int(b) != b or b < 1 for b in betas):
        raise ValueError("betas must be positive integers")
    paths = enumerate_multipaths(f.profile, U, V, max_oracle=max_oracle)
    if not paths:
        raise EmptyPathSetError(f"no multipath from {tuple(U)} to {tuple(V)}")
    energies = []
    for multipath in paths:
        pts: set[Point] = set()
        for component in multipath:
            pts.update(component)
        energies.append(sum((f.increment(p) for p in pts), ZERO))
    best = max(energies)
    deltas = [int(e - best) for e in energies]
    excess = []
    for beta in betas:
        s = sum((Fraction(2) ** (beta * d) for d in deltas), ZERO)
        excess.append((int(beta), s))
    ok_lower = all(s >= 1 for _, s in excess)
    ok_upper = all(s <= len(paths) for _, s in excess)
    ok_monotone = True
    for (b1, s1), (b2, s2) in zip(excess, excess[1:]):
        if s1**b2 < s2**b1:
            ok_monotone = False
    return BetaBridgeResult(len(paths), best, tuple(excess), ok_lower, ok_upper, ok_monotone)


# -- tropicalized transfer matrices -------------------------------------------


def trop_h_matrix(
    E: HeightFunction, size: int
) -> tuple[tuple[Fraction | None, ...], ...]:
    """Max-plus transfer matrix: additive partial increments on the band."""
    r = E.start
    if size > E.end:
        raise ValueError(f"function covers columns up to {E.end}, need {size}")
    rows = []
    for i in range(1, size + 1):
        row: list[Fraction | None] = []
        for j in range(1, size + 1):
            if i == j and i < r:
                row.append(ZERO)
            elif r <= i <= j:
                row.append(E(j) - E(i - 1))
            else:
                row.append(None)
        rows.append(tuple(row))
    return tuple(rows)


def trop_mat_mul(a, b):
    size = len(a)
    out = []
    for i in range(size):
        row: list[Fraction | None] = []
        for j in range(size):
            best: Fraction | None = None
            for t in range(size):
                if a[i][t] is None or b[t][j] is None:
                    continue
                best = trop_max(best, a[i][t] + b[t][j])
            row.append(best)
        out.append(tuple(row))
    return tuple(out)


def trop_chain(f: HeightField, size: int | None = None):
    """Product of the per-level max-plus matrices, bottom level first."""
    size = f.width if size is None else size
    prod = None
    for level in range(f.n, 0, -1):
        h = trop_h_matrix(level_heights(f, level), size)
        prod = h if prod is None else trop_mat_mul(prod, h)
    assert prod is not None
    return prod
