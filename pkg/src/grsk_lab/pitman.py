"""Pair transforms on positive staircase functions and the full cascade.

The pair operator sends (f, g) on columns >= r to (g (.) f, f (x) g), where

    (g (.) f)(x) = f(x) * sum_{m=r}^{x} g(m) / f(m-1)
    (f (x) g)(x) = g(x) / sum_{m=r}^{x} g(m) / f(m-1)      (x >= r + 1)

with the convention f(r-1) = 1.  The second output lives on a domain shifted
right by one, so applying the slot operator to a field moves its staircase
profile; every operator checks the profile explicitly because the whole
bookkeeping of the theory hinges on those shifting domains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import DomainProfile
from .numerics import pos_rational
from .partition import WeightField

ONE = Fraction(1)


class DomainMismatchError(ValueError):
    """Operands or field profile do not match the operator's precondition."""


@dataclass(frozen=True)
class StairFunction:
    """Positive function on integer columns [start, end], f(start - 1) = 1."""

    start: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for q in self.values:
            pos_rational(q)

    @property
    def end(self) -> int:
        return self.start + len(self.values) - 1

    def __call__(self, x: int) -> Fraction:
        if x == self.start - 1:
            return ONE
        if not (self.start <= x <= self.end):
            raise ValueError(f"column {x} outside [{self.start}, {self.end}]")
        return self.values[x - self.start]

    def ratio(self, x: int) -> Fraction:
        """The multiplicative increment f(x) / f(x-1)."""
        return self(x) / self(x - 1)


def _partial_sums(g: StairFunction, f: StairFunction) -> list[Fraction]:
    """sum_{m=r}^{x} g(m)/f(m-1) for x = r .. end."""
    if g.start != f.start:
        raise DomainMismatchError(
            f"domain starts differ: g at {g.start}, f at {f.start}"
        )
    acc = Fraction(0)
    out = []
    for x in range(g.start, min(g.end, f.end) + 1):
        acc += g(x) / f(x - 1)
        out.append(acc)
    return out


def odot(g: StairFunction, f: StairFunction) -> StairFunction:
    """(g (.) f) on [r, end]."""
    sums = _partial_sums(g, f)
    r = f.start
    return StairFunction(r, tuple(f(r + i) * s for i, s in enumerate(sums)))


def otimes(f: StairFunction, g: StairFunction) -> StairFunction:
    """(f (x) g) on [r + 1, end]: the domain start shifts right by one."""
    sums = _partial_sums(g, f)
    r = f.start
    return StairFunction(r + 1, tuple(g(r + 1 + i) / s for i, s in enumerate(sums[1:])))


def tau(f: StairFunction, g: StairFunction) -> tuple[StairFunction, StairFunction]:
    """The pair operator (f, g) -> (g (.) f, f (x) g)."""
    return odot(g, f), otimes(f, g)


def level_function(D: WeightField, level: int) -> StairFunction:
    return StairFunction(D.profile.start(level), D.tables[level - 1])


def _with_slots(
    D: WeightField, m: int, first: StairFunction, second: StairFunction
) -> WeightField:
    tables = list(D.tables)
    tables[m - 1] = first.values
    tables[m] = second.values
    return WeightField(D.profile.with_bump(m), D.width, tuple(tables))


def tau_rm(D: WeightField, r: int, m: int) -> WeightField:
    """Apply the pair operator in slots (m, m+1) of the field.

    Requires r_m = r_{m+1} = r, and r_{m+2} > r so the output profile stays
    weakly increasing.  The output has r_{m+1} = r + 1.
    """
    if not (1 <= m <= D.n - 1):
        raise DomainMismatchError(f"slot {m} out of range for n={D.n}")
    prof = D.profile
    if prof.start(m) != r or prof.start(m + 1) != r:
        raise DomainMismatchError(
            f"profile {prof.r} does not have r_{m} = r_{m + 1} = {r}"
        )
    if m + 2 <= D.n and prof.start(m + 2) <= r:
        raise DomainMismatchError(
            f"profile {prof.r} would stop being weakly increasing at slot {m + 1}"
        )
    f = level_function(D, m)
    g = level_function(D, m + 1)
    top, bottom = tau(f, g)
    return _with_slots(D, m, top, bottom)


def s_r(D: WeightField, r: int) -> WeightField:
    """One sweep: slots n-1 down to r, all at boundary column r."""
    out = D
    for m in range(D.n - 1, r - 1, -1):
        out = tau_rm(out, r, m)
    return out


def w(D: WeightField) -> WeightField:
    """The full cascade on a rectangular field; final profile is r_i = i."""
    if not D.is_rectangular:
        raise DomainMismatchError("the cascade is defined on rectangular fields")
    if D.width < D.n:
        raise DomainMismatchError("truncation width must be at least the level count")
    out = D
    for r in range(1, D.n):
        out = s_r(out, r)
    assert out.profile == DomainProfile(D.n, tuple(range(1, D.n + 1)))
    return out
