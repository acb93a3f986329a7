"""Weight fields on staircase domains and their multipath partition functions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import (
    DEFAULT_MAX_ORACLE,
    DomainProfile,
    EmptyPathSetError,
    Point,
    enumerate_multipaths,
    is_endpoint_pair,
)
from .numerics import pos_rational

ONE = Fraction(1)


@dataclass(frozen=True)
class WeightField:
    """An n-tuple of positive functions D_i on columns [r_i, width].

    The boundary convention D_i(r_i - 1) = 1 is applied implicitly, never
    stored.  Vertex weights are the ratios d(x, m) = D_m(x) / D_m(x - 1).
    """

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
            for q in table:
                pos_rational(q)

    @property
    def n(self) -> int:
        return self.profile.n

    @property
    def is_rectangular(self) -> bool:
        return self.profile.is_rectangular

    def value(self, level: int, x: int) -> Fraction:
        """D_level(x), honoring the implicit boundary value at r - 1."""
        r = self.profile.start(level)
        if x == r - 1:
            return ONE
        if not (r <= x <= self.width):
            raise ValueError(f"column {x} outside table of level {level}")
        return self.tables[level - 1][x - r]

    def vertex_weight(self, point: Point) -> Fraction:
        x, level = point
        return self.value(level, x) / self.value(level, x - 1)

    @classmethod
    def from_tables(
        cls, profile: DomainProfile, width: int, tables: Sequence[Sequence[Fraction | int | str]]
    ) -> "WeightField":
        return cls(
            profile,
            width,
            tuple(tuple(pos_rational(q) for q in table) for table in tables),
        )

    @classmethod
    def all_ones(cls, n: int, width: int) -> "WeightField":
        prof = DomainProfile.rectangular(n)
        return cls(prof, width, tuple((ONE,) * width for _ in range(n)))

    @classmethod
    def random(
        cls, n: int, width: int, rng: random.Random, max_int: int = 20
    ) -> "WeightField":
        """Rectangular field with numerators/denominators uniform in [1, max_int]."""
        prof = DomainProfile.rectangular(n)
        tables = tuple(
            tuple(
                Fraction(rng.randint(1, max_int), rng.randint(1, max_int))
                for _ in range(width)
            )
            for _ in range(n)
        )
        return cls(prof, width, tables)


def set_weight(D: WeightField, S: Iterable[Point]) -> Fraction:
    """Product of vertex weights over a point set; empty set gives 1."""
    total = ONE
    for p in S:
        if not D.profile.contains(p):
            raise ValueError(f"point {p} outside the domain of the field")
        total *= D.vertex_weight(p)
    return total


def path_weight(D: WeightField, pi: Sequence[Sequence[Point]]) -> Fraction:
    """Weight of a multipath: product over the union of its points."""
    pts: set[Point] = set()
    for component in pi:
        pts.update(component)
    return set_weight(D, pts)


def _on_bottom_boundary(D: WeightField, p: Point) -> bool:
    x, lev = p
    if not D.profile.contains(p):
        return False
    if lev == D.n:
        return True
    return x < D.profile.start(lev + 1)


def partition_function(
    D: WeightField,
    U: Sequence[Point],
    V: Sequence[Point],
    method: str = "auto",
    max_oracle: int = DEFAULT_MAX_ORACLE,
) -> Fraction:
    """Sum of multipath weights from U to V.

    method "brute" enumerates multipaths, "lgv" takes a minor determinant of
    the transfer-matrix chain, "auto" prefers the determinant route when the
    endpoints sit on the bottom boundary / top level.  Raises
    EmptyPathSetError when (U, V) is not an endpoint pair.
    """
    for p in list(U) + list(V):
        if p[0] > D.width:
            raise ValueError(f"endpoint {p} beyond truncation width {D.width}")
    if method not in ("auto", "brute", "lgv"):
        raise ValueError(f"unknown method {method!r}")
    lgv_ok = (
        all(_on_bottom_boundary(D, p) for p in U)
        and all(lev == 1 for _, lev in V)
        and all(a[0] < b[0] for a, b in zip(U, U[1:]))
        and all(a[0] < b[0] for a, b in zip(V, V[1:]))
    )
    if method == "lgv" or (method == "auto" and lgv_ok):
        if not lgv_ok:
            raise ValueError("determinant route needs boundary-to-top endpoint lists")
        from . import lgv

        value = lgv.boundary_partition_function(D, U, V)
        if value == 0:
            raise EmptyPathSetError(f"no multipath from {tuple(U)} to {tuple(V)}")
        return value
    paths = enumerate_multipaths(D.profile, U, V, max_oracle=max_oracle)
    if not paths:
        raise EmptyPathSetError(f"no multipath from {tuple(U)} to {tuple(V)}")
    return sum((path_weight(D, pi) for pi in paths), Fraction(0))


def partition_half_open(
    D: WeightField,
    U: Sequence[Point],
    V: Sequence[Point],
    side: str,
    method: str = "auto",
    max_oracle: int = DEFAULT_MAX_ORACLE,
) -> Fraction:
    """Half-open partition functions: closed value divided by D[U] or D[V]."""
    closed = partition_function(D, U, V, method=method, max_oracle=max_oracle)
    if side == "left":
        return closed / set_weight(D, U)
    if side == "right":
        return closed / set_weight(D, V)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


__all__ = [
    "WeightField",
    "set_weight",
    "path_weight",
    "partition_function",
    "partition_half_open",
    "EmptyPathSetError",
    "is_endpoint_pair",
]
