"""Geometric row insertion, P/Q tableaux, the Z^2 path formula, H-matrices.

Row insertion of a word b into a word xi (both indexed from some start
column l up to N) produces (xi', b') with

    xi'_l = b_l xi_l
    xi'_k = b_k (xi'_{k-1} + xi_k)                 l+1 <= k <= N
    b'_k  = b_k xi_k xi'_{k-1} / (xi_{k-1} xi'_k)  l+1 <= k <= N

Insertion into an initially empty word (the tagged seed; never stored as
literal zeros) just takes cumulative products of b and emits nothing below.
Cascading the rows of a positive matrix through these boxes builds the
triangular/trapezoidal output array; its entries are ratios of
non-intersecting Z^2 lattice-path sums, which is the independent route
implemented by ``tau_kl`` / ``z_from_tau``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import DomainProfile, enumerate_multipaths
from .numerics import pos_rational
from .partition import WeightField
from .pitman import StairFunction, odot, otimes, w
from .results import CheckResult

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass(frozen=True)
class Word:
    """Positive entries indexed start..start+len-1."""

    start: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for q in self.entries:
            pos_rational(q)

    @property
    def end(self) -> int:
        return self.start + len(self.entries) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.entries[k - self.start]

    @classmethod
    def from_values(cls, start: int, values: Sequence[Fraction | int | str]) -> "Word":
        return cls(start, tuple(pos_rational(v) for v in values))


def row_insert(xi: Word | None, b: Word) -> tuple[Word, Word | None]:
    """Insert b into xi; ``xi=None`` is the empty-word seed (no b' output).

    For a seed the output word is the cumulative products of b.  For l = N
    (single-entry words) b' comes back empty.
    """
    if xi is None:
        acc = ONE
        out = []
        for q in b.entries:
            acc *= q
            out.append(acc)
        return Word(b.start, tuple(out)), None
    if xi.start != b.start or len(xi.entries) != len(b.entries):
        raise ValueError("words must share start index and length")
    l = xi.start
    xi_new = [b[l] * xi[l]]
    b_new: list[Fraction] = []
    for k in range(l + 1, xi.end + 1):
        xi_new.append(b[k] * (xi_new[-1] + xi[k]))
        b_new.append(b[k] * xi[k] * xi_new[-2] / (xi[k - 1] * xi_new[-1]))
    return Word(l, tuple(xi_new)), Word(l + 1, tuple(b_new))


@dataclass(frozen=True)
class GrskTableau:
    """Output array z with entries z_{k,l} for 1 <= l <= k <= N, l <= n ^ N."""

    big_n: int
    nrows: int
    entries: tuple[tuple[Fraction, ...], ...]  # entries[l-1] = diagonal l

    @property
    def depth(self) -> int:
        return min(self.big_n, self.nrows)

    def entry(self, k: int, l: int) -> Fraction:
        if not (1 <= l <= min(k, self.depth) and k <= self.big_n):
            raise IndexError(f"no entry ({k}, {l}) in this array")
        return self.entries[l - 1][k - l]

    def diagonal(self, l: int) -> tuple[Fraction, ...]:
        return self.entries[l - 1]

    def shape(self) -> tuple[Fraction, ...]:
        return tuple(self.entry(self.big_n, l) for l in range(1, self.depth + 1))


def _cascade(diagonals: list[Word], row: Word, big_n: int) -> None:
    b: Word | None = row
    for idx in range(len(diagonals)):
        assert b is not None
        diagonals[idx], b = row_insert(diagonals[idx], b)
    if b is not None and b.entries and len(diagonals) < big_n:
        seeded, _ = row_insert(None, b)
        diagonals.append(seeded)


def _check_rows(rows: Sequence[Sequence[Fraction | int | str]]) -> list[Word]:
    if not rows:
        raise ValueError("need at least one row")
    big_n = len(rows[0])
    out = []
    for row in rows:
        if len(row) != big_n:
            raise ValueError("all rows must have the same length")
        out.append(Word.from_values(1, row))
    return out


def p_tableau(rows: Sequence[Sequence[Fraction | int | str]]) -> GrskTableau:
    """Insert the rows (top to bottom) into an empty array and read it off."""
    words = _check_rows(rows)
    big_n = len(words[0].entries)
    diagonals: list[Word] = []
    for row in words:
        _cascade(diagonals, row, big_n)
    return GrskTableau(big_n, len(words), tuple(d.entries for d in diagonals))


def q_tableau(rows: Sequence[Sequence[Fraction | int | str]]) -> list[tuple[Fraction, ...]]:
    """The sequence of shapes after each row insertion."""
    words = _check_rows(rows)
    big_n = len(words[0].entries)
    diagonals: list[Word] = []
    shapes = []
    for row in words:
        _cascade(diagonals, row, big_n)
        shapes.append(tuple(d.entries[-1] for d in diagonals))
    return shapes


def tau_kl(
    rows: Sequence[Sequence[Fraction | int | str]], n: int, k: int, l: int
) -> Fraction:
    """Non-intersecting Z^2 path sum: l paths (1, r) -> (n, k + r - l).

    Brute force through the staircase-lattice enumerator via a 90-degree
    rotation (Z^2 position j becomes level N + 1 - j).
    """
    words = _check_rows(rows)
    big_n = len(words[0].entries)
    if not (0 <= l <= k <= big_n):
        raise IndexError(f"need 0 <= l <= k <= {big_n}")
    if not (1 <= n <= len(words)):
        raise IndexError(f"row count {n} out of range")
    if l == 0:
        return ONE
    dom = DomainProfile.rectangular(big_n)
    U = [(1, big_n + 1 - r) for r in range(1, l + 1)]
    V = [(n, big_n + 1 - (k + r - l)) for r in range(1, l + 1)]
    total = ZERO
    for multipath in enumerate_multipaths(dom, U, V):
        weight = ONE
        for path in multipath:
            for x, lev in path:
                weight *= words[x - 1][big_n + 1 - lev]
        total += weight
    return total


def z_from_tau(rows: Sequence[Sequence[Fraction | int | str]], n: int) -> GrskTableau:
    """The array defined by z_{k,1} ... z_{k,l} = tau_{k,l}(n)."""
    words = _check_rows(rows)
    big_n = len(words[0].entries)
    depth = min(n, big_n)
    diagonals = []
    for l in range(1, depth + 1):
        diag = []
        for k in range(l, big_n + 1):
            diag.append(tau_kl(rows, n, k, l) / tau_kl(rows, n, k, l - 1))
        diagonals.append(tuple(diag))
    return GrskTableau(big_n, n, tuple(diagonals))


# -- transfer matrices -------------------------------------------------------


def h_matrix(E: StairFunction, size: int) -> tuple[tuple[Fraction, ...], ...]:
    """Upper-triangular transfer matrix of partial products of increments.

    Entry (i, j) is 1 for i = j < r, E(j)/E(i-1) for r <= i <= j <= size and
    zero elsewhere, where r is the domain start of E.
    """
    r = E.start
    if size > E.end:
        raise ValueError(f"function covers columns up to {E.end}, need {size}")
    rows = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            if i == j and i < r:
                row.append(ONE)
            elif r <= i <= j:
                row.append(E(j) / E(i - 1))
            else:
                row.append(ZERO)
        rows.append(tuple(row))
    return tuple(rows)


def mat_mul(
    a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]
) -> tuple[tuple[Fraction, ...], ...]:
    size = len(a)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            row.append(sum((a[i][t] * b[t][j] for t in range(size)), ZERO))
        out.append(tuple(row))
    return tuple(out)


def h_chain(D: WeightField, size: int | None = None) -> tuple[tuple[Fraction, ...], ...]:
    """Product H_{r_n}(D_n) ... H_{r_1}(D_1); entry (u, v) is the partition
    function from (u, lowest in-domain level of column u) to (v, 1)."""
    size = D.width if size is None else size
    prod = None
    for level in range(D.n, 0, -1):
        h = h_matrix(StairFunction(D.profile.start(level), D.tables[level - 1]), size)
        prod = h if prod is None else mat_mul(prod, h)
    assert prod is not None
    return prod


def verify_h_factorization(G: StairFunction, F: StairFunction, size: int) -> CheckResult:
    """Check H_r(G) H_r(F) = H_{r+1}(F (x) G) H_r(G (.) F) entrywise."""
    if G.start != F.start:
        raise ValueError("operands must share their domain start")
    lhs = mat_mul(h_matrix(G, size), h_matrix(F, size))
    rhs = mat_mul(h_matrix(otimes(G, F), size), h_matrix(odot(F, G), size))
    for i in range(size):
        for j in range(size):
            if lhs[i][j] != rhs[i][j]:
                return CheckResult(
                    False, str(lhs[i][j]), str(rhs[i][j]), f"entry ({i + 1}, {j + 1})"
                )
    return CheckResult(True)


def pitman_equals_insertion(xi: Word, b: Word) -> bool:
    """Insertion and the pair transform produce the same result.

    The word xi and the cumulative products B of b, viewed as functions on
    [l, N], satisfy xi' = xi (.) B and the cumulative products of b' equal
    B (x) xi.
    """
    xi_out, b_out = row_insert(xi, b)
    l = xi.start
    xi_fun = StairFunction(l, xi.entries)
    acc = ONE
    b_cumul = []
    for q in b.entries:
        acc *= q
        b_cumul.append(acc)
    big_fun = StairFunction(l, tuple(b_cumul))
    top = odot(xi_fun, big_fun)
    for k in range(l, xi.end + 1):
        if top(k) != xi_out[k]:
            return False
    if b_out is not None and b_out.entries:
        bottom = otimes(big_fun, xi_fun)
        acc = ONE
        for k in range(l + 1, xi.end + 1):
            acc *= b_out[k]
            if bottom(k) != acc:
                return False
    return True


# -- insertion route for the cascade images ----------------------------------


def field_rows(D: WeightField) -> list[list[Fraction]]:
    """Vertex-increment rows d_{i, j} = D_i(j) / D_i(j-1) of a rectangular field."""
    if not D.is_rectangular:
        raise ValueError("rows are defined for rectangular fields")
    return [
        [D.value(i, x) / D.value(i, x - 1) for x in range(1, D.width + 1)]
        for i in range(1, D.n + 1)
    ]


def wd_via_insertion(D: WeightField) -> list[StairFunction]:
    """The cascade images read off the insertion array.

    Inserting the increment rows bottom-to-top gives an array whose entry
    (j, i) equals the i-th image function evaluated at column j; returns
    those functions on [i, N] for i <= n ^ N.
    """
    rows = field_rows(D)
    tab = p_tableau(rows[::-1])
    out = []
    for i in range(1, min(D.n, D.width) + 1):
        out.append(
            StairFunction(i, tuple(tab.entry(j, i) for j in range(i, D.width + 1)))
        )
    return out


def check_wd_matches_insertion(D: WeightField) -> CheckResult:
    """Full-cascade cross-check: transform route equals insertion route."""
    images = wd_via_insertion(D)
    wd = w(D)
    for i, fun in enumerate(images, start=1):
        for j in range(i, D.width + 1):
            lhs = wd.value(i, j)
            if lhs != fun(j):
                return CheckResult(False, str(lhs), str(fun(j)), f"level {i}, column {j}")
    return CheckResult(True)
