"""Single-path transfer matrices, exact minor determinants, and the
determinant-condensation route to the invariance identity.

The matrix M has entries M_{u,v} = (partition function from column u on the
bottom boundary to column v on level 1); minors of M evaluate multipath
partition functions by the non-intersecting-path determinant lemma.  The
condensation identity relates each contiguous minor to four smaller ones,
which lets the equality of all contiguous minors of M and of its transformed
companion be replayed as a lexicographic induction from boundary cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .partition import WeightField
from .pitman import w
from .results import CheckResult

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class PathMatrix:
    """Square matrix of single-path partition functions, 1-based accessors."""

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, u: int, v: int) -> Fraction:
        return self.rows[u - 1][v - 1]

    def minor(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> list[list[Fraction]]:
        return [[self.rows[i - 1][j - 1] for j in col_idx] for i in row_idx]


def det_exact(mat: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant: clear denominators, then fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return ONE
    scale = 1
    m: list[list[int]] = []
    for row in mat:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
        mult = 1
        for q in row:
            mult = lcm(mult, q.denominator)
        scale *= mult
        m.append([int(q * mult) for q in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], scale)


def minor_det(A: PathMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> Fraction:
    """Determinant of the selected minor (1-based indices)."""
    if len(row_idx) != len(col_idx):
        raise ValueError("minor must be square")
    return det_exact(A.minor(row_idx, col_idx))


def build_matrices(D: WeightField) -> tuple[PathMatrix, PathMatrix]:
    """M from the field, and its companion from the transformed field."""
    from .grsk import h_chain

    if not D.is_rectangular:
        raise ValueError("expected a rectangular field")
    M = PathMatrix(h_chain(D))
    Mt = PathMatrix(h_chain(w(D)))
    return M, Mt


def boundary_partition_function(
    D: WeightField, U: Sequence[tuple[int, int]], V: Sequence[tuple[int, int]]
) -> Fraction:
    """Multipath partition function via a transfer-matrix minor determinant.

    U must sit on the bottom boundary of the domain and V on level 1, both
    with strictly increasing columns.
    """
    from .grsk import h_chain

    chain = PathMatrix(h_chain(D))
    return minor_det(chain, [u for u, _ in U], [v for v, _ in V])


def _rng(a: int, b: int) -> list[int]:
    return list(range(a, b + 1))


def desnanot_jacobi_check(A: PathMatrix, i: int, j: int, k: int) -> bool:
    """The condensation identity for the k x k block anchored at (i, j).

    Requires i, j >= 2 and the enclosing (k+1) x (k+1) block in range.
    """
    if k < 2 or i < 2 or j < 2 or i + k - 1 > A.size or j + k - 1 > A.size:
        raise IndexError("condensation block out of range")
    lhs = minor_det(A, _rng(i, i + k - 1), _rng(j, j + k - 1)) * minor_det(
        A, _rng(i - 1, i + k - 2), _rng(j - 1, j + k - 2)
    )
    rhs = minor_det(A, _rng(i - 1, i + k - 1), _rng(j - 1, j + k - 1)) * minor_det(
        A, _rng(i, i + k - 2), _rng(j, j + k - 2)
    ) + minor_det(A, _rng(i - 1, i + k - 2), _rng(j, j + k - 1)) * minor_det(
        A, _rng(i, i + k - 1), _rng(j - 1, j + k - 2)
    )
    return lhs == rhs


def apriori_equalities(M: PathMatrix, Mt: PathMatrix, n: int) -> CheckResult:
    """The four boundary facts the induction starts from.

    1. first-row blocks agree; 2. strict positivity pattern of contiguous
    minors; 3. diagonal blocks agree; 4. offset blocks with more paths than
    levels vanish.
    """
    size = M.size
    for k in range(1, size + 1):
        for j in range(1, size - k + 2):
            a = minor_det(M, _rng(1, k), _rng(j, j + k - 1))
            b = minor_det(Mt, _rng(1, k), _rng(j, j + k - 1))
            if a != b:
                return CheckResult(False, str(a), str(b), f"first-row block k={k}, j={j}")
    for k in range(1, size + 1):
        for i in range(1, size - k + 2):
            for j in range(1, size - k + 2):
                rows, cols = _rng(i, i + k - 1), _rng(j, j + k - 1)
                for name, A in (("base", M), ("transformed", Mt)):
                    d = minor_det(A, rows, cols)
                    positive = (k <= n and i <= j) or (k > n and i == j)
                    if positive and d <= 0:
                        return CheckResult(
                            False, str(d), "> 0", f"{name} block i={i}, j={j}, k={k}"
                        )
                    if not positive and d != 0:
                        return CheckResult(
                            False, str(d), "0", f"{name} block i={i}, j={j}, k={k}"
                        )
    for k in range(1, size + 1):
        for i in range(1, size - k + 2):
            rows = _rng(i, i + k - 1)
            a = minor_det(M, rows, rows)
            b = minor_det(Mt, rows, rows)
            if a != b:
                return CheckResult(False, str(a), str(b), f"diagonal block i={i}, k={k}")
    # equality 4 is the zero half of the positivity pattern above
    return CheckResult(True)


def dj_induction_verify(M: PathMatrix, Mt: PathMatrix, n: int) -> CheckResult:
    """Replay the lexicographic induction matching all contiguous minors.

    Base cases are the boundary facts; each remaining block is reconstructed
    from lexicographically smaller ones through the condensation identity,
    with the divisor asserted positive first.  Reports the first failure.
    """
    base = apriori_equalities(M, Mt, n)
    if not base.ok:
        return base
    size = M.size
    targets = []
    for k in range(1, size + 1):
        for i in range(2, size - k + 2):
            for j in range(i + 1, size - k + 2):
                targets.append((i, j + k - 1, j, k))
    targets.sort()
    for i, _, j, k in targets:
        rows, cols = _rng(i, i + k - 1), _rng(j, j + k - 1)
        a = minor_det(M, rows, cols)
        b = minor_det(Mt, rows, cols)
        if a != b:
            return CheckResult(False, str(a), str(b), f"block i={i}, j={j}, k={k}")
        if k > n:
            if a != 0:
                return CheckResult(False, str(a), "0", f"offset block i={i}, j={j}, k={k}")
            continue
        for name, A in (("base", M), ("transformed", Mt)):
            denom = minor_det(A, _rng(i - 1, i + k - 2), _rng(j - 1, j + k - 2))
            if denom <= 0:
                return CheckResult(
                    False, str(denom), "> 0", f"{name} divisor at i={i}, j={j}, k={k}"
                )
            num = minor_det(A, _rng(i - 1, i + k - 1), _rng(j - 1, j + k - 1)) * minor_det(
                A, _rng(i, i + k - 2), _rng(j, j + k - 2)
            ) + minor_det(A, _rng(i - 1, i + k - 2), _rng(j, j + k - 1)) * minor_det(
                A, _rng(i, i + k - 1), _rng(j - 1, j + k - 2)
            )
            got = minor_det(A, rows, cols)
            if got * denom != num:
                return CheckResult(
                    False, str(got), str(num / denom), f"{name} condensation at i={i}, j={j}, k={k}"
                )
    return CheckResult(True)
