"""Staircase lattices, non-intersecting multipaths, and the lift operators.

Points are ``(x, level)`` pairs with columns ``x >= 1`` and levels ``1..n``;
level 1 is drawn on top, level n on the bottom.  A path runs from its start
to its end taking steps ``(x, lev) -> (x + 1, lev)`` or ``(x, lev) ->
(x, lev - 1)``, so ``x - lev`` increases by exactly one per step: a path
occupies one point per anti-diagonal.  That invariant drives both the
brute-force enumerator and the exact feasibility/counting DP below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Point = tuple[int, int]

DEFAULT_MAX_ORACLE = 10**7


class OracleSizeError(RuntimeError):
    """Instance too large for the brute-force enumerator."""


class EmptyPathSetError(ValueError):
    """Raised where an operation requires (U, V) to be an endpoint pair."""


@dataclass(frozen=True)
class DomainProfile:
    """Staircase domain: level i (1-based) occupies columns x >= r[i-1]."""

    n: int
    r: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one level")
        if len(self.r) != self.n:
            raise ValueError("profile length must equal the level count")
        if any(a < 1 for a in self.r):
            raise ValueError("profile offsets must be >= 1")
        if any(a > b for a, b in zip(self.r, self.r[1:])):
            raise ValueError("profile offsets must be weakly increasing")

    @classmethod
    def rectangular(cls, n: int) -> "DomainProfile":
        return cls(n, (1,) * n)

    @property
    def is_rectangular(self) -> bool:
        return all(a == 1 for a in self.r)

    def start(self, level: int) -> int:
        return self.r[level - 1]

    def contains(self, point: Point) -> bool:
        x, lev = point
        return 1 <= lev <= self.n and x >= self.r[lev - 1]

    def with_bump(self, m: int) -> "DomainProfile":
        """Return the profile with r[m+1 slot] raised by one (1-based m)."""
        r = list(self.r)
        r[m] += 1
        return DomainProfile(self.n, tuple(r))


def _check_points(dom: DomainProfile, pts: Sequence[Point], label: str) -> None:
    for p in pts:
        if not dom.contains(p):
            raise ValueError(f"{label} point {p} outside domain {dom.r}")


def single_path_count(dom: DomainProfile, start: Point, end: Point) -> int:
    """Number of single paths start -> end inside the domain.

    A path is determined by its weakly increasing jump columns
    u <= s_{lu-1} <= ... <= s_{lv} <= v with s_j >= r_j (the up-step into
    level j happens at column s_j).
    """
    u, lu = start
    v, lv = end
    if not (dom.contains(start) and dom.contains(end)) or v < u or lv > lu:
        return 0
    if lu == lv:
        return 1
    size = v - u + 2  # lower bounds lo in [u, v+1]
    prev = [1] * size  # base: no jump left to place
    for j in range(lv, lu):
        suffix = [0] * size
        run = 0
        for s in range(v, u - 1, -1):
            run += prev[s - u]
            suffix[s - u] = run
        cur = [0] * size
        for lo in range(u, v + 2):
            lo_eff = max(lo, dom.start(j))
            cur[lo - u] = suffix[lo_eff - u] if lo_eff <= v else 0
        prev = cur
    return prev[0]


def _jump_tuples(
    dom: DomainProfile, start: Point, end: Point
) -> Iterator[tuple[int, ...]]:
    """Weakly increasing jump columns (s_{lu-1}, ..., s_{lv}) of a path.

    s_j is the column of the up-step into level j; level j occupies columns
    [s_j, s_{j-1}] with the conventions s_{lu} = u and s_{lv-1} = v.
    Tuples are yielded in lexicographic order.
    """
    u, lu = start
    v, lv = end
    if v < u or lv > lu:
        return
    if not (dom.contains(start) and dom.contains(end)):
        return
    levels = list(range(lu - 1, lv - 1, -1))

    def rec(idx: int, lo: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if idx == len(levels):
            yield tuple(acc)
            return
        j = levels[idx]
        for s in range(max(lo, dom.start(j)), v + 1):
            acc.append(s)
            yield from rec(idx + 1, s, acc)
            acc.pop()

    yield from rec(0, u, [])


def _path_points(start: Point, end: Point, jumps: tuple[int, ...]) -> tuple[Point, ...]:
    u, lu = start
    v, lv = end
    pts: list[Point] = []
    bounds = (u,) + jumps + (v,)
    for i, j in enumerate(range(lu, lv - 1, -1)):
        for x in range(bounds[i], bounds[i + 1] + 1):
            pts.append((x, j))
    return tuple(pts)


def enumerate_paths(dom: DomainProfile, start: Point, end: Point) -> list[tuple[Point, ...]]:
    """All single paths start -> end, lexicographic in their jump columns."""
    return [_path_points(start, end, t) for t in _jump_tuples(dom, start, end)]


def enumerate_multipaths(
    dom: DomainProfile,
    U: Sequence[Point],
    V: Sequence[Point],
    max_oracle: int = DEFAULT_MAX_ORACLE,
) -> list[tuple[tuple[Point, ...], ...]]:
    """Exhaustive list of pairwise vertex-disjoint multipaths from U to V.

    Deterministic lexicographic order.  Raises OracleSizeError when the
    product of single-path counts exceeds ``max_oracle``.
    """
    if len(U) != len(V) or not U:
        raise ValueError("U and V must be non-empty lists of equal length")
    _check_points(dom, U, "start")
    _check_points(dom, V, "end")
    product = 1
    for s, e in zip(U, V):
        product *= single_path_count(dom, s, e)
        if product > max_oracle:
            raise OracleSizeError(
                f"instance too large for oracle: single-path product exceeds {max_oracle}"
            )
    if product == 0:
        return []

    k = len(U)
    out: list[tuple[tuple[Point, ...], ...]] = []
    chosen: list[tuple[Point, ...]] = []
    used: set[Point] = set()

    def rec(i: int) -> None:
        if i == k:
            out.append(tuple(chosen))
            return
        for jumps in _jump_tuples(dom, U[i], V[i]):
            pts = _path_points(U[i], V[i], jumps)
            if any(p in used for p in pts):
                continue
            chosen.append(pts)
            used.update(pts)
            rec(i + 1)
            used.difference_update(pts)
            chosen.pop()

    rec(0)
    return out


def _frontier_sweep(
    dom: DomainProfile, U: Sequence[Point], V: Sequence[Point], count: bool
) -> int:
    """Anti-diagonal DP over level frontiers.

    State: levels of the currently active paths (index order).  Distinct
    levels per anti-diagonal are necessary and sufficient for pairwise
    vertex-disjointness, since relative order cannot flip without touching.
    Returns the number of multipaths (or just 0/1 when ``count`` is False).
    """
    k = len(U)
    for (u, lu), (v, lv) in zip(U, V):
        if v < u or lv > lu:
            return 0
        if not (dom.contains((u, lu)) and dom.contains((v, lv))):
            return 0
    if len(set(U)) < k or len(set(V)) < k:
        return 0
    d_start = [u - lu for u, lu in U]
    d_end = [v - lv for v, lv in V]
    lo, hi = min(d_start), max(d_end)

    def active(d: int) -> list[int]:
        return [i for i in range(k) if d_start[i] <= d <= d_end[i]]

    # states: mapping from level-tuple (for active paths) to multiplicity
    states: dict[tuple[int, ...], int] = {(): 1}
    prev_active: list[int] = []
    for d in range(lo, hi + 1):
        cur_active = active(d)
        nxt: dict[tuple[int, ...], int] = {}
        keep = [i for i in prev_active if i in cur_active]
        born = [i for i in cur_active if i not in prev_active]
        for state, mult in states.items():
            lev_of = dict(zip(prev_active, state))
            # each continuing path either stays or moves up one level
            options: list[list[tuple[int, int]]] = []
            for i in cur_active:
                if i in born:
                    options.append([(i, U[i][1])])
                else:
                    opts = []
                    for lev in (lev_of[i], lev_of[i] - 1):
                        x = d + lev
                        if lev >= 1 and dom.contains((x, lev)):
                            opts.append((i, lev))
                    options.append(opts)

            def expand(idx: int, levels: dict[int, int]) -> None:
                if idx == len(options):
                    chosen = tuple(levels[i] for i in cur_active)
                    if len(set(chosen)) < len(chosen):
                        return
                    for i in cur_active:
                        if d_end[i] == d and levels[i] != V[i][1]:
                            return
                    key = chosen
                    nxt[key] = nxt.get(key, 0) + mult
                    if not count and nxt[key] > 1:
                        nxt[key] = 1
                    return
                for i, lev in options[idx]:
                    levels[i] = lev
                    expand(idx + 1, levels)
                    del levels[i]

            expand(0, {})
        # drop finished paths from the state key
        merged: dict[tuple[int, ...], int] = {}
        survivors = [i for i in cur_active if d_end[i] > d]
        for state, mult in nxt.items():
            lev_of = dict(zip(cur_active, state))
            key = tuple(lev_of[i] for i in survivors)
            merged[key] = merged.get(key, 0) + mult
            if not count and merged[key] > 1:
                merged[key] = 1
        states = merged
        prev_active = survivors
        if not states:
            return 0
    return sum(states.values())


def multipath_count(dom: DomainProfile, U: Sequence[Point], V: Sequence[Point]) -> int:
    """Exact number of non-intersecting multipaths U -> V (no enumeration)."""
    if len(U) != len(V) or not U:
        raise ValueError("U and V must be non-empty lists of equal length")
    return _frontier_sweep(dom, U, V, count=True)


def is_endpoint_pair(dom: DomainProfile, U: Sequence[Point], V: Sequence[Point]) -> bool:
    """True iff at least one non-intersecting multipath U -> V exists."""
    if len(U) != len(V) or not U:
        return False
    return _frontier_sweep(dom, U, V, count=False) > 0


def uparrow_rm(U: Sequence[Point], r: int, m: int) -> tuple[Point, ...]:
    """Replace (r, m+1) by (r, m) if present, dropping it on collision."""
    pts = list(U)
    if (r, m + 1) not in pts:
        return tuple(pts)
    pts.remove((r, m + 1))
    if (r, m) not in pts:
        pts.append((r, m))
    return tuple(pts)


def uparrow_r(U: Sequence[Point], r: int, n: int) -> tuple[Point, ...]:
    """Compose the single-slot lifts for one sweep: m = n-1 down to r."""
    pts = tuple(U)
    for m in range(n - 1, r - 1, -1):
        pts = uparrow_rm(pts, r, m)
    return pts


def uparrow_composed(U: Sequence[Point], n: int) -> tuple[Point, ...]:
    """The full lift as the sweep composition (r = 1 .. n-1)."""
    pts = tuple(U)
    for r in range(1, n):
        pts = uparrow_r(pts, r, n)
    return pts


def uparrow(U: Sequence[Point], n: int) -> tuple[Point, ...]:
    """Lift level-n starting points onto the staircase: (u, n) -> (u, n ^ u)."""
    for u, lev in U:
        if lev != n:
            raise ValueError("uparrow expects all points at level n")
    lifted = tuple((u, min(n, u)) for u, _ in U)
    return lifted
