"""Quickhull over pluggable predicates, plus a definition-level oracle.

The recursion follows the classic divide step exactly: split on the
extreme points, filter each side with the strict right-turn test, find
the farthest point with the configured reduction order, and recurse with
the filtered sets.  Each recursive call emits only its interior vertices
and its own farthest point; the top level emits the two extremes once, so
output vertices are pairwise distinct and in clockwise order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import (
    DirectedSegment,
    Point,
    _orient_int,
    _scaled_ints,
    farther_exact,
    farther_float,
    right_turn_exact,
    right_turn_float,
)
from .reduction import ReductionStrategy, Sequential, reduce_farthest


class PredicateMode(enum.Enum):
    FLOAT = "float"
    EXACT = "exact"


@dataclass(frozen=True)
class Hull:
    """Hull vertices (clockwise) plus statistics of the run that built them.

    depth is the deepest recursion level that did any work (0 when the
    input collapses to the two extremes or a single point).  comparisons
    counts every farther-from-line evaluation, including the equidistant
    tie refinement.  The two audit counters are populated only when the
    hull was computed with audit=True: they count disagreements between
    the float and exact versions of the right-turn and farther tests seen
    during this run.
    """

    vertices: tuple[Point, ...]
    depth: int
    comparisons: int
    misclassifications: int | None = None
    farther_disagreements: int | None = None


class _RunStats:
    __slots__ = ("depth", "comparisons", "rt_disagree", "frt_disagree", "audit")

    def __init__(self, audit: bool) -> None:
        self.depth = 0
        self.comparisons = 0
        self.rt_disagree = 0
        self.frt_disagree = 0
        self.audit = audit


def _dedupe(points: Sequence[Point]) -> list[Point]:
    seen: set[tuple[float, float]] = set()
    out: list[Point] = []
    for pt in points:
        key = (pt.x, pt.y)
        if key not in seen:
            seen.add(key)
            out.append(pt)
    return out


def _filter_left(
    pts: Sequence[Point], a: Point, b: Point, mode: PredicateMode, st: _RunStats
) -> list[Point]:
    """Points strictly to the left of the oriented line a->b."""
    out = []
    if mode is PredicateMode.FLOAT:
        dy = b.y - a.y
        dx = b.x - a.x
        for u in pts:
            keep = right_turn_float(a, u, b, dy, dx)
            if st.audit and keep != right_turn_exact(a, u, b):
                st.rt_disagree += 1
            if keep:
                out.append(u)
    else:
        for u in pts:
            keep = right_turn_exact(a, u, b)
            if st.audit and keep != right_turn_float(a, u, b):
                st.rt_disagree += 1
            if keep:
                out.append(u)
    return out


class _CountingComparator:
    """Mode comparator that tallies calls and, in audit mode, disagreements."""

    __slots__ = ("mode", "st")

    def __init__(self, mode: PredicateMode, st: _RunStats) -> None:
        self.mode = mode
        self.st = st

    def __call__(self, p: Point, q: Point, u: Point, u2: Point) -> bool:
        st = self.st
        st.comparisons += 1
        if self.mode is PredicateMode.FLOAT:
            got = farther_float(p, q, u, u2)
            if st.audit and got != farther_exact(p, q, u, u2):
                st.frt_disagree += 1
        else:
            got = farther_exact(p, q, u, u2)
            if st.audit and got != farther_float(p, q, u, u2):
                st.frt_disagree += 1
        return got


def _projection_key_exact(a: Point, b: Point, u: Point) -> Fraction:
    coords, shift = _scaled_ints(a.x, a.y, b.x, b.y, u.x, u.y)
    ax, ay, bx, by, ux, uy = coords
    return Fraction((ux - ax) * (bx - ax) + (uy - ay) * (by - ay), 1 << (2 * shift))


def _reduce_refined(
    pts: Sequence[Point],
    a: Point,
    b: Point,
    mode: PredicateMode,
    strategy: ReductionStrategy,
    st: _RunStats,
) -> Point:
    """Strategy reduction, then break equidistant ties toward b.

    A farthest-point tie between collinear maxima can hand the recursion
    an interior point of the true hull boundary, which would then be
    emitted as a vertex.  Among points whose computed distance equals the
    winner's we take the one farthest along a->b; that point is always a
    genuine vertex.
    """
    cmp = _CountingComparator(mode, st)
    seg = DirectedSegment(a, b)
    winner = reduce_farthest(pts, seg, cmp, strategy)
    if len(pts) == 1:
        return winner
    best = winner
    if mode is PredicateMode.FLOAT:
        dy = b.y - a.y
        dx = b.x - a.x
        best_key = (best.x - a.x) * dx + (best.y - a.y) * dy
        for u in pts:
            if u is best:
                continue
            st.comparisons += 2
            if not farther_float(a, b, u, winner, dy, dx) and not farther_float(
                a, b, winner, u, dy, dx
            ):
                key = (u.x - a.x) * dx + (u.y - a.y) * dy
                if key > best_key:
                    best = u
                    best_key = key
    else:
        best_key = _projection_key_exact(a, b, best)
        for u in pts:
            if u is best:
                continue
            st.comparisons += 2
            if not farther_exact(a, b, u, winner) and not farther_exact(
                a, b, winner, u
            ):
                key = _projection_key_exact(a, b, u)
                if key > best_key:
                    best = u
                    best_key = key
    return best


def _hull_rec(
    pts: list[Point],
    a: Point,
    r: Point,
    b: Point,
    mode: PredicateMode,
    strategy: ReductionStrategy,
    st: _RunStats,
    level: int,
) -> list[Point]:
    """Interior vertices between a and b, including r; a and b are the
    caller's to emit."""
    st.depth = max(st.depth, level)
    if len(pts) <= 1:
        return list(pts)
    s1 = _filter_left(pts, a, r, mode, st)
    s2 = _filter_left(pts, r, b, mode, st)
    left: list[Point] = []
    right: list[Point] = []
    if s1:
        r1 = _reduce_refined(s1, a, r, mode, strategy, st)
        left = _hull_rec(s1, a, r1, r, mode, strategy, st, level + 1)
    if s2:
        r2 = _reduce_refined(s2, r, b, mode, strategy, st)
        right = _hull_rec(s2, r, r2, b, mode, strategy, st, level + 1)
    return left + [r] + right


def quickhull(
    points: Sequence[Point],
    mode: PredicateMode = PredicateMode.FLOAT,
    strategy: ReductionStrategy = Sequential(),
    audit: bool = False,
) -> Hull:
    """Convex hull vertices in clockwise order, starting at the left-most
    point.

    Duplicates are removed once at entry.  Extremes are found by exact
    coordinate comparison with a lexicographic tie-break, so degenerate
    inputs (all equal, all collinear) yield one- or two-vertex hulls.
    """
    pts = _dedupe(points)
    if not pts:
        raise ValueError("cannot take the hull of no points")
    st = _RunStats(audit)
    if len(pts) == 1:
        return _finish((pts[0],), st)
    p = min(pts, key=lambda t: (t.x, t.y))
    q = max(pts, key=lambda t: (t.x, t.y))
    s1 = _filter_left(pts, p, q, mode, st)
    s2 = _filter_left(pts, q, p, mode, st)
    h1: list[Point] = []
    h2: list[Point] = []
    if s1:
        r1 = _reduce_refined(s1, p, q, mode, strategy, st)
        h1 = _hull_rec(s1, p, r1, q, mode, strategy, st, 1)
    if s2:
        r2 = _reduce_refined(s2, q, p, mode, strategy, st)
        h2 = _hull_rec(s2, q, r2, p, mode, strategy, st, 1)
    return _finish((p, *h1, q, *h2), st)


def _finish(vertices: tuple[Point, ...], st: _RunStats) -> Hull:
    return Hull(
        vertices=vertices,
        depth=st.depth,
        comparisons=st.comparisons,
        misclassifications=st.rt_disagree if st.audit else None,
        farther_disagreements=st.frt_disagree if st.audit else None,
    )


def brute_force_hull(points: Sequence[Point]) -> Hull:
    """Exact hull straight from the definition; the independent oracle.

    A directed pair (a, b) is a clockwise hull edge iff every other point
    lies strictly to its right or strictly between a and b on the segment.
    O(n^3) with exact integer arithmetic; intended for small inputs.
    """
    pts = _dedupe(points)
    if not pts:
        raise ValueError("cannot take the hull of no points")
    if len(pts) == 1:
        return Hull((pts[0],), 0, 0)
    coords, _ = _scaled_ints(*(c for pt in pts for c in (pt.x, pt.y)))
    ints = [(coords[2 * i], coords[2 * i + 1]) for i in range(len(pts))]
    n = len(pts)

    def is_edge(i: int, j: int) -> bool:
        ax, ay = ints[i]
        bx, by = ints[j]
        abx = bx - ax
        aby = by - ay
        ab2 = abx * abx + aby * aby
        for t in range(n):
            if t == i or t == j:
                continue
            ux, uy = ints[t]
            o = (ax - ux) * (by - uy) - (ay - uy) * (bx - ux)
            if o > 0:
                return False
            if o == 0:
                dot = (ux - ax) * abx + (uy - ay) * aby
                if not (0 < dot < ab2):
                    return False
        return True

    succ: dict[int, int] = {}
    for i in range(n):
        for j in range(n):
            if i != j and is_edge(i, j):
                succ[i] = j
    start = min(range(n), key=lambda i: (pts[i].x, pts[i].y))
    order = [start]
    cur = succ[start]
    while cur != start:
        order.append(cur)
        cur = succ[cur]
    return Hull(tuple(pts[i] for i in order), 0, 0)


def is_convex_clockwise(hull: Hull) -> bool:
    """True iff every cyclic vertex triple makes a strict clockwise turn.

    Hulls with fewer than three vertices are vacuously convex.  Reports
    only; never repairs.
    """
    v = hull.vertices
    n = len(v)
    if n < 3:
        return True
    for i in range(n):
        o, _ = _orient_int(v[i], v[(i + 1) % n], v[(i + 2) % n])
        if o <= 0:
            return False
    return True
