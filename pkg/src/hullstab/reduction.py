"""Farthest-point reductions over a pluggable comparison policy.

Three evaluation orders are provided, mirroring plain, blocked, and
pairwise summation.  All three keep the incumbent when a comparison
returns false, so the first-seen point wins ties.  Comparators decide
"is u farther from the line through (p, q) than u2" and may deliberately
err within a tolerance band, which is how the worst-case studies inject
controlled mistakes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .geometry import (
    DirectedSegment,
    Point,
    _scaled_ints,
    farther_exact,
    farther_float,
    orient_exact,
)

Comparator = Callable[[Point, Point, Point, Point], bool]


class FloatPredicate:
    """Delegates to the floating-point farther-from-line test."""

    def __call__(self, p: Point, q: Point, u: Point, u2: Point) -> bool:
        return farther_float(p, q, u, u2)


class ExactPredicate:
    """Delegates to the exact farther-from-line test."""

    def __call__(self, p: Point, q: Point, u: Point, u2: Point) -> bool:
        return farther_exact(p, q, u, u2)


def _within_tolerance(
    p: Point, q: Point, u: Point, u2: Point, tol: float, scale: float
) -> bool:
    """Exactly decide |d(u, pq) - d(u2, pq)| < tol * scale.

    Compares squares over rationals, so the square roots never appear.
    """
    if tol < 0 or scale <= 0:
        raise ValueError("tolerance must be >= 0 and scale > 0")
    coords, shift = _scaled_ints(p.x, p.y, q.x, q.y, u.x, u.y, u2.x, u2.y)
    px, py, qx, qy, ux, uy, vx, vy = coords
    l2 = (qx - px) ** 2 + (qy - py) ** 2
    if l2 == 0:
        raise ValueError("tolerance band is undefined for a degenerate segment")
    o1 = abs((px - ux) * (qy - uy) - (py - uy) * (qx - ux))
    o2 = abs((px - vx) * (qy - vy) - (py - vy) * (qx - vx))
    gap = abs(o1 - o2)
    # |d - d2| = gap / (||pq|| * 2**(2*shift));  compare squares.
    bound = Fraction(tol) * Fraction(scale)
    return Fraction(gap * gap, l2) < bound * bound * (1 << (2 * shift))


@dataclass
class AdversarialWithinTolerance:
    """Returns the wrong exact answer whenever the pair is inside the band.

    A test instrument: it consults exact distances to know what "wrong"
    means, so it is slow and must never be used as a production policy.
    ``scale`` is the fixed normalization (max absolute coordinate of the
    experiment's whole input), computed once by the caller.
    """

    tol: float
    scale: float = 1.0

    def __call__(self, p: Point, q: Point, u: Point, u2: Point) -> bool:
        truth = farther_exact(p, q, u, u2)
        if _within_tolerance(p, q, u, u2, self.tol, self.scale):
            return not truth
        return truth


@dataclass
class RandomWithinTolerance:
    """Flips the exact answer with a fixed probability inside the band.

    Deterministic for a given seed.  Carries its own generator, so one
    instance must not be shared across concurrent reductions.
    """

    tol: float
    flip_probability: float
    rng_seed: int
    scale: float = 1.0
    _rng: random.Random = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not 0.0 <= self.flip_probability <= 1.0:
            raise ValueError("flip_probability must lie in [0, 1]")
        self._rng = random.Random(self.rng_seed)

    def __call__(self, p: Point, q: Point, u: Point, u2: Point) -> bool:
        truth = farther_exact(p, q, u, u2)
        if _within_tolerance(p, q, u, u2, self.tol, self.scale):
            if self._rng.random() < self.flip_probability:
                return not truth
        return truth


@dataclass(frozen=True)
class Sequential:
    """Left-to-right scan, one comparison per point."""


@dataclass(frozen=True)
class Blocked:
    """Scan in blocks of m, then fold block winners into the incumbent.

    m defaults to ceil(sqrt(n)) when left unset.
    """

    m: int | None = None


@dataclass(frozen=True)
class Pairwise:
    """Tournament of recursive halves, depth ceil(log2 n)."""


ReductionStrategy = Sequential | Blocked | Pairwise


def reduce_sequential(
    points: Sequence[Point], seg: DirectedSegment, cmp: Comparator
) -> Point:
    if not points:
        raise ValueError("cannot reduce an empty point list")
    p, q = seg.p, seg.q
    u_max = points[0]
    for i in range(1, len(points)):
        if cmp(p, q, points[i], u_max):
            u_max = points[i]
    return u_max


def reduce_blocked(
    points: Sequence[Point], seg: DirectedSegment, m: int, cmp: Comparator
) -> Point:
    if not points:
        raise ValueError("cannot reduce an empty point list")
    if m < 1:
        raise ValueError("block size must be at least 1")
    p, q = seg.p, seg.q
    n = len(points)
    u_max = points[0]
    for start in range(1, n, m):
        b_max = points[start]
        for i in range(start + 1, min(start + m, n)):
            if cmp(p, q, points[i], b_max):
                b_max = points[i]
        if cmp(p, q, b_max, u_max):
            u_max = b_max
    return u_max


def reduce_pairwise(
    points: Sequence[Point], seg: DirectedSegment, cmp: Comparator
) -> Point:
    if not points:
        raise ValueError("cannot reduce an empty point list")
    p, q = seg.p, seg.q

    def rec(lo: int, hi: int) -> Point:
        if hi - lo == 1:
            return points[lo]
        mid = lo + (hi - lo) // 2
        w1 = rec(lo, mid)
        w2 = rec(mid, hi)
        return w1 if cmp(p, q, w1, w2) else w2

    return rec(0, len(points))


def default_block_size(n: int) -> int:
    """ceil(sqrt(n)), the block size that balances the two scan levels."""
    if n < 1:
        return 1
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def reduce_farthest(
    points: Sequence[Point],
    seg: DirectedSegment,
    cmp: Comparator,
    strategy: ReductionStrategy,
) -> Point:
    """Dispatch to the strategy's reduction order."""
    if isinstance(strategy, Sequential):
        return reduce_sequential(points, seg, cmp)
    if isinstance(strategy, Blocked):
        m = strategy.m if strategy.m is not None else default_block_size(len(points))
        return reduce_blocked(points, seg, m, cmp)
    if isinstance(strategy, Pairwise):
        return reduce_pairwise(points, seg, cmp)
    raise TypeError(f"unknown reduction strategy: {strategy!r}")


def reduction_error(
    points: Sequence[Point], seg: DirectedSegment, chosen: Point, scale: float
) -> float:
    """(max exact distance over points - exact distance of chosen) / scale.

    Distances are compared as exact rationals; only the final value is
    rounded to float, so ladder constructions measure exactly.
    """
    if not points:
        raise ValueError("cannot score an empty point list")
    if scale <= 0:
        raise ValueError("scale must be positive")
    if seg.is_degenerate():
        raise ValueError("degenerate segment")
    p, q = seg.p, seg.q
    best = max(abs(orient_exact(p, u, q)) for u in points)
    got = abs(orient_exact(p, chosen, q))
    length = math.hypot(q.x - p.x, q.y - p.y)
    return float((best - got) / Fraction(scale)) / length
