"""Hausdorff distance, its scale-free variant, and error measurement.

Hulls are measured as filled regions (the polygon traced by the vertex
order, interior included), finite point collections as bare sets.  For a
convex region the directed Hausdorff maximum is attained at a vertex, and
the same holds from any polygon since point-to-convex-set distance is a
convex function; so both directions only ever iterate vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import EPS_DOUBLE, GAMMA6, Point, max_abs_coord
from .quickhull import Hull, PredicateMode, quickhull
from .reduction import (
    Blocked,
    Pairwise,
    ReductionStrategy,
    Sequential,
    default_block_size,
)


@dataclass(frozen=True)
class ErrorReport:
    """Measured distance between a computed hull and the true hull.

    bound is the worst-case forward-error budget 2 * depth * per-pass
    reduction bound for the strategy that produced the measured hull.
    """

    hausdorff: float
    d_m: float
    scale: float
    depth: int
    bound: float


def _point_to_point_set(pt: Point, pts: Sequence[Point]) -> float:
    return min(math.hypot(pt.x - o.x, pt.y - o.y) for o in pts)


def _point_to_segment(pt: Point, a: Point, b: Point) -> float:
    ax, ay = a.x, a.y
    dx = b.x - ax
    dy = b.y - ay
    l2 = dx * dx + dy * dy
    if l2 == 0.0:
        return math.hypot(pt.x - ax, pt.y - ay)
    t = ((pt.x - ax) * dx + (pt.y - ay) * dy) / l2
    t = min(1.0, max(0.0, t))
    return math.hypot(pt.x - (ax + t * dx), pt.y - (ay + t * dy))


def _point_in_polygon(pt: Point, poly: Sequence[Point]) -> bool:
    """Even-odd containment; boundary membership is handled by the caller."""
    inside = False
    n = len(poly)
    for i in range(n):
        a = poly[i]
        b = poly[(i + 1) % n]
        if (a.y > pt.y) != (b.y > pt.y):
            x_cross = a.x + (pt.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if pt.x < x_cross:
                inside = not inside
    return inside


def _point_to_region(pt: Point, poly: Sequence[Point]) -> float:
    if len(poly) == 1:
        return math.hypot(pt.x - poly[0].x, pt.y - poly[0].y)
    if len(poly) == 2:
        return _point_to_segment(pt, poly[0], poly[1])
    edge = min(
        _point_to_segment(pt, poly[i], poly[(i + 1) % len(poly)])
        for i in range(len(poly))
    )
    if edge == 0.0 or _point_in_polygon(pt, poly):
        return 0.0
    return edge


def _vertices(obj: Hull | Sequence[Point]) -> Sequence[Point]:
    return obj.vertices if isinstance(obj, Hull) else obj


def _directed(src: Sequence[Point], dst: Hull | Sequence[Point]) -> float:
    if isinstance(dst, Hull):
        return max(_point_to_region(p, dst.vertices) for p in src)
    return max(_point_to_point_set(p, dst) for p in src)


def hausdorff(a: Hull | Sequence[Point], b: Hull | Sequence[Point]) -> float:
    """Hausdorff distance; Hulls measure as regions, sequences as sets."""
    va, vb = _vertices(a), _vertices(b)
    if not va or not vb:
        raise ValueError("hausdorff distance of an empty set is undefined")
    return max(_directed(va, b), _directed(vb, a))


def scaled_hausdorff(
    a: Hull | Sequence[Point], b: Hull | Sequence[Point], scale: float
) -> float:
    """Hausdorff distance divided by the input's largest coordinate.

    Invariant under a common rescaling of a, b, and scale, which makes
    error magnitudes comparable across units.
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    return hausdorff(a, b) / scale


def reduction_bound(strategy: ReductionStrategy, n: int) -> float:
    """Worst-case scaled error of one farthest-point pass over n points."""
    if n <= 1:
        return 0.0
    if isinstance(strategy, Sequential):
        return (n - 1) * GAMMA6
    if isinstance(strategy, Blocked):
        m = strategy.m if strategy.m is not None else default_block_size(n)
        return (m + math.ceil(n / m)) * GAMMA6
    if isinstance(strategy, Pairwise):
        return math.ceil(math.log2(n)) * GAMMA6
    raise TypeError(f"unknown reduction strategy: {strategy!r}")


def forward_error(
    points: Sequence[Point],
    mode_hull: Hull,
    exact_hull: Hull,
    scale: float,
    strategy: ReductionStrategy = Sequential(),
) -> ErrorReport:
    """Measure a computed hull against the exact hull of the same input."""
    if scale <= 0:
        raise ValueError("scale must be positive")
    h = hausdorff(mode_hull, exact_hull)
    return ErrorReport(
        hausdorff=h,
        d_m=h / scale,
        scale=scale,
        depth=mode_hull.depth,
        bound=2.0 * mode_hull.depth * reduction_bound(strategy, len(points)),
    )


def conditioning_check(
    points: Sequence[Point],
    delta: float,
    trials: int,
    seed: int,
) -> bool:
    """Perturb each point by at most delta * scale and compare exact hulls.

    Passes when every trial satisfies
        d_M(CH(P), CH(P~)) <= d_M(P, P~) + 4 * eps,
    the slack absorbing the float rounding of the measurement itself.
    """
    pts = list(points)
    if len(pts) < 3:
        raise ValueError("need at least three points")
    if delta < 0:
        raise ValueError("delta must be non-negative")
    scale = max_abs_coord(pts)
    if scale == 0:
        raise ValueError("all-origin input has no scale")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    hull = quickhull(pts, PredicateMode.EXACT)
    for _ in range(trials):
        radius = delta * scale * np.sqrt(rng.random(len(pts)))
        angle = rng.random(len(pts)) * (2.0 * math.pi)
        moved = [
            Point(p.x + r * math.cos(t), p.y + r * math.sin(t))
            for p, r, t in zip(pts, radius, angle)
        ]
        moved_hull = quickhull(moved, PredicateMode.EXACT)
        d_hulls = scaled_hausdorff(hull, moved_hull, scale)
        d_sets = scaled_hausdorff(pts, moved, scale)
        if d_hulls > d_sets + 4.0 * EPS_DOUBLE:
            return False
    return True
