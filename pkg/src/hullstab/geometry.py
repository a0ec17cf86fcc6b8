"""Planar geometric predicates, in floating point and in exact arithmetic.

The floating-point predicates evaluate rewritten inequality forms whose
operation order is fixed and documented, because the error bounds of the
rest of the library depend on exactly that order.  The exact predicates
decide the same questions over arbitrary-precision rationals (every finite
double is a dyadic rational) and act as the ground truth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

#: Unit roundoff of IEEE-754 binary64 / binary32.
EPS_DOUBLE = 2.0**-53
EPS_SINGLE = 2.0**-24


def gamma(n: int, eps: float = EPS_DOUBLE) -> float:
    """Accumulated relative-error factor n*eps/(1 - n*eps) for n roundings."""
    if n * eps >= 1.0:
        raise ValueError("n * eps must be below 1")
    return (n * eps) / (1.0 - n * eps)


#: Error factor for the six roundings in one predicate evaluation.
GAMMA6 = gamma(6)


@dataclass(frozen=True)
class Point:
    """A point in the plane with finite double coordinates."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(
                f"point coordinates must be finite, got ({self.x!r}, {self.y!r})"
            )


@dataclass(frozen=True)
class DirectedSegment:
    """Oriented segment from ``p`` to ``q``; orients the line through them."""

    p: Point
    q: Point

    def is_degenerate(self) -> bool:
        return self.p.x == self.q.x and self.p.y == self.q.y


def _scaled_ints(*values: float) -> tuple[list[int], int]:
    """Exact integer images of doubles under a shared power-of-two scaling.

    Returns (ints, shift) such that value_i == ints[i] * 2**-shift exactly.
    """
    ratios = [float(v).as_integer_ratio() for v in values]
    # Denominators of finite doubles are powers of two.
    shift = max(d.bit_length() - 1 for _, d in ratios)
    return [n << (shift - (d.bit_length() - 1)) for n, d in ratios], shift


def _orient_int(p: Point, u: Point, q: Point) -> tuple[int, int]:
    coords, shift = _scaled_ints(p.x, p.y, u.x, u.y, q.x, q.y)
    px, py, ux, uy, qx, qy = coords
    return (px - ux) * (qy - uy) - (py - uy) * (qx - ux), shift


def orient_exact(p: Point, u: Point, q: Point) -> Fraction:
    """Exact (p.x-u.x)(q.y-u.y) - (p.y-u.y)(q.x-u.x).

    Positive for a clockwise turn p, u, q; zero iff the points are collinear.
    The magnitude is the area of the parallelogram spanned by u->p and u->q.
    """
    o, shift = _orient_int(p, u, q)
    return Fraction(o, 1 << (2 * shift))


def right_turn_exact(p: Point, u: Point, q: Point) -> bool:
    """True iff orient_exact(p, u, q) > 0 (u strictly off the line)."""
    o, _ = _orient_int(p, u, q)
    return o > 0


def right_turn_float(
    p: Point,
    u: Point,
    q: Point,
    qy_py: float | None = None,
    qx_px: float | None = None,
) -> bool:
    """Floating-point right-turn test in the rewritten, reusable form.

    Evaluates fl(fl(p.x-u.x) * fl(q.y-p.y)) > fl(fl(p.y-u.y) * fl(q.x-p.x)).
    The differences q.y-p.y and q.x-p.x may be passed in precomputed so a
    loop over u pays only four operations per point.  The expression shape
    must not be "simplified": the error analysis depends on it.
    """
    if qy_py is None:
        qy_py = q.y - p.y
    if qx_px is None:
        qx_px = q.x - p.x
    return (p.x - u.x) * qy_py > (p.y - u.y) * qx_px


def farther_float(
    p: Point,
    q: Point,
    u: Point,
    u2: Point,
    qy_py: float | None = None,
    qx_px: float | None = None,
) -> bool:
    """Floating-point test "u is farther from line pq than u2".

    Evaluates fl(fl(q.y-p.y) * fl(u.x-u2.x)) < fl(fl(q.x-p.x) * fl(u.y-u2.y)),
    which contains no subtraction of already-computed values.  As with
    right_turn_float, the two segment differences may be precomputed.
    """
    if qy_py is None:
        qy_py = q.y - p.y
    if qx_px is None:
        qx_px = q.x - p.x
    return qy_py * (u.x - u2.x) < qx_px * (u.y - u2.y)


def farther_exact(p: Point, q: Point, u: Point, u2: Point) -> bool:
    """Exact evaluation of the farther-from-line test.

    Equivalent to orient_exact(p, u, q) > orient_exact(p, u2, q); the
    rewritten form below is algebraically identical, not just sign-equal.
    """
    coords, _ = _scaled_ints(p.x, p.y, q.x, q.y, u.x, u.y, u2.x, u2.y)
    px, py, qx, qy, ux, uy, vx, vy = coords
    return (qy - py) * (ux - vx) < (qx - px) * (uy - vy)


def distance_to_line(u: Point, seg: DirectedSegment) -> float:
    """Euclidean distance from u to the line through seg, |orient| / ||p-q||.

    Exact up to the final conversion to float (at most two roundings).
    Measurement helper only; the hull algorithm never calls this.
    """
    if seg.is_degenerate():
        raise ValueError("cannot measure distance to a degenerate segment")
    p, q = seg.p, seg.q
    coords, shift = _scaled_ints(p.x, p.y, q.x, q.y, u.x, u.y)
    px, py, qx, qy, ux, uy = coords
    o = (px - ux) * (qy - uy) - (py - uy) * (qx - ux)
    l2 = (qx - px) ** 2 + (qy - py) ** 2
    # d^2 = o^2 / (l2 * 2**(2*shift)) exactly; one rounding to float, one sqrt.
    return math.sqrt(float(Fraction(o * o, l2) / (1 << (2 * shift))))


def max_abs_coord(points: Iterable[Point]) -> float:
    """Largest absolute coordinate over the points; 0.0 for no points."""
    m = 0.0
    for pt in points:
        ax = abs(pt.x)
        if ax > m:
            m = ax
        ay = abs(pt.y)
        if ay > m:
            m = ay
    return m
