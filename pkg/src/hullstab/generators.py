"""Input generators: random clouds, degenerate families, and the ladder.

Everything is deterministic given its seed.  The ladder realizes a chain
of points whose successive distances to a fixed segment differ by (just
under) tol/k for tolerance gamma-6, the configuration on which a farthest
point scan makes every within-band mistake; the abstract distance ladder
provides the same structure as pure scalars for the chain simulations.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geometry import GAMMA6, DirectedSegment, Point

#: Offset grid for realized ladders: all offsets are multiples of 2**-63,
#: so every coordinate below is exactly representable.
_LADDER_GRID_EXP = -63
_LADDER_TOP_UNITS = 1 << 52


class GeneratorKind(enum.Enum):
    UNIFORM_DISK = "uniform-disk"
    UNIFORM_CIRCLE = "uniform-circle"
    GAUSSIAN = "gaussian"
    COLLINEAR = "collinear"
    WITH_DUPLICATES = "with-duplicates"
    LADDER = "ladder"
    GRID = "grid"


@dataclass(frozen=True)
class GeneratorSpec:
    kind: GeneratorKind
    n: int
    seed: int = 0
    k: int = 1  # ladder band width; ignored by other kinds

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.kind is GeneratorKind.LADDER:
            if self.n % 2 != 0:
                raise ValueError("ladder needs an even point count (two arms)")
            if self.k < 1:
                raise ValueError("ladder band width k must be at least 1")


@dataclass(frozen=True)
class LadderInstance:
    """Realized ladder plus the segment and spacing it was built against."""

    points: tuple[Point, ...]
    segment: DirectedSegment
    spacing: float
    scale: float
    k: int


def ladder_instance(n: int, k: int) -> LadderInstance:
    """Two interleaved arms of points with uniformly spaced line distances.

    The distance gap between successive ranks is the largest grid multiple
    of 2**-63 that stays strictly below gamma6/k, so every adjacent pair
    sits inside the tolerance band while rank gaps of k+1 or more fall
    outside it.  (gamma6 itself is not a dyadic rational, so the nominal
    spacing cannot be realized exactly; the actual spacing is recorded.)
    Emission order alternates arms in decreasing distance, the order that
    makes a sequential scan err on every comparison.
    """
    if n < 2 or n % 2 != 0:
        raise ValueError("ladder needs an even point count of at least 2")
    if k < 1:
        raise ValueError("band width k must be at least 1")
    units = int(Fraction(GAMMA6) * (1 << -_LADDER_GRID_EXP) // k)
    if n * units >= _LADDER_TOP_UNITS:
        raise ValueError("ladder too long for the offset grid")
    arm_x = (-1.0 / 32.0, 31.0 / 32.0)
    pts = []
    for rank in range(n):
        y = math.ldexp(float(_LADDER_TOP_UNITS - rank * units), _LADDER_GRID_EXP)
        pts.append(Point(arm_x[rank % 2], y))
    seg = DirectedSegment(Point(0.0, 0.0), Point(1.0, 0.0))
    return LadderInstance(
        points=tuple(pts),
        segment=seg,
        spacing=math.ldexp(float(units), _LADDER_GRID_EXP),
        scale=1.0,
        k=k,
    )


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed))


def generate(spec: GeneratorSpec) -> list[Point]:
    """Materialize a point set; identical output for identical specs."""
    n, seed = spec.n, spec.seed
    kind = spec.kind
    if kind is GeneratorKind.LADDER:
        return list(ladder_instance(n, spec.k).points)
    rng = _rng(seed)
    if kind is GeneratorKind.UNIFORM_DISK:
        r = np.sqrt(rng.random(n))
        t = rng.random(n) * (2.0 * math.pi)
        return [Point(float(ri * math.cos(ti)), float(ri * math.sin(ti))) for ri, ti in zip(r, t)]
    if kind is GeneratorKind.UNIFORM_CIRCLE:
        t = rng.random(n) * (2.0 * math.pi)
        return [Point(math.cos(ti), math.sin(ti)) for ti in t]
    if kind is GeneratorKind.GAUSSIAN:
        xy = rng.standard_normal((n, 2))
        return [Point(float(x), float(y)) for x, y in xy]
    if kind is GeneratorKind.COLLINEAR:
        # Integer base, direction, and parameters keep collinearity exact.
        bx, by = int(rng.integers(-8, 9)), int(rng.integers(-8, 9))
        dx, dy = 0, 0
        while dx == 0 and dy == 0:
            dx, dy = int(rng.integers(-8, 9)), int(rng.integers(-8, 9))
        ts = rng.choice(np.arange(-4 * n, 4 * n), size=n, replace=False)
        return [Point(float(bx + int(t) * dx), float(by + int(t) * dy)) for t in ts]
    if kind is GeneratorKind.WITH_DUPLICATES:
        base_n = max(1, n // 3)
        base = generate(GeneratorSpec(GeneratorKind.UNIFORM_DISK, base_n, seed))
        idx = rng.integers(0, base_n, size=n)
        return [base[i] for i in idx]
    if kind is GeneratorKind.GRID:
        side = math.isqrt(n - 1) + 1
        cells = [(float(i), float(j)) for i in range(side) for j in range(side)]
        order = rng.permutation(len(cells))[:n]
        return [Point(*cells[i]) for i in order]
    raise ValueError(f"unknown generator kind: {kind!r}")


@dataclass(frozen=True, eq=False)
class DistanceSequence:
    """Distances from a notional segment, as integer multiples of a step.

    units[i] is the distance in steps of (tolerance / k); dividing by k
    yields the distance with the tolerance itself as the unit, and the
    normalization scale is 1.  Two entries are indistinguishable at
    working precision iff their unit gap is at most k.  Keeping integers
    makes every band decision and error measurement exact.
    """

    units: np.ndarray
    k: int

    @property
    def n(self) -> int:
        return int(self.units.shape[0])

    @property
    def values(self) -> np.ndarray:
        """Distances with the tolerance as unit (floats, for reporting)."""
        return self.units / self.k


def mc_distance_ladder(n: int, k: int) -> DistanceSequence:
    """n equally spaced distances in descending order, gap = tolerance/k."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be at least 1")
    return DistanceSequence(np.arange(n - 1, -1, -1, dtype=np.int64), k)


def permute(seq: DistanceSequence, seed: int) -> DistanceSequence:
    """Uniform seeded shuffle of the sequence."""
    rng = _rng(seed)
    return DistanceSequence(rng.permutation(seq.units), seq.k)
