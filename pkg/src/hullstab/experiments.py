"""Worst-case and randomized studies of the farthest-point reductions.

The Monte Carlo harness drives the scalar chain over random permutations
of the distance ladder; the injection experiments drive all three
reduction orders over the descending ladder (the worst order) and check
each against its comparison-count budget; the end-to-end experiment runs
float and exact hulls on generated inputs and measures the gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import fmean, pstdev
from typing import Callable, Sequence

import numpy as np

from .chain import chain_final_units
from .generators import GeneratorSpec, generate, mc_distance_ladder, permute
from .geometry import GAMMA6, max_abs_coord
from .metrics import ErrorReport, forward_error
from .quickhull import PredicateMode, quickhull
from .reduction import (
    Blocked,
    Pairwise,
    ReductionStrategy,
    Sequential,
    default_block_size,
)

DESK_N_VALUES = (256, 1024, 4096, 16384, 65536)
PAPER_N_VALUES = tuple(256 * 2**i for i in range(13))  # 256 .. 2**20
DEFAULT_K_VALUES = tuple(range(1, 11))


class BoundViolation(AssertionError):
    """A measured error exceeded its proven budget."""


@dataclass(frozen=True)
class ExperimentRecord:
    n: int
    k: int
    mean: float
    stddev: float


@dataclass(frozen=True)
class McConfig:
    n_values: Sequence[int] = DESK_N_VALUES
    k_values: Sequence[int] = DEFAULT_K_VALUES
    samples: int = 300
    repeats: int = 10
    seed: int = 0

    def __post_init__(self) -> None:
        if self.samples < 1 or self.repeats < 1:
            raise ValueError("samples and repeats must be at least 1")
        if not self.n_values or not self.k_values:
            raise ValueError("empty experiment grid")


def _derived_seed(master: int, *key: int) -> int:
    ss = np.random.SeedSequence([master, *key])
    return int(ss.generate_state(2, np.uint64)[0])


def monte_carlo_trial(n: int, k: int, seed: int) -> float:
    """One randomized chain run; returns the scaled error in tolerance units.

    Builds the descending distance ladder, shuffles it with the seed, and
    scans it with the worst-case rule: the incumbent advances to the
    newcomer whenever the newcomer is farther or the pair is inside the
    band.  The result is (d_max - d_final) with the tolerance as unit.
    """
    seq = permute(mc_distance_ladder(n, k), seed)
    final = chain_final_units(seq.units, k)
    return ((n - 1) - final) / k


def monte_carlo_experiment(cfg: McConfig) -> list[ExperimentRecord]:
    """Mean-of-means and across-repeat spread for every grid cell.

    Each repeat averages cfg.samples independent trials; trial seeds are
    derived from (seed, n, k, repeat, sample) so any cell can be
    reproduced or recomputed in isolation.  Rows come out in (k, n) order.
    """
    records = []
    for k in cfg.k_values:
        for n in cfg.n_values:
            repeat_means = []
            for rep in range(cfg.repeats):
                total = 0.0
                for samp in range(cfg.samples):
                    total += monte_carlo_trial(
                        n, k, _derived_seed(cfg.seed, n, k, rep, samp)
                    )
                repeat_means.append(total / cfg.samples)
            records.append(
                ExperimentRecord(
                    n=n,
                    k=k,
                    mean=fmean(repeat_means),
                    stddev=pstdev(repeat_means),
                )
            )
    return records


def _scalar_adversarial(k: int) -> Callable[[int, int], bool]:
    """Scalar comparator that answers wrongly inside the band: is u farther
    than the incumbent u2?"""

    def cmp(u: int, u2: int) -> bool:
        truth = u > u2
        if abs(u - u2) <= k:
            return not truth
        return truth

    return cmp


def _scalar_reduce(
    values: Sequence[int], cmp: Callable[[int, int], bool], strategy: ReductionStrategy
) -> int:
    if isinstance(strategy, Sequential):
        inc = values[0]
        for x in values[1:]:
            if cmp(x, inc):
                inc = x
        return inc
    if isinstance(strategy, Blocked):
        n = len(values)
        m = strategy.m if strategy.m is not None else default_block_size(n)
        inc = values[0]
        for start in range(1, n, m):
            b = values[start]
            for i in range(start + 1, min(start + m, n)):
                if cmp(values[i], b):
                    b = values[i]
            if cmp(b, inc):
                inc = b
        return inc
    if isinstance(strategy, Pairwise):

        def rec(lo: int, hi: int) -> int:
            if hi - lo == 1:
                return values[lo]
            mid = lo + (hi - lo) // 2
            w1 = rec(lo, mid)
            w2 = rec(mid, hi)
            return w1 if cmp(w1, w2) else w2

        return rec(0, len(values))
    raise TypeError(f"unknown reduction strategy: {strategy!r}")


def injection_budget(n: int, k: int, strategy: ReductionStrategy) -> float:
    """Worst-case scaled error, in tolerance units, for the strategy."""
    if n <= 1:
        return 0.0
    if isinstance(strategy, Sequential):
        return (n - 1) / k
    if isinstance(strategy, Blocked):
        m = strategy.m if strategy.m is not None else default_block_size(n)
        return m + math.ceil(n / m)
    if isinstance(strategy, Pairwise):
        return math.ceil(math.log2(n))
    raise TypeError(f"unknown reduction strategy: {strategy!r}")


def injection_experiment(
    n: int, k: int, strategy: ReductionStrategy
) -> tuple[float, float]:
    """Deterministic worst-order run with a band-wrong comparator.

    Scans the descending ladder and returns (measured, budget), both in
    tolerance units.  Raises BoundViolation if the measurement ever
    exceeds the budget.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be at least 1")
    values = list(range(n - 1, -1, -1))
    final = _scalar_reduce(values, _scalar_adversarial(k), strategy)
    measured = ((n - 1) - final) / k
    budget = injection_budget(n, k, strategy)
    if measured > budget:
        raise BoundViolation(
            f"measured {measured} exceeds budget {budget} "
            f"for {strategy!r} at n={n}, k={k}"
        )
    return measured, budget


def forward_error_experiment(
    spec: GeneratorSpec, strategy: ReductionStrategy = Sequential()
) -> tuple[ErrorReport, bool]:
    """Float hull vs exact hull on one generated input.

    Returns the error report and whether the observed error also stayed
    inside the practical-regime level of 10 * log2(hull size) tolerance
    units (reported only; the hard budget is report.bound).
    """
    points = generate(spec)
    float_hull = quickhull(points, PredicateMode.FLOAT, strategy)
    exact_hull = quickhull(points, PredicateMode.EXACT, strategy)
    scale = max_abs_coord(points)
    report = forward_error(points, float_hull, exact_hull, scale, strategy)
    hull_size = max(len(exact_hull.vertices), 2)
    practical = report.d_m <= 10.0 * math.log2(hull_size) * GAMMA6
    return report, practical
