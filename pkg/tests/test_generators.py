import math
from fractions import Fraction

import numpy as np
import pytest

from hullstab.generators import (
    DistanceSequence,
    GeneratorKind,
    GeneratorSpec,
    generate,
    ladder_instance,
    mc_distance_ladder,
    permute,
)
from hullstab.geometry import GAMMA6, Point, max_abs_coord
from hullstab.quickhull import PredicateMode, quickhull
from hullstab.reduction import _within_tolerance


class TestSpecs:
    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            GeneratorSpec(GeneratorKind.GAUSSIAN, 0)

    def test_ladder_requires_even_n(self):
        with pytest.raises(ValueError):
            GeneratorSpec(GeneratorKind.LADDER, 9)

    def test_ladder_requires_positive_k(self):
        with pytest.raises(ValueError):
            GeneratorSpec(GeneratorKind.LADDER, 10, k=0)


class TestDeterminism:
    @pytest.mark.parametrize("kind", list(GeneratorKind))
    def test_same_spec_same_points(self, kind):
        n = 16
        a = generate(GeneratorSpec(kind, n, seed=42, k=2))
        b = generate(GeneratorSpec(kind, n, seed=42, k=2))
        assert a == b

    def test_different_seeds_differ(self):
        a = generate(GeneratorSpec(GeneratorKind.UNIFORM_DISK, 16, seed=1))
        b = generate(GeneratorSpec(GeneratorKind.UNIFORM_DISK, 16, seed=2))
        assert a != b


class TestCloudGenerators:
    def test_circle_points_are_all_hull_vertices(self):
        pts = generate(GeneratorSpec(GeneratorKind.UNIFORM_CIRCLE, 4, seed=8))
        h = quickhull(pts, PredicateMode.EXACT)
        assert set(h.vertices) == set(pts)

    def test_collinear_hull_is_two_points(self):
        for seed in range(5):
            pts = generate(GeneratorSpec(GeneratorKind.COLLINEAR, 10, seed=seed))
            h = quickhull(pts, PredicateMode.EXACT)
            assert len(h.vertices) == 2

    def test_duplicates_present(self):
        pts = generate(GeneratorSpec(GeneratorKind.WITH_DUPLICATES, 30, seed=0))
        assert len(set(pts)) < len(pts)

    def test_disk_hull_stays_small(self):
        for n in (64, 128, 256):
            pts = generate(GeneratorSpec(GeneratorKind.UNIFORM_DISK, n, seed=13))
            h = quickhull(pts, PredicateMode.EXACT)
            assert len(h.vertices) < n / 2

    def test_grid_points_unique(self):
        pts = generate(GeneratorSpec(GeneratorKind.GRID, 20, seed=3))
        assert len(set(pts)) == 20


class TestLadder:
    def test_point_count_and_scale(self):
        lad = ladder_instance(20, 5)
        assert len(lad.points) == 20
        assert lad.scale == 1.0
        assert max_abs_coord([*lad.points, lad.segment.p, lad.segment.q]) == 1.0

    def test_spacing_is_exact_and_just_under_target(self):
        for k in (1, 2, 5, 10):
            lad = ladder_instance(12, k)
            # every consecutive distance gap equals the recorded spacing
            ys = [p.y for p in lad.points]
            gaps = {a - b for a, b in zip(ys, ys[1:])}
            assert gaps == {lad.spacing}
            assert Fraction(lad.spacing) < Fraction(GAMMA6) / k
            assert lad.spacing == pytest.approx(GAMMA6 / k, rel=2e-3)

    def test_adjacent_ranks_inside_band_and_gap_k_plus_one_outside(self):
        for k in (1, 3, 10):
            lad = ladder_instance(2 * (k + 2), k)
            p, q = lad.segment.p, lad.segment.q
            assert _within_tolerance(p, q, lad.points[0], lad.points[1], GAMMA6, 1.0)
            assert _within_tolerance(p, q, lad.points[0], lad.points[k], GAMMA6, 1.0)
            assert not _within_tolerance(
                p, q, lad.points[0], lad.points[k + 1], GAMMA6, 1.0
            )

    def test_arms_alternate(self):
        lad = ladder_instance(8, 1)
        xs = [p.x for p in lad.points]
        assert xs == [-1 / 32, 31 / 32] * 4

    def test_odd_n_rejected(self):
        with pytest.raises(ValueError):
            ladder_instance(7, 1)


class TestDistanceLadder:
    def test_single_value(self):
        seq = mc_distance_ladder(1, 4)
        assert seq.n == 1
        assert list(seq.units) == [0]

    def test_descending_unit_spacing(self):
        seq = mc_distance_ladder(6, 3)
        assert list(seq.units) == [5, 4, 3, 2, 1, 0]
        # the integer units carry the exact spacing; the float view is
        # for reporting and rounds once per entry
        assert np.allclose(np.diff(seq.values), -1.0 / 3, rtol=1e-15, atol=0)

    def test_band_structure_k1(self):
        # spacing is one third of the tolerance at k=3: gaps of up to 3
        # units are indistinguishable, anything larger is not
        seq = mc_distance_ladder(3, 1)
        gaps = np.abs(seq.units[:, None] - seq.units[None, :])
        indist = gaps <= seq.k
        assert indist[0, 1] and indist[1, 2]
        assert not indist[0, 2]

    def test_band_structure_k10(self):
        seq = mc_distance_ladder(256, 10)
        gaps = np.abs(seq.units[:, None] - seq.units[None, :])
        assert np.all((gaps <= 10) == (gaps <= seq.k))

    def test_values_unit_is_the_tolerance(self):
        seq = mc_distance_ladder(4, 2)
        assert list(seq.values) == [1.5, 1.0, 0.5, 0.0]


class TestPermute:
    def test_single_element_unchanged(self):
        seq = mc_distance_ladder(1, 1)
        assert list(permute(seq, 9).units) == [0]

    def test_same_seed_same_permutation(self):
        seq = mc_distance_ladder(32, 2)
        assert list(permute(seq, 5).units) == list(permute(seq, 5).units)

    def test_preserves_multiset(self):
        seq = mc_distance_ladder(50, 2)
        assert sorted(permute(seq, 1).units) == list(range(50))

    def test_slots_are_uniform(self):
        # chi-square over element-by-slot counts, n=4, 2400 seeds;
        # 9 dof, far below the 0.999 quantile ~ 27.9
        n, runs = 4, 2400
        counts = np.zeros((n, n))
        seq = mc_distance_ladder(n, 1)
        for seed in range(runs):
            arr = permute(seq, seed).units
            for slot, v in enumerate(arr):
                counts[slot, v] += 1
        expected = runs / n
        chi2 = ((counts - expected) ** 2 / expected).sum()
        assert chi2 < 40.0
