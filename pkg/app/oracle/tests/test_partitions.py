"""
Tests for exhaustive partitions and the engine-vs-oracle agreement
"""
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from core.exceptions import DegenerateRectangleError, PartitionCapError
from core.grid import Grid, GridFunction, SubRectangle, finest_partition
from core.multiindex import MultiIndex, nonzero_leq
from core.sampling import (
    SPACE_TAGS,
    make_rng,
    random_grid,
    random_grid_function,
)
from core.semigroup import RealValue
from oracle.identities import IdentityReport
from oracle.partitions import (
    brute_force_search,
    brute_force_variation,
    enumerate_partitions,
    oracle_prevariation,
    partition_count,
)
from oracle.sweep import check_oracle_equivalence
from variation.engine import prevariation, vitali_variation


def real_function(grid, fn):
    return GridFunction.from_callable(
        grid, 'real', lambda point: RealValue(fn(*point)))


class EnumerationTests(SimpleTestCase):
    """Test the partition walk"""

    def test_three_points(self):
        grid = Grid.uniform(3)
        partitions = list(enumerate_partitions(grid, grid.full_rectangle()))
        self.assertEqual([p.per_axis for p in partitions],
                         [((0, 2),), ((0, 1, 2),)])

    def test_two_points(self):
        grid = Grid.uniform(2)
        partitions = list(enumerate_partitions(grid, grid.full_rectangle()))
        self.assertEqual([p.per_axis for p in partitions], [((0, 1),)])

    def test_square(self):
        grid = Grid.uniform(3, 3)
        self.assertEqual(
            len(list(enumerate_partitions(grid, grid.full_rectangle()))), 4)

    def test_each_partition_once(self):
        grid = Grid.uniform(5, 4)
        rect = grid.full_rectangle()
        seen = [p.per_axis for p in enumerate_partitions(grid, rect)]
        self.assertEqual(len(seen), partition_count(rect))
        self.assertEqual(len(seen), 2 ** 3 * 2 ** 2)
        self.assertEqual(len(set(seen)), len(seen))
        self.assertIn(finest_partition(grid, rect).per_axis, seen)

    def test_subrectangle(self):
        grid = Grid.uniform(5)
        partitions = enumerate_partitions(grid, SubRectangle((1,), (3,)))
        self.assertEqual([p.per_axis for p in partitions],
                         [((1, 3),), ((1, 2, 3),)])

    def test_cap(self):
        grid = Grid.uniform(5, 5)
        with self.assertRaisesMessage(PartitionCapError, 'exceed the cap'):
            enumerate_partitions(grid, grid.full_rectangle(), cap=10)

    def test_degenerate(self):
        with self.assertRaises(DegenerateRectangleError):
            partition_count(SubRectangle((1,), (1,)))


class BruteForceTests(SimpleTestCase):
    """Test the literal supremum on worked examples"""

    def test_identity(self):
        f = real_function(Grid.uniform(3), lambda x: x)
        self.assertEqual(brute_force_variation(
            f, MultiIndex((1,)), (0,), SubRectangle((0,), (2,))), 1)

    def test_product(self):
        grid = Grid.uniform(3, 3)
        f = real_function(grid, lambda x1, x2: x1 * x2)
        best, maximisers = brute_force_search(
            f, MultiIndex((1, 1)), (0, 0), grid.full_rectangle())
        self.assertEqual(best, 1)
        self.assertEqual(len(maximisers), 4)

    def test_constant(self):
        grid = Grid.uniform(3, 3)
        f = real_function(grid, lambda x1, x2: 2.0)
        self.assertEqual(brute_force_variation(
            f, MultiIndex((1, 1)), (0, 0), grid.full_rectangle()), 0)

    def test_kink_needs_the_finest_partition(self):
        grid = Grid.uniform(3)
        f = real_function(grid, lambda x: abs(x - .5))
        best, maximisers = brute_force_search(
            f, MultiIndex((1,)), (0,), grid.full_rectangle())
        self.assertEqual(best, 1)
        self.assertEqual([p.per_axis for p in maximisers], [((0, 1, 2),)])

    def test_degenerate_truncation(self):
        grid = Grid.uniform(3, 3)
        f = real_function(grid, lambda x1, x2: x1 * x2)
        self.assertEqual(brute_force_search(
            f, MultiIndex((0, 1)), (0, 0), SubRectangle((0, 1), (2, 1))),
            (0.0, []))

    def test_zero_multiindex(self):
        grid = Grid.uniform(2)
        with self.assertRaises(ValueError):
            brute_force_variation(
                real_function(grid, lambda x: x), MultiIndex((0,)), (0,),
                grid.full_rectangle())


class AgreementTests(SimpleTestCase):
    """Engine and oracle on random grid functions"""

    @given(st.integers(0, 2 ** 32 - 1), st.sampled_from(SPACE_TAGS))
    @settings(max_examples=200, deadline=None)
    def test_vitali_matches_brute_force(self, seed, space):
        rng = make_rng(seed)
        shape = ((int(rng.integers(2, 6)), int(rng.integers(2, 6)))
                 if rng.random() < 0.5 else (3, 3, 3))
        grid = random_grid(rng, shape)
        f = random_grid_function(grid, space, rng)
        rect = grid.full_rectangle()
        for alpha in nonzero_leq(MultiIndex.ones(grid.dims)):
            oracle, maximisers = brute_force_search(f, alpha, rect.lo, rect)
            engine = vitali_variation(f, alpha, rect.lo, rect)
            self.assertAlmostEqual(engine, oracle, delta=1e-12 * max(1, oracle))
            finest = finest_partition(
                grid.truncate(alpha), rect.truncate(alpha))
            self.assertIn(finest, maximisers)

    @given(st.integers(0, 2 ** 32 - 1), st.sampled_from(SPACE_TAGS))
    @settings(max_examples=60, deadline=None)
    def test_prevariations_agree(self, seed, space):
        """Both sides score every partition the same way"""
        rng = make_rng(seed)
        grid = random_grid(rng, (int(rng.integers(2, 5)), 3))
        f = random_grid_function(grid, space, rng)
        rect = grid.full_rectangle()
        alpha = MultiIndex((1, 1))
        for partition in enumerate_partitions(grid, rect):
            self.assertAlmostEqual(
                oracle_prevariation(f, (0, 1), rect.lo, partition),
                prevariation(f, alpha, rect.lo, partition),
                delta=1e-12)

    def test_sweep_report(self):
        report = IdentityReport(seed=7)
        check_oracle_equivalence(report, 3, 2, 4, make_rng(7))
        self.assertTrue(report.checks)
        self.assertTrue(report.passed)
        self.assertEqual(set(report.matrix()['oracle_equivalence']),
                         set(SPACE_TAGS))
