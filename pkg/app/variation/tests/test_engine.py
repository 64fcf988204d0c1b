"""
Tests for mixed differences and the variations on worked examples
"""
from django.test import SimpleTestCase

from core.exceptions import EmptyTruncationError, OrderError
from core.grid import Grid, GridFunction, NetPartition, SubRectangle
from core.multiindex import MultiIndex
from core.semigroup import BoxValue, MultisetValue, RealValue
from variation.engine import (
    TruncatedMap,
    expansion_label,
    mixed_difference,
    pointwise_bound,
    prevariation,
    total_variation,
    total_variation_function,
    tv_increment_bound,
    tv_subrectangle,
    vitali_variation,
)


def real_function(grid, fn):
    """Create a real grid function from fn(*coordinates)"""
    return GridFunction.from_callable(
        grid, 'real', lambda point: RealValue(fn(*point)))


def mi(bits):
    return MultiIndex.from_bits(bits)


class MixedDifferenceTests(SimpleTestCase):
    """Test mixed differences of truncated maps"""

    def setUp(self):
        self.product = real_function(Grid.uniform(2, 2), lambda x1, x2: x1 * x2)

    def test_second_order(self):
        self.assertEqual(
            mixed_difference(self.product, mi('11'), (0, 0), (1, 1)), 1)

    def test_flat_support_gives_zero(self):
        f = real_function(Grid.uniform(3, 3), lambda x1, x2: x1 + 3 * x2)
        self.assertEqual(mixed_difference(f, mi('10'), (1, 0), (1, 2)), 0)

    def test_first_order(self):
        f = real_function(Grid.uniform(2), lambda x: x)
        self.assertEqual(mixed_difference(f, mi('1'), (0,), (1,)), 1)

    def test_zero_multiindex(self):
        with self.assertRaises(EmptyTruncationError):
            mixed_difference(self.product, mi('00'), (0, 0), (1, 1))

    def test_unordered_nodes(self):
        with self.assertRaises(OrderError):
            mixed_difference(self.product, mi('11'), (1, 1), (0, 0))

    def test_base_off_the_support(self):
        """Coordinates off the support come from the base node"""
        grid = Grid.uniform(3, 3)
        f = real_function(grid, lambda x1, x2: x1 * x2)
        self.assertEqual(
            mixed_difference(f, mi('10'), (0, 0), (2, 0), z=(0, 2)), 1)
        self.assertEqual(
            mixed_difference(f, mi('10'), (0, 0), (2, 0), z=(0, 1)), 0.5)

    def test_multiset_values(self):
        grid = Grid.uniform(2, 2)
        f = GridFunction.from_callable(
            grid, 'multiset', lambda p: MultisetValue.of(f'{p[0]:g},{p[1]:g}'))
        self.assertEqual(mixed_difference(f, mi('11'), (0, 0), (1, 1)), 4)

    def test_truncated_map_view(self):
        grid = Grid.uniform(3, 3)
        f = real_function(grid, lambda x1, x2: x1 + 10 * x2)
        view = TruncatedMap(f, mi('01'), (2, 0))
        self.assertEqual(view.grid.shape, (3,))
        self.assertEqual(view((1,)), RealValue(1 + 5))
        self.assertEqual(view.mixed_difference((0,), (2,)), 10)


class VariationTests(SimpleTestCase):
    """Test Vitali and total variation"""

    def setUp(self):
        self.grid = Grid.uniform(3, 3)
        self.product = real_function(self.grid, lambda x1, x2: x1 * x2)
        self.identity = real_function(Grid.uniform(3), lambda x: x)

    def test_prevariation_telescopes(self):
        self.assertEqual(
            prevariation(self.identity, mi('1'), (0,),
                         NetPartition(((0, 1, 2),))), 1)
        self.assertEqual(
            prevariation(self.identity, mi('1'), (0,),
                         NetPartition(((0, 2),))), 1)

    def test_prevariation_product(self):
        self.assertEqual(
            prevariation(self.product, mi('11'), (0, 0),
                         NetPartition(((0, 1, 2), (0, 1, 2)))), 1)

    def test_vitali_variation(self):
        self.assertEqual(vitali_variation(
            self.identity, mi('1'), (0,), SubRectangle((0,), (2,))), 1)
        self.assertEqual(vitali_variation(
            self.product, mi('11'), (0, 0), self.grid.full_rectangle()), 1)
        additive = real_function(self.grid, lambda x1, x2: x1 + x2)
        self.assertEqual(vitali_variation(
            additive, mi('11'), (0, 0), self.grid.full_rectangle()), 0)

    def test_vitali_variation_degenerate(self):
        self.assertEqual(vitali_variation(
            self.product, mi('11'), (0, 0), SubRectangle((0, 1), (2, 1))), 0)

    def test_total_variation_identity(self):
        self.assertEqual(total_variation(self.identity).tv, 1)

    def test_total_variation_product(self):
        report = total_variation(self.product)
        self.assertEqual(
            {alpha.bits: v for alpha, v in report.per_alpha.items()},
            {'01': 0, '10': 0, '11': 1})
        self.assertEqual(report.tv, 1)
        self.assertEqual(report.vitali_n, 1)
        self.assertEqual(report.shape, (3, 3))
        self.assertEqual(report.degenerate, ())

    def test_total_variation_constant(self):
        for space, value in (('real', RealValue(2)),
                             ('box:1', BoxValue((0,), (1,))),
                             ('multiset', MultisetValue.of('a', 'b'))):
            f = GridFunction(self.grid, space, [value] * 9)
            self.assertEqual(total_variation(f).tv, 0)

    def test_labels(self):
        self.assertEqual(expansion_label(mi('1')), 'V1(f)')
        self.assertEqual(expansion_label(mi('10')), 'V1(f(·,a2))')
        self.assertEqual(expansion_label(mi('01')), 'V1(f(a1,·))')
        self.assertEqual(expansion_label(mi('11')), 'V2(f)')
        self.assertEqual(expansion_label(mi('101')), 'V2(f(·,a2,·))')
        labels = [row['label'] for row in total_variation(self.product).labelled()]
        self.assertEqual(labels, ['V1(f(a1,·))', 'V1(f(·,a2))', 'V2(f)'])


class TotalVariationFunctionTests(SimpleTestCase):

    def test_kink(self):
        f = real_function(Grid.uniform(3), lambda x: abs(x - .5))
        self.assertEqual(
            total_variation_function(f).as_array().tolist(), [0, .5, 1])

    def test_constant(self):
        f = real_function(Grid.uniform(3, 2), lambda x1, x2: 4.0)
        self.assertFalse(total_variation_function(f).as_array().any())

    def test_product(self):
        grid = Grid.uniform(3, 3)
        f = real_function(grid, lambda x1, x2: x1 * x2)
        self.assertEqual(total_variation_function(f), f)


class BoundTests(SimpleTestCase):
    """Test the pointwise bound and the variation over subrectangles"""

    def setUp(self):
        self.product = real_function(Grid.uniform(3, 3), lambda x1, x2: x1 * x2)

    def test_pointwise_bound_additive(self):
        f = real_function(Grid.uniform(2, 2), lambda x1, x2: x1 + x2)
        bound = pointwise_bound(f, (0, 0), (1, 1))
        self.assertEqual((bound.d_val, bound.md_sum, bound.tv_sub), (2, 2, 2))
        self.assertTrue(bound.holds())

    def test_pointwise_bound_product(self):
        bound = pointwise_bound(self.product, (0, 0), (2, 2))
        self.assertEqual((bound.d_val, bound.md_sum, bound.tv_sub), (1, 1, 1))

    def test_pointwise_bound_same_node(self):
        bound = pointwise_bound(self.product, (1, 2), (1, 2))
        self.assertEqual((bound.d_val, bound.md_sum, bound.tv_sub), (0, 0, 0))

    def test_pointwise_bound_order(self):
        with self.assertRaises(OrderError):
            pointwise_bound(self.product, (2, 0), (0, 2))

    def test_tv_subrectangle(self):
        self.assertEqual(
            tv_subrectangle(self.product, (0, 0), (2, 2), mi('11')),
            total_variation(self.product).tv)
        self.assertEqual(
            tv_subrectangle(self.product, (1, 1), (1, 1), mi('11')), 0)
        self.assertEqual(
            tv_subrectangle(self.product, (1, 1), (2, 2), mi('11')), 0.75)

    def test_tv_subrectangle_zero_gamma(self):
        with self.assertRaises(EmptyTruncationError):
            tv_subrectangle(self.product, (0, 0), (2, 2), mi('00'))

    def test_increment_bound(self):
        lhs, rhs = tv_increment_bound(self.product, (1, 1), (2, 2), mi('11'))
        self.assertEqual(lhs, 0.75)
        self.assertEqual(rhs, 0.75)
        lhs, rhs = tv_increment_bound(self.product, (1, 1), (2, 2), mi('10'))
        self.assertLessEqual(lhs, rhs)
