"""
Tests for total monotonicity and the Jordan decomposition
"""
import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from core.exceptions import NonRealSpaceError
from core.grid import Grid, GridFunction, SubRectangle
from core.multiindex import MultiIndex
from core.sampling import make_rng, random_grid, random_grid_function
from core.semigroup import RealValue
from oracle.partitions import brute_force_variation
from variation.monotone import (
    is_totally_monotone,
    jordan_decomposition,
    signed_increments,
)


def real_function(grid, fn):
    return GridFunction.from_callable(
        grid, 'real', lambda point: RealValue(fn(*point)))


class MonotonicityTests(SimpleTestCase):
    """Test the monotonicity verdict"""

    def test_product_is_monotone(self):
        g = real_function(Grid.uniform(3, 3), lambda x1, x2: x1 * x2)
        self.assertTrue(is_totally_monotone(g))

    def test_decreasing_has_witness(self):
        verdict = is_totally_monotone(
            real_function(Grid.uniform(2), lambda x: -x))
        self.assertFalse(verdict)
        self.assertEqual(verdict.alpha, MultiIndex((1,)))
        self.assertEqual(verdict.cell, SubRectangle((0,), (1,)))
        self.assertEqual(verdict.increment, -1)

    def test_constant_is_monotone(self):
        g = real_function(Grid.uniform(3, 2), lambda x1, x2: 7.0)
        self.assertTrue(is_totally_monotone(g))

    def test_monotone_margins_but_not_mixed(self):
        """Increasing in each variable, yet a negative mixed increment"""
        g = real_function(Grid.uniform(2, 2), lambda x1, x2: min(x1 + x2, 1))
        verdict = is_totally_monotone(g)
        self.assertFalse(verdict)
        self.assertEqual(verdict.alpha, MultiIndex((1, 1)))

    def test_non_real(self):
        g = random_grid_function(Grid.uniform(2), 'multiset', make_rng(0))
        with self.assertRaises(NonRealSpaceError):
            is_totally_monotone(g)

    def test_signed_increments(self):
        values = np.array([[0.0, 1.0], [2.0, 5.0]])
        self.assertEqual(
            signed_increments(values, MultiIndex((1, 1))).tolist(), [[2.0]])


class JordanTests(SimpleTestCase):
    """Test g = nu - pi"""

    def test_identity(self):
        parts = jordan_decomposition(real_function(Grid.uniform(2), lambda x: x))
        self.assertEqual(parts.nu.as_array().tolist(), [0, 1])
        self.assertEqual(parts.pi.as_array().tolist(), [0, 0])

    def test_decreasing(self):
        parts = jordan_decomposition(real_function(Grid.uniform(2), lambda x: -x))
        self.assertEqual(parts.nu.as_array().tolist(), [0, 1])
        self.assertEqual(parts.pi.as_array().tolist(), [0, 2])

    def test_kink(self):
        g = real_function(Grid.uniform(3), lambda x: abs(x - .5))
        parts = jordan_decomposition(g)
        self.assertEqual(parts.nu.as_array().tolist(), [0, .5, 1])
        self.assertEqual(parts.pi.as_array().tolist(), [-.5, .5, .5])
        self.assertTrue(is_totally_monotone(parts.nu))
        self.assertTrue(is_totally_monotone(parts.pi))

    def test_kink_against_brute_force(self):
        """nu(x) is the largest variation over partitions of a..x"""
        g = real_function(Grid.uniform(3), lambda x: abs(x - .5))
        nu = jordan_decomposition(g).nu.as_array()
        for k in (1, 2):
            self.assertEqual(
                brute_force_variation(
                    g, MultiIndex((1,)), (0,), SubRectangle((0,), (k,))),
                nu[k])

    def test_non_real(self):
        f = random_grid_function(Grid.uniform(2), 'box:1', make_rng(0))
        with self.assertRaises(NonRealSpaceError):
            jordan_decomposition(f)

    @given(st.integers(0, 2 ** 32 - 1))
    @settings(max_examples=300, deadline=None)
    def test_random_decompositions(self, seed):
        rng = make_rng(seed)
        n = int(rng.integers(1, 4))
        grid = random_grid(rng, tuple(int(m) for m in rng.integers(2, 5, n)))
        g = random_grid_function(grid, 'real', rng)
        parts = jordan_decomposition(g)
        self.assertTrue(is_totally_monotone(parts.nu))
        self.assertTrue(is_totally_monotone(parts.pi))
        np.testing.assert_allclose(
            parts.recombined(), g.as_array(), rtol=0, atol=1e-12)
