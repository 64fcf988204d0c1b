"""Seeded random grids, values and grid functions for sweeps and tests."""
import numpy as np

from core.grid import Grid, GridFunction, NetPartition
from core.multiindex import MultiIndex, nonzero_leq
from core.semigroup import (
    BoxValue,
    MultisetValue,
    RealValue,
    VectorValue,
    parse_space,
)

SPACE_TAGS = ('real', 'vector:2:l2', 'vector:3:l1', 'box:2', 'multiset')
ATOMS = ('a', 'b', 'c', 'd')


def make_rng(seed):
    return np.random.default_rng(seed)


def random_value(space, rng):
    space = parse_space(space) if isinstance(space, str) else space
    if space.kind == 'real':
        return RealValue(rng.uniform(-1.0, 1.0))
    if space.kind == 'vector':
        return VectorValue(tuple(rng.uniform(-1.0, 1.0, space.k)), space.norm)
    if space.kind == 'box':
        lower = rng.uniform(-1.0, 1.0, space.k)
        return BoxValue(tuple(lower),
                        tuple(lower + rng.uniform(0.0, 1.0, space.k)))
    return MultisetValue(tuple(
        (atom, int(n)) for atom, n in zip(ATOMS, rng.integers(0, 3, len(ATOMS)))))


def random_grid(rng, shape):
    """A grid with random strictly increasing axes of the given lengths"""
    axes = []
    for m in shape:
        steps = rng.uniform(0.1, 1.0, m - 1)
        axes.append(tuple(np.concatenate([[0.0], np.cumsum(steps)])))
    return Grid(tuple(axes))


def random_grid_function(grid, space, rng):
    space = parse_space(space) if isinstance(space, str) else space
    return GridFunction(
        grid, space, [random_value(space, rng) for _ in grid.nodes()])


def random_partition(rect, rng):
    """A random net partition of a non-degenerate rectangle"""
    per_axis = []
    for lo, hi in zip(rect.lo, rect.hi):
        interior = [i for i in range(lo + 1, hi) if rng.random() < 0.5]
        per_axis.append((lo, *interior, hi))
    return NetPartition(tuple(per_axis))


def random_totally_monotone(grid, rng):
    """
    A sum over alpha of cumulative sums of nonnegative cell increments;
    every signed mixed increment of the result is nonnegative.
    """
    total = np.full(grid.shape, rng.uniform(-1.0, 1.0))
    for alpha in nonzero_leq(MultiIndex.ones(grid.dims)):
        shape = [m - 1 if alpha[i] else 1 for i, m in enumerate(grid.shape)]
        increments = rng.uniform(0.0, 1.0, shape)
        pad = [(1, 0) if alpha[i] else (0, 0) for i in range(grid.dims)]
        levels = np.pad(increments, pad)
        for i in alpha.support:
            levels = np.cumsum(levels, axis=i)
        total = total + levels
    return GridFunction.from_array(grid, total)
