"""
The discrete domain: rectangular grids, grid functions, sub-rectangles
and net partitions.

Nodes are addressed by integer index vectors. Flat storage is row-major
with axis 0 slowest, which is also the order of ``Grid.nodes``.
"""
import itertools
from dataclasses import dataclass

import numpy as np

from core.conf import vhk_setting
from core.exceptions import (
    DegenerateRectangleError,
    DimensionCapError,
    IndexRangeError,
    NonRealSpaceError,
    OrderError,
    PartitionMismatchError,
)
from core.semigroup import RealValue, ValueSpace, parse_space


@dataclass(frozen=True)
class Grid:
    """Strictly increasing coordinates per axis on the basic rectangle"""
    axes: tuple

    def __post_init__(self):
        axes = tuple(tuple(float(c) for c in axis) for axis in self.axes)
        if not axes:
            raise ValueError('grid needs at least one axis')
        if len(axes) > vhk_setting('MAX_DIMENSION'):
            raise DimensionCapError(
                f'dimension {len(axes)} exceeds the supported maximum')
        for axis in axes:
            if len(axis) < 2:
                raise ValueError('every axis needs at least two points')
            if any(b <= a for a, b in zip(axis, axis[1:])):
                raise ValueError('axis not strictly increasing')
        object.__setattr__(self, 'axes', axes)

    @classmethod
    def uniform(cls, *points_per_axis, lo=0.0, hi=1.0):
        return cls(tuple(
            tuple(np.linspace(lo, hi, m)) for m in points_per_axis))

    @property
    def dims(self):
        return len(self.axes)

    @property
    def shape(self):
        return tuple(len(axis) for axis in self.axes)

    @property
    def a(self):
        return tuple(axis[0] for axis in self.axes)

    @property
    def b(self):
        return tuple(axis[-1] for axis in self.axes)

    @property
    def first_index(self):
        return (0,) * self.dims

    @property
    def last_index(self):
        return tuple(m - 1 for m in self.shape)

    def point(self, index):
        self.check_index(index)
        return tuple(axis[i] for axis, i in zip(self.axes, index))

    def nodes(self):
        """Node index vectors in row-major order"""
        return itertools.product(*(range(m) for m in self.shape))

    def check_index(self, index):
        index = tuple(index)
        if len(index) != self.dims or any(
                not 0 <= i < m for i, m in zip(index, self.shape)):
            raise IndexRangeError(
                f'node index {index} outside grid of shape {self.shape}',
                index=index)
        return index

    def full_rectangle(self):
        return SubRectangle(self.first_index, self.last_index)

    def truncate(self, alpha):
        """The grid of the axes where alpha is one"""
        return Grid(tuple(self.axes[i] for i in alpha.support))


@dataclass(frozen=True)
class SubRectangle:
    """The node box lo <= node <= hi; degenerate faces are allowed"""
    lo: tuple
    hi: tuple

    def __post_init__(self):
        lo, hi = tuple(int(i) for i in self.lo), tuple(int(i) for i in self.hi)
        if len(lo) != len(hi):
            raise ValueError('rectangle corners of different dimension')
        if any(a > b for a, b in zip(lo, hi)):
            raise OrderError(f'rectangle corner {lo} is not below {hi}')
        object.__setattr__(self, 'lo', lo)
        object.__setattr__(self, 'hi', hi)

    @property
    def dims(self):
        return len(self.lo)

    @property
    def degenerate_axes(self):
        return tuple(
            i for i, (a, b) in enumerate(zip(self.lo, self.hi)) if a == b)

    @property
    def is_degenerate(self):
        return bool(self.degenerate_axes)

    def is_degenerate_on(self, alpha):
        return any(self.lo[i] == self.hi[i] for i in alpha.support)

    def truncate(self, alpha):
        support = alpha.support
        return SubRectangle(
            tuple(self.lo[i] for i in support),
            tuple(self.hi[i] for i in support))

    def check_in(self, grid):
        grid.check_index(self.lo)
        grid.check_index(self.hi)
        return self


@dataclass(frozen=True)
class NetPartition:
    """
    Per-axis increasing index sets; the first and last entries of each
    axis are the corners of the partitioned rectangle.
    """
    per_axis: tuple

    def __post_init__(self):
        per_axis = tuple(tuple(int(i) for i in axis) for axis in self.per_axis)
        for axis in per_axis:
            if len(axis) < 2:
                raise DegenerateRectangleError(
                    'every partition axis needs both endpoints')
            if any(b <= a for a, b in zip(axis, axis[1:])):
                raise ValueError('partition indices not strictly increasing')
        object.__setattr__(self, 'per_axis', per_axis)

    @property
    def dims(self):
        return len(self.per_axis)

    @property
    def rectangle(self):
        return SubRectangle(
            tuple(axis[0] for axis in self.per_axis),
            tuple(axis[-1] for axis in self.per_axis))

    def check_in(self, grid):
        if grid.dims != self.dims:
            raise PartitionMismatchError(
                f'{self.dims}-dimensional partition on a '
                f'{grid.dims}-dimensional grid')
        self.rectangle.check_in(grid)
        return self

    def refines(self, other):
        return self.rectangle == other.rectangle and all(
            set(mine) >= set(theirs)
            for mine, theirs in zip(self.per_axis, other.per_axis))

    @property
    def cell_count(self):
        count = 1
        for axis in self.per_axis:
            count *= len(axis) - 1
        return count


def finest_partition(grid, rect):
    """The partition using every grid index of a non-degenerate rectangle"""
    rect.check_in(grid)
    if rect.is_degenerate:
        raise DegenerateRectangleError(
            'degenerate rectangle', axes=rect.degenerate_axes)
    return NetPartition(tuple(
        tuple(range(lo, hi + 1)) for lo, hi in zip(rect.lo, rect.hi)))


def refine(p, q):
    """The common refinement: per-axis union of the index sets"""
    if p.rectangle != q.rectangle:
        raise PartitionMismatchError(
            'partitions of different rectangles cannot be refined together')
    return NetPartition(tuple(
        tuple(sorted(set(a) | set(b)))
        for a, b in zip(p.per_axis, q.per_axis)))


def cells(p):
    """The cells of a partition in row-major order"""
    steps = [list(zip(axis, axis[1:])) for axis in p.per_axis]
    return [
        SubRectangle(tuple(lo for lo, _ in combo), tuple(hi for _, hi in combo))
        for combo in itertools.product(*steps)
    ]


class GridFunction:
    """One semigroup value per grid node, all from one value space"""

    def __init__(self, grid, space, values):
        if isinstance(space, str):
            space = parse_space(space)
        if not isinstance(space, ValueSpace):
            raise TypeError('space must be a ValueSpace or a tag')
        flat = list(values.ravel()) if isinstance(values, np.ndarray) \
            else list(values)
        size = int(np.prod(grid.shape))
        if len(flat) != size:
            raise ValueError(
                f'value count mismatch: {len(flat)} values for '
                f'{size} nodes')
        array = np.empty(size, dtype=object)
        for position, value in enumerate(flat):
            if not space.accepts(value):
                raise ValueError(
                    f'value {value!r} at position {position} is not '
                    f'in the {space.tag} space')
            array[position] = value
        array = array.reshape(grid.shape)
        array.flags.writeable = False
        self.grid = grid
        self.space = space
        self.values = array

    @classmethod
    def from_callable(cls, grid, space, fn):
        """Sample ``fn(point)`` at every node, point given in coordinates"""
        return cls(grid, space, [fn(grid.point(idx)) for idx in grid.nodes()])

    @classmethod
    def from_array(cls, grid, array):
        """A real-valued function from a float array shaped like the grid"""
        array = np.asarray(array, dtype=float)
        if array.shape != grid.shape:
            raise ValueError(
                f'array of shape {array.shape} on grid {grid.shape}')
        return cls(grid, 'real', [RealValue(v) for v in array.ravel()])

    def at(self, index):
        return self.values[self.grid.check_index(index)]

    def __call__(self, index):
        return self.at(index)

    def flat_values(self):
        return list(self.values.ravel())

    def as_array(self):
        """Float array of a real-valued function"""
        if not self.space.is_real:
            raise NonRealSpaceError(
                f'{self.space.tag} function has no real array form')
        return np.vectorize(lambda v: v.value, otypes=[float])(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, GridFunction)
            and self.grid == other.grid
            and self.space == other.space
            and self.flat_values() == other.flat_values()
        )

    def __repr__(self):
        return (f'GridFunction(shape={self.grid.shape}, '
                f'space={self.space.tag!r})')
