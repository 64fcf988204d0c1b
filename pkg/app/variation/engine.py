"""
Mixed differences and the Vitali, Hardy-Krause and total variations of
grid functions valued in a metric semigroup.

On a finite grid the supremum over net partitions is attained at the
finest one: refining a partition never lowers the prevariation. Every
variation below is therefore a single pass over adjacent cells.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from core.conf import tolerance
from core.exceptions import EmptyTruncationError, OrderError
from core.grid import GridFunction, SubRectangle, cells, finest_partition
from core.multiindex import (
    MultiIndex,
    Parity,
    enumerate_leq,
    nonzero_leq,
)
from core.semigroup import semigroup_sum

logger = logging.getLogger(__name__)


def _check_alpha(grid, alpha):
    if len(alpha) != grid.dims:
        raise ValueError(
            f'multiindex {alpha} on a {grid.dims}-dimensional grid')
    if alpha.is_zero:
        raise EmptyTruncationError('empty truncation', alpha=alpha.bits)


def _check_ordered(x, y):
    if any(a > b for a, b in zip(x, y)):
        raise OrderError(f'node {x} is not below {y}', x=x, y=y)


def _corner(alpha, theta, x, y, z):
    """The node z + alpha (x - z) + theta (y - x)"""
    return tuple(
        xi + t * (yi - xi) if a else zi
        for a, t, xi, yi, zi in zip(alpha, theta, x, y, z)
    )


def _with_support(base, alpha, truncated):
    """The node equal to base off the support of alpha"""
    node = list(base)
    for i, value in zip(alpha.support, truncated):
        node[i] = value
    return tuple(node)


def mixed_difference(f, alpha, x, y, z=None):
    """
    md of the truncated map f_alpha^z on the rectangle from x to y: the
    distance between the even and the odd corner sums.
    """
    grid = f.grid
    _check_alpha(grid, alpha)
    x, y = grid.check_index(x), grid.check_index(y)
    z = x if z is None else grid.check_index(z)
    _check_ordered(x, y)
    if any(x[i] == y[i] for i in alpha.support):
        return 0.0
    even = [f.at(_corner(alpha, theta, x, y, z))
            for theta in enumerate_leq(alpha, Parity.EVEN)]
    odd = [f.at(_corner(alpha, theta, x, y, z))
           for theta in enumerate_leq(alpha, Parity.ODD)]
    return semigroup_sum(even).dist(semigroup_sum(odd))


@dataclass(frozen=True)
class TruncatedMap:
    """
    f_alpha^z: the coordinates where alpha is one are free, the others
    stay at the base node. Only an index view, nothing is copied.
    """
    source: GridFunction
    alpha: MultiIndex
    base: tuple

    def __post_init__(self):
        _check_alpha(self.source.grid, self.alpha)
        object.__setattr__(
            self, 'base', self.source.grid.check_index(self.base))

    @property
    def grid(self):
        return self.source.grid.truncate(self.alpha)

    def node(self, truncated_index):
        if len(truncated_index) != self.alpha.order:
            raise ValueError(
                f'truncated index {truncated_index} for alpha {self.alpha}')
        return _with_support(self.base, self.alpha, truncated_index)

    def __call__(self, truncated_index):
        return self.source.at(self.node(truncated_index))

    def mixed_difference(self, x, y):
        return mixed_difference(
            self.source, self.alpha, self.node(x), self.node(y), self.base)


def prevariation(f, alpha, base, partition):
    """Sum of mixed differences over the cells of one net partition"""
    truncated = TruncatedMap(f, alpha, base)
    partition.check_in(truncated.grid)
    return math.fsum(
        truncated.mixed_difference(cell.lo, cell.hi)
        for cell in cells(partition)
    )


def vitali_variation(f, alpha, base, rect):
    """
    |alpha|-th Vitali variation of f_alpha^base on the truncation of
    ``rect``. A rectangle that is flat along the support gives zero.
    """
    _check_alpha(f.grid, alpha)
    rect.check_in(f.grid)
    if rect.is_degenerate_on(alpha):
        logger.debug('alpha=%s degenerate on %s, variation 0', alpha, rect)
        return 0.0
    partition = finest_partition(f.grid.truncate(alpha), rect.truncate(alpha))
    return prevariation(f, alpha, base, partition)


def cell_differences(f, alpha, base, rect=None):
    """
    Mixed differences of f_alpha^base over the adjacent cells of ``rect``
    (the whole grid by default), as an array over the support of alpha.
    """
    _check_alpha(f.grid, alpha)
    rect = f.grid.full_rectangle() if rect is None else rect.check_in(f.grid)
    support = alpha.support
    base = f.grid.check_index(base)
    ranges = [range(rect.lo[i], rect.hi[i]) for i in support]
    out = np.zeros([len(r) for r in ranges])
    for position, start in enumerate(itertools.product(*ranges)):
        x = _with_support(base, alpha, start)
        y = _with_support(base, alpha, tuple(s + 1 for s in start))
        out.flat[position] = mixed_difference(f, alpha, x, y, base)
    return out


@dataclass
class VariationReport:
    """TV of f on a rectangle and its per-alpha summands"""
    tv: float
    per_alpha: dict
    vitali_n: float
    shape: tuple
    space: str
    tolerance: float
    rectangle: SubRectangle
    degenerate: tuple = field(default_factory=tuple)

    def labelled(self):
        """per_alpha keyed by bit string, with expansion labels"""
        return [
            {
                'alpha': alpha.bits,
                'label': expansion_label(alpha),
                'variation': value,
            }
            for alpha, value in self.per_alpha.items()
        ]


def _variations_over(f, lo, hi, gamma=None):
    rect = SubRectangle(lo, hi).check_in(f.grid)
    gamma = MultiIndex.ones(f.grid.dims) if gamma is None else gamma
    per_alpha, degenerate = {}, []
    for alpha in nonzero_leq(gamma):
        if rect.is_degenerate_on(alpha):
            degenerate.append(alpha.bits)
        per_alpha[alpha] = vitali_variation(f, alpha, rect.lo, rect)
        logger.debug('V_%d for alpha=%s is %r',
                     alpha.order, alpha, per_alpha[alpha])
    return rect, per_alpha, tuple(degenerate)


def tv_over(f, lo, hi):
    """TV(f, I_lo^hi), the variation of the maps based at lo"""
    _, per_alpha, _ = _variations_over(f, lo, hi)
    return math.fsum(per_alpha.values())


def total_variation(f, tol=None):
    """Total (Hardy-Krause) variation of f over the whole grid"""
    grid = f.grid
    rect, per_alpha, degenerate = _variations_over(
        f, grid.first_index, grid.last_index)
    return VariationReport(
        tv=math.fsum(per_alpha.values()),
        per_alpha=per_alpha,
        vitali_n=per_alpha[MultiIndex.ones(grid.dims)],
        shape=grid.shape,
        space=f.space.tag,
        tolerance=tolerance(tol),
        rectangle=rect,
        degenerate=degenerate,
    )


def total_variation_function(f):
    """
    nu_f(x) = TV(f, I_a^x) at every node, built from cumulative sums of
    the a-based cell differences. Faces through a contribute nothing along
    their flat directions.
    """
    grid = f.grid
    nu = np.zeros(grid.shape)
    for alpha in nonzero_leq(MultiIndex.ones(grid.dims)):
        levels = cell_differences(f, alpha, grid.first_index)
        levels = np.pad(levels, [(1, 0)] * alpha.order)
        for axis in range(alpha.order):
            levels = np.cumsum(levels, axis=axis)
        shape = [m if alpha[i] else 1 for i, m in enumerate(grid.shape)]
        nu = nu + levels.reshape(shape)
    return GridFunction.from_array(grid, nu)


@dataclass(frozen=True)
class PointwiseBound:
    d_val: float
    md_sum: float
    tv_sub: float

    def holds(self, tol=None):
        tol = tolerance(tol)
        return (self.d_val <= self.md_sum + tol
                and self.md_sum <= self.tv_sub + tol)


def pointwise_bound(f, x, y):
    """
    The chain d(f(x), f(y)) <= sum of mixed differences based at x
    <= TV(f, I_x^y).
    """
    x, y = f.grid.check_index(x), f.grid.check_index(y)
    _check_ordered(x, y)
    ones = MultiIndex.ones(f.grid.dims)
    return PointwiseBound(
        d_val=f.at(x).dist(f.at(y)),
        md_sum=math.fsum(
            mixed_difference(f, alpha, x, y, x) for alpha in nonzero_leq(ones)),
        tv_sub=tv_over(f, x, y),
    )


def _move(x, y, gamma):
    """The node x + gamma (y - x)"""
    return tuple(xi + g * (yi - xi) for xi, yi, g in zip(x, y, gamma))


def tv_subrectangle(f, x, y, gamma):
    """Sum over 0 != alpha <= gamma of V(f_alpha^x, I_x^y truncated)"""
    x, y = f.grid.check_index(x), f.grid.check_index(y)
    _check_ordered(x, y)
    if gamma.is_zero:
        raise EmptyTruncationError('gamma must be nonzero')
    _, per_alpha, _ = _variations_over(f, x, y, gamma)
    return math.fsum(per_alpha.values())


def tv_increment_bound(f, x, y, gamma):
    """Both sides of TV(f, I_x^(x+gamma(y-x))) <= nu_f(x+gamma(y-x)) - nu_f(x)"""
    lhs = tv_subrectangle(f, x, y, gamma)
    a = f.grid.first_index
    rhs = tv_over(f, a, _move(x, y, gamma)) - tv_over(f, a, x)
    return lhs, rhs


def expansion_label(alpha):
    """Human label of one summand, e.g. V1(f(.,a2)) or V2(f)"""
    if alpha.order == len(alpha):
        return f'V{alpha.order}(f)'
    args = ','.join('·' if c else f'a{i + 1}' for i, c in enumerate(alpha))
    return f'V{alpha.order}(f({args}))'
