"""
Exhaustive net partitions and the literal supremum over them.

Nothing here goes through the variation engine: corner sums, mixed
differences and prevariations are recomputed from the grid and the
semigroup values alone, so the engine can be checked against it.
"""
import functools
import itertools
import math
import operator

from core.conf import tolerance, vhk_setting
from core.exceptions import DegenerateRectangleError, PartitionCapError
from core.grid import NetPartition


def _interiors(rect):
    interiors = []
    for lo, hi in zip(rect.lo, rect.hi):
        if lo == hi:
            raise DegenerateRectangleError(
                'degenerate rectangle has no net partition', lo=lo)
        interiors.append(tuple(range(lo + 1, hi)))
    return interiors


def partition_count(rect):
    """prod 2^(m_i - 2) for m_i indices per axis of the rectangle"""
    return math.prod(2 ** len(interior) for interior in _interiors(rect))


def _subset(interior, mask):
    return tuple(i for bit, i in enumerate(interior) if mask & (1 << bit))


def enumerate_partitions(grid, rect, cap=None):
    """
    Every net partition of ``rect`` exactly once. Endpoints are forced,
    the interior indices of each axis range over all bitmask subsets.
    """
    rect.check_in(grid)
    cap = vhk_setting('PARTITION_CAP') if cap is None else cap
    count = partition_count(rect)
    if count > cap:
        raise PartitionCapError(
            f'{count} partitions exceed the cap {cap}', count=count, cap=cap)
    return _walk(rect, _interiors(rect))


def _walk(rect, interiors):
    masks = [range(1 << len(interior)) for interior in interiors]
    for combo in itertools.product(*masks):
        yield NetPartition(tuple(
            (lo, *_subset(interior, mask), hi)
            for lo, hi, interior, mask
            in zip(rect.lo, rect.hi, interiors, combo)))


def _fold(values):
    return functools.reduce(operator.add, values)


def _md(f, support, base, x, y):
    """
    dist of the even and odd corner sums of the cell x..y, the axes off
    ``support`` held at ``base``
    """
    even, odd = [], []
    for mask in range(1 << len(support)):
        node = list(base)
        for bit, axis in enumerate(support):
            node[axis] = y[bit] if mask & (1 << bit) else x[bit]
        bucket = even if bin(mask).count('1') % 2 == 0 else odd
        bucket.append(f.values[tuple(node)])
    return _fold(even).dist(_fold(odd))


def oracle_prevariation(f, support, base, partition):
    """Sum over the cells of a partition given on the support axes"""
    total = []
    steps = [list(zip(axis, axis[1:])) for axis in partition.per_axis]
    for combo in itertools.product(*steps):
        x = tuple(lo for lo, _ in combo)
        y = tuple(hi for _, hi in combo)
        total.append(_md(f, support, base, x, y))
    return math.fsum(total)


def _restricted(f, alpha, base, rect):
    support = tuple(i for i, a in enumerate(alpha) if a)
    if not support:
        raise ValueError('variation needs a nonzero multiindex')
    base = f.grid.check_index(base)
    rect.check_in(f.grid)
    return support, base


def brute_force_search(f, alpha, base, rect, cap=None, tol=None):
    """
    Maximal prevariation of f_alpha^base over every partition of the
    truncated rectangle, with the partitions attaining it.
    """
    support, base = _restricted(f, alpha, base, rect)
    tol = tolerance(tol)
    truncated_grid = f.grid.truncate(alpha)
    truncated_rect = rect.truncate(alpha)
    if truncated_rect.is_degenerate:
        return 0.0, []
    scored = [
        (oracle_prevariation(f, support, base, p), p)
        for p in enumerate_partitions(truncated_grid, truncated_rect, cap)
    ]
    best = max(value for value, _ in scored)
    return best, [p for value, p in scored if value >= best - tol]


def brute_force_variation(f, alpha, base, rect, cap=None):
    """The Vitali variation as the literal maximum over all partitions"""
    value, _ = brute_force_search(f, alpha, base, rect, cap)
    return value
