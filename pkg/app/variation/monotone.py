"""
Totally monotone real functions and the Jordan decomposition g = nu - pi.

For real values the signed mixed increment over a cell is an iterated
forward difference, and it is additive over net partitions. Checking the
adjacent cells of every alpha is therefore enough.
"""
from dataclasses import dataclass

import numpy as np

from core.conf import tolerance
from core.exceptions import NonRealSpaceError
from core.grid import GridFunction, SubRectangle
from core.multiindex import MultiIndex, nonzero_leq
from variation.engine import total_variation_function


def _require_real(g):
    if not g.space.is_real:
        raise NonRealSpaceError(
            f'total monotonicity needs a real function, got {g.space.tag}')


def signed_increments(values, alpha):
    """(-1)^|alpha| sum (-1)^|theta| g(x + theta(y - x)) on adjacent cells"""
    increments = np.asarray(values, dtype=float)
    for axis in alpha.support:
        increments = np.diff(increments, axis=axis)
    return increments


@dataclass(frozen=True)
class MonotonicityVerdict:
    monotone: bool
    alpha: MultiIndex = None
    cell: SubRectangle = None
    increment: float = None

    def __bool__(self):
        return self.monotone


def is_totally_monotone(g, tol=None):
    """Check every signed mixed increment; report the first violation"""
    _require_real(g)
    tol = tolerance(tol)
    values = g.as_array()
    for alpha in nonzero_leq(MultiIndex.ones(g.grid.dims)):
        increments = signed_increments(values, alpha)
        violations = np.argwhere(increments < -tol)
        if len(violations):
            lo = tuple(int(i) for i in violations[0])
            hi = tuple(i + c for i, c in zip(lo, alpha))
            return MonotonicityVerdict(
                monotone=False,
                alpha=alpha,
                cell=SubRectangle(lo, hi),
                increment=float(increments[tuple(violations[0])]),
            )
    return MonotonicityVerdict(monotone=True)


@dataclass(frozen=True)
class JordanDecomposition:
    nu: GridFunction
    pi: GridFunction

    def recombined(self):
        return self.nu.as_array() - self.pi.as_array()


def jordan_decomposition(g):
    """nu = total variation function of g, pi = nu - g"""
    _require_real(g)
    nu = total_variation_function(g)
    pi = GridFunction.from_array(g.grid, nu.as_array() - g.as_array())
    return JordanDecomposition(nu=nu, pi=pi)
