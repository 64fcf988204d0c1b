"""
Helly-type selection on a finite probe window.

A sequence is probed at j = 1..probe. Strong selection threads the
surviving index set through a Bolzano-Weierstrass extraction at every
node in row-major order; weak selection does the same for the scalar
sequences <f_j(x), u*> over a basis of functionals and rebuilds the limit
from the midpoints of the surviving coordinate clusters. A window that
leaves fewer than two survivors is too short for the requested epsilon.
Every result carries its certificates: the sup of TV over the window, the
TV of the limit and the residual between the last two chosen terms.
"""
import functools
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from core.compactness import bw_extract, check_bounded
from core.conf import tolerance, vhk_setting
from core.exceptions import (
    ConvergenceError,
    DegenerateDualsError,
    NoCompactnessSupportError,
    SelectionCertificateError,
    UnboundedSequenceError,
    UnsupportedSpaceError,
)
from core.grid import GridFunction
from core.semigroup import RealValue, VectorValue
from variation.engine import total_variation, total_variation_function

logger = logging.getLogger(__name__)

MIN_SURVIVORS = 2


@dataclass
class SelectionResult:
    indices: tuple
    limit: GridFunction
    sup_tv: float
    limit_tv: float
    max_residual: float
    epsilon: float
    probe: int
    diagnostics: dict = field(default_factory=dict)


@dataclass(frozen=True)
class NormBound:
    """Node-wise norms against the base-corner bound c(a) + C"""
    c_a: float
    sup_tv: float
    max_norm: float
    holds: bool


@dataclass
class LowerSemicontinuityReport:
    limit_tv: float
    liminf_estimate: float
    tail_minima: tuple
    holds: bool
    gap: float
    max_residual: float


def _window(probe):
    if probe < 1:
        raise ValueError('probe must be at least 1')
    return list(range(1, probe + 1))


def estimate_sup_tv(seq, indices, tol=None):
    """
    TV of every probed term and their maximum. A maximum above the bound
    cap is read as a TV estimate diverging over the window.
    """
    tol = tolerance(tol)
    tvs = [total_variation(seq(j), tol).tv for j in indices]
    sup_tv = max(tvs)
    cap = vhk_setting('BOUND_CAP')
    if sup_tv > cap:
        raise UnboundedSequenceError(
            f'TV estimate diverges over the probe window: {sup_tv:.6g} '
            f'exceeds the bound cap {cap:.6g}', sup_tv=sup_tv)
    return sup_tv, dict(zip(indices, tvs))


def _check_nodes(seq, nodes, window):
    """Boundedness surrogate at every node over the whole probe window"""
    for node in nodes:
        check_bounded(seq.values_at(node), window)


def _max_dist(f, g):
    return max(
        (u.dist(v) for u, v in zip(f.flat_values(), g.flat_values())),
        default=0.0)


def _nu_gap(seq, indices):
    """Largest change of the TV function between the last two chosen terms"""
    if len(indices) < 2:
        return 0.0
    nu_prev = total_variation_function(seq(indices[-2])).as_array()
    nu_last = total_variation_function(seq(indices[-1])).as_array()
    return float(np.abs(nu_last - nu_prev).max())


def _certify(seq, indices, limit, sup_tv, epsilon, probe, tol, diagnostics):
    limit_tv = total_variation(limit, tol).tv
    if limit_tv > sup_tv + tol:
        raise SelectionCertificateError(
            f'TV of the limit {limit_tv!r} exceeds sup TV {sup_tv!r}',
            limit_tv=limit_tv, sup_tv=sup_tv)
    max_residual = _max_dist(seq(indices[-2]), seq(indices[-1])) \
        if len(indices) >= 2 else 0.0
    diagnostics['nu_gap'] = _nu_gap(seq, indices)
    logger.info('selected %d of %d terms, limit TV %r <= sup TV %r',
                len(indices), probe, limit_tv, sup_tv)
    return SelectionResult(
        indices=tuple(indices),
        limit=limit,
        sup_tv=sup_tv,
        limit_tv=limit_tv,
        max_residual=max_residual,
        epsilon=epsilon,
        probe=probe,
        diagnostics=diagnostics,
    )


def _require_cluster(survivors, epsilon, probe):
    if len(survivors) < MIN_SURVIVORS:
        raise ConvergenceError(
            f'only {len(survivors)} of {probe} probed terms fit within '
            f'epsilon {epsilon!r}; the probe window is too short',
            survivors=list(survivors), epsilon=epsilon, probe=probe)


def helly_select(seq, epsilon, probe, tol=None):
    """Pointwise-convergent subsequence of a sequence of bounded TV"""
    if not seq.space.supports_compactness:
        raise NoCompactnessSupportError(
            f'{seq.space.tag} values have no compactness support')
    tol = tolerance(tol)
    window = _window(probe)
    sup_tv, _ = estimate_sup_tv(seq, window, tol)

    nodes = list(seq.grid.nodes())
    _check_nodes(seq, nodes, window)

    survivors = window
    diameters = []
    for node in nodes:
        extraction = bw_extract(
            seq.values_at(node), survivors, epsilon, check=False)
        survivors = list(extraction.indices)
        diameters.append(extraction.diameter)
        logger.debug('node %s keeps %d indices', node, len(survivors))
    _require_cluster(survivors, epsilon, probe)

    limit = seq(survivors[-1])
    diagnostics = {'max_node_diameter': max(diameters)}
    return _certify(
        seq, survivors, limit, sup_tv, epsilon, probe, tol, diagnostics)


def _dual_matrix(duals, k):
    matrix = np.asarray(duals, dtype=float)
    if matrix.shape != (k, k):
        raise DegenerateDualsError(
            f'need {k} functionals of length {k}, got shape {matrix.shape}')
    if np.linalg.matrix_rank(matrix) < k:
        raise DegenerateDualsError('functionals are not linearly independent')
    return matrix


def _paired(seq, node, dual, j):
    return RealValue(seq(j).at(node).pair(dual))


def dual_condition(matrix, norm):
    """
    Sum of the norms of the columns of the inverse: a coordinate error of
    at most e in every functional moves a vector by at most e times this.
    """
    inverse = np.linalg.inv(matrix)
    return math.fsum(
        VectorValue(tuple(column), norm).norm_value() for column in inverse.T)


def weak_helly_select(seq, duals, epsilon, probe, tol=None):
    """
    Weakly convergent subsequence of R^k-valued maps, extracted through
    the dual coordinates <f_j(x), u*> for a basis u* of functionals.

    The limit at a node solves for the vector whose coordinates are the
    midpoints of the surviving clusters, so it sits within epsilon / 2 of
    every survivor in each functional and within epsilon * kappa / 2 in
    norm, kappa being dual_condition of the basis.
    """
    if seq.space.kind != 'vector':
        raise UnsupportedSpaceError(
            f'weak selection needs vector values, got {seq.space.tag}')
    tol = tolerance(tol)
    matrix = _dual_matrix(duals, seq.space.k)
    window = _window(probe)
    sup_tv, _ = estimate_sup_tv(seq, window, tol)
    nodes = list(seq.grid.nodes())
    _check_nodes(seq, nodes, window)

    survivors = window
    for dual in matrix:
        for node in nodes:
            coordinate = functools.partial(_paired, seq, node, dual)
            survivors = list(bw_extract(
                coordinate, survivors, epsilon, check=False).indices)
    _require_cluster(survivors, epsilon, probe)

    kappa = dual_condition(matrix, seq.space.norm)
    slack = epsilon * kappa / 2
    tail = survivors[len(survivors) // 2:]
    rebuilt = []
    worst_margin = None
    for node in nodes:
        paired = np.array([[seq(j).at(node).pair(dual) for dual in matrix]
                           for j in survivors])
        midpoints = (paired.min(axis=0) + paired.max(axis=0)) / 2
        value = VectorValue(
            tuple(np.linalg.solve(matrix, midpoints)), seq.space.norm)
        liminf = min(seq(j).at(node).norm_value() for j in tail)
        margin = liminf + slack + tol - value.norm_value()
        if margin < 0:
            raise SelectionCertificateError(
                f'norm of the limit exceeds the liminf estimate at {node}',
                node=node, margin=margin)
        worst_margin = margin if worst_margin is None \
            else min(worst_margin, margin)
        rebuilt.append(value)
    limit = GridFunction(seq.grid, seq.space, rebuilt)

    diagnostics = {
        'duals': matrix.tolist(),
        'kappa': kappa,
        'min_norm_margin': worst_margin,
    }
    return _certify(
        seq, survivors, limit, sup_tv, epsilon, probe, tol, diagnostics)


def _norm(value):
    if isinstance(value, RealValue):
        return abs(value.value)
    if isinstance(value, VectorValue):
        return value.norm_value()
    raise UnsupportedSpaceError(f'{value.space_tag} values carry no norm')


def norm_bound_surrogate(seq, probe, tol=None):
    """
    Node-wise norms follow from the norm at the base corner and the TV
    bound: ||f_j(x)|| <= ||f_j(a)|| + TV(f_j) <= c(a) + C.
    """
    tol = tolerance(tol)
    window = _window(probe)
    sup_tv, _ = estimate_sup_tv(seq, window, tol)
    base = seq.grid.first_index
    c_a = max(_norm(seq(j).at(base)) for j in window)
    max_norm = max(
        _norm(value) for j in window for value in seq(j).flat_values())
    return NormBound(
        c_a=c_a,
        sup_tv=sup_tv,
        max_norm=max_norm,
        holds=max_norm <= c_a + sup_tv + tol,
    )


def lower_semicontinuity_check(seq, f_limit, probe,
                               convergence_tolerance=None, tol=None):
    """
    Compare TV(f_limit) with the tail minima of TV(f_j). The last quarter
    of the window must already sit within the convergence tolerance of
    f_limit at every node.
    """
    tol = tolerance(tol)
    conv_tol = vhk_setting('CONVERGENCE_TOLERANCE') \
        if convergence_tolerance is None else convergence_tolerance
    window = _window(probe)
    nodes = list(seq.grid.nodes())

    worst = (0.0, None, None)
    for j in window[(3 * len(window)) // 4:]:
        term = seq(j)
        for node in nodes:
            residual = term.at(node).dist(f_limit.at(node))
            if residual > worst[0]:
                worst = (residual, node, j)
    if worst[0] > conv_tol:
        raise ConvergenceError(
            f'f_{worst[2]} is {worst[0]:.6g} away from the limit at node '
            f'{worst[1]}', node=worst[1], j=worst[2], residual=worst[0])

    tvs = [total_variation(seq(j), tol).tv for j in window]
    tail_minima = tuple(min(tvs[k:]) for k in range(len(tvs)))
    liminf_estimate = tail_minima[len(tvs) // 2]
    limit_tv = total_variation(f_limit, tol).tv
    return LowerSemicontinuityReport(
        limit_tv=limit_tv,
        liminf_estimate=liminf_estimate,
        tail_minima=tail_minima,
        holds=limit_tv <= liminf_estimate + tol,
        gap=liminf_estimate - limit_tv,
        max_residual=worst[0],
    )
