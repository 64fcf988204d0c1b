"""
Bolzano-Weierstrass extraction on a finite probe window.

An infinite bounded sequence is seen through a deterministic accessor
``values(j)`` and a window of indices. The coordinate box holding the
window is halved along its widest side until the surviving values fit
into a box whose diameter is at most epsilon. The half that keeps more
survivors wins and a tie keeps the lower half.
"""
import logging
from dataclasses import dataclass

import numpy as np

from core.conf import vhk_setting
from core.exceptions import UnboundedSequenceError

logger = logging.getLogger(__name__)

MAX_HALVINGS = 4096


@dataclass(frozen=True)
class Extraction:
    indices: tuple
    limit: object
    diameter: float


def check_bounded(values, indices, bound_cap=None):
    """
    Boundedness surrogate for pointwise precompactness: raises when the
    window strays farther than ``bound_cap`` from its first element.
    """
    cap = vhk_setting('BOUND_CAP') if bound_cap is None else bound_cap
    indices = list(indices)
    first = values(indices[0])
    radii = [first.dist(values(j)) for j in indices]
    radius = max(radii)
    if radius > cap:
        raise UnboundedSequenceError(
            f'values stray {radius:.6g} from the first probed term, '
            f'above the cap {cap:.6g}', radius=radius)
    return radius


def bw_extract(values, indices, epsilon, bound_cap=None, check=True):
    """
    Select a subsequence of ``indices`` whose values lie within epsilon of
    a limit candidate.

    ``values`` maps an index to a semigroup value with compactness
    support. The returned indices are increasing and the limit candidate
    is the value at the last survivor. Pass ``check=False`` when the
    caller already ran check_bounded on a window holding ``indices``.
    """
    if epsilon <= 0:
        raise ValueError('epsilon must be positive')
    survivors = sorted(set(indices))
    if not survivors:
        raise ValueError('empty probe window')
    coords = {j: values(j).coordinates() for j in survivors}
    if check:
        check_bounded(values, survivors, bound_cap)
    probe = values(survivors[0])

    for step in range(MAX_HALVINGS):
        stacked = np.stack([coords[j] for j in survivors])
        lower, upper = stacked.min(axis=0), stacked.max(axis=0)
        widths = upper - lower
        diameter = probe.coordinate_diameter(widths)
        if diameter <= epsilon:
            break
        axis = int(np.argmax(widths))
        mid = lower[axis] + widths[axis] / 2
        low_half = [j for j in survivors if coords[j][axis] <= mid]
        high_half = [j for j in survivors if coords[j][axis] > mid]
        survivors = low_half if len(low_half) >= len(high_half) \
            else high_half
        logger.debug('halving %d on axis %d kept %d survivors',
                     step, axis, len(survivors))
    else:
        raise UnboundedSequenceError(
            'halving did not reach the requested diameter',
            diameter=diameter)
    return Extraction(
        indices=tuple(survivors),
        limit=values(survivors[-1]),
        diameter=float(diameter),
    )
