"""
Engine against oracle on random grid functions of every value space.
"""
import logging

from core.conf import tolerance
from core.grid import finest_partition
from core.multiindex import MultiIndex, nonzero_leq
from core.sampling import (
    SPACE_TAGS,
    make_rng,
    random_grid,
    random_grid_function,
)
from oracle.identities import IdentityReport, verify_identity_suite
from oracle.partitions import brute_force_search
from variation.engine import vitali_variation

logger = logging.getLogger(__name__)

SWEEP_MAX_DIMENSION = 3


def _agrees(engine, oracle, tol):
    return abs(engine - oracle) <= tol * max(1.0, abs(oracle))


def check_oracle_equivalence(report, n_max, trials, grid_cap, rng, tol=None,
                             spaces=SPACE_TAGS):
    """
    vitali_variation at the finest partition against the brute-force
    maximum, for every nonzero alpha; the finest partition must be among
    the maximisers.
    """
    tol = tolerance(tol)
    for space in spaces:
        for trial in range(trials):
            n = int(rng.integers(1, min(n_max, SWEEP_MAX_DIMENSION) + 1))
            shape = tuple(int(m) for m in rng.integers(2, grid_cap + 1, n))
            grid = random_grid(rng, shape)
            f = random_grid_function(grid, space, rng)
            rect = grid.full_rectangle()
            for alpha in nonzero_leq(MultiIndex.ones(n)):
                engine = vitali_variation(f, alpha, rect.lo, rect)
                oracle, maximisers = brute_force_search(
                    f, alpha, rect.lo, rect, tol=tol)
                finest = finest_partition(
                    grid.truncate(alpha), rect.truncate(alpha))
                report.add(
                    'oracle_equivalence', space,
                    f'trial={trial},shape={shape},alpha={alpha}',
                    _agrees(engine, oracle, tol) and finest in maximisers,
                    engine=engine, oracle=oracle,
                    finest_maximises=finest in maximisers,
                    alpha=alpha.bits, witness=f)


def run_verification(n_max, m_max, trials, seed, grid_cap, tol=None):
    """Identity suite followed by the oracle-equivalence sweep"""
    report = IdentityReport(seed=seed)
    report.extend(verify_identity_suite(n_max, m_max, trials, seed))
    check_oracle_equivalence(
        report, n_max, trials, grid_cap, make_rng(seed + 1), tol)
    logger.info('verification with seed %d: %d checks, %d failed',
                seed, len(report.checks), len(report.failures))
    return report
