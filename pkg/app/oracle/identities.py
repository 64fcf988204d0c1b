"""
The combinatorial identities behind the variation estimates, checked
instance by instance.

Formal sums are decided in the multiset semigroup with h(theta) the
singleton atom tagged by theta: two sums of h-values agree for every h
exactly when their multisets agree. Omitted terms and empty sums are
dropped, never replaced by a zero.
"""
import logging
import math
from dataclasses import dataclass, field

from core.multiindex import (
    MultiIndex,
    Parity,
    binomial_parity_sums,
    count_between,
    enumerate_between,
    enumerate_leq,
)
from core.sampling import ATOMS, make_rng
from core.semigroup import MultisetValue, semigroup_sum

logger = logging.getLogger(__name__)

COUNTING = 'counting'
MULTISET = 'multiset'
PATTERNS = ('odm', 'evm1', 'evm2')
MAX_INSTANCE_LENGTH = 8


@dataclass
class IdentityCheck:
    family: str
    space: str
    instance: str
    passed: bool
    detail: dict = field(default_factory=dict)
    witness: object = None


@dataclass
class IdentityReport:
    seed: int
    checks: list = field(default_factory=list)

    def add(self, family, space, instance, passed, **detail):
        witness = detail.pop('witness', None)
        self.checks.append(IdentityCheck(
            family, space, instance, bool(passed), detail, witness))
        if not passed:
            logger.warning('%s failed in %s at %s: %s',
                           family, space, instance, detail)

    def extend(self, other):
        self.checks.extend(other.checks)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    @property
    def first_failure(self):
        return next(iter(self.failures), None)

    def matrix(self):
        """family -> space -> 'pass' or 'FAIL'"""
        table = {}
        for check in self.checks:
            row = table.setdefault(check.family, {})
            ok = row.get(check.space, 'pass') == 'pass' and check.passed
            row[check.space] = 'pass' if ok else 'FAIL'
        return table


def h(theta):
    return MultisetValue.of(theta.bits)


def formal_sum(values):
    """Sum of a possibly empty list of multisets, the empty sum omitted"""
    values = list(values)
    return semigroup_sum(values) if values else MultisetValue(())


def _popcount(mask):
    return bin(mask).count('1')


def _subset_sizes(size, parity):
    return sum(1 for mask in range(1 << size) if _popcount(mask) % 2 == parity)


def check_binomial(report, m_max):
    """Both binomial parity sums equal 2^(m-k-1), recounted over subsets"""
    for m in range(1, m_max + 1):
        for k in range(m):
            even_sum, odd_sum, expected = binomial_parity_sums(m, k)
            counted_even = _subset_sizes(m - k, k % 2)
            counted_odd = _subset_sizes(m - k, (k + 1) % 2)
            report.add(
                'binomial', COUNTING, f'm={m},k={k}',
                even_sum == odd_sum == expected == counted_even == counted_odd,
                sums=[even_sum, odd_sum], expected=expected,
                counted=[counted_even, counted_odd])


def check_parity_counts(report, n_max):
    """count_between against a bitmask scan of every beta <= gamma"""
    for n in range(1, n_max + 1):
        masks = range(1 << n)
        for gamma_mask in masks:
            for beta_mask in masks:
                if beta_mask & ~gamma_mask:
                    continue
                between = [m for m in masks if beta_mask & ~m == 0
                           and m & ~gamma_mask == 0]
                scanned = [
                    sum(1 for m in between if _popcount(m) % 2 == 0),
                    sum(1 for m in between if _popcount(m) % 2 == 1),
                ]
                beta = MultiIndex.from_bits(_bits(beta_mask, n))
                gamma = MultiIndex.from_bits(_bits(gamma_mask, n))
                counted = [count_between(beta, gamma, Parity.EVEN),
                           count_between(beta, gamma, Parity.ODD)]
                gap = gamma.order - beta.order
                if gap:
                    expected = [2 ** (gap - 1)] * 2
                else:
                    expected = [1, 0] if beta.is_even else [0, 1]
                report.add(
                    'parity', COUNTING, f'beta={beta},gamma={gamma}',
                    counted == scanned == expected,
                    counted=counted, scanned=scanned, expected=expected)


def _bits(mask, n):
    return ''.join('1' if mask & (1 << (n - 1 - i)) else '0' for i in range(n))


def _nested_sum(outer, inner_parity):
    """sum over alpha in ``outer`` of sum over theta <= alpha of h(theta)"""
    return [h(theta) for alpha in outer
            for theta in enumerate_leq(alpha, inner_parity)]


def corner_sum_identities(gamma):
    """
    The even-in-even and odd-in-odd nested sums below gamma, each with
    its corner term. Returns [(name, left, right)].
    """
    even_outer = enumerate_leq(gamma, Parity.EVEN)
    odd_outer = enumerate_leq(gamma, Parity.ODD)
    corner = [h(gamma)]
    c_gamma = corner if gamma.is_even else []
    d_gamma = [] if gamma.is_even else corner
    return [
        ('even', _nested_sum(even_outer, Parity.EVEN),
         c_gamma + _nested_sum(odd_outer, Parity.EVEN)),
        ('odd', _nested_sum(odd_outer, Parity.ODD),
         d_gamma + _nested_sum(even_outer, Parity.ODD)),
    ]


def _shifted_sum(alpha, beta_parity, theta_parity):
    return [h(theta)
            for beta in enumerate_leq(alpha.complement(), beta_parity)
            for theta in enumerate_leq(alpha | beta, theta_parity)]


def complement_identities(alpha):
    """
    The four nested-sum identities over beta <= 1 - alpha, the pair that
    applies depending on the parity of 1 - alpha. Returns
    [(name, left, right)].
    """
    rest = alpha.complement()
    ones = MultiIndex.ones(len(alpha))
    out = []
    for parity, name in ((Parity.EVEN, 'even'), (Parity.ODD, 'odd')):
        if rest.is_even:
            head = [h(rest | theta) for theta in enumerate_leq(alpha, parity)]
            left = head + _shifted_sum(alpha, Parity.ODD, parity)
            right = _shifted_sum(alpha, Parity.EVEN, parity)
        else:
            head = [h(theta) for theta in enumerate_between(rest, ones, parity)]
            left = head + _shifted_sum(alpha, Parity.EVEN, parity)
            right = _shifted_sum(alpha, Parity.ODD, parity)
        out.append((name, left, right))
    return out


def _every_multiindex(n):
    return enumerate_leq(MultiIndex.ones(n))


def check_corner_sums(report, n_max):
    for n in range(1, n_max + 1):
        for gamma in _every_multiindex(n):
            for name, left, right in corner_sum_identities(gamma):
                lhs, rhs = formal_sum(left), formal_sum(right)
                report.add('corner_sums', MULTISET, f'{name},gamma={gamma}',
                           lhs == rhs, left=lhs.atoms(), right=rhs.atoms())


def check_complement_sums(report, n_max):
    for n in range(1, n_max + 1):
        for alpha in _every_multiindex(n):
            for name, left, right in complement_identities(alpha):
                lhs, rhs = formal_sum(left), formal_sum(right)
                report.add('complement_sums', MULTISET,
                           f'{name},alpha={alpha}',
                           lhs == rhs, left=lhs.atoms(), right=rhs.atoms())


def _random_multiset(rng, least=1):
    size = int(rng.integers(least, least + 3))
    return MultisetValue.of(*rng.choice(ATOMS, size))


def balanced_split(rng, left_count, right_count):
    """
    Random nonempty multisets ``left`` and ``right`` of the given counts
    whose totals agree.
    """
    left = [_random_multiset(rng) for _ in range(left_count)]
    atoms = formal_sum(left).atoms()
    while len(atoms) < right_count:
        extra = _random_multiset(rng)
        left[0] = left[0] + extra
        atoms = formal_sum(left).atoms()
    atoms = list(rng.permutation(atoms))
    cuts = sorted(int(c) + 1 for c in rng.choice(
        len(atoms) - 1, right_count - 1, replace=False)) \
        if right_count > 1 else []
    bounds = [0, *cuts, len(atoms)]
    right = [MultisetValue.of(*atoms[a:b]) for a, b in zip(bounds, bounds[1:])]
    return left, right


def _interleave(odd, even):
    """u_1, u_2, ... from the odd-position and even-position lists"""
    out = []
    for i in range(len(odd) + len(even)):
        out.append(odd[i // 2] if i % 2 == 0 else even[i // 2])
    return out


def metric_inequality_instance(rng, m, pattern):
    """u, v, [u_j], [v_j] built from one of the balancing patterns"""
    half = m // 2
    if pattern == 'odm':
        (u, *u_even), u_odd = balanced_split(rng, half + 1, half + 1)
        (v, *v_even), v_odd = balanced_split(rng, half + 1, half + 1)
    elif pattern == 'evm1':
        (u, *u_even), (v, *u_odd) = balanced_split(rng, half + 1, half + 1)
        v_even, v_odd = balanced_split(rng, half, half)
    else:
        u_even, (v, *u_odd) = balanced_split(rng, half, half + 1)
        v_even, (u, *v_odd) = balanced_split(rng, half, half + 1)
    return u, v, _interleave(u_odd, u_even), _interleave(v_odd, v_even)


def balances(u, v, us, vs):
    """The balance equation sum u_2i + u + sum v_2i-1 = sum v_2i + v + sum u_2i-1"""
    left = formal_sum([*us[1::2], u, *vs[0::2]])
    right = formal_sum([*vs[1::2], v, *us[0::2]])
    return left == right


def check_metric_inequality(report, trials, rng):
    for trial in range(trials):
        m = int(rng.integers(1, MAX_INSTANCE_LENGTH + 1))
        pattern = 'odm' if m % 2 else PATTERNS[1 + int(rng.integers(0, 2))]
        u, v, us, vs = metric_inequality_instance(rng, m, pattern)
        lhs = u.dist(v)
        rhs = math.fsum(a.dist(b) for a, b in zip(us, vs))
        balanced = balances(u, v, us, vs)
        report.add('metric_inequality', MULTISET,
                   f'trial={trial},m={m},{pattern}', balanced and lhs <= rhs,
                   balanced=balanced, dist=lhs, bound=rhs)


def verify_identity_suite(n_max, m_max, trials, seed):
    """Run every identity family; failures are report entries"""
    report = IdentityReport(seed=seed)
    rng = make_rng(seed)
    check_binomial(report, m_max)
    check_parity_counts(report, n_max)
    check_corner_sums(report, n_max)
    check_complement_sums(report, n_max)
    check_metric_inequality(report, trials, rng)
    logger.info('identity suite: %d checks, %d failed',
                len(report.checks), len(report.failures))
    return report
