"""
Multiindices with 0/1 components.

Every summation range the variation formulas use is a set of multiindices
theta <= alpha <= 1, so components never exceed one. Enumerations are
lexicographic (first coordinate slowest), which keeps every downstream sum
deterministic.
"""
import enum
import itertools
import math
from dataclasses import dataclass

from core.conf import vhk_setting
from core.exceptions import (
    DimensionCapError,
    EmptyIntervalError,
    EmptyTruncationError,
)


class Parity(enum.Enum):
    ALL = 'all'
    EVEN = 'even'
    ODD = 'odd'

    def admits(self, order):
        if self is Parity.ALL:
            return True
        return (order % 2 == 0) == (self is Parity.EVEN)


def _check_dimension(n):
    cap = vhk_setting('MAX_DIMENSION')
    if n > cap:
        raise DimensionCapError(
            f'dimension {n} exceeds the supported maximum {cap}', n=n)


@dataclass(frozen=True)
class MultiIndex:
    """An element of {0, 1}^n"""
    components: tuple

    def __post_init__(self):
        components = tuple(int(c) for c in self.components)
        if any(c not in (0, 1) for c in components):
            raise ValueError(
                f'multiindex components must be 0 or 1, got {components}')
        _check_dimension(len(components))
        object.__setattr__(self, 'components', components)

    @classmethod
    def zeros(cls, n):
        return cls((0,) * n)

    @classmethod
    def ones(cls, n):
        return cls((1,) * n)

    @classmethod
    def from_bits(cls, bits):
        """Parse the bit-string rendering used in reports ("101")"""
        return cls(tuple(int(b) for b in bits))

    @classmethod
    def from_support(cls, n, support):
        chosen = set(support)
        return cls(tuple(1 if i in chosen else 0 for i in range(n)))

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    @property
    def dims(self):
        return len(self.components)

    @property
    def order(self):
        return sum(self.components)

    @property
    def parity(self):
        return self.order % 2

    @property
    def is_even(self):
        return self.parity == 0

    @property
    def is_zero(self):
        return self.order == 0

    @property
    def support(self):
        """Coordinates where the component is one, in increasing order"""
        return tuple(i for i, c in enumerate(self.components) if c)

    @property
    def bits(self):
        return ''.join(str(c) for c in self.components)

    def __le__(self, other):
        _same_length(self, other)
        return all(s <= o for s, o in zip(self.components, other.components))

    def __ge__(self, other):
        return other <= self

    def __lt__(self, other):
        return self <= other and self != other

    def __gt__(self, other):
        return other < self

    def __or__(self, other):
        return join(self, other)

    def complement(self):
        """The multiindex 1 - alpha"""
        return MultiIndex(tuple(1 - c for c in self.components))

    def flip(self, i):
        """Toggle coordinate i; maps even theta <= alpha onto odd ones"""
        flipped = list(self.components)
        flipped[i] = 1 - flipped[i]
        return MultiIndex(tuple(flipped))

    def __str__(self):
        return self.bits


def _same_length(alpha, theta):
    if len(alpha) != len(theta):
        raise ValueError(
            f'multiindices of different dimension: {alpha} and {theta}')


def order(theta):
    return theta.order


def enumerate_between(beta, gamma, parity=Parity.ALL):
    """All theta with beta <= theta <= gamma and the given parity"""
    parity = Parity(parity)
    _same_length(beta, gamma)
    if not beta <= gamma:
        raise EmptyIntervalError(
            f'empty interval: {beta} is not below {gamma}',
            beta=beta.bits, gamma=gamma.bits)
    choices = [
        (lo,) if lo == hi else (0, 1)
        for lo, hi in zip(beta.components, gamma.components)
    ]
    return [
        MultiIndex(components)
        for components in itertools.product(*choices)
        if parity.admits(sum(components))
    ]


def enumerate_leq(alpha, parity_filter=Parity.ALL):
    """All theta <= alpha matching the parity filter, lexicographically"""
    return enumerate_between(MultiIndex.zeros(len(alpha)), alpha, parity_filter)


def nonzero_leq(alpha):
    """All theta with 0 != theta <= alpha"""
    return [theta for theta in enumerate_leq(alpha) if not theta.is_zero]


def truncate_point(x, alpha):
    """The subvector of x on the coordinates where alpha is one"""
    if len(x) != len(alpha):
        raise ValueError(
            f'point of dimension {len(x)} truncated by {alpha}')
    if alpha.is_zero:
        raise EmptyTruncationError('empty truncation', alpha=alpha.bits)
    return tuple(x[i] for i in alpha.support)


def join(alpha, theta):
    """Componentwise maximum, alpha + theta - alpha * theta"""
    _same_length(alpha, theta)
    return MultiIndex(tuple(
        max(a, t) for a, t in zip(alpha.components, theta.components)))


def count_between(beta, gamma, parity):
    """Number of alpha with beta <= alpha <= gamma of the given parity"""
    parity = Parity(parity)
    if parity is Parity.ALL:
        raise ValueError('count_between needs an even or odd parity')
    return len(enumerate_between(beta, gamma, parity))


def binomial_parity_sums(m, k):
    """
    Return the two binomial sums over 2i - k and 2i - 1 - k, i ranging over
    k/2 <= i <= m/2 (resp. (k+1)/2 <= i <= (m+1)/2), and 2^(m-k-1).
    """
    if not 0 <= k <= m - 1:
        raise ValueError(f'need 0 <= k <= m - 1, got m={m}, k={k}')
    even_sum = sum(
        math.comb(m - k, 2 * i - k)
        for i in range(math.ceil(k / 2), m // 2 + 1)
    )
    odd_sum = sum(
        math.comb(m - k, 2 * i - 1 - k)
        for i in range(math.ceil((k + 1) / 2), (m + 1) // 2 + 1)
    )
    return even_sum, odd_sum, 2 ** (m - k - 1)
