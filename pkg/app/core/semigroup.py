"""
Metric semigroups: an abelian addition and a translation invariant metric.

Four value spaces are provided. None of them is asked for a zero element;
empty sums are never materialised, callers drop the term instead.
"""
import abc
import functools
import math
import operator
from collections import Counter
from dataclasses import dataclass

import numpy as np

from core.exceptions import (
    EmptySemigroupSumError,
    NoCompactnessSupportError,
    ValueSpaceMismatchError,
)

NORM_ORDERS = {'l1': 1, 'l2': 2, 'linf': np.inf}


class SemigroupValue(abc.ABC):
    """A value of a metric semigroup (M, d, +)"""

    @property
    @abc.abstractmethod
    def space_tag(self):
        """Tag of the value space, as written in documents"""

    @abc.abstractmethod
    def _add(self, other):
        pass

    @abc.abstractmethod
    def _dist(self, other):
        pass

    def _check_same_space(self, other):
        if not isinstance(other, SemigroupValue) or (
                other.space_tag != self.space_tag):
            other_tag = getattr(other, 'space_tag', type(other).__name__)
            raise ValueSpaceMismatchError(
                f'cannot combine {self.space_tag} with {other_tag}')

    def __add__(self, other):
        self._check_same_space(other)
        return self._add(other)

    def dist(self, other):
        self._check_same_space(other)
        return self._dist(other)

    @classmethod
    def _sum_many(cls, values):
        return functools.reduce(operator.add, values)

    def coordinates(self):
        """Real coordinates used by Bolzano-Weierstrass halving"""
        raise NoCompactnessSupportError(
            f'{self.space_tag} values have no compactness support')

    def coordinate_diameter(self, widths):
        """Upper bound on dist between values inside a coordinate box"""
        raise NoCompactnessSupportError(
            f'{self.space_tag} values have no compactness support')


@dataclass(frozen=True)
class RealValue(SemigroupValue):
    value: float

    def __post_init__(self):
        object.__setattr__(self, 'value', float(self.value))

    @property
    def space_tag(self):
        return 'real'

    def _add(self, other):
        return RealValue(self.value + other.value)

    def _dist(self, other):
        return abs(self.value - other.value)

    @classmethod
    def _sum_many(cls, values):
        return RealValue(math.fsum(v.value for v in values))

    def coordinates(self):
        return np.array([self.value])

    def coordinate_diameter(self, widths):
        return float(widths[0])

    def __float__(self):
        return self.value


@dataclass(frozen=True)
class VectorValue(SemigroupValue):
    """A vector of R^k with the l1, l2 or linf distance"""
    components: tuple
    norm: str = 'l2'

    def __post_init__(self):
        if self.norm not in NORM_ORDERS:
            raise ValueError(f'unknown vector norm {self.norm!r}')
        object.__setattr__(
            self, 'components', tuple(float(c) for c in self.components))

    @property
    def k(self):
        return len(self.components)

    @property
    def space_tag(self):
        return f'vector:{self.k}:{self.norm}'

    def as_array(self):
        return np.asarray(self.components, dtype=float)

    def _add(self, other):
        return VectorValue(
            tuple(a + b for a, b in zip(self.components, other.components)),
            self.norm)

    def _dist(self, other):
        return self._measure(self.as_array() - other.as_array())

    def _measure(self, array):
        return float(np.linalg.norm(array, ord=NORM_ORDERS[self.norm]))

    @classmethod
    def _sum_many(cls, values):
        first = values[0]
        columns = zip(*(v.components for v in values))
        return VectorValue(
            tuple(math.fsum(column) for column in columns), first.norm)

    def norm_value(self):
        return self._measure(self.as_array())

    def pair(self, dual):
        """The duality <u, u*> = sum of u_i u*_i"""
        dual = tuple(dual)
        if len(dual) != self.k:
            raise ValueSpaceMismatchError(
                f'functional of length {len(dual)} on {self.space_tag}')
        return math.fsum(u * w for u, w in zip(self.components, dual))

    def coordinates(self):
        return self.as_array()

    def coordinate_diameter(self, widths):
        return self._measure(np.asarray(widths, dtype=float))


@dataclass(frozen=True)
class BoxValue(SemigroupValue):
    """
    A nonempty axis-aligned box in R^k, added by Minkowski sum and compared
    by the Hausdorff metric of the linf norm, which splits into the largest
    endpoint difference over all axes.
    """
    lower: tuple
    upper: tuple

    def __post_init__(self):
        lower = tuple(float(c) for c in self.lower)
        upper = tuple(float(c) for c in self.upper)
        if len(lower) != len(upper) or not lower:
            raise ValueError('box needs matching nonempty endpoint lists')
        if any(lo > hi for lo, hi in zip(lower, upper)):
            raise ValueError(f'box with lower > upper: {lower}, {upper}')
        object.__setattr__(self, 'lower', lower)
        object.__setattr__(self, 'upper', upper)

    @classmethod
    def from_intervals(cls, intervals):
        intervals = [tuple(pair) for pair in intervals]
        return cls(tuple(lo for lo, _ in intervals),
                   tuple(hi for _, hi in intervals))

    @property
    def k(self):
        return len(self.lower)

    @property
    def space_tag(self):
        return f'box:{self.k}'

    @property
    def intervals(self):
        return list(zip(self.lower, self.upper))

    def _add(self, other):
        return BoxValue(
            tuple(a + b for a, b in zip(self.lower, other.lower)),
            tuple(a + b for a, b in zip(self.upper, other.upper)))

    def _dist(self, other):
        return max(
            max(abs(a - b) for a, b in zip(self.lower, other.lower)),
            max(abs(a - b) for a, b in zip(self.upper, other.upper)),
        )

    @classmethod
    def _sum_many(cls, values):
        return BoxValue(
            tuple(math.fsum(c) for c in zip(*(v.lower for v in values))),
            tuple(math.fsum(c) for c in zip(*(v.upper for v in values))))

    def coordinates(self):
        return np.asarray(self.lower + self.upper, dtype=float)

    def coordinate_diameter(self, widths):
        return float(np.max(widths))


@dataclass(frozen=True)
class MultisetValue(SemigroupValue):
    """
    A finite multiset of atoms: union adds multiplicities and the distance
    is the size of the symmetric difference. Formal sums of evaluations are
    equal exactly when their multisets coincide.
    """
    items: tuple

    def __post_init__(self):
        counts = Counter(dict(self.items))
        object.__setattr__(self, 'items', tuple(sorted(
            (str(atom), int(n)) for atom, n in counts.items() if n > 0)))

    @classmethod
    def of(cls, *atoms):
        return cls(tuple(Counter(str(a) for a in atoms).items()))

    @classmethod
    def from_counter(cls, counter):
        return cls(tuple(counter.items()))

    @property
    def space_tag(self):
        return 'multiset'

    def counter(self):
        return Counter(dict(self.items))

    def atoms(self):
        """Atoms repeated by multiplicity, sorted"""
        return sorted(self.counter().elements())

    def _add(self, other):
        return MultisetValue.from_counter(self.counter() + other.counter())

    def _dist(self, other):
        mine, theirs = self.counter(), other.counter()
        return float(sum(((mine - theirs) + (theirs - mine)).values()))

    @classmethod
    def _sum_many(cls, values):
        total = Counter()
        for value in values:
            total.update(value.counter())
        return MultisetValue.from_counter(total)

    def __len__(self):
        return sum(n for _, n in self.items)


def dist(u, v):
    return u.dist(v)


def add(u, v):
    return u + v


def semigroup_sum(values):
    """Fold a nonempty sequence of values of one space with +"""
    values = list(values)
    if not values:
        raise EmptySemigroupSumError('empty semigroup sum')
    first = values[0]
    for value in values[1:]:
        first._check_same_space(value)
    return type(first)._sum_many(values)


@dataclass(frozen=True)
class ValueSpace:
    """Parsed value-space tag, able to read and write document entries"""
    kind: str
    k: int = None
    norm: str = None

    @property
    def tag(self):
        if self.kind == 'vector':
            return f'vector:{self.k}:{self.norm}'
        if self.kind == 'box':
            return f'box:{self.k}'
        return self.kind

    @property
    def is_real(self):
        return self.kind == 'real'

    @property
    def supports_compactness(self):
        return self.kind != 'multiset'

    def from_json(self, entry):
        """Build a value from its document entry, raising ValueError"""
        if self.kind == 'real':
            if isinstance(entry, bool) or not isinstance(entry, (int, float)):
                raise ValueError(f'real entry must be a number, got {entry!r}')
            return RealValue(entry)
        if self.kind == 'vector':
            if not isinstance(entry, list) or len(entry) != self.k:
                raise ValueError(
                    f'vector entry must be a list of {self.k} numbers')
            return VectorValue(tuple(_number(c) for c in entry), self.norm)
        if self.kind == 'box':
            if not isinstance(entry, list) or len(entry) != self.k or any(
                    not isinstance(p, list) or len(p) != 2 for p in entry):
                raise ValueError(
                    f'box entry must be a list of {self.k} [lo, hi] pairs')
            return BoxValue.from_intervals(
                [(_number(lo), _number(hi)) for lo, hi in entry])
        if not isinstance(entry, list) or any(
                not isinstance(a, str) for a in entry):
            raise ValueError('multiset entry must be a list of atom strings')
        return MultisetValue.of(*entry)

    def to_json(self, value):
        if value.space_tag != self.tag:
            raise ValueSpaceMismatchError(
                f'{value.space_tag} value in a {self.tag} document')
        if self.kind == 'real':
            return value.value
        if self.kind == 'vector':
            return list(value.components)
        if self.kind == 'box':
            return [[lo, hi] for lo, hi in value.intervals]
        return value.atoms()

    def accepts(self, value):
        return getattr(value, 'space_tag', None) == self.tag


def _number(entry):
    if isinstance(entry, bool) or not isinstance(entry, (int, float)):
        raise ValueError(f'expected a number, got {entry!r}')
    return float(entry)


def parse_space(tag):
    """Parse "real", "vector:<k>:<l1|l2|linf>", "box:<k>" or "multiset"."""
    parts = str(tag).split(':')
    kind = parts[0]
    if kind in ('real', 'multiset') and len(parts) == 1:
        return ValueSpace(kind)
    try:
        if kind == 'vector' and len(parts) == 3 and parts[2] in NORM_ORDERS:
            k = int(parts[1])
            if k >= 1:
                return ValueSpace('vector', k, parts[2])
        if kind == 'box' and len(parts) == 2:
            k = int(parts[1])
            if k >= 1:
                return ValueSpace('box', k)
    except ValueError:
        pass
    raise ValueError(f'unknown value space {tag!r}')
