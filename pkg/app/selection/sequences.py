"""
Sequences of grid functions, seen through a deterministic generator.
"""
from core.grid import GridFunction
from core.semigroup import BoxValue, RealValue, VectorValue, parse_space
from selection.expressions import Expression


class FunctionSequence:
    """j -> f_j on one grid and one value space, for j = 1, 2, ..."""

    def __init__(self, grid, space, generator):
        self.grid = grid
        self.space = parse_space(space) if isinstance(space, str) else space
        self._generator = generator
        self._cache = {}

    def __call__(self, j):
        if j not in self._cache:
            term = self._generator(j)
            if term.grid != self.grid or term.space != self.space:
                raise ValueError(
                    f'term {j} leaves the grid or value space of the sequence')
            self._cache[j] = term
        return self._cache[j]

    def values_at(self, node):
        """The scalar accessor j -> f_j(node)"""
        return lambda j: self(j).at(node)


def compile_expressions(space, expression, dims):
    """
    Compile the expression block for a value space: one string for real,
    k strings for vector:k, k [lo, hi] string pairs for box:k.
    """
    if space.kind == 'real':
        if not isinstance(expression, str):
            raise ValueError('real sequences take one expression string')
        return Expression(expression, dims)
    if space.kind == 'vector':
        if not isinstance(expression, list) or len(expression) != space.k:
            raise ValueError(f'vector sequences take {space.k} expressions')
        return [Expression(e, dims) for e in expression]
    if space.kind == 'box':
        if not isinstance(expression, list) or len(expression) != space.k \
                or any(not isinstance(p, list) or len(p) != 2
                       for p in expression):
            raise ValueError(f'box sequences take {space.k} [lo, hi] pairs')
        return [(Expression(lo, dims), Expression(hi, dims))
                for lo, hi in expression]
    raise ValueError(f'{space.tag} sequences cannot be written as expressions')


def expression_sequence(grid, space, expression):
    """A FunctionSequence evaluating a compiled expression block"""
    space = parse_space(space) if isinstance(space, str) else space
    compiled = compile_expressions(space, expression, grid.dims)

    def value(point, j):
        if space.kind == 'real':
            return RealValue(compiled(point, j))
        if space.kind == 'vector':
            return VectorValue(
                tuple(e(point, j) for e in compiled), space.norm)
        return BoxValue.from_intervals(
            [(lo(point, j), hi(point, j)) for lo, hi in compiled])

    def generator(j):
        return GridFunction.from_callable(
            grid, space, lambda point: value(point, j))

    return FunctionSequence(grid, space, generator)
