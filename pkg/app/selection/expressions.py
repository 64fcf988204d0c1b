"""
The expression mini-language of sequence specs.

Arithmetic over the node coordinates x1..xn and the sequence index j:
``+ - * /``, powers written ``**`` or ``^`` (both with the precedence of
``**``), unary signs, number literals and the functions abs, min and
max. There are no conditionals, names or attribute access; everything
else is rejected at compile time.
"""
import ast
import math
import operator

from core.exceptions import ExpressionError

BINARY = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
UNARY = {ast.USub: operator.neg, ast.UAdd: operator.pos}
FUNCTIONS = {'abs': (abs, 1, 1), 'min': (min, 2, None), 'max': (max, 2, None)}


class Expression:
    """A compiled expression in x1..xn and j"""

    def __init__(self, source, dims):
        self.source = source
        self.dims = dims
        self.variables = {f'x{i + 1}' for i in range(dims)} | {'j'}
        try:
            tree = ast.parse(str(source).replace('^', '**'), mode='eval')
        except SyntaxError as exc:
            raise ExpressionError(
                f'cannot parse expression {source!r}: {exc.msg}') from exc
        self._check(tree.body)
        self._tree = tree.body

    def _check(self, node):
        if isinstance(node, ast.BinOp):
            if type(node.op) not in BINARY:
                raise ExpressionError(
                    f'operator {type(node.op).__name__} is not allowed')
            self._check(node.left)
            self._check(node.right)
        elif isinstance(node, ast.UnaryOp):
            if type(node.op) not in UNARY:
                raise ExpressionError(
                    f'operator {type(node.op).__name__} is not allowed')
            self._check(node.operand)
        elif isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(
                    node.value, (int, float)):
                raise ExpressionError(f'literal {node.value!r} is not a number')
        elif isinstance(node, ast.Name):
            if node.id not in self.variables:
                raise ExpressionError(f'unknown variable {node.id!r}')
        elif isinstance(node, ast.Call):
            name = getattr(node.func, 'id', None)
            if name not in FUNCTIONS or node.keywords:
                raise ExpressionError(f'unknown function {name!r}')
            _, least, most = FUNCTIONS[name]
            if len(node.args) < least or (
                    most is not None and len(node.args) > most):
                raise ExpressionError(
                    f'{name} called with {len(node.args)} arguments')
            for arg in node.args:
                self._check(arg)
        else:
            raise ExpressionError(
                f'{type(node).__name__} is not part of the expression language')

    def _eval(self, node, env):
        if isinstance(node, ast.BinOp):
            return BINARY[type(node.op)](
                self._eval(node.left, env), self._eval(node.right, env))
        if isinstance(node, ast.UnaryOp):
            return UNARY[type(node.op)](self._eval(node.operand, env))
        if isinstance(node, ast.Constant):
            return float(node.value)
        if isinstance(node, ast.Name):
            return env[node.id]
        fn = FUNCTIONS[node.func.id][0]
        return fn(*(self._eval(arg, env) for arg in node.args))

    def __call__(self, point, j):
        env = {f'x{i + 1}': float(c) for i, c in enumerate(point)}
        env['j'] = float(j)
        try:
            value = self._eval(self._tree, env)
        except (ZeroDivisionError, OverflowError) as exc:
            raise ExpressionError(
                f'{self.source!r} failed at x={point}, j={j}: {exc}') from exc
        if isinstance(value, complex) or not math.isfinite(value):
            raise ExpressionError(
                f'{self.source!r} is not a finite real at x={point}, j={j}')
        return value
