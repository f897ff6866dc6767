"""From syntax trees to rational functions and operators, with the variable conventions."""

from __future__ import annotations

import re

from ..exact.ratfunc import RationalFunction
from ..operators import LinearDifferentialOperator
from .parser import BinOp, Neg, Num, ParseError, Pow, Var, evaluate, names, parse_expression

RF = RationalFunction
_FIELD_VAR = re.compile(r"x\d+$")


def _walk(e):
    yield e
    for child in (getattr(e, "operand", None), getattr(e, "base", None),
                  getattr(e, "left", None), getattr(e, "right", None)):
        if child is not None:
            yield from _walk(child)


def _vars(e):
    return [v for v in _walk(e) if isinstance(v, Var)]


def _leaf(src):
    def leaf(node):
        if isinstance(node, Num):
            return RF(node.value)
        if node.primes:
            raise ParseError(f"derivative marks are not allowed on {node.name}", src, node.span[0])
        return RF.var(node.name)
    return leaf


def check_univariate(trees, srcs, default: str = "t") -> str:
    """The single variable shared by ``trees``; ``D`` and a second name are errors."""
    seen = None
    for e, src in zip(trees, srcs):
        for v in _vars(e):
            if v.name == "D":
                raise ParseError("D is only meaningful in operator commands", src, v.span[0])
            if seen is None:
                seen = v.name
            elif v.name != seen:
                raise ParseError(f"mixing variables {seen} and {v.name}", src, v.span[0])
    return seen or default


def to_rational(src: str, tree=None) -> RationalFunction:
    tree = parse_expression(src) if tree is None else tree
    return evaluate(tree, _leaf(src), src=src)


def univariate_inputs(srcs: list[str]) -> tuple[list, list[RationalFunction], str]:
    trees = [parse_expression(s) for s in srcs]
    var = check_univariate(trees, srcs)
    return trees, [to_rational(s, t) for s, t in zip(srcs, trees)], var


def vector_field_inputs(srcs: list[str]):
    """Components over ``x1..xn`` (or a single ``x`` for one component)."""
    trees = [parse_expression(s) for s in srcs]
    allowed = {"x"} if len(srcs) == 1 else set()
    allowed |= {f"x{i + 1}" for i in range(len(srcs))}
    for e, src in zip(trees, srcs):
        for v in _vars(e):
            if v.name not in allowed:
                if v.name == "t":
                    why = "t belongs to the univariate commands; vector fields use x1..xn"
                else:
                    why = f"{v.name} is not one of {', '.join(sorted(allowed))}"
                raise ParseError(why, src, v.span[0])
    used = set().union(*(names(e) for e in trees))
    if len(srcs) == 1 and "x1" in used:
        variables = ["x1"]
    elif len(srcs) == 1:
        variables = ["x"]
    else:
        variables = [f"x{i + 1}" for i in range(len(srcs))]
    return trees, [to_rational(s, t) for s, t in zip(srcs, trees)], variables


def to_operator(src: str, tree=None, var: str = "t") -> LinearDifferentialOperator:
    """Operator in ``D`` with coefficients in Q(t, parameters)."""
    tree = parse_expression(src) if tree is None else tree
    for v in _vars(tree):
        if _FIELD_VAR.match(v.name) or (v.name == "x"):
            raise ParseError(f"{v.name} is a vector-field variable; operators live over {var}", src, v.span[0])
    return _op(tree, src, var)


def _op(e, src, var):
    if "D" not in names(e):
        return LinearDifferentialOperator.scalar(to_rational(src, e), var)
    if isinstance(e, Var):
        if e.primes:
            raise ParseError("D takes no derivative marks", src, e.span[0])
        return LinearDifferentialOperator.D(var)
    if isinstance(e, Neg):
        return -_op(e.operand, src, var)
    if isinstance(e, Pow):
        if e.exponent < 0:
            raise ParseError("negative powers of an expression containing D", src, e.span[0])
        return _op(e.base, src, var) ** e.exponent
    if isinstance(e, BinOp):
        a = _op(e.left, src, var)
        if e.op == "/":
            if "D" in names(e.right):
                raise ParseError("cannot divide by an expression containing D", src, e.right.span[0])
            d = to_rational(src, e.right)
            if d.is_zero():
                raise ParseError("division by zero", src, e.right.span[0])
            return a * LinearDifferentialOperator.scalar(d.inverse(), var)
        b = _op(e.right, src, var)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        return a * b
    raise TypeError(e)
