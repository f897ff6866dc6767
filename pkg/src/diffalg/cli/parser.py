"""
Expression syntax shared by every command.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' exponent)?
    exponent := INT | '-' INT | '(' '-'? INT ')'
    atom   := INT | NAME "'"* | '(' expr ')'

``D`` is an ordinary name at this level; commands decide whether it is
the derivation symbol.  Every node carries its source span, which is
ignored by equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class ParseError(ValueError):
    def __init__(self, message: str, src: str, offset: int, expected=()):
        self.src = src
        self.offset = offset
        self.line, self.column = _line_col(src, offset)
        self.expected = tuple(sorted(set(expected)))
        self.message = message
        super().__init__(str(self))

    def __str__(self):
        exp = f"; expected one of {', '.join(self.expected)}" if self.expected else ""
        return f"line {self.line}, column {self.column}: {self.message}{exp}"


def _line_col(src: str, offset: int):
    line = src.count("\n", 0, offset) + 1
    start = src.rfind("\n", 0, offset) + 1
    return line, offset - start + 1


Span = tuple[int, int]


@dataclass(frozen=True)
class Num:
    value: int
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Var:
    name: str
    primes: int = 0
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    operand: object
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    span: Span = field(default=(0, 0), compare=False, repr=False)


Expression = Num | Var | Neg | BinOp | Pow

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()'])|(?P<bad>\S))")


@dataclass
class _Tok:
    kind: str
    text: str
    start: int
    end: int


def _tokenize(src: str) -> list[_Tok]:
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            break
        kind = m.lastgroup
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", src, m.start(kind),
                             ("number", "name", "(", "-"))
        text = m.group(kind)
        out.append(_Tok(kind if kind != "op" else text, text, m.start(kind), m.end(kind)))
        pos = m.end()
    out.append(_Tok("end", "", len(src.rstrip()), len(src.rstrip())))
    return out


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, expected):
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {what}", self.src, t.start, expected)

    def expect(self, kind: str) -> _Tok:
        if self.tok.kind != kind:
            self.fail((kind,))
        return self.take()

    def parse(self):
        if self.tok.kind == "end":
            self.fail(("number", "name", "(", "-"))
        e = self.expr()
        if self.tok.kind != "end":
            self.fail(("+", "-", "*", "/", "^", "end of input"))
        return e

    def expr(self):
        left = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.take().kind
            right = self.term()
            left = BinOp(op, left, right, span=(left.span[0], right.span[1]))
        return left

    def term(self):
        left = self.unary()
        while self.tok.kind in ("*", "/"):
            op = self.take().kind
            right = self.unary()
            left = BinOp(op, left, right, span=(left.span[0], right.span[1]))
        return left

    def unary(self):
        if self.tok.kind == "-":
            start = self.take().start
            operand = self.unary()
            return Neg(operand, span=(start, operand.span[1]))
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind != "^":
            return base
        self.take()
        k, end = self.exponent()
        if self.tok.kind == "^":
            raise ParseError("chained exponents need parentheses", self.src, self.tok.start, ("*", "/", "+", "-"))
        return Pow(base, k, span=(base.span[0], end))

    def exponent(self):
        paren = self.tok.kind == "("
        if paren:
            self.take()
        sign = 1
        if self.tok.kind == "-":
            self.take()
            sign = -1
        if self.tok.kind != "int":
            self.fail(("integer exponent",) if paren or sign < 0 else ("integer exponent", "(", "-"))
        t = self.take()
        end = t.end
        if paren:
            end = self.expect(")").end
        return sign * int(t.text), end

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.take()
            return Num(int(t.text), span=(t.start, t.end))
        if t.kind == "name":
            self.take()
            primes = 0
            end = t.end
            while self.tok.kind == "'":
                end = self.take().end
                primes += 1
            return Var(t.text, primes, span=(t.start, end))
        if t.kind == "(":
            start = self.take().start
            e = self.expr()
            end = self.expect(")").end
            return _respan(e, (start, end))
        self.fail(("number", "name", "(", "-"))


def _respan(e, span):
    # parentheses widen the span but leave the node itself unchanged
    return type(e)(*[getattr(e, f) for f in e.__dataclass_fields__ if f != "span"], span=span)


def parse_expression(src: str):
    """Parse ``src`` into an AST; raises :class:`ParseError` with line, column and expected tokens."""
    return _Parser(src).parse()


# -- printing ---------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_NEG_PREC = 3
_POW_PREC = 4
_ATOM_PREC = 5


def _prec(e) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return _NEG_PREC
    if isinstance(e, Pow):
        return _POW_PREC
    return _ATOM_PREC


def _wrap(e, need: int) -> str:
    s = to_source(e)
    return f"({s})" if _prec(e) < need else s


def to_source(e) -> str:
    """Print with the minimal parentheses that parse back to the same tree."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name + "'" * e.primes
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, _NEG_PREC)
    if isinstance(e, Pow):
        k = str(e.exponent) if e.exponent >= 0 else f"({e.exponent})"
        return f"{_wrap(e.base, _ATOM_PREC)}^{k}"
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        left = _wrap(e.left, p)
        right = _wrap(e.right, p + 1)
        sep = f" {e.op} " if p == 1 else e.op
        return f"{left}{sep}{right}"
    raise TypeError(f"not an expression node: {e!r}")


def names(e) -> set[str]:
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, Neg):
        return names(e.operand)
    if isinstance(e, Pow):
        return names(e.base)
    if isinstance(e, BinOp):
        return names(e.left) | names(e.right)
    return set()


def evaluate(e, leaf, *, src: str = ""):
    """Fold the tree with ring operations; ``leaf`` maps Num/Var nodes to ring elements."""
    if isinstance(e, (Num, Var)):
        return leaf(e)
    if isinstance(e, Neg):
        return -evaluate(e.operand, leaf, src=src)
    if isinstance(e, Pow):
        b = evaluate(e.base, leaf, src=src)
        if e.exponent < 0:
            return _reciprocal(b, e, src) ** (-e.exponent)
        return b ** e.exponent
    a = evaluate(e.left, leaf, src=src)
    b = evaluate(e.right, leaf, src=src)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    return a * _reciprocal(b, e.right, src)


def _reciprocal(b, node, src):
    try:
        return b.inverse()
    except ZeroDivisionError:
        raise ParseError("division by zero", src, node.span[0]) from None
