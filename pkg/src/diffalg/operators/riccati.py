"""
Riccati polynomials of linear operators.

For monic ``L = D^n + a_{n-1} D^{n-1} + ... + a_0`` the substitution
``w = y'/y`` turns ``L(y)/y`` into a differential polynomial in ``w``::

    P_0 = 1,   P_{i+1} = P_i' + w * P_i,   R_L = P_n + sum(a_i * P_i)

A monomial is an exponent tuple ``(e_0, e_1, ...)`` standing for
``w^e_0 * w'^e_1 * ...``, stored without trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact.ratfunc import RationalFunction
from .operator import LinearDifferentialOperator
from .series import SeriesError, TruncatedSeries, expand_rational

RF = RationalFunction


def _norm(e) -> tuple[int, ...]:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


class RiccatiPolynomial:
    __slots__ = ("terms", "var", "name")

    def __init__(self, terms=None, var: str = "t", name: str = "w"):
        clean: dict[tuple[int, ...], RationalFunction] = {}
        for e, c in (terms or {}).items():
            e = _norm(e)
            c = clean.get(e, RF(0)) + RF.coerce(c)
            if c.is_zero():
                clean.pop(e, None)
            else:
                clean[e] = c
        self.terms = clean
        self.var = var
        self.name = name

    @classmethod
    def one(cls, var="t", name="w"):
        return cls({(): 1}, var, name)

    @classmethod
    def w(cls, var="t", name="w"):
        return cls({(1,): 1}, var, name)

    def __add__(self, other: RiccatiPolynomial) -> RiccatiPolynomial:
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, RF(0)) + c
        return RiccatiPolynomial(terms, self.var, self.name)

    def scale(self, c) -> RiccatiPolynomial:
        c = RF.coerce(c)
        return RiccatiPolynomial({e: v * c for e, v in self.terms.items()}, self.var, self.name)

    def times_w(self) -> RiccatiPolynomial:
        out = {}
        for e, c in self.terms.items():
            f = list(e) or [0]
            f[0] += 1
            out[tuple(f)] = c
        return RiccatiPolynomial(out, self.var, self.name)

    def derivative(self) -> RiccatiPolynomial:
        """Total derivative: coefficients in ``var`` plus the chain rule in ``w``."""
        out: dict = {}

        def put(e, c):
            e = _norm(e)
            out[e] = out.get(e, RF(0)) + c

        for e, c in self.terms.items():
            dc = c.diff(self.var)
            if not dc.is_zero():
                put(e, dc)
            for j, k in enumerate(e):
                if k == 0:
                    continue
                f = list(e) + [0]
                f[j] -= 1
                f[j + 1] += 1
                put(f, c * k)
        return RiccatiPolynomial(out, self.var, self.name)

    def __eq__(self, other):
        if not isinstance(other, RiccatiPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def derivative_order(self) -> int:
        """Highest derivative of ``w`` present (-1 if ``w`` is absent)."""
        return max((len(e) - 1 for e in self.terms), default=-1)

    @staticmethod
    def weight(e) -> int:
        return sum((j + 1) * k for j, k in enumerate(e))

    def evaluate(self, w: RationalFunction) -> RationalFunction:
        """Exact value at ``w`` in the base field."""
        w = RF.coerce(w)
        ders = [w]
        for _ in range(max(self.derivative_order, 0)):
            ders.append(ders[-1].diff(self.var))
        out = RF(0)
        for e, c in self.terms.items():
            term = c
            for j, k in enumerate(e):
                if k:
                    term = term * ders[j] ** k
            out = out + term
        return out

    def _sorted(self):
        def key(item):
            e = item[0]
            return (-self.weight(e), -len(e), tuple(-k for k in reversed(e)))
        return sorted(self.terms.items(), key=key)

    def monomial_str(self, e) -> str:
        parts = []
        for j, k in enumerate(e):
            if k == 0:
                continue
            sym = self.name + "'" * j
            parts.append(sym if k == 1 else f"{sym}^{k}")
        return "*".join(parts)

    def __str__(self):
        from .operator import _signed_coefficient
        if not self.terms:
            return "0"
        out = []
        for e, c in self._sorted():
            sign, body = _signed_coefficient(c, self.monomial_str(e))
            if not out:
                out.append(("-" if sign < 0 else "") + body)
            else:
                out.append((" - " if sign < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"RiccatiPolynomial({str(self)!r})"


def riccati_of(L: LinearDifferentialOperator, name: str = "w") -> RiccatiPolynomial:
    """The Riccati polynomial ``R_L``; ``L`` is made monic first."""
    if L.order < 1:
        raise ValueError("the Riccati polynomial needs an operator of order >= 1")
    M = L.monic()
    P = RiccatiPolynomial.one(M.var, name)
    R = RiccatiPolynomial({}, M.var, name)
    for i in range(M.order):
        R = R + P.scale(M.coefficient(i))
        P = P.derivative() + P.times_w()
    return R + P


def riccati_eval(R: RiccatiPolynomial, w: TruncatedSeries, point=0) -> TruncatedSeries:
    """Evaluate ``R`` at a series ``w`` expanded at ``point``."""
    top = R.derivative_order
    if w.order <= max(top, 0):
        raise SeriesError(f"series truncation {w.order} too small for derivative order {top}")
    ders = [w]
    for _ in range(max(top, 0)):
        ders.append(ders[-1].derivative())
    N = ders[-1].order
    ders = [d.truncate(N) for d in ders]
    out = TruncatedSeries.constant(Fraction(0), N)
    for e, c in R.terms.items():
        term = expand_rational(c, R.var, point, N)
        for j, k in enumerate(e):
            for _ in range(k):
                term = term * ders[j]
        out = out + term
    return out
