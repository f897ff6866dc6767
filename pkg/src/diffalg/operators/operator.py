"""The operator ring k[D] over k = Q(t) with t' = 1."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..exact.poly import Poly, to_fraction
from ..exact.ratfunc import RationalFunction
from .series import SeriesError, TruncatedSeries, expand_rational

RF = RationalFunction


class LinearDifferentialOperator:
    """``sum(a_i * D^i)``; coefficients are rational functions of ``var``.

    Other variables appearing in the coefficients are symbolic constants
    (their derivative is zero).
    """

    __slots__ = ("coefficients", "var")

    def __init__(self, coefficients, var: str = "t"):
        cs = [RF.coerce(c) for c in coefficients]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coefficients = tuple(cs)
        self.var = var

    @classmethod
    def D(cls, var: str = "t") -> LinearDifferentialOperator:
        return cls([0, 1], var)

    @classmethod
    def scalar(cls, a, var: str = "t") -> LinearDifferentialOperator:
        return cls([a], var)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> RationalFunction:
        return self.coefficients[-1]

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.leading == 1

    def monic(self) -> LinearDifferentialOperator:
        if self.is_zero():
            raise ZeroDivisionError("the zero operator has no monic form")
        lead = self.leading
        if lead == 1:
            return self
        inv = lead.inverse()
        return LinearDifferentialOperator([c * inv for c in self.coefficients], self.var)

    def cleared(self) -> LinearDifferentialOperator:
        """A left multiple by a rational function with polynomial coefficients."""
        from ..exact.poly import poly_gcd
        den = Poly.const(1)
        for c in self.coefficients:
            g = poly_gcd(den, c.den)
            den = den * c.den.exquo(g)
        return LinearDifferentialOperator([c * den for c in self.coefficients], self.var)

    def coefficient(self, i: int) -> RationalFunction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else RF(0)

    def parameters(self) -> tuple[str, ...]:
        names = set()
        for c in self.coefficients:
            names.update(c.vars)
        names.discard(self.var)
        return tuple(sorted(names))

    # -- ring structure --------------------------------------------------------

    def _check(self, other):
        if isinstance(other, LinearDifferentialOperator):
            if other.var != self.var:
                raise ValueError(f"operators over different variables: {self.var}, {other.var}")
            return other
        return LinearDifferentialOperator([other], self.var)

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return LinearDifferentialOperator(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return LinearDifferentialOperator([-c for c in self.coefficients], self.var)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        return op_mul(self, self._check(other))

    def __rmul__(self, other):
        return op_mul(self._check(other), self)

    def __pow__(self, k: int):
        out = LinearDifferentialOperator([1], self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        """Coefficient-wise equality after monic normalization."""
        if not isinstance(other, LinearDifferentialOperator):
            return NotImplemented
        if self.var != other.var:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.monic().coefficients == other.monic().coefficients

    def __hash__(self):
        if self.is_zero():
            return hash((self.var, ()))
        return hash((self.var, self.monic().coefficients))

    def identical(self, other: LinearDifferentialOperator) -> bool:
        """Coefficient-wise equality without normalization."""
        return self.var == other.var and self.coefficients == other.coefficients

    # -- action ------------------------------------------------------------------

    def apply(self, y: RationalFunction) -> RationalFunction:
        """``L(y)`` for ``y`` in the base field."""
        y = RF.coerce(y)
        out = RF(0)
        d = y
        for i, a in enumerate(self.coefficients):
            if i:
                d = d.diff(self.var)
            out = out + a * d
        return out

    def apply_series(self, y: TruncatedSeries, point=0) -> TruncatedSeries:
        """``L(y)`` for a series expanded at ``point``; known to ``order(y) - order(L)``."""
        n = self.order
        if y.order <= n:
            raise SeriesError("series truncation too small for this operator")
        N = y.order - n
        out = TruncatedSeries.constant(0, N)
        d = y
        for i, a in enumerate(self.coefficients):
            if i:
                d = d.derivative()
            if a.is_zero():
                continue
            out = out + expand_rational(a, self.var, point, N) * d.truncate(N)
        return out

    def annihilates(self, y: TruncatedSeries, point=0) -> bool:
        """Exact check that ``L(y) = 0`` to truncation, clearing denominators first."""
        return self.cleared().apply_series(y, point).is_zero()

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.order, -1, -1):
            c = self.coefficients[k]
            if c.is_zero():
                continue
            dk = "" if k == 0 else ("D" if k == 1 else f"D^{k}")
            sign, body = _signed_coefficient(c, dk)
            if not parts:
                parts.append(("-" if sign < 0 else "") + body)
            else:
                parts.append((" - " if sign < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"LinearDifferentialOperator({str(self)!r})"


def _signed_coefficient(c: RationalFunction, symbol: str):
    """Split ``c*symbol`` into a sign and a printable body."""
    sign = 1
    if c.is_polynomial() and len(c.num.terms) == 1 and c.as_poly().leading_coefficient() < 0:
        sign, c = -1, -c
    if not symbol:
        s = str(c)
        if not c.is_polynomial() or len(c.num.terms) > 1:
            s = f"({s})"
        return sign, s
    if c == 1:
        return sign, symbol
    s = str(c)
    if not c.is_polynomial() or len(c.num.terms) > 1:
        s = f"({s})"
    return sign, f"{s}*{symbol}"


def op_mul(A: LinearDifferentialOperator, B: LinearDifferentialOperator) -> LinearDifferentialOperator:
    """Noncommutative product using ``D*b = b*D + b'``."""
    if A.var != B.var:
        raise ValueError(f"operators over different variables: {A.var}, {B.var}")
    if A.is_zero() or B.is_zero():
        return LinearDifferentialOperator([], A.var)
    var = A.var
    # derivs[j][k] = k-th derivative of b_j
    derivs = []
    for b in B.coefficients:
        ds = [b]
        for _ in range(A.order):
            ds.append(ds[-1].diff(var))
        derivs.append(ds)
    out = [RF(0)] * (A.order + B.order + 1)
    for i, a in enumerate(A.coefficients):
        if a.is_zero():
            continue
        for j in range(len(B.coefficients)):
            for k in range(i + 1):
                bk = derivs[j][k]
                if bk.is_zero():
                    continue
                out[i - k + j] = out[i - k + j] + a * bk * comb(i, k)
    return LinearDifferentialOperator(out, var)


def series_solutions(L: LinearDifferentialOperator, expansion_point=None, N: int = 24):
    """Canonical series basis of ``L(y) = 0`` at an ordinary point.

    Returns ``(point, basis)``; the i-th basis element has coefficients
    ``c_j = [i == j]`` for ``j < order(L)``.  With ``expansion_point=None``
    the point is 0, or the smallest non-negative integer ordinary point.
    """
    if L.order < 1:
        raise ValueError("series_solutions needs an operator of order >= 1")
    M = L.monic()
    n = M.order
    if expansion_point is None:
        point = 0
        while _singular_coefficient(M, point) is not None:
            point += 1
    else:
        point = to_fraction(expansion_point)
        bad = _singular_coefficient(M, point)
        if bad is not None:
            raise SeriesError(f"{point} is a singular point: coefficient {bad} has a pole there")
    coeffs = [expand_rational(M.coefficient(i), M.var, point, N) for i in range(n)]
    basis = []
    for idx in range(n):
        c = [Fraction(0)] * N
        if idx < N:
            c[idx] = Fraction(1)
        for k in range(0, N - n):
            acc = Fraction(0)
            for i in range(n):
                a = coeffs[i]
                for m in range(k + 1):
                    am = a[k - m]
                    if am:
                        acc += am * c[m + i] * _falling(m + i, i)
            c[k + n] = -acc / _falling(k + n, n)
        basis.append(TruncatedSeries(tuple(c)))
    return point, basis


def _falling(m: int, i: int) -> int:
    # m!/(m-i)!
    out = 1
    for j in range(i):
        out *= m - j
    return out


def _singular_coefficient(M: LinearDifferentialOperator, point):
    for c in M.coefficients:
        if c.den.is_constant():
            continue
        if c.den.evaluate({M.var: to_fraction(point)}) == 0:
            return c
    return None
