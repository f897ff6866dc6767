"""Reduced quotients of polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .poly import Poly, canonical_vars, poly_gcd, to_fraction


class RationalFunction:
    """``num / den`` with ``gcd(num, den) = 1`` and ``den`` monic in grlex order."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, reduced: bool = False):
        num = Poly.coerce(_as_poly_arg(num))
        den = Poly.const(1) if den is None else Poly.coerce(_as_poly_arg(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.const(1)
        elif not reduced:
            if not den.is_constant():
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num = num.exquo(g)
                    den = den.exquo(g)
            lc = den.leading_coefficient()
            if lc != 1:
                num = num.scale(1 / lc)
                den = den.scale(1 / lc)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def const(cls, c) -> RationalFunction:
        return cls(Poly.const(to_fraction(c)), reduced=True)

    @classmethod
    def var(cls, name: str) -> RationalFunction:
        return cls(Poly.var(name), reduced=True)

    @classmethod
    def coerce(cls, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Poly):
            return cls(x, reduced=True)
        return cls.const(x)

    # -- structure --------------------------------------------------------------

    @property
    def vars(self) -> tuple[str, ...]:
        return canonical_vars(self.num.vars + self.den.vars)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num.scale(1 / self.den.constant_value())

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        if other.is_constant():
            c = other.constant_value()
            return RationalFunction(self.num.scale(c), self.den, reduced=True) if c else RationalFunction(0)
        if self.is_constant():
            return other * self
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("only integer powers")
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, reduced=True)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def diff(self, var: str) -> RationalFunction:
        dn = self.num.diff(var)
        dd = self.den.diff(var)
        if dd.is_zero():
            return RationalFunction(dn, self.den)
        return RationalFunction(dn * self.den - self.num * dd, self.den * self.den)

    def subs(self, var: str, value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            # homogenize by the denominator of ``value``
            k = max(self.num.degree_in(var), self.den.degree_in(var), 0)
            n = _homog(self.num, var, value, k)
            d = _homog(self.den, var, value, k)
            return RationalFunction(n, d)
        return RationalFunction(self.num.subs(var, value), self.den.subs(var, value))

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes")
        return self.num.evaluate(values) / d

    # -- printing ---------------------------------------------------------------

    def __str__(self):
        if self.den == Poly.const(1):
            return str(self.num)
        num, den = self._integral_display()
        n = str(num)
        d = str(den)
        if len(num.terms) > 1:
            n = f"({n})"
        if len(den.terms) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def _integral_display(self) -> tuple[Poly, Poly]:
        # same quotient with coprime integer coefficients, for printing only
        from math import gcd, lcm
        coeffs = list(self.num.terms.values()) + list(self.den.terms.values())
        k = 1
        for c in coeffs:
            k = lcm(k, c.denominator)
        g = 0
        for c in coeffs:
            g = gcd(g, (c * k).numerator)
        f = Fraction(k, g)
        return self.num.scale(f), self.den.scale(f)

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"


def _homog(p: Poly, var: str, value: RationalFunction, k: int) -> Poly:
    # p(value) * den(value)**k as a polynomial
    coeffs = p.coefficients_in(var)
    out = Poly()
    for j, c in coeffs.items():
        out = out + c * value.num ** j * value.den ** (k - j)
    return out


def _as_poly_arg(x):
    if isinstance(x, (int, str)):
        return to_fraction(x)
    return x


def _maybe(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, Poly)):
        return RationalFunction.coerce(x)
    return NotImplemented
