"""Arithmetic in a quadratic field Q(sqrt(d)), enough to run upoly routines."""

from __future__ import annotations

from fractions import Fraction


class QuadNumber:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=None):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _lift(self, other) -> QuadNumber:
        if isinstance(other, QuadNumber):
            if self.d is not None and other.d is not None and self.d != other.d:
                raise ValueError("mixing quadratic fields")
            return other
        return QuadNumber(other, 0, self.d)

    def _field(self, other):
        return self.d if self.d is not None else other.d

    def __add__(self, other):
        o = self._lift(other)
        return QuadNumber(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        d = self._field(o)
        extra = self.b * o.b * d if self.b and o.b else 0
        return QuadNumber(self.a * o.a + extra, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> QuadNumber:
        norm = self.a * self.a - (self.b * self.b * self.d if self.b else 0)
        if norm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadNumber(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __eq__(self, other):
        o = self._lift(other) if isinstance(other, (int, Fraction, QuadNumber)) else None
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"QuadNumber({self.a} + {self.b}*sqrt({self.d}))"
