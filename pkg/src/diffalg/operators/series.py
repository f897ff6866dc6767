"""
Truncated power series with rational coefficients.

A series ``c_0 + c_1 s + ... + c_{N-1} s^{N-1}`` is known modulo ``s^N``;
``N`` is its truncation order.  Results of arithmetic carry the smallest
truncation order of their inputs, and differentiation loses one term.
Expansions of rational functions are taken at a point ``p`` with
``s = t - p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from ..exact import upoly
from ..exact.poly import to_fraction
from ..exact.ratfunc import RationalFunction


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(to_fraction(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @classmethod
    def constant(cls, c, N: int) -> TruncatedSeries:
        return cls((to_fraction(c),) + (Fraction(0),) * (N - 1))

    @classmethod
    def from_dense(cls, dense, N: int) -> TruncatedSeries:
        cs = [Fraction(0)] * N
        for i, c in enumerate(dense[:N]):
            cs[i] = c
        return cls(tuple(cs))

    def __getitem__(self, k):
        return self.coefficients[k]

    def truncate(self, N: int) -> TruncatedSeries:
        if N > self.order:
            raise SeriesError(f"cannot raise truncation order {self.order} to {N}")
        return TruncatedSeries(self.coefficients[:N])

    def _pair(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return self.coefficients[:n], other.coefficients[:n], n
        return None

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        a, b, n = self._pair(other)
        return TruncatedSeries(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = to_fraction(other)
            return TruncatedSeries(tuple(x * c for x in self.coefficients))
        a, b, n = self._pair(other)
        out = [Fraction(0)] * n
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j in range(n - i):
                out[i + j] += x * b[j]
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TruncatedSeries.constant(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self * (1 / to_fraction(other))
        a, b, n = self._pair(other)
        if b[0] == 0:
            raise SeriesError("series division by a series with zero constant term")
        out = []
        for k in range(n):
            acc = a[k]
            for j in range(1, k + 1):
                acc -= b[j] * out[k - j]
            out.append(acc / b[0])
        return TruncatedSeries(tuple(out))

    def derivative(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(c * i for i, c in enumerate(self.coefficients))[1:])

    def nth_derivative(self, k: int) -> TruncatedSeries:
        s = self
        for _ in range(k):
            s = s.derivative()
        return s

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (``order`` if none is known)."""
        for i, c in enumerate(self.coefficients):
            if c != 0:
                return i
        return self.order

    def __str__(self):
        return self.format("s")

    def format(self, var: str = "s") -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            cs = str(c)
            terms.append(cs if not mono else (mono if c == 1 else f"{cs}*{mono}"))
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({var}^{self.order})"


def expand_rational(f: RationalFunction, var: str, point, N: int) -> TruncatedSeries:
    """Taylor expansion of ``f`` at ``var = point`` to ``N`` terms."""
    extra = [v for v in f.vars if v != var]
    if extra:
        raise SeriesError(f"cannot expand {f}: symbolic parameters {extra}")
    point = to_fraction(point)
    num = upoly.taylor_shift(f.num.to_dense(var if f.num.vars else None), point)
    den = upoly.taylor_shift(f.den.to_dense(var if f.den.vars else None), point)
    if not den or den[0] == 0:
        raise SeriesError(f"denominator of {f} vanishes at {var} = {point}")
    return TruncatedSeries.from_dense(num, N) / TruncatedSeries.from_dense(den, N)


def wronskian(basis) -> TruncatedSeries:
    """Determinant of ``[y_j^{(i)}]`` for ``m`` series, to the available truncation."""
    m = len(basis)
    if m == 0:
        raise SeriesError("empty basis")
    N = min(y.order for y in basis)
    if N < m:
        raise SeriesError(f"truncation {N} too small for a {m}x{m} Wronskian")
    rows = [[y.nth_derivative(i) for y in basis] for i in range(m)]
    total = None
    for perm in permutations(range(m)):
        inv = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        term = rows[0][perm[0]]
        for i in range(1, m):
            term = term * rows[i][perm[i]]
        if inv % 2:
            term = -term
        total = term if total is None else total + term
    return total
