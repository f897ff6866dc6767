"""
Sparse multivariate polynomials over the rationals.

A :class:`Poly` stores ``{exponent tuple: Fraction}`` over a tuple of
variable names.  Variables that do not occur are dropped on construction
and the remaining ones are kept in a canonical (natural) order, so two
equal polynomials always have identical representations.  The term order
is graded lexicographic on that variable order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import upoly

_NAME_SPLIT = re.compile(r"(\d+)")


def var_key(name: str):
    """Natural sort key: ``x2 < x10``, ``t`` first among single letters."""
    parts = _NAME_SPLIT.split(name)
    return tuple(int(p) if p.isdigit() else p for p in parts if p != "")


def canonical_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=var_key))


def to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


def grlex_key(exp: tuple[int, ...]):
    return (sum(exp), exp)


class Poly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping | None = None):
        vars = tuple(vars)
        terms = {} if terms is None else terms
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != len(vars):
                raise ValueError("exponent length does not match variables")
            c = to_fraction(c)
            if c != 0:
                clean[e] = clean.get(e, 0) + c
        clean = {e: c for e, c in clean.items() if c != 0}
        used = [i for i in range(len(vars)) if any(e[i] for e in clean)]
        if len(set(vars)) != len(vars):
            raise ValueError("duplicate variable names")
        names = [vars[i] for i in used]
        order = sorted(range(len(names)), key=lambda k: var_key(names[k]))
        idx = [used[k] for k in order]
        self.vars = tuple(vars[i] for i in idx)
        self.terms = {tuple(e[i] for i in idx): c for e, c in clean.items()}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c) -> Poly:
        return cls((), {(): c})

    @classmethod
    def var(cls, name: str) -> Poly:
        return cls((name,), {(1,): 1})

    @classmethod
    def from_dense(cls, coeffs, var: str) -> Poly:
        return cls((var,), {(i,): c for i, c in enumerate(coeffs) if c != 0})

    @classmethod
    def coerce(cls, x) -> Poly:
        if isinstance(x, Poly):
            return x
        return cls.const(x)

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Fraction:
        if self.vars:
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        if not self.terms:
            return -1
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def univariate_var(self) -> str | None:
        """The single variable of ``self`` (``None`` for constants)."""
        if len(self.vars) > 1:
            raise ValueError(f"{self} is not univariate")
        return self.vars[0] if self.vars else None

    def to_dense(self, var: str | None = None) -> list[Fraction]:
        if self.vars and (len(self.vars) > 1 or (var is not None and self.vars[0] != var)):
            raise ValueError(f"{self} is not a polynomial in {var}")
        if not self.terms:
            return []
        if not self.vars:
            return [self.terms[()]]
        out = [Fraction(0)] * (self.degree() + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    def coefficients_in(self, var: str) -> dict[int, Poly]:
        """``{k: coefficient of var**k}`` with coefficients free of ``var``."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        acc: dict[int, dict] = {}
        for e, c in self.terms.items():
            acc.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: Poly(rest, d) for k, d in acc.items()}

    # -- arithmetic -------------------------------------------------------------

    def _aligned(self, other: Poly):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vs = canonical_vars(self.vars + other.vars)
        return vs, _embed(self, vs), _embed(other, vs)

    def __add__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        vs, a, b = self._aligned(other)
        r = dict(a)
        for e, c in b.items():
            r[e] = r.get(e, 0) + c
        return Poly(vs, r)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

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
        if not other.vars:
            c = other.terms.get((), 0)
            return Poly(self.vars, {e: v * c for e, v in self.terms.items()})
        vs, a, b = self._aligned(other)
        r: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                r[e] = r.get(e, 0) + c1 * c2
        return Poly(vs, r)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer")
        r = Poly.const(1)
        base = self
        while n:
            if n & 1:
                r = r * base
            n >>= 1
            if n:
                base = base * base
        return r

    def scale(self, c) -> Poly:
        c = to_fraction(c)
        return Poly(self.vars, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def diff(self, var: str) -> Poly:
        if var not in self.vars:
            return Poly()
        i = self.vars.index(var)
        r = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                r[tuple(f)] = c * e[i]
        return Poly(self.vars, r)

    def subs(self, var: str, value) -> Poly:
        """Substitute a rational or a polynomial for ``var``."""
        if var not in self.vars:
            return self
        by_power = self.coefficients_in(var)
        value = Poly.coerce(to_fraction(value) if not isinstance(value, Poly) else value)
        top = max(by_power)
        r = Poly()
        for k in range(top, -1, -1):
            r = r * value + by_power.get(k, Poly())
        return r

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for name, k in zip(self.vars, e):
                term *= to_fraction(values[name]) ** k
            total += term
        return total

    def exquo(self, other: Poly) -> Poly:
        """Exact division; raises ``ArithmeticError`` if ``other`` does not divide."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        """Division by the leading term in grlex order.

        The remainder is zero exactly when ``other`` divides ``self``.
        """
        other = Poly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if len(self.vars) <= 1 and len(other.vars) <= 1 and (
            not self.vars or not other.vars or self.vars == other.vars
        ):
            v = self.vars[0] if self.vars else (other.vars[0] if other.vars else "_")
            q, r = upoly.divmod_(self.to_dense(v if self.vars else None),
                                 other.to_dense(v if other.vars else None))
            return Poly.from_dense(q, v), Poly.from_dense(r, v)
        vs = canonical_vars(self.vars + other.vars)
        rest = dict(_embed(self, vs))
        b = _embed(other, vs)
        be = max(b, key=grlex_key)
        bc = b[be]
        quo: dict = {}
        remd: dict = {}
        while rest:
            e = max(rest, key=grlex_key)
            c = rest[e]
            if all(x >= y for x, y in zip(e, be)):
                m = tuple(x - y for x, y in zip(e, be))
                f = c / bc
                quo[m] = f
                for e2, c2 in b.items():
                    k = tuple(x + y for x, y in zip(m, e2))
                    v = rest.get(k, 0) - f * c2
                    if v == 0:
                        rest.pop(k, None)
                    else:
                        rest[k] = v
            else:
                remd[e] = c
                del rest[e]
        return Poly(vs, quo), Poly(vs, remd)

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        from math import gcd, lcm
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> Poly:
        """Integer-coefficient primitive part with positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self) -> Poly:
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    # -- printing ---------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def monomial_str(self, e) -> str:
        parts = []
        for name, k in zip(self.vars, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = self.monomial_str(e)
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{_frac_str(a)}*{mono}"
            else:
                body = _frac_str(a)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def is_single_term(self) -> bool:
        return len(self.terms) == 1


def _frac_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _embed(p: Poly, vs: tuple[str, ...]) -> dict:
    if p.vars == vs:
        return p.terms
    pos = [vs.index(v) for v in p.vars]
    n = len(vs)
    out = {}
    for e, c in p.terms.items():
        f = [0] * n
        for i, k in zip(pos, e):
            f[i] = k
        out[tuple(f)] = c
    return out


def _maybe(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


# -- multivariate gcd ---------------------------------------------------------


@lru_cache(maxsize=64)
def _sympy_ring(vs: tuple[str, ...]):
    from sympy import QQ
    from sympy.polys.rings import ring
    R, *_ = ring(",".join(vs), QQ)
    return R


def _to_sympy(p: Poly, vs, R):
    from sympy import QQ
    return R.from_dict({e: QQ(c.numerator, c.denominator) for e, c in _embed(p, vs).items()})


def _from_sympy(el, vs) -> Poly:
    return Poly(vs, {e: Fraction(int(c.numerator), int(c.denominator)) for e, c in el.items()})


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor, normalized monic (leading grlex coefficient 1).

    Univariate inputs go through the Euclidean algorithm; multivariate
    ones are delegated to sympy's sparse polynomial gcd.
    """
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return Poly.const(1)
    vs = canonical_vars(a.vars + b.vars)
    if len(vs) == 1:
        g = upoly.gcd(a.to_dense(vs[0]), b.to_dense(vs[0]))
        return Poly.from_dense(g, vs[0])
    R = _sympy_ring(vs)
    g = _to_sympy(a, vs, R).gcd(_to_sympy(b, vs, R))
    return _from_sympy(g, vs).monic()
