"""
Univariate algorithms on :class:`Poly`: gcd, squarefree decomposition,
rational roots, resultants and partial fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd, lcm as ilcm

from sympy import divisors

from . import upoly
from .poly import Poly, canonical_vars
from .ratfunc import RationalFunction


def _common_var(*ps: Poly) -> str:
    vs = canonical_vars(v for p in ps for v in p.vars)
    if len(vs) > 1:
        raise ValueError(f"expected univariate polynomials in one shared variable, got {vs}")
    return vs[0] if vs else "t"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of two univariate polynomials in the same variable."""
    v = _common_var(a, b)
    return Poly.from_dense(upoly.gcd(a.to_dense(v), b.to_dense(v)), v)


@dataclass(frozen=True)
class SquarefreeDecomposition:
    parts: tuple[tuple[Poly, int], ...]
    unit: Fraction = Fraction(1)

    def recombine(self) -> Poly:
        out = Poly.const(self.unit)
        for f, m in self.parts:
            out = out * f ** m
        return out

    def multiplicity_of(self, k: int) -> Poly:
        for f, m in self.parts:
            if m == k:
                return f
        return Poly.const(1)


def squarefree_decompose(p: Poly) -> SquarefreeDecomposition:
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    v = _common_var(p)
    dense = p.to_dense(v)
    parts = tuple((Poly.from_dense(f, v), m) for f, m in upoly.squarefree(dense))
    return SquarefreeDecomposition(parts, dense[-1])


def integer_primitive(dense: list[Fraction]) -> list[int]:
    """Scale a dense rational polynomial to coprime integer coefficients."""
    den = 1
    for c in dense:
        den = ilcm(den, c.denominator)
    ints = [int(c * den) for c in dense]
    g = 0
    for c in ints:
        g = igcd(g, c)
    return [c // g for c in ints] if g else ints


def rational_roots(p: Poly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, ascending."""
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    v = _common_var(p)
    out = []
    for f, m in upoly.squarefree(p.to_dense(v)):
        for r in _rational_roots_squarefree(f):
            out.append((r, m))
    out.sort()
    return out


def _rational_roots_squarefree(dense) -> list[Fraction]:
    roots = []
    if not dense or len(dense) == 1:
        return roots
    if dense[0] == 0:
        roots.append(Fraction(0))
        k = 0
        while dense[k] == 0:
            k += 1
        dense = dense[k:]
    coeffs = integer_primitive(dense)
    n = len(coeffs) - 1
    if n == 0:
        return roots
    lead, const = abs(coeffs[-1]), abs(coeffs[0])
    # Cauchy bound prunes the candidate list
    bound = 1 + max(Fraction(abs(c), lead) for c in coeffs[:-1])
    for q in divisors(lead):
        for p in divisors(const):
            if Fraction(p, q) > bound or igcd(p, q) != 1:
                continue
            for s in (p, -p):
                # q^n * f(s/q) evaluated in integers
                acc = 0
                qp = 1
                for c in reversed(coeffs):
                    acc = acc * s + c * qp
                    qp *= q
                if acc == 0:
                    roots.append(Fraction(s, q))
    return sorted(set(roots))


def resultant(a: Poly, b: Poly, var: str) -> Poly:
    """Resultant of ``a`` and ``b`` with respect to ``var``.

    The other variables are carried along as polynomial coefficients; the
    Sylvester determinant is evaluated by Bareiss fraction-free elimination.
    """
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant with a zero polynomial")
    m, n = a.degree_in(var), b.degree_in(var)
    if m == 0 and n == 0:
        return Poly.const(1)
    if m == 0:
        return a.coefficients_in(var)[0] ** n
    if n == 0:
        return b.coefficients_in(var)[0] ** m
    if len(canonical_vars(a.vars + b.vars)) == 1:
        return Poly.const(_resultant_dense(a.to_dense(var), b.to_dense(var)))
    ca, cb = a.coefficients_in(var), b.coefficients_in(var)
    zero = Poly()
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + m - k] = ca.get(k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + n - k] = cb.get(k, zero)
        rows.append(row)
    return bareiss_det(rows)


def bareiss_det(rows: list[list[Poly]]) -> Poly:
    M = [list(r) for r in rows]
    n = len(M)
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Poly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exquo(prev)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


def _resultant_dense(a, b) -> Fraction:
    # Euclidean resultant over a field
    res = Fraction(1)
    while True:
        da, db = upoly.deg(a), upoly.deg(b)
        if db == 0:
            return res * b[0] ** da
        r = upoly.rem(a, b)
        if not r:
            return Fraction(0)
        dr = upoly.deg(r)
        res *= b[-1] ** (da - dr)
        if da % 2 == 1 and db % 2 == 1:
            res = -res
        a, b = b, r


@dataclass(frozen=True)
class PartialFractionTerm:
    numerator: Poly
    base: Poly
    power: int


def coprime_factors(den: Poly) -> list[tuple[Poly, int]]:
    """Split into pairwise coprime monic factors with multiplicities.

    Rational roots become linear factors; what remains of each squarefree
    block is kept whole (no factorization over the rationals beyond that).
    """
    v = _common_var(den)
    out = []
    for f, m in upoly.squarefree(den.to_dense(v)):
        rest = f
        for r in _rational_roots_squarefree(f):
            lin = [-r, Fraction(1)]
            out.append((Poly.from_dense(lin, v), m))
            rest = upoly.exquo(rest, lin)
        if upoly.deg(rest) > 0:
            out.append((Poly.from_dense(upoly.monic(rest), v), m))
    out.sort(key=lambda fm: (fm[0].degree(), [(-c) for c in fm[0].to_dense(v)], fm[1]))
    return out


def partial_fractions(f: RationalFunction) -> tuple[Poly, list[PartialFractionTerm]]:
    """``f = poly_part + sum(num / base**power)`` with ``deg(num) < deg(base)``."""
    v = _common_var(f.num, f.den)
    num, den = f.num.to_dense(v), f.den.to_dense(v)
    poly_part, r = upoly.divmod_(num, den)
    terms: list[PartialFractionTerm] = []
    if not r:
        return Poly.from_dense(poly_part, v), terms
    factors = coprime_factors(f.den)
    blocks = [upoly.power(b.to_dense(v), m) for b, m in factors]
    # r/den = sum A_i / blocks_i, peeling one block at a time
    rest_num, rest_den = r, den
    for (base, m), blk in zip(factors, blocks):
        other = upoly.exquo(rest_den, blk)
        # rest_num = A*other + B*blk  with deg A < deg blk
        A, B = upoly.diophantine(other, blk, rest_num)
        bd = base.to_dense(v)
        # base-adic expansion of A: A = sum c_j base^j
        digits = []
        cur = A
        while cur:
            cur, c = upoly.divmod_(cur, bd)
            digits.append(c)
        for j, c in enumerate(digits):
            if c:
                terms.append(PartialFractionTerm(Poly.from_dense(c, v), base, m - j))
        rest_num, rest_den = B, other
    terms.sort(key=lambda t: (t.base.degree(), [(-c) for c in t.base.to_dense(v)], t.power))
    return Poly.from_dense(poly_part, v), terms


def recombine_partial_fractions(poly_part: Poly, terms) -> RationalFunction:
    out = RationalFunction(poly_part)
    for t in terms:
        out = out + RationalFunction(t.numerator, t.base ** t.power)
    return out
