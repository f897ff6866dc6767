"""
Darboux polynomials by undetermined coefficients.

For each degree ``q`` and each pivot monomial ``m`` of degree ``q`` the
ansatz ``Q = m + (lower terms)`` and a cofactor ``Lambda`` of degree
``<= max deg f_i - 1`` turn ``D(Q) = Lambda*Q`` into a bilinear system.
A lex Groebner basis (sympy) triangularizes it and rational points are
read off by back substitution.  Free coordinates of positive-dimensional
components are sampled at small integers, so completeness holds for the
zero-dimensional part; every candidate is factored and only irreducible
factors are reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact.poly import Poly, _embed, _from_sympy, _sympy_ring, _to_sympy
from ..exact.univariate import rational_roots
from .derivation import VectorFieldDerivation, apply_poly, monomials

_SAMPLES = (0, 1, -1, 2)
_MAX_POINTS = 64


@dataclass(frozen=True)
class DarbouxPair:
    """``D(Q) * scale = cofactor * Q`` where ``scale`` clears the component denominators."""

    polynomial: Poly
    cofactor: Poly
    scale: Poly = Poly.const(1)

    def __str__(self):
        return f"Q = {self.polynomial}, cofactor = {self.cofactor}"


def find_darboux(D: VectorFieldDerivation, deg_max: int) -> list[DarbouxPair]:
    """Irreducible Darboux polynomials of degree <= deg_max, sorted by degree then grlex."""
    if deg_max < 1:
        raise ValueError("deg_max must be positive")
    scale = Poly.const(1)
    if not D.is_polynomial():
        D, scale = D.cleared()
    comps = D.poly_components()
    vs = tuple(D.variables)
    m = max((c.degree() for c in comps if not c.is_zero()), default=0)
    lam_mons = monomials(len(vs), max(m - 1, 0))

    found: dict[Poly, Poly] = {}
    if len(vs) == 1:
        # one variable: p^k | Q and Q | f*Q' force p | f, so the irreducible
        # Darboux polynomials are the irreducible factors of f
        for F in _irreducible_factors(comps[0], vs) if not comps[0].is_zero() else ():
            if F.degree() <= deg_max:
                found[F] = apply_poly(D, F, comps).exquo(F)
    for q in range(1, deg_max + 1) if len(vs) > 1 else ():
        mons = monomials(len(vs), q)
        for p, lead in enumerate(mons):
            if sum(lead) != q:
                continue
            for Q, _lam in _pivot_solutions(D, comps, vs, mons, p, lam_mons):
                for F in _irreducible_factors(Q, vs):
                    if F in found:
                        continue
                    lam, r = apply_poly(D, F, comps).divmod(F)
                    if not r.is_zero():
                        raise AssertionError(f"factor {F} of a Darboux polynomial is not Darboux")
                    found[F] = lam
    pairs = [DarbouxPair(F, lam, scale) for F, lam in found.items()]
    pairs.sort(key=lambda pr: (pr.polynomial.degree(), _grlex_signature(pr.polynomial)))
    for pr in pairs:
        assert apply_poly(D, pr.polynomial, comps) == pr.cofactor * pr.polynomial
    return pairs


def _grlex_signature(p: Poly):
    return [(sum(e), e, c) for e, c in p.sorted_terms()]


def _pivot_solutions(D, comps, vs, mons, p, lam_mons):
    from sympy import QQ
    from sympy.polys.rings import ring

    # unknown coefficients of mons[0..p-1]; mons[p] has coefficient 1
    nq = p
    nl = len(lam_mons)
    names = [f"q{i}" for i in range(nq)] + [f"l{i}" for i in range(nl)]
    R, *gens = ring(",".join(names), QQ) if names else (None,)
    if R is None:
        return []
    qg, lg = gens[:nq], gens[nq:]

    # D(Q) - Lambda*Q as {x-exponent: coefficient in R}
    expr: dict = {}

    def put(e, c):
        v = expr.get(e, R.zero) + c
        if v:
            expr[e] = v
        else:
            expr.pop(e, None)

    coeffs = list(qg) + [R.one]
    for mono, a in zip(mons[: p + 1], coeffs):
        mp = Poly(vs, {mono: 1})
        for e, c in _embed(apply_poly(D, mp, comps), vs).items():
            put(e, a * QQ(c.numerator, c.denominator))
        for lm, b in zip(lam_mons, lg):
            e = tuple(x + y for x, y in zip(mono, lm))
            put(e, -a * b)
    eqs = [c for c in expr.values() if c]
    points = _rational_points(eqs, R, list(range(len(names))))
    out = []
    for pt in points:
        Q = Poly(vs, {mons[i]: pt[i] for i in range(nq)} | {mons[p]: Fraction(1)})
        lam = Poly(vs, {lm: pt[nq + j] for j, lm in enumerate(lam_mons)})
        out.append((Q, lam))
    return out


def _rational_points(eqs, R, idxs) -> list[dict[int, Fraction]]:
    """Rational points of the variety of ``eqs`` (free coordinates sampled)."""
    from sympy import QQ
    from sympy.polys.groebnertools import groebner

    eqs = [e for e in eqs if e]
    if not idxs:
        return [{}] if not eqs else []
    G = groebner(eqs, R) if eqs else []
    if any(g.is_ground and g for g in G):
        return []
    v = idxs[-1]
    uni = [g for g in G if g and all(all(k == 0 for j, k in enumerate(mono) if j != v) for mono in g.monoms())]
    if uni:
        h = uni[0]
        for g in uni[1:]:
            h = h.gcd(g)
        dense = [Fraction(0)] * (h.degree(R.gens[v]) + 1)
        for mono, c in h.terms():
            dense[mono[v]] = Fraction(int(c.numerator), int(c.denominator))
        values = [r for r, _ in rational_roots(Poly.from_dense(dense, "z"))]
        free = False
    else:
        values = [Fraction(s) for s in _SAMPLES]
        free = True
    points = []
    for r in values:
        sub = [g.subs(R.gens[v], QQ(r.numerator, r.denominator)) for g in G]
        for pt in _rational_points(sub, R, idxs[:-1]):
            pt[v] = r
            points.append(pt)
            if len(points) >= _MAX_POINTS:
                return points
        if free and points:
            break
    return points


def _irreducible_factors(Q: Poly, vs) -> list[Poly]:
    if Q.is_constant():
        return []
    R = _sympy_ring(Q.vars)
    _, factors = _to_sympy(Q, Q.vars, R).factor_list()
    out = []
    for f, _ in factors:
        F = _from_sympy(f, Q.vars)
        if not F.is_constant():
            out.append(F.primitive())
    return out
