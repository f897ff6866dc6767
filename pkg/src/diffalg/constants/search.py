"""
Bounded searches for ``z`` with ``Dz = 0``, ``Dz = 1`` or ``Dz = c*z``.

Polynomial ``z`` come from exact linear algebra on the monomials of
degree ``<= deg_max``.  Rational ``z = P/Q`` take ``Q`` among products of
Darboux polynomials with nonzero cofactor; with ``D(Q) = Lambda*Q`` the
three equations become linear in ``P``::

    D(P) - Lambda*P = 0,   = Q,   = c*P

Eigenvalues ``c`` are the nonzero rational roots of the gcd of maximal
minors of the pencil ``M - c*E``, read off a Hermite normal form over Q[c].
A negative answer only means "nothing within the bounds".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product

from ..exact import linalg, upoly
from ..exact.poly import Poly, _embed
from ..exact.ratfunc import RationalFunction
from ..exact.univariate import rational_roots
from ..verdicts import Status
from .darboux import DarbouxPair, find_darboux
from .derivation import VectorFieldDerivation, apply_derivation, from_vector, linear_map, monomials

RF = RationalFunction

DEFAULT_DEG_MAX = 4
DEFAULT_POW_MAX = 4


class WitnessKind(str, Enum):
    FIRST_INTEGRAL = "FirstIntegral"
    ADDITIVE = "Additive"
    EIGEN = "Eigen"


@dataclass(frozen=True)
class ConstantWitness:
    kind: WitnessKind
    z: RationalFunction
    c: Fraction | None = None

    def check(self, D: VectorFieldDerivation) -> bool:
        if self.z.is_constant():
            return False
        dz = apply_derivation(D, self.z)
        if self.kind is WitnessKind.FIRST_INTEGRAL:
            return dz.is_zero()
        if self.kind is WitnessKind.ADDITIVE:
            return dz == 1
        return self.c is not None and self.c != 0 and dz == self.z * self.c

    def __str__(self):
        rhs = {WitnessKind.FIRST_INTEGRAL: "0", WitnessKind.ADDITIVE: "1"}.get(self.kind, f"{self.c}*z")
        return f"{self.kind.value}: z = {self.z}, Dz = {rhs}"


@dataclass(frozen=True)
class EJVerdict:
    status: Status
    witness: ConstantWitness | None
    deg_max: int
    pow_max: int

    def __post_init__(self):
        if self.status not in (Status.YES, Status.BOUNDED_NO):
            raise ValueError("constant search verdicts are Yes or BoundedNo")
        if (self.status is Status.YES) != (self.witness is not None):
            raise ValueError("Yes carries a witness and BoundedNo none")

    def __str__(self):
        if self.status is Status.YES:
            return f"Yes ({self.witness})"
        return f"BoundedNo: no witness with deg_max = {self.deg_max}, pow_max = {self.pow_max}"


# -- pencil ---------------------------------------------------------------------


def pencil_minor_gcd(M, E) -> list[Fraction]:
    """Monic gcd of the maximal minors of ``M - c*E`` as a dense list in ``c``.

    Row operations over Q[c] bring the pencil to echelon form; the product
    of the pivots is that gcd up to a unit.  Returns ``[]`` when the pencil
    does not have full column rank over Q(c).
    """
    ncols = len(M[0]) if M else 0
    A = [[upoly.trim([m, -e]) for m, e in zip(rm, re)] for rm, re in zip(M, E)]
    det = [Fraction(1)]
    r = 0
    for j in range(ncols):
        while True:
            nz = [i for i in range(r, len(A)) if A[i][j]]
            if not nz:
                return []
            p = min(nz, key=lambda i: (upoly.deg(A[i][j]), i))
            A[r], A[p] = A[p], A[r]
            done = True
            for i in range(r + 1, len(A)):
                if not A[i][j]:
                    continue
                q = upoly.quo(A[i][j], A[r][j])
                A[i] = [upoly.sub(a, upoly.mul(q, b)) for a, b in zip(A[i], A[r])]
                if A[i][j]:
                    done = False
            if done:
                break
        det = upoly.mul(det, A[r][j])
        r += 1
    return upoly.monic(det)


def _eigenvalues(M, E) -> list[Fraction]:
    g = pencil_minor_gcd(M, E)
    if not g or upoly.deg(g) < 1:
        return []
    roots = [r for r, _ in rational_roots(Poly.from_dense(g, "c")) if r != 0]
    return sorted(roots, key=lambda r: (abs(r), r < 0))


def _at(M, E, c):
    return [[m - c * e for m, e in zip(rm, re)] for rm, re in zip(M, E)]


# -- polynomial witnesses ---------------------------------------------------------


def poly_constant_search(D: VectorFieldDerivation, deg_max: int = DEFAULT_DEG_MAX) -> ConstantWitness | None:
    """First polynomial witness by degree, trying ``Dz = 0``, ``Dz = 1``, ``Dz = cz`` in turn."""
    D.poly_components()
    vs = tuple(D.variables)
    for d in range(1, deg_max + 1):
        mons = monomials(D.n, d)
        rows, M, E = linear_map(D, mons)
        w = _search_space(D, vs, mons, rows, M, E, Poly.const(1))
        if w is not None:
            return w
    return None


def _search_space(D, vs, mons, rows, M, E, Q: Poly):
    """Try the three kinds for numerators in span(mons) over the denominator Q."""
    n = len(mons)
    for v in linalg.nullspace(M, n):
        z = RF(from_vector(vs, mons, v), Q)
        if not z.is_constant():
            return _checked(D, WitnessKind.FIRST_INTEGRAL, RF(z.num.primitive(), z.den))
    index = {e: i for i, e in enumerate(rows)}
    target = _embed(Q, vs)
    if all(e in index for e in target):
        rhs = [Fraction(0)] * len(rows)
        for e, c in target.items():
            rhs[index[e]] = c
        sol = linalg.solve(M, rhs, n)
        if sol is not None:
            return _checked(D, WitnessKind.ADDITIVE, RF(from_vector(vs, mons, sol), Q))
    for c in _eigenvalues(M, E):
        for v in linalg.nullspace(_at(M, E, c), n):
            z = RF(from_vector(vs, mons, v), Q)
            return _checked(D, WitnessKind.EIGEN, RF(z.num.primitive(), z.den), c)
    return None


def _checked(D, kind, z, c=None) -> ConstantWitness:
    w = ConstantWitness(kind, z, c)
    if not w.check(D):
        raise AssertionError(f"witness {w} fails under {D}")
    return w


# -- rational witnesses -----------------------------------------------------------


def _denominators(pairs: list[DarbouxPair], pow_max: int):
    k = len(pairs)
    cands = []
    for exps in product(range(pow_max + 1), repeat=k):
        s = sum(exps)
        if s == 0 or s > pow_max:
            continue
        deg = sum(e * p.polynomial.degree() for e, p in zip(exps, pairs))
        cands.append((deg, s, tuple(-e for e in exps), exps))
    cands.sort()
    return [c[-1] for c in cands]


def rational_constant_search(D: VectorFieldDerivation, deg_max: int = DEFAULT_DEG_MAX,
                             pow_max: int = DEFAULT_POW_MAX) -> ConstantWitness | None:
    """Witness ``P/Q`` with ``Q`` a Darboux product (nonzero cofactors, total power <= pow_max)."""
    D.poly_components()
    vs = tuple(D.variables)
    pairs = [p for p in find_darboux(D, deg_max) if not p.cofactor.is_zero()]
    mons = monomials(D.n, deg_max)
    for exps in _denominators(pairs, pow_max):
        Q = Poly.const(1)
        lam = Poly.const(0)
        for e, p in zip(exps, pairs):
            if e:
                Q = Q * p.polynomial ** e
                lam = lam + p.cofactor.scale(e)
        rows, M, E = linear_map(D, mons, cofactor=lam)
        w = _search_space(D, vs, mons, rows, M, E, Q)
        if w is not None:
            return w
    return None


def ej_classify(D: VectorFieldDerivation, deg_max: int = DEFAULT_DEG_MAX,
                pow_max: int = DEFAULT_POW_MAX) -> EJVerdict:
    """Yes with the first witness found, else BoundedNo (not a proof of nonexistence)."""
    w = poly_constant_search(D, deg_max)
    if w is None:
        w = rational_constant_search(D, deg_max, pow_max)
    if w is None:
        return EJVerdict(Status.BOUNDED_NO, None, deg_max, pow_max)
    return EJVerdict(Status.YES, w, deg_max, pow_max)
