"""
Decision procedures for rational functions of one variable.

* Hermite reduction splits ``f`` into ``(P + g)' + h`` with ``h`` proper
  and of squarefree denominator; ``f`` has a rational antiderivative iff
  ``h = 0``.
* Residues of ``h`` are the roots of the Rothstein-Trager resultant
  ``res_t(den, num - z*den')``.
* ``f = u'/u`` needs integer residues; ``f = (1/c) u'/u`` needs residues
  with pairwise rational ratios.  Constants are rational here, so the
  second test can only be decided when the residues are rational, mixed,
  or form a single pair ``+/- sqrt(b)``; otherwise it is Undecided.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd, lcm as ilcm

from .exact import upoly
from .exact.poly import Poly
from .exact.quadratic import QuadNumber
from .exact.ratfunc import RationalFunction
from .exact.univariate import rational_roots
from .verdicts import (
    Certificate,
    ExactWitness,
    LogDerivVerdict,
    LogWitness,
    Status,
    SymmetricPairWitness,
)

RF = RationalFunction


def _var_of(f: RationalFunction, default: str = "t") -> str:
    vs = f.vars
    if len(vs) > 1:
        raise ValueError(f"expected a rational function of one variable, got {f}")
    return vs[0] if vs else default


@dataclass(frozen=True)
class HermiteResult:
    rational_part: RationalFunction
    log_part: RationalFunction
    poly_antiderivative: Poly
    poly_part: Poly

    def recombine(self, var: str) -> RationalFunction:
        return (RF(self.poly_antiderivative) + self.rational_part).diff(var) + self.log_part


def hermite_reduce(f: RationalFunction) -> HermiteResult:
    f = RF.coerce(f)
    v = _var_of(f)
    num = f.num.to_dense(v if f.num.vars else None)
    den = f.den.to_dense(v if f.den.vars else None)
    P, A = upoly.divmod_(num, den)
    g = RF(0)
    Dm = upoly.gcd(den, upoly.derivative(den))
    Ds = upoly.exquo(den, Dm)
    while upoly.deg(Dm) > 0:
        Dm2 = upoly.gcd(Dm, upoly.derivative(Dm))
        Dms = upoly.exquo(Dm, Dm2)
        a = upoly.neg(upoly.exquo(upoly.mul(Ds, upoly.derivative(Dm)), Dm))
        B, C = upoly.diophantine(a, Dms, A)
        A = upoly.sub(C, upoly.exquo(upoly.mul(upoly.derivative(B), Ds), Dms))
        g = g + RF(Poly.from_dense(B, v), Poly.from_dense(Dm, v))
        Dm = Dm2
    log_part = RF(Poly.from_dense(A, v), Poly.from_dense(Ds, v))
    return HermiteResult(g, log_part, Poly.from_dense(upoly.integral(P), v), Poly.from_dense(P, v))


def rational_antiderivative(f: RationalFunction) -> RationalFunction | None:
    """``g`` with ``g' = f`` exactly, or ``None`` when the logarithmic part is nonzero."""
    f = RF.coerce(f)
    h = hermite_reduce(f)
    if not h.log_part.is_zero():
        return None
    g = RF(h.poly_antiderivative) + h.rational_part
    assert g.diff(_var_of(f)) == f
    return g


@dataclass(frozen=True)
class ResidueData:
    rt_resultant: Poly
    rational_residues: tuple[tuple[Fraction, int], ...]
    has_irrational_residues: bool
    # v_r = gcd(den, num - r*den') for each rational residue r
    residue_factors: tuple[tuple[Fraction, Poly], ...] = ()

    def squarefree_irrational_part(self) -> Poly:
        """Monic squarefree part of the resultant with the rational roots divided out."""
        z = _resultant_var(self.rt_resultant)
        dense = self.rt_resultant.to_dense(z if self.rt_resultant.vars else None)
        sq = [Fraction(1)]
        for f, _ in upoly.squarefree(dense):
            sq = upoly.mul(sq, f)
        for r, _ in self.rational_residues:
            sq = upoly.exquo(sq, [-r, Fraction(1)])
        return Poly.from_dense(upoly.monic(sq), z)


def _resultant_var(p: Poly) -> str:
    return p.vars[0] if p.vars else "z"


def _rt_resultant(num, den, z: str = "z") -> Poly:
    # res_t(den, num - z*den') by evaluation at z = 0..deg(den) and interpolation
    from .exact.univariate import _resultant_dense
    dd = upoly.derivative(den)
    n = upoly.deg(den)
    xs = [Fraction(k) for k in range(n + 1)]
    ys = []
    for x in xs:
        b = upoly.sub(num, upoly.scale(dd, x))
        ys.append(_resultant_dense(den, b) if b else Fraction(0))
    coeffs = _interpolate(xs, ys)
    return Poly.from_dense(coeffs, z)


def _interpolate(xs, ys):
    out = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = upoly.mul(basis, [-xj, Fraction(1)])
                denom *= xi - xj
        out = upoly.add(out, upoly.scale(basis, yi / denom))
    return out


def residues(f: RationalFunction) -> ResidueData:
    f = RF.coerce(f)
    v = _var_of(f)
    num = f.num.to_dense(v if f.num.vars else None)
    den = f.den.to_dense(v if f.den.vars else None)
    if num and upoly.deg(num) >= upoly.deg(den):
        raise ValueError(f"residues need a proper rational function, got {f}")
    if upoly.deg(upoly.gcd(den, upoly.derivative(den))) > 0:
        raise ValueError(f"denominator of {f} is not squarefree; apply hermite_reduce first")
    if not num:
        return ResidueData(Poly.const(1), (), False, ())
    R = _rt_resultant(num, den).primitive()
    rat = tuple(rational_roots(R)) if R.degree() > 0 else ()
    factors = []
    dd = upoly.derivative(den)
    for r, _ in rat:
        vr = upoly.gcd(den, upoly.sub(num, upoly.scale(dd, r)))
        factors.append((r, Poly.from_dense(vr, v)))
    total = sum(m for _, m in rat)
    return ResidueData(R, rat, R.degree() > total, tuple(factors))


def _reduce_or_no(f: RationalFunction):
    """Hermite data plus the No-certificates coming from non-log parts."""
    h = hermite_reduce(f)
    certs = []
    if not h.poly_part.is_zero():
        certs.append(Certificate.POLY_PART_NONZERO)
    if not h.rational_part.is_zero():
        certs.append(Certificate.HERMITE_PART_NONZERO)
    return h, tuple(certs)


def is_log_derivative(f: RationalFunction) -> LogDerivVerdict:
    """Decide ``f = u'/u`` for some rational ``u``."""
    f = RF.coerce(f)
    v = _var_of(f)
    if f.is_zero():
        return _yes(f, v, LogWitness((), Fraction(1)), Certificate.ALL_RESIDUES_RATIONAL, "log")
    h, certs = _reduce_or_no(f)
    if certs:
        return _no(f, certs)
    data = residues(f)
    if data.has_irrational_residues or any(r.denominator != 1 for r, _ in data.rational_residues):
        return _no(f, (Certificate.NON_INTEGER_RESIDUES,))
    w = LogWitness(tuple((p, int(r)) for r, p in data.residue_factors), Fraction(1))
    return _yes(f, v, w, Certificate.ALL_RESIDUES_RATIONAL, "log")


def is_scaled_log_derivative(f: RationalFunction) -> LogDerivVerdict:
    """Decide ``f = (1/c) u'/u`` for a nonzero constant ``c`` and rational ``u``."""
    f = RF.coerce(f)
    v = _var_of(f)
    if f.is_zero():
        return _yes(f, v, LogWitness((), Fraction(1)), Certificate.ALL_RESIDUES_RATIONAL, "scaled-log")
    h, certs = _reduce_or_no(f)
    if certs:
        return _no(f, certs)
    data = residues(f)
    if not data.has_irrational_residues:
        rs = [r for r, _ in data.rational_residues]
        c = Fraction(_lcm(r.denominator for r in rs), _gcd(r.numerator for r in rs))
        w = LogWitness(tuple((p, int(r * c)) for r, p in data.residue_factors), c)
        return _yes(f, v, w, Certificate.ALL_RESIDUES_RATIONAL, "scaled-log")
    if data.rational_residues:
        return _no(f, (Certificate.MIXED_RESIDUES,))
    sq = data.squarefree_irrational_part()
    z = _resultant_var(sq)
    dense = sq.to_dense(z)
    if len(dense) == 3 and dense[1] == 0 and dense[0] != 0:
        b = -dense[0]
        if _verify_symmetric_pair(f, v, b):
            return LogDerivVerdict(Status.YES, (Certificate.SYMMETRIC_PAIR_RULE,),
                                   SymmetricPairWitness(b, f.den), "scaled-log")
    return LogDerivVerdict(Status.UNDECIDED, (Certificate.IRRATIONAL_RESIDUES,),
                           notes=(f"residues are roots of {data.rt_resultant}",))


def _verify_symmetric_pair(f: RationalFunction, v: str, b: Fraction) -> bool:
    # exact recombination over Q(sqrt(b))
    r = QuadNumber(0, 1, b)
    num = [QuadNumber(c, 0, b) for c in f.num.to_dense(v if f.num.vars else None)]
    den = [QuadNumber(c, 0, b) for c in f.den.to_dense(v)]
    dd = upoly.derivative(den)
    vp = upoly.gcd(den, upoly.sub(num, upoly.scale(dd, r)))
    vm = upoly.gcd(den, upoly.sub(num, upoly.scale(dd, -r)))
    if upoly.sub(upoly.mul(vp, vm), upoly.monic(den)):
        return False
    wr = upoly.sub(upoly.mul(upoly.derivative(vp), vm), upoly.mul(vp, upoly.derivative(vm)))
    lhs = upoly.mul(upoly.scale(wr, r), den)
    rhs = upoly.mul(num, upoly.mul(vp, vm))
    return not upoly.sub(lhs, rhs)


def rosenlicht_new_constants(f: RationalFunction) -> LogDerivVerdict:
    """New constants of ``k(x)`` with ``x' = f(x)``: Yes iff ``1/f`` is ``u'`` or ``u'/(c u)``."""
    f = RF.coerce(f)
    if f.is_zero():
        raise ValueError("f must be nonzero")
    v = _var_of(f, "x")
    F = f.inverse()
    g = rational_antiderivative(F)
    if g is not None:
        return LogDerivVerdict(Status.YES, (Certificate.EXACT_DERIVATIVE,), ExactWitness(g), "exact")
    scaled = is_scaled_log_derivative(F)
    if scaled.status is Status.YES:
        return scaled
    if scaled.status is Status.UNDECIDED:
        return LogDerivVerdict(Status.UNDECIDED, scaled.certificates, notes=(
            "1/f has no rational antiderivative (nonzero logarithmic part)",) + scaled.notes)
    certs = [Certificate.LOG_PART_NONZERO] + list(scaled.certificates)
    den = F.den.to_dense(v if F.den.vars else None)
    if upoly.deg(upoly.gcd(den, upoly.derivative(den))) > 0:
        certs.append(Certificate.NON_SQUAREFREE_DENOMINATOR)
    return _no(F, tuple(certs))


# -- verdict construction with re-verification ---------------------------------


def _yes(f, v, witness: LogWitness, cert, kind) -> LogDerivVerdict:
    if witness.recombine(v) != f:
        raise AssertionError(f"witness {witness} does not recombine to {f}")
    return LogDerivVerdict(Status.YES, (cert,), witness, kind)


def _no(f: RationalFunction, certs) -> LogDerivVerdict:
    for c in certs:
        if not check_no_certificate(f, c):
            raise AssertionError(f"certificate {c.value} does not hold for {f}")
    return LogDerivVerdict(Status.NO, tuple(certs))


def check_no_certificate(f: RationalFunction, cert: Certificate) -> bool:
    """Recompute the defining predicate of a No-certificate for ``f``."""
    f = RF.coerce(f)
    v = _var_of(f)
    h = hermite_reduce(f)
    if cert is Certificate.POLY_PART_NONZERO:
        return not h.poly_part.is_zero()
    if cert is Certificate.HERMITE_PART_NONZERO:
        return not h.rational_part.is_zero()
    if cert is Certificate.LOG_PART_NONZERO:
        return not h.log_part.is_zero()
    if cert is Certificate.NON_SQUAREFREE_DENOMINATOR:
        den = f.den.to_dense(v if f.den.vars else None)
        return upoly.deg(upoly.gcd(den, upoly.derivative(den))) > 0
    data = residues(h.log_part)
    if cert is Certificate.MIXED_RESIDUES:
        return bool(data.rational_residues) and data.has_irrational_residues
    if cert is Certificate.NON_INTEGER_RESIDUES:
        return data.has_irrational_residues or any(r.denominator != 1 for r, _ in data.rational_residues)
    return False


def _lcm(xs) -> int:
    out = 1
    for x in xs:
        out = ilcm(out, x)
    return out


def _gcd(xs) -> int:
    out = 0
    for x in xs:
        out = igcd(out, x)
    return out or 1
