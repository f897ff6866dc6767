"""
Verdicts for named equation families.

* ``t'' = t' h(t)``: a generic solution exists iff ``h`` has no rational
  antiderivative; otherwise the equation reduces to ``t' = g(t) + const``.
* ``t' = g(t) - c`` (reduced family): the solution set is a singleton iff
  ``1/(g - c)`` is an exact derivative or a scaled logarithmic derivative.
* Lotka-Volterra ``x1' = a x1 + b x1 x2``, ``x2' = g x2 + d x1 x2``.
* ``t' + a_n t^n + ... + a_2 t^2 = 0`` over a base field with ``t' = 1``
  (or over the constants).

Only Singleton, Infinite and Undecided are ever emitted; Finite is kept
in the status enum for criteria that bound the set without pinning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .constants import ConstantWitness, VectorFieldDerivation, WitnessKind, poly_constant_search
from .exact.poly import to_fraction
from .exact.ratfunc import RationalFunction
from .integrability import is_scaled_log_derivative, rational_antiderivative
from .verdicts import Certificate, ExactWitness, Status

RF = RationalFunction


class SetStatus(str, Enum):
    SINGLETON = "Singleton"
    FINITE = "Finite"
    INFINITE = "Infinite"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class SolutionSetVerdict:
    status: SetStatus
    reason: str
    certificates: tuple[Certificate, ...] = ()
    witness: object = None

    def __post_init__(self):
        if self.status is SetStatus.FINITE:
            raise ValueError("no classifier decides Finite")
        if self.status is SetStatus.SINGLETON and self.witness is None:
            raise ValueError("Singleton needs a verified witness")

    def __str__(self):
        return f"{self.status.value}: {self.reason}"


@dataclass(frozen=True)
class PoizatReport:
    h: RationalFunction
    generic_exists: bool
    g: RationalFunction | None
    family_note: str

    def __post_init__(self):
        if self.generic_exists != (self.g is None):
            raise ValueError("generic_exists must mirror the absence of an antiderivative")


def poizat_classify(h) -> PoizatReport:
    """Classify ``t'' = t' h(t)`` by whether ``h`` has a rational antiderivative."""
    h = RF.coerce(h)
    if h.is_zero():
        raise ValueError("h must be nonzero")
    _univariate(h)
    g = rational_antiderivative(h)
    if g is None:
        note = ("h has no rational antiderivative: generic solutions exist and their "
                "solution sets are infinite")
    else:
        note = (f"h = g' with g = {g}: no generic solution; every solution satisfies "
                f"t' = g(t) - c for a constant c (see the reduced family)")
    return PoizatReport(h, g is None, g, note)


def reduced_family_classify(g, c) -> SolutionSetVerdict:
    """Solution-set verdict for ``t' = g(t) - c`` via the two forms of ``1/(g - c)``."""
    g = RF.coerce(g)
    c = to_fraction(c)
    _univariate(g)
    f = g - c
    if f.is_zero():
        raise ValueError("g - c vanishes identically")
    F = f.inverse()
    u = rational_antiderivative(F)
    if u is not None:
        return SolutionSetVerdict(SetStatus.SINGLETON, f"1/(g - c) = u' with u = {u}",
                                  (Certificate.EXACT_DERIVATIVE,), ExactWitness(u))
    scaled = is_scaled_log_derivative(F)
    if scaled.status is Status.YES:
        return SolutionSetVerdict(SetStatus.SINGLETON, f"1/(g - c) = u'/(c u): {scaled.witness}",
                                  scaled.certificates, scaled.witness)
    if scaled.status is Status.NO:
        return SolutionSetVerdict(
            SetStatus.INFINITE,
            "1/(g - c) is neither an exact derivative (nonzero logarithmic part) nor a scaled "
            f"logarithmic derivative ({', '.join(x.value for x in scaled.certificates)})",
            (Certificate.LOG_PART_NONZERO,) + scaled.certificates)
    return SolutionSetVerdict(SetStatus.UNDECIDED,
                              "1/(g - c) has only irrational residues outside the symmetric-pair rule",
                              scaled.certificates)


@dataclass(frozen=True)
class LotkaVolterraResult:
    verdict: SolutionSetVerdict
    witness: ConstantWitness | None
    derivation: VectorFieldDerivation


def lotka_volterra(alpha, beta, gamma, delta) -> VectorFieldDerivation:
    x1, x2 = RF.var("x1"), RF.var("x2")
    a, b, g, d = (to_fraction(v) for v in (alpha, beta, gamma, delta))
    return VectorFieldDerivation(("x1", "x2"), [x1 * a + x1 * x2 * b, x2 * g + x1 * x2 * d])


def lotka_volterra_classify(alpha, beta, gamma, delta) -> LotkaVolterraResult:
    """Infinite iff ``alpha != gamma``; otherwise ``z = delta*x1 - beta*x2`` obstructs with ``Dz = alpha*z``."""
    params = [to_fraction(v) for v in (alpha, beta, gamma, delta)]
    if any(p == 0 for p in params):
        raise ValueError("Lotka-Volterra parameters must be nonzero")
    a, b, g, d = params
    D = lotka_volterra(a, b, g, d)
    if a != g:
        v = SolutionSetVerdict(SetStatus.INFINITE,
                               "alpha != gamma: a generic solution admits no z with z' in {0, 1, cz}")
        return LotkaVolterraResult(v, None, D)
    w = poly_constant_search(D, 1)
    if w is None or w.kind is not WitnessKind.EIGEN or w.c != a:
        raise AssertionError(f"expected a degree-1 eigenfunction with c = {a}, got {w}")
    v = SolutionSetVerdict(SetStatus.UNDECIDED,
                           f"alpha = gamma: Dz = {a}*z for z = {w.z} obstructs the infinite-set criterion",
                           witness=w)
    return LotkaVolterraResult(v, w, D)


def rosenlicht_family_classify(coefficients, constant_base: bool = False) -> SolutionSetVerdict:
    """``t' + a_n t^n + ... + a_2 t^2 = 0`` with ``coefficients = [a_2, ..., a_n]``.

    Infinite when neither ``a_2`` nor ``a_3`` is a derivative in the base
    field; the converse is not claimed, so otherwise Undecided.  With
    ``constant_base`` the base field is Q with the zero derivation and only
    zero is a derivative.
    """
    coeffs = [RF.coerce(a) for a in coefficients]
    if len(coeffs) < 2:
        raise ValueError("need at least a_2 and a_3 (n >= 3)")
    if coeffs[-1].is_zero():
        raise ValueError("leading coefficient a_n must be nonzero")
    for a in coeffs:
        extra = set(a.vars) - {"t"}
        if extra or (constant_base and a.vars):
            raise ValueError(f"coefficient {a} is not in the base field")
    a2, a3 = coeffs[0], coeffs[1]
    if constant_base:
        prim = [RF(0) if a.is_zero() else None for a in (a2, a3)]
    else:
        prim = [rational_antiderivative(a) for a in (a2, a3)]
    if all(p is None for p in prim):
        return SolutionSetVerdict(SetStatus.INFINITE,
                                  "neither a_2 nor a_3 is a derivative in the base field: nonalgebraic "
                                  "solutions lie in no iterated strongly normal extension",
                                  () if constant_base else (Certificate.LOG_PART_NONZERO,))
    which = "a_2" if prim[0] is not None else "a_3"
    z = prim[0] if prim[0] is not None else prim[1]
    return SolutionSetVerdict(SetStatus.UNDECIDED,
                              f"{which} = z' with z = {z}; the criterion does not apply")


def _univariate(f: RationalFunction):
    if len(f.vars) > 1:
        raise ValueError(f"expected one variable, got {f}")


__all__ = [
    "LotkaVolterraResult", "PoizatReport", "SetStatus", "SolutionSetVerdict",
    "lotka_volterra", "lotka_volterra_classify", "poizat_classify",
    "reduced_family_classify", "rosenlicht_family_classify",
]
