"""Three-valued decision records shared by the decision procedures."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .exact.poly import Poly
from .exact.ratfunc import RationalFunction


class Status(str, Enum):
    YES = "Yes"
    NO = "No"
    UNDECIDED = "Undecided"
    BOUNDED_NO = "BoundedNo"


class Certificate(str, Enum):
    # reasons for No
    POLY_PART_NONZERO = "PolyPartNonzero"
    HERMITE_PART_NONZERO = "HermitePartNonzero"
    MIXED_RESIDUES = "MixedResidues"
    NON_INTEGER_RESIDUES = "NonIntegerResidues"
    LOG_PART_NONZERO = "LogPartNonzero"
    NON_SQUAREFREE_DENOMINATOR = "NonSquarefreeDenominator"
    # reason for Undecided
    IRRATIONAL_RESIDUES = "IrrationalResidues"
    # reasons for Yes
    SYMMETRIC_PAIR_RULE = "SymmetricPairRule"
    ALL_RESIDUES_RATIONAL = "AllResiduesRational"
    EXACT_DERIVATIVE = "ExactDerivative"


NO_CERTIFICATES = frozenset({
    Certificate.POLY_PART_NONZERO, Certificate.HERMITE_PART_NONZERO,
    Certificate.MIXED_RESIDUES, Certificate.NON_INTEGER_RESIDUES,
    Certificate.LOG_PART_NONZERO, Certificate.NON_SQUAREFREE_DENOMINATOR,
})


@dataclass(frozen=True)
class LogWitness:
    """``f = (1/c) * u'/u`` with ``u = prod(p**n for p, n in factors)``."""

    factors: tuple[tuple[Poly, int], ...]
    c: Fraction = Fraction(1)

    def u(self) -> RationalFunction:
        out = RationalFunction(1)
        for p, n in self.factors:
            out = out * RationalFunction(p) ** n
        return out

    def recombine(self, var: str) -> RationalFunction:
        out = RationalFunction(0)
        for p, n in self.factors:
            out = out + RationalFunction(p.diff(var) * n, p)
        return out / self.c

    def __str__(self):
        if not self.factors:
            return f"c = {self.c}, u = 1"
        body = "*".join(f"({p})" + ("" if n == 1 else f"^{n}" if n > 0 else f"^({n})")
                        for p, n in self.factors)
        return f"c = {self.c}, u = {body}"


@dataclass(frozen=True)
class SymmetricPairWitness:
    """Residues are ``+r, -r`` with ``r = sqrt(b)`` irrational.

    Over Q(sqrt(b)): ``f = r * u'/u`` with ``u = v_plus / v_minus`` and
    ``v_(+/-) = gcd(den, num -/+ r*den')``, i.e. ``c = 1/sqrt(b)``.
    """

    b: Fraction
    denominator: Poly

    def __str__(self):
        return (f"residues +/-sqrt({self.b}); c = 1/sqrt({self.b}), "
                f"u = gcd(den, num - sqrt({self.b})*den')/gcd(den, num + sqrt({self.b})*den')")


@dataclass(frozen=True)
class ExactWitness:
    """``f = u'`` with ``u`` rational."""

    u: RationalFunction

    def __str__(self):
        return f"u = {self.u}"


@dataclass(frozen=True)
class LogDerivVerdict:
    status: Status
    certificates: tuple[Certificate, ...] = ()
    witness: object = None
    kind: str | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def certificate(self) -> Certificate | None:
        return self.certificates[0] if self.certificates else None

    def __post_init__(self):
        if self.status is Status.YES and self.witness is None:
            raise ValueError("a Yes verdict needs a witness")
        if self.status is Status.NO and not (self.certificates and set(self.certificates) <= NO_CERTIFICATES):
            raise ValueError(f"a No verdict needs No-certificates, got {self.certificates}")
        if self.status is Status.UNDECIDED and self.certificates != (Certificate.IRRATIONAL_RESIDUES,):
            raise ValueError("an Undecided verdict carries exactly IrrationalResidues")
