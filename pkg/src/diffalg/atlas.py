"""
Dimension and rank arithmetic for the algebraic groups that bound
solvability of new-constant-free extensions.

Tables here are data: classical dimensions (SL_{r+1}: r^2 + 2r,
Sp_{2m}: 2m^2 + m, SO_n: n(n-1)/2, G2: 14), the candidate groups per
transcendence degree, and the G2 / SL3 example.  No group theory is
computed beyond this arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Family(str, Enum):
    SL = "SL"
    SP = "SP"
    SO = "SO"
    G2 = "G2"
    GM = "Gm"
    GA = "Ga"
    PRODUCT = "product"


@dataclass(frozen=True)
class GroupDescriptor:
    """A named group.  ``rank`` is the Lie rank: SL rank r is SL_{r+1}, SP rank m is Sp_{2m}."""

    family: Family
    rank: int = 0
    dimension: int = -1
    factors: tuple[GroupDescriptor, ...] = field(default=())
    # SO needs the matrix size since SO_{2m} and SO_{2m+1} share rank m
    n: int | None = None

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if fam is Family.PRODUCT:
            if not self.factors:
                raise ValueError("a product needs factors")
            object.__setattr__(self, "rank", sum(f.rank for f in self.factors))
        elif self.factors:
            raise ValueError("only products have factors")
        if fam is Family.SO and self.n is None:
            raise ValueError("SO needs its matrix size n")
        fixed = {Family.G2: 2, Family.GM: 1, Family.GA: 0}
        if fam in fixed:
            object.__setattr__(self, "rank", fixed[fam])
        expected = _table_dim(self)
        if self.dimension == -1:
            object.__setattr__(self, "dimension", expected)
        elif self.dimension != expected:
            raise ValueError(f"{self.family.value} rank {self.rank} has dimension {expected}, not {self.dimension}")

    @property
    def name(self) -> str:
        f = self.family
        if f is Family.SL:
            return f"SL{self.rank + 1}"
        if f is Family.SP:
            return f"SP{2 * self.rank}"
        if f is Family.SO:
            return f"SO{self.n}"
        if f is Family.PRODUCT:
            return " x ".join(g.name for g in self.factors)
        return f.value

    def __str__(self):
        return self.name


def SL(n: int) -> GroupDescriptor:
    return GroupDescriptor(Family.SL, n - 1)


def SP(n: int) -> GroupDescriptor:
    if n % 2:
        raise ValueError("symplectic groups have even size")
    return GroupDescriptor(Family.SP, n // 2)


def SO(n: int) -> GroupDescriptor:
    return GroupDescriptor(Family.SO, n // 2, n=n)


def product(*factors: GroupDescriptor) -> GroupDescriptor:
    return GroupDescriptor(Family.PRODUCT, factors=tuple(factors))


def _table_dim(g: GroupDescriptor) -> int:
    f, r = g.family, g.rank
    if f is Family.SL:
        return r * (r + 2)
    if f is Family.SP:
        return 2 * r * r + r
    if f is Family.SO:
        return g.n * (g.n - 1) // 2
    if f is Family.G2:
        return 14
    if f in (Family.GM, Family.GA):
        return 1
    if f is Family.PRODUCT:
        return sum(dim_of(x) for x in g.factors)
    raise ValueError(f"unknown family {f}")


G2 = GroupDescriptor(Family.G2)
GM = GroupDescriptor(Family.GM, 1)
GA = GroupDescriptor(Family.GA, 0)


def dim_of(g: GroupDescriptor) -> int:
    return _table_dim(g)


def rank_of(g: GroupDescriptor) -> int:
    if g.family is Family.PRODUCT:
        return sum(rank_of(x) for x in g.factors)
    return g.rank


def rank_bound_check(r: int, d: int) -> bool:
    """``r <= d <= r(r + 2)``: transcendence degree against the rank of a reductive group."""
    if r < 1 or d < 1:
        raise ValueError("rank and transcendence degree must be positive")
    return r <= d <= r * (r + 2)


class BoundKind(str, Enum):
    D_PLUS = "d_plus"
    D_EXACT = "d_exact"
    D_PLUS_ONE = "d_plus_one"


_CANDIDATES = {
    1: (SL(2),),
    2: (SL(3),),
    3: (SL(3), SL(4), SP(4)),
    4: (SL(3), SL(4), SP(4), SL(5)),
}


@dataclass(frozen=True)
class SolvabilityVerdict:
    d: int
    bound_kind: BoundKind
    candidate_groups: tuple[GroupDescriptor, ...]
    citation: str

    def __str__(self):
        groups = ", ".join(g.name for g in self.candidate_groups) or "none encoded"
        return f"d = {self.d}: {self.bound_kind.value}; candidate groups: {groups}"


def solvability_bound(d: int) -> SolvabilityVerdict:
    """How solvable an extension of transcendence degree ``d`` without new constants is."""
    if d < 1:
        raise ValueError("d must be positive")
    if d == 1:
        return SolvabilityVerdict(d, BoundKind.D_PLUS, _CANDIDATES[1],
                                  "d = 1: the group is isogenous to SL2, so the extension is 2-solvable "
                                  "with inhomogeneous terms allowed (1+-solvable)")
    if d <= 4:
        names = ", ".join(g.name for g in _CANDIDATES[d])
        return SolvabilityVerdict(d, BoundKind.D_EXACT, _CANDIDATES[d],
                                  f"2 <= d <= 4: d-solvable; the reductive group is isogenous to one of {names}")
    return SolvabilityVerdict(d, BoundKind.D_PLUS_ONE, (),
                              "general bound: (d+1)-solvable; no classification is encoded for d >= 5 "
                              "(see the G2 example: tr.deg 6 without 6-solvability)")


@dataclass(frozen=True)
class G2Report:
    dim_g2: int
    subgroup: GroupDescriptor
    dim_subgroup: int
    trdeg: int
    rank: int
    rank_bound_holds: bool
    verdict: str

    def as_dict(self) -> dict:
        return {
            "dim_G2": self.dim_g2, "subgroup": self.subgroup.name,
            "dim_subgroup": self.dim_subgroup, "trdeg": self.trdeg,
            "rank": self.rank, "rank_bound_holds": self.rank_bound_holds,
            "verdict": self.verdict,
        }


def g2_counterexample() -> G2Report:
    """G2 acting on G2/SL3: transcendence degree 14 - 8 = 6, yet not 6-solvable."""
    h = SL(3)
    dg, dh = dim_of(G2), dim_of(h)
    trdeg = dg - dh
    ok = rank_bound_check(rank_of(G2), trdeg)
    return G2Report(dg, h, dh, trdeg, rank_of(G2), ok, f"not {trdeg}-solvable")
