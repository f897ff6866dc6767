"""Vector-field derivations ``D = sum f_i d/dx_i`` and their matrices on monomial spaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from ..exact.poly import Poly, _embed, poly_gcd
from ..exact.ratfunc import RationalFunction

RF = RationalFunction


@dataclass(frozen=True)
class VectorFieldDerivation:
    variables: tuple[str, ...]
    components: tuple[RationalFunction, ...]

    def __init__(self, variables, components):
        variables = tuple(variables)
        comps = tuple(RF.coerce(c) for c in components)
        if len(comps) != len(variables):
            raise ValueError(f"{len(variables)} variables but {len(comps)} components")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for c in comps:
            extra = set(c.vars) - set(variables)
            if extra:
                raise ValueError(f"component {c} uses undeclared variables {sorted(extra)}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components, variables=None):
        """Build from components, naming variables ``x1..xn`` (or ``x`` when n = 1) by default."""
        comps = [RF.coerce(c) for c in components]
        if variables is None:
            variables = ["x"] if len(comps) == 1 else [f"x{i + 1}" for i in range(len(comps))]
        return cls(variables, comps)

    @property
    def n(self) -> int:
        return len(self.variables)

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.components)

    def poly_components(self) -> tuple[Poly, ...]:
        if not self.is_polynomial():
            raise ValueError("this search needs polynomial components; clear denominators first")
        return tuple(c.as_poly() for c in self.components)

    def max_degree(self) -> int:
        return max((c.num.degree() - c.den.degree() if c.is_polynomial() else c.num.degree()
                    for c in self.components if not c.is_zero()), default=0)

    def scaled(self, lam) -> VectorFieldDerivation:
        lam = RF.coerce(lam)
        return VectorFieldDerivation(self.variables, [c * lam for c in self.components])

    def cleared(self) -> tuple[VectorFieldDerivation, Poly]:
        """``(L*D, L)`` with ``L`` the monic lcm of the component denominators."""
        L = Poly.const(1)
        for c in self.components:
            L = (L * c.den).exquo(poly_gcd(L, c.den))
        L = L.monic()
        return self.scaled(RF(L)), L

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def apply_derivation(D: VectorFieldDerivation, z) -> RationalFunction:
    """``Dz = sum f_i * dz/dx_i``, exact."""
    z = RF.coerce(z)
    extra = set(z.vars) - set(D.variables)
    if extra:
        raise ValueError(f"{z} uses variables {sorted(extra)} outside the derivation")
    out = RF(0)
    for x, f in zip(D.variables, D.components):
        if x in z.vars:
            out = out + f * z.diff(x)
    return out


def apply_poly(D: VectorFieldDerivation, p: Poly, comps=None) -> Poly:
    comps = comps or D.poly_components()
    out = Poly.const(0)
    for x, f in zip(D.variables, comps):
        if x in p.vars:
            out = out + f * p.diff(x)
    return out


def monomials(n: int, deg_max: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree <= deg_max, graded ascending (ties lex descending)."""
    out = []
    for d in range(deg_max + 1):
        block = []
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for j in combo:
                e[j] += 1
            block.append(tuple(e))
        out.extend(sorted(block, reverse=True))
    return out


def from_vector(vs: tuple[str, ...], mons, vec) -> Poly:
    return Poly(vs, {m: c for m, c in zip(mons, vec) if c != 0})


def linear_map(D: VectorFieldDerivation, mons, cofactor: Poly | None = None):
    """Matrix of ``P -> D(P) - cofactor*P`` on span(mons) and the inclusion matrix.

    Returns ``(rows, M, E)``: the image monomials and two row-major matrices
    of shape ``len(rows) x len(mons)`` with Fraction entries.
    """
    vs = tuple(D.variables)
    comps = D.poly_components()
    images = []
    for m in mons:
        p = Poly(vs, {m: 1})
        img = apply_poly(D, p, comps)
        if cofactor is not None:
            img = img - cofactor * p
        images.append(_embed(img, vs))
    keys = set(mons)
    for img in images:
        keys.update(img)
    rows = sorted(keys, key=lambda e: (sum(e), e))
    index = {e: i for i, e in enumerate(rows)}
    M = [[Fraction(0)] * len(mons) for _ in rows]
    E = [[Fraction(0)] * len(mons) for _ in rows]
    for j, img in enumerate(images):
        for e, c in img.items():
            M[index[e]][j] = c
    for j, m in enumerate(mons):
        E[index[m]][j] = Fraction(1)
    return rows, M, E

