"""New-constant search for polynomial vector fields."""

from .darboux import DarbouxPair, find_darboux
from .derivation import VectorFieldDerivation, apply_derivation
from .search import (
    DEFAULT_DEG_MAX,
    DEFAULT_POW_MAX,
    ConstantWitness,
    EJVerdict,
    WitnessKind,
    ej_classify,
    pencil_minor_gcd,
    poly_constant_search,
    rational_constant_search,
)

__all__ = [
    "DEFAULT_DEG_MAX", "DEFAULT_POW_MAX", "ConstantWitness", "DarbouxPair",
    "EJVerdict", "VectorFieldDerivation", "WitnessKind", "apply_derivation",
    "ej_classify", "find_darboux", "pencil_minor_gcd", "poly_constant_search",
    "rational_constant_search",
]
