"""Exact arithmetic: rationals, polynomials, rational functions."""

from fractions import Fraction

from .poly import Poly, poly_gcd as multivariate_gcd
from .ratfunc import RationalFunction
from .univariate import (
    PartialFractionTerm,
    SquarefreeDecomposition,
    partial_fractions,
    poly_gcd,
    rational_roots,
    recombine_partial_fractions,
    resultant,
    squarefree_decompose,
)

BigRat = Fraction

__all__ = [
    "BigRat", "Poly", "RationalFunction", "SquarefreeDecomposition",
    "PartialFractionTerm", "multivariate_gcd", "partial_fractions", "poly_gcd",
    "rational_roots", "recombine_partial_fractions", "resultant",
    "squarefree_decompose",
]
