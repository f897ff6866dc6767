"""Linear differential operators over Q(t) and their series oracle."""

from .operator import LinearDifferentialOperator, op_mul, series_solutions
from .riccati import RiccatiPolynomial, riccati_eval, riccati_of
from .series import SeriesError, TruncatedSeries, expand_rational, wronskian
from .sympower import sym_power

__all__ = [
    "LinearDifferentialOperator", "RiccatiPolynomial", "SeriesError",
    "TruncatedSeries", "expand_rational", "op_mul", "riccati_eval",
    "riccati_of", "series_solutions", "sym_power", "wronskian",
]
