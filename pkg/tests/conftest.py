from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from diffalg.exact import Poly, RationalFunction
from diffalg.operators import LinearDifferentialOperator

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

RF = RationalFunction

small_ints = st.integers(min_value=-5, max_value=5)
fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
nonzero_fractions = fractions.filter(lambda f: f != 0)


@st.composite
def upolys(draw, var="t", max_deg=4, nonzero=False):
    coeffs = draw(st.lists(fractions, min_size=1, max_size=max_deg + 1))
    p = Poly.from_dense(coeffs, var)
    if nonzero and p.is_zero():
        p = Poly.const(draw(nonzero_fractions))
    return p


@st.composite
def rfuncs(draw, var="t", max_deg=3):
    num = draw(upolys(var, max_deg))
    den = draw(upolys(var, max_deg, nonzero=True))
    return RF(num, den)


@st.composite
def mpolys(draw, vars=("x1", "x2"), max_terms=4, max_exp=2):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_exp)) for _ in vars)
        terms[e] = draw(fractions)
    return Poly(vars, terms)


@st.composite
def operators(draw, max_order=2, max_deg=2):
    n = draw(st.integers(0, max_order))
    coeffs = [draw(rfuncs("t", max_deg)) for _ in range(n + 1)]
    return LinearDifferentialOperator(coeffs)


def random_upoly(rng: random.Random, deg: int, var="t", lo=-5, hi=5) -> Poly:
    coeffs = [Fraction(rng.randint(lo, hi)) for _ in range(deg)] + [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))]
    return Poly.from_dense(coeffs, var)


def random_monic_operator(rng: random.Random, order: int, var="t") -> LinearDifferentialOperator:
    """Monic operator with polynomial coefficients (0 is an ordinary point)."""
    coeffs = []
    for _ in range(order):
        deg = rng.randint(0, 2)
        coeffs.append(RF(Poly.from_dense([Fraction(rng.randint(-3, 3)) for _ in range(deg + 1)], var)))
    return LinearDifferentialOperator(coeffs + [RF(1)], var)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
