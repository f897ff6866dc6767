import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import RF, operators, random_monic_operator, rfuncs
from diffalg.cli.parser import parse_expression
from diffalg.exact import Poly
from diffalg.operators import (
    LinearDifferentialOperator as L, SeriesError, TruncatedSeries, expand_rational,
    riccati_eval, riccati_of, series_solutions, sym_power, wronskian,
)

D = L.D()
t = RF.var("t")


def test_d_times_t():
    assert (D * t).identical(L([RF(1), t]))


def test_factored_product():
    A = (D - t) * (D + t)
    assert A.identical(L([RF(1) - t ** 2, RF(0), RF(1)]))


def test_equality_is_monic():
    A = L([t, RF(1)])
    assert 2 * A == A
    assert not (2 * A).identical(A)
    assert hash(2 * A) == hash(A)


@settings(max_examples=60)
@given(operators(), operators(), operators())
def test_associativity(a, b, c):
    assert ((a * b) * c).identical(a * (b * c))


@settings(max_examples=60)
@given(rfuncs(), rfuncs())
def test_leibniz(f, g):
    lhs = D * L.scalar(f)
    assert lhs.identical(L.scalar(f) * D + L.scalar(f.diff("t")))
    assert (D * L.scalar(f * g)).apply(RF(1)) == f.diff("t") * g + f * g.diff("t")


@given(operators(), rfuncs())
def test_apply_is_compatible_with_product(a, y):
    b = D + 1
    assert (a * b).apply(y) == a.apply(b.apply(y))


def test_riccati_orders():
    a0, a1, a2 = RF.var("a0"), RF.var("a1"), RF.var("a2")
    assert str(riccati_of(D + a0)) == "w + a0"
    r2 = riccati_of(L([a0, a1, RF(1)]))
    assert parse_expression(str(r2)) == parse_expression("w' + w^2 + a1*w + a0")
    r3 = riccati_of(L([a0, a1, a2, RF(1)]))
    assert parse_expression(str(r3)) == parse_expression("w'' + 3*w*w' + w^3 + a2*w' + a2*w^2 + a1*w + a0")


def test_riccati_weight_grading():
    rng = random.Random(3)
    for n in (1, 2, 3, 4):
        R = riccati_of(random_monic_operator(rng, n))
        top = [e for e in R.terms if R.weight(e) == n]
        assert top and all(R.weight(e) <= n for e in R.terms)


def test_riccati_eval_examples():
    R = riccati_of(D ** 2 - 1)
    assert R.evaluate(RF(1)) == RF(0)
    assert R.evaluate(RF(2)) == RF(3)
    assert riccati_of(D - t).evaluate(t) == RF(0)


@pytest.mark.parametrize("order", [1, 2, 3])
def test_riccati_series_identity(order):
    rng = random.Random(order)
    N = 24
    for _ in range(5):
        op = random_monic_operator(rng, order)
        R = riccati_of(op)
        _, basis = series_solutions(op, 0, N)
        for y in basis:
            if y[0] == 0:
                continue
            val = riccati_eval(R, y.derivative() / y.truncate(N - 1))
            keep = N - 2 * order
            assert all(c == 0 for c in val.coefficients[:keep])


def test_series_examples():
    _, basis = series_solutions(D ** 2, 0, 5)
    assert [b.coefficients for b in basis] == [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0)]
    op = D - RF(Poly.const(1), Poly.const(1) - Poly.var("t"))
    _, basis = series_solutions(op, 0, 4)
    assert basis[0].coefficients == (1, 1, 1, 1)


def test_series_singular_point():
    op = D - RF(Poly.const(1), Poly.var("t"))
    with pytest.raises(SeriesError):
        series_solutions(op, 0, 5)
    point, _ = series_solutions(op, None, 5)
    assert point == 1


def test_wronskian_examples():
    one = TruncatedSeries.from_dense([1], 6)
    tt = TruncatedSeries.from_dense([0, 1], 6)
    t2 = TruncatedSeries.from_dense([0, 0, 1], 6)
    assert wronskian([one, tt]).coefficients[0] == 1
    w = wronskian([one, tt, t2])
    assert w.coefficients[0] == 2 and not any(w.coefficients[1:])


def test_wronskian_of_basis_is_nonzero():
    rng = random.Random(11)
    op = random_monic_operator(rng, 3)
    _, basis = series_solutions(op, 0, 12)
    # canonical basis: y_i^(i)(0) = i!, so W(0) = 0! 1! 2!
    assert wronskian(basis)[0] == 2


def test_sym2_of_d2_minus_1():
    assert sym_power(D ** 2 - 1, 2).identical(D ** 3 - 4 * D)


def test_sympow_examples():
    assert sym_power(D ** 2, 2).identical(D ** 3)
    assert sym_power(D - t, 3).identical(D - 3 * t)
    # Airy: sym^2 has order 3
    assert sym_power(D ** 2 - t, 2).order == 3


def _products(basis, d):
    from itertools import combinations_with_replacement
    for combo in combinations_with_replacement(basis, d):
        out = combo[0]
        for y in combo[1:]:
            out = out * y
        yield out


@pytest.mark.parametrize("d", [2, 3])
def test_sympow_annihilates_products(d):
    rng = random.Random(100 + d)
    for _ in range(4):
        op = random_monic_operator(rng, 2)
        S = sym_power(op, d)
        assert S.is_monic() and S.order <= d + 1
        _, basis = series_solutions(op, 0, 20)
        for p in _products(basis, d):
            res = S.apply_series(p)
            assert all(c == 0 for c in res.coefficients)


def test_expand_rational():
    s = expand_rational(RF(Poly.const(1), Poly.const(1) - Poly.var("t")), "t", 0, 5)
    assert s.coefficients == tuple(Fraction(1) for _ in range(5))
