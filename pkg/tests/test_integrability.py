import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import RF, random_upoly, rfuncs
from diffalg.exact import Poly
from diffalg.integrability import (
    check_no_certificate, hermite_reduce, is_log_derivative, is_scaled_log_derivative,
    rational_antiderivative, residues, rosenlicht_new_constants,
)
from diffalg.verdicts import Certificate, ExactWitness, LogWitness, Status, SymmetricPairWitness

t = RF.var("t")
x = RF.var("x")
P = Poly.var("t")


def test_hermite_examples():
    h = hermite_reduce(1 / t ** 2)
    assert h.rational_part == -1 / t and h.log_part.is_zero()
    h = hermite_reduce(1 / t)
    assert h.rational_part.is_zero() and h.log_part == 1 / t
    h = hermite_reduce(1 / (x ** 2 * (x - 1)))
    assert h.rational_part == 1 / x
    assert h.log_part == 1 / (x * (x - 1))


def _random_rf(rng, max_deg=4):
    num = random_upoly(rng, rng.randint(0, max_deg))
    den = random_upoly(rng, rng.randint(0, 2)) ** rng.randint(1, 3) * random_upoly(rng, rng.randint(0, 2))
    return RF(num, den)


def test_hermite_identity_500():
    rng = random.Random(5)
    for _ in range(500):
        f = _random_rf(rng)
        h = hermite_reduce(f)
        assert h.recombine("t") == f
        lp = h.log_part
        if not lp.is_zero():
            assert lp.num.degree() < lp.den.degree()
            d = lp.den
            from diffalg.exact import poly_gcd
            assert poly_gcd(d, d.diff("t")).is_constant()


@given(rfuncs(max_deg=3))
def test_hermite_identity_hypothesis(f):
    if f.is_zero():
        return
    assert hermite_reduce(f).recombine("t") == f


def test_antiderivative_examples():
    assert rational_antiderivative(3 * t ** 2) == t ** 3
    assert rational_antiderivative(1 / t) is None
    assert rational_antiderivative(1 / t ** 2) == -1 / t


def test_antiderivative_exactly_on_derivatives():
    rng = random.Random(9)
    for _ in range(200):
        g = _random_rf(rng)
        f = g.diff("t")
        if f.is_zero():
            continue
        a = rational_antiderivative(f)
        assert a is not None and a.diff("t") == f
        assert (a - g).is_constant()
        # adding a simple log term destroys exactness
        r = Fraction(rng.randint(1, 4))
        shift = Fraction(rng.randint(-20, 20)) + Fraction(1, 7)
        assert rational_antiderivative(f + RF(r) / (t - shift)) is None


def test_residue_examples():
    d = residues(3 / t)
    assert d.rt_resultant.to_dense("z") in ([-3, 1], [3, -1])
    assert d.rational_residues == ((Fraction(3), 1),)
    d = residues(1 / (t ** 2 - 2))
    assert d.rational_residues == () and d.has_irrational_residues
    lc = d.rt_resultant.to_dense("z")[-1]
    assert [c / lc for c in d.rt_resultant.to_dense("z")] == [Fraction(-1, 8), 0, 1]
    d = residues(1 / (t ** 3 - 1))
    assert d.rational_residues == ((Fraction(1, 3), 1),) and d.has_irrational_residues
    lc = d.rt_resultant.to_dense("z")[-1]
    assert [c / lc for c in d.rt_resultant.to_dense("z")] == [Fraction(-1, 27), 0, 0, 1]


def test_residues_rejects_bad_input():
    with pytest.raises(ValueError):
        residues(t ** 2 / (t - 1))
    with pytest.raises(ValueError):
        residues(1 / t ** 2)


def _exponents(w: LogWitness):
    out = Counter()
    for p, n in w.factors:
        out[n] += p.degree()
    return out


def test_log_derivative_examples():
    v = is_log_derivative(3 / t)
    assert v.status is Status.YES and v.witness.u() == t ** 3
    v = is_log_derivative((2 * t + 1) / (t ** 2 + t))
    assert v.status is Status.YES and v.witness.u() == t ** 2 + t
    v = is_log_derivative(1 / t ** 2)
    assert v.status is Status.NO and v.certificates == (Certificate.HERMITE_PART_NONZERO,)
    assert is_log_derivative(t).certificates == (Certificate.POLY_PART_NONZERO,)
    assert is_log_derivative(1 / (2 * t)).certificates == (Certificate.NON_INTEGER_RESIDUES,)


def test_log_derivative_roundtrip_200():
    rng = random.Random(13)
    for _ in range(200):
        k = rng.randint(1, 4)
        roots = rng.sample(range(-9, 10), k)
        exps = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in roots]
        u = RF(1)
        for a, n in zip(roots, exps):
            u = u * (t - a) ** n
        f = u.diff("t") / u
        v = is_log_derivative(f)
        assert v.status is Status.YES
        assert _exponents(v.witness) == Counter(exps)
        assert v.witness.u() / u == RF(1)


def test_scaled_examples():
    v = is_scaled_log_derivative(1 / (2 * t))
    assert v.status is Status.YES and v.witness.c == 2 and v.witness.u() == t
    v = is_scaled_log_derivative(1 / (t ** 3 - 1))
    assert v.status is Status.NO and v.certificates == (Certificate.MIXED_RESIDUES,)


def test_scaled_symmetric_pair():
    # residues +-1/(2 sqrt 2): the squarefree part z^2 - 1/8 fits the symmetric-pair rule
    v = is_scaled_log_derivative(1 / (t ** 2 - 2))
    assert v.status is Status.YES and v.certificates == (Certificate.SYMMETRIC_PAIR_RULE,)
    assert isinstance(v.witness, SymmetricPairWitness) and v.witness.b == Fraction(1, 8)
    v = is_scaled_log_derivative(1 / (t ** 2 + 1))
    assert v.status is Status.YES and v.witness.b == Fraction(-1, 4)


def test_scaled_undecided():
    # three irrational residues 1/(3 a^2), a^3 = 2: no rule applies
    v = is_scaled_log_derivative(1 / (t ** 3 - 2))
    assert v.status is Status.UNDECIDED and v.certificates == (Certificate.IRRATIONAL_RESIDUES,)


def test_scaled_roundtrip():
    rng = random.Random(17)
    for _ in range(100):
        roots = rng.sample(range(-9, 10), rng.randint(1, 3))
        exps = [rng.choice([-2, -1, 1, 2, 3]) for _ in roots]
        c = Fraction(rng.choice([1, 2, 3, -5]), rng.choice([1, 2, 7]))
        u = RF(1)
        for a, n in zip(roots, exps):
            u = u * (t - a) ** n
        f = u.diff("t") / u / RF(c)
        v = is_scaled_log_derivative(f)
        assert v.status is Status.YES
        w = v.witness
        assert w.recombine("t") == f
        # witness exponents are the constructed ones rescaled by w.c / c
        ratio = w.c / c
        assert _exponents(w) == Counter({n * ratio: m for n, m in Counter(exps).items()})


def test_rosenlicht_examples():
    v = rosenlicht_new_constants(x ** 3 - x ** 2)
    assert v.status is Status.NO
    assert Certificate.HERMITE_PART_NONZERO in v.certificates
    assert Certificate.NON_SQUAREFREE_DENOMINATOR in v.certificates
    v = rosenlicht_new_constants(x ** 2)
    assert v.status is Status.YES and isinstance(v.witness, ExactWitness) and v.witness.u == -1 / x
    v = rosenlicht_new_constants(2 * x)
    assert v.status is Status.YES and v.witness.c == 2 and v.witness.u() == x


def test_certificate_soundness():
    rng = random.Random(23)
    for _ in range(200):
        f = _random_rf(rng)
        if f.is_zero():
            continue
        for decide in (is_log_derivative, is_scaled_log_derivative):
            v = decide(f)
            if v.status is Status.NO:
                assert all(check_no_certificate(f, c) for c in v.certificates)
            elif v.status is Status.YES and isinstance(v.witness, LogWitness):
                assert v.witness.recombine("t") == f
            elif v.status is Status.UNDECIDED:
                assert v.certificates == (Certificate.IRRATIONAL_RESIDUES,)
