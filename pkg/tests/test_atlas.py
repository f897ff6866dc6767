import pytest
from hypothesis import given
from hypothesis import strategies as st

from diffalg.atlas import (
    G2, GA, GM, SL, SO, SP, BoundKind, GroupDescriptor, Family, dim_of, g2_counterexample,
    product, rank_bound_check, rank_of, solvability_bound,
)


def test_dim_examples():
    assert dim_of(SL(3)) == 8
    assert dim_of(G2) == 14 and rank_of(G2) == 2
    assert dim_of(product(SL(2), SL(2))) == 6
    assert dim_of(SP(4)) == 10 and dim_of(SO(5)) == 10 and dim_of(SO(4)) == 6


def test_bad_descriptors():
    with pytest.raises(ValueError):
        GroupDescriptor(Family.SL, 2, dimension=9)
    with pytest.raises(ValueError):
        SP(3)
    with pytest.raises(ValueError):
        GroupDescriptor(Family.PRODUCT)


def test_rank_bound_examples():
    assert rank_bound_check(2, 6)
    assert not rank_bound_check(3, 2)
    assert rank_bound_check(1, 3)
    with pytest.raises(ValueError):
        rank_bound_check(0, 1)


@pytest.mark.parametrize("r", range(1, 8))
def test_sl_table_is_tight(r):
    g = GroupDescriptor(Family.SL, r)
    assert dim_of(g) == r * (r + 2)
    assert rank_bound_check(r, dim_of(g))
    assert not rank_bound_check(r, dim_of(g) + 1)


def test_trichotomy():
    for d in range(1, 30):
        v = solvability_bound(d)
        expected = BoundKind.D_PLUS if d == 1 else BoundKind.D_EXACT if d <= 4 else BoundKind.D_PLUS_ONE
        assert v.bound_kind is expected
        assert bool(v.candidate_groups) == (d <= 4)
    assert [g.name for g in solvability_bound(1).candidate_groups] == ["SL2"]
    assert [g.name for g in solvability_bound(3).candidate_groups] == ["SL3", "SL4", "SP4"]
    assert [g.name for g in solvability_bound(4).candidate_groups] == ["SL3", "SL4", "SP4", "SL5"]


def test_candidates_fit_rank_bound():
    for d in range(1, 5):
        for g in solvability_bound(d).candidate_groups:
            assert rank_bound_check(rank_of(g), d)


def test_g2():
    rep = g2_counterexample()
    assert (rep.dim_g2, rep.dim_subgroup, rep.trdeg) == (14, 8, 6)
    assert rep.trdeg == dim_of(G2) - dim_of(SL(3))
    assert rep.rank_bound_holds and rep.verdict == "not 6-solvable"
    assert solvability_bound(rep.trdeg).bound_kind is BoundKind.D_PLUS_ONE


leaves = st.sampled_from([SL(2), SL(3), SP(4), SO(5), SO(6), G2, GM, GA])
trees = st.recursive(leaves, lambda ch: st.lists(ch, min_size=1, max_size=3).map(lambda fs: product(*fs)),
                     max_leaves=8)


def _flat(g):
    if g.family is Family.PRODUCT:
        for f in g.factors:
            yield from _flat(f)
    else:
        yield g


@given(trees)
def test_product_additivity(g):
    parts = list(_flat(g))
    assert dim_of(g) == sum(dim_of(p) for p in parts)
    assert rank_of(g) == sum(rank_of(p) for p in parts)
    if g.family is Family.PRODUCT:
        assert dim_of(g) == sum(dim_of(f) for f in g.factors)
