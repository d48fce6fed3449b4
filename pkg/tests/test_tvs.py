import pytest
from hypothesis import given, settings, strategies as st

from circulant_labelling.core import DomainError, TotalWeighting, tvs_formula, weighted_degrees
from circulant_labelling.tvs import (
    _split,
    antipodal_scheme_total,
    construct_tvs,
    construct_tvs_result,
    kn_total_scheme,
)
from circulant_labelling.verify import verify


def _signed(v, n):
    return v if v <= n // 2 else v - n


def test_example_22_2():
    res = construct_tvs_result(22, 2)
    rep = verify(res.weighting)
    assert rep.distinct and rep.max_label == 6
    d = res.details
    assert (d["t"], d["r"], d["g1"], d["g2"]) == (2, 2, 1, 2)
    # both S^(2) copies have a single weight-1 triangle, an odd walk
    assert [len(w) - 1 for w in d["walks"]] == [3, 3]
    assert len(d["V0"]) == 2


@pytest.mark.parametrize("n,k,s", [(5, 2, 2), (47, 3, 8), (7, 2, 3), (13, 4, 3)])
def test_examples(n, k, s):
    rep = verify(construct_tvs(n, k))
    assert rep.distinct and rep.max_label == s


@pytest.mark.parametrize("n", [5, 7, 9, 11, 21])
def test_kn_scheme(n):
    tw = kn_total_scheme(n)
    assert weighted_degrees(tw).values == tuple(range(n, 2 * n))
    assert tw.max_label == 2


def test_kn_scheme_rejects_even():
    with pytest.raises(DomainError):
        kn_total_scheme(6)


def _edge_sums(tw):
    return weighted_degrees(tw.edges).values


def test_antipodal_groups_k2():
    tw = antipodal_scheme_total(2)
    sums = _edge_sums(tw)
    first = [sums[v] for v in range(6) if -1 <= _signed(v, 6) <= 1]
    assert sorted(first) == [4, 5, 6]


def test_antipodal_groups_k3():
    tw = antipodal_scheme_total(3)
    sums = _edge_sums(tw)
    second = [sums[v] for v in range(8) if not -2 <= _signed(v, 8) <= 1]
    assert sorted(second) == [9, 10, 11, 12]


@pytest.mark.parametrize("k", range(2, 11))
def test_antipodal_distinct(k):
    tw = antipodal_scheme_total(k)
    n = 2 * k + 2
    sums = _edge_sums(tw)
    lo = [sums[v] for v in range(n) if -((k + 1) // 2) <= _signed(v, n) <= k // 2]
    hi = [sums[v] for v in range(n) if not -((k + 1) // 2) <= _signed(v, n) <= k // 2]
    assert len(set(lo)) == len(lo) and set(lo) <= set(range(2 * k, 3 * k + 1))
    assert len(set(hi)) == len(hi) and set(hi) <= set(range(3 * k, 4 * k + 1))
    assert verify(tw).distinct and tw.max_label == 2


def test_case31_accounting_19_2():
    res = construct_tvs_result(19, 2)
    assert res.case == "3.1"
    assert {k: res.details[k] for k in ("t", "r", "g", "h", "extra")} == {"t": 1, "r": 9, "g": 1, "h": 2, "extra": True}


@pytest.mark.parametrize("n,k", [(11, 2), (29, 3), (21, 2), (31, 2)])
def test_insertion(n, k):
    res = construct_tvs_result(n, k)
    assert res.case.startswith("3.3")
    s = tvs_formula(n, k)
    base = construct_tvs(n - 1, k)
    assert max(weighted_degrees(base).values) == (2 * k + 1) * s - 1
    new = res.details["inserted"]
    wd = weighted_degrees(res.weighting).values
    assert wd[new] == (2 * k + 1) * s == max(wd)


def test_split():
    assert _split(22, 2) == (2, 2)
    assert _split(20, 2) == (1, 10)
    assert _split(33, 2) == (3, 3)


def test_domain_errors():
    with pytest.raises(DomainError):
        construct_tvs(4, 2)
    with pytest.raises(DomainError):
        construct_tvs(9, 1)


nk = st.integers(2, 7).flatmap(lambda k: st.tuples(st.integers(2 * k + 1, 160), st.just(k)))


@settings(max_examples=60, deadline=None)
@given(nk)
def test_construct_tvs_optimal(pair):
    n, k = pair
    tw = construct_tvs(n, k)
    assert isinstance(tw, TotalWeighting)
    rep = verify(tw)
    assert rep.distinct and rep.max_label == tvs_formula(n, k)
    assert min(tw.vertex_weights.values()) >= 1


@settings(max_examples=60, deadline=None)
@given(nk.filter(lambda p: p[0] > 2 * p[1] + 2))
def test_scaled_edge_values(pair):
    n, k = pair
    s = tvs_formula(n, k)
    values = set(construct_tvs(n, k).edges.weights.values())
    allowed = {1, (s + 1) // 2, s} if s % 2 else {1, s // 2, s // 2 + 1, s}
    assert values <= allowed


def test_g2_accounting_matches_residue_table(caplog):
    with caplog.at_level("WARNING", logger="circulant_labelling.tvs"):
        for k in range(2, 9):
            for r in range(2, 2 * k + 2):
                construct_tvs_result(2 * (4 * k + 2) + r, k)
    assert not caplog.records
