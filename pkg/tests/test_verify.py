import itertools

import pytest
from hypothesis import given, settings, strategies as st

from circulant_labelling.core import CirculantPowerGraph, EdgeWeighting, TotalWeighting
from circulant_labelling.strength import construct_s
from circulant_labelling.tvs import construct_tvs
from circulant_labelling.verify import OracleBudget, certify, exact_strength, verify


def test_verify_examples():
    rep = verify(construct_tvs(22, 2))
    assert rep.distinct and rep.max_label == 6 and rep.mode == "tvs"
    rep = verify(construct_s(19, 3), expected_max=5)
    assert rep.ok and rep.mode == "s"
    g = CirculantPowerGraph(7, 2)
    rep = verify(EdgeWeighting(g, {e: 1 for e in g.edges()}))
    assert not rep.distinct and rep.degree_multiset == (4,) * 7


def test_verify_expected_mismatch():
    rep = verify(construct_s(12, 3), expected_max=4)
    assert rep.distinct and not rep.matches_expected and not rep.ok


@settings(max_examples=50)
@given(st.integers(2, 4).flatmap(lambda k: st.tuples(st.integers(2 * k + 1, 12), st.just(k))), st.data())
def test_verify_matches_direct_sum(pair, data):
    n, k = pair
    g = CirculantPowerGraph(n, k)
    edges = list(g.edges())
    labels = data.draw(st.lists(st.integers(1, 5), min_size=len(edges), max_size=len(edges)))
    vlabels = data.draw(st.lists(st.integers(1, 5), min_size=n, max_size=n))
    tw = TotalWeighting(EdgeWeighting(g, dict(zip(edges, labels))), dict(enumerate(vlabels)))
    wd = [vlabels[v] + sum(x for e, x in zip(edges, labels) if v in g.endpoints(e)) for v in range(n)]
    rep = verify(tw)
    assert rep.degree_multiset == tuple(sorted(wd))
    assert rep.distinct == (len(set(wd)) == n)
    assert rep.max_label == max(labels + vlabels)


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9])
def test_oracle_s_k2(n):
    res = exact_strength(CirculantPowerGraph(n, 2), "s")
    assert res.status == "ok" and res.value == 3
    assert verify(res.witness).distinct and res.witness.max_label <= 3


@pytest.mark.parametrize("n,value", [(5, 2), (6, 2), (7, 3), (8, 3)])
def test_oracle_tvs_k2(n, value):
    res = exact_strength(CirculantPowerGraph(n, 2), "tvs")
    assert res.status == "ok" and res.value == value
    assert verify(res.witness).distinct


@pytest.mark.parametrize("n,k,mode,value", [(5, 2, "s", 3), (7, 2, "tvs", 3), (10, 2, "s", 4), (8, 3, "tvs", 2), (7, 3, "s", 3)])
def test_oracle_from_one(n, k, mode, value):
    res = exact_strength(CirculantPowerGraph(n, k), mode, start=1)
    assert res.value == value and res.tried[-1] == value


def _brute_s(n, k, top):
    g = CirculantPowerGraph(n, k)
    edges = list(g.edges())
    for s in range(1, top + 1):
        for labels in itertools.product(range(1, s + 1), repeat=len(edges)):
            wd = [0] * n
            for (u, d), x in zip(edges, labels):
                wd[u] += x
                wd[(u + d) % n] += x
            if len(set(wd)) == n:
                return s
    return None


def test_oracle_against_brute_force_k5():
    assert exact_strength(CirculantPowerGraph(5, 2), "s", start=1).value == _brute_s(5, 2, 3) == 3


def test_oracle_monotone():
    g = CirculantPowerGraph(9, 2)
    best = exact_strength(g, "s", start=1).value
    assert exact_strength(g, "s", start=best + 1).value == best + 1


def test_oracle_timeout_is_explicit():
    res = exact_strength(CirculantPowerGraph(9, 4), "s", OracleBudget(max_nodes=500, time_limit=5))
    assert res.timed_out and res.value is None and res.witness is None


def test_budget_validation():
    with pytest.raises(ValueError):
        OracleBudget(max_nodes=0)
    with pytest.raises(ValueError):
        exact_strength(CirculantPowerGraph(5, 2), "x")


def test_certify_examples():
    c = certify(22, 2, "tvs")
    assert c["kind"] == "formula-bound" and c["lowerBound"] == 6 and c["constructedMax"] == 6 and c["optimal"]
    c = certify(19, 3, "s")
    assert c["kind"] == "parity" and c["constructedMax"] == 5 and c["parity"]["forced_sum"] == 285 and c["optimal"]
    c = certify(5, 2, "s")
    assert c["kind"] == "external"
    c = certify(40, 3, "s")
    assert c["kind"] == "formula-bound" and c["optimal"]
