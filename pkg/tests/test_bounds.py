import numpy as np
import pytest
from hypothesis import given, settings

from hyperspec import BOUND_IDS, audit_all, evaluate, make_hypergraph
from hyperspec.errors import InvalidOption, MissingOption, UnknownBound
from hyperspec.families import (
    bowtie,
    complete_bipartite_uniform,
    complete_uniform,
    cube_hypergraph,
    random_uniform,
    uniform_chain,
)

from conftest import brute_cheeger, hypergraphs


def test_catalog_ids():
    assert len(BOUND_IDS) == len(set(BOUND_IDS))
    assert {"ADJ-1", "LAP-4", "LAP-10", "NRM-3", "STR-4", "CRV-2", "CRV-3"} <= set(BOUND_IDS)


def test_adj1_regular_equality():
    r = evaluate(complete_uniform(4, 3), "ADJ-1")
    assert r.verdict == "holds"
    assert (r.subject, r.bound) == (pytest.approx(3.0), pytest.approx(3.0))
    assert r.margin == pytest.approx(0.0, abs=1e-9)


def test_lap4_k33_equality():
    r = evaluate(complete_uniform(3, 3), "LAP-4")
    assert r.verdict == "holds"
    assert r.subject == pytest.approx(1.0) and r.bound == pytest.approx(1.0)
    assert abs(r.margin) <= 1e-9


def test_lap4_k34_counterexample():
    # h(K3_4) = 2 by exhaustive search, below 2 * 4 * 2 / 6 = 8/3
    r = evaluate(complete_uniform(4, 3), "LAP-4")
    assert r.subject == pytest.approx(brute_cheeger(complete_uniform(4, 3)))
    assert r.bound == pytest.approx(8 / 3)
    assert r.verdict == "violated" and r.must_hold


def test_lap10_audit_only():
    r = evaluate(complete_uniform(4, 3), "LAP-10")
    assert r.verdict == "violated"
    assert r.subject == pytest.approx(4.0) and r.bound == pytest.approx(2.0)
    assert r.must_hold is False


def test_lap2_bowtie():
    r = evaluate(bowtie(), "LAP-2")
    assert r.verdict == "holds"
    assert r.subject == pytest.approx(0.5) and r.bound == pytest.approx(1.0)


def test_col1_k34():
    r = evaluate(complete_uniform(4, 3), "COL-1")
    assert r.verdict == "holds"
    assert r.subject == 4 and r.bound == pytest.approx(7.0)


def test_col3_k33_equality():
    r = evaluate(complete_uniform(3, 3), "COL-3")
    assert r.verdict == "holds"
    assert r.subject == pytest.approx(0.5) and r.bound == pytest.approx(0.5)


def test_lap5_bowtie_strict():
    r = evaluate(bowtie(), "LAP-5")
    assert r.relation == "<"
    assert r.subject == pytest.approx(0.5)
    assert r.bound == pytest.approx(np.sqrt(7), abs=1e-9)
    assert r.verdict == "holds"


def test_subset_option():
    r = evaluate(bowtie(), "LAP-3", {"S": {0, 1}})
    assert r.verdict == "holds"
    assert r.subject == 1.0
    assert [p["label"] for p in r.details["parts"]] == ["upper", "lower"]


def test_pair_option_boundary_case():
    # the log quotient is exactly 1 here, so the ceiling is 1 while the distance is 2
    r = evaluate(bowtie(), "LAP-7", {"V1": {0, 1}, "V2": {3, 4}})
    assert r.subject == 2 and r.bound == 1
    assert r.verdict == "violated"


def test_str4_option():
    r = evaluate(bowtie(), "STR-4", {"n1": 2, "n2": 3, "m": 3})
    assert r.verdict == "holds" and r.subject <= 1e-9


def test_errors():
    with pytest.raises(UnknownBound):
        evaluate(bowtie(), "LAP-99")
    with pytest.raises(MissingOption):
        evaluate(bowtie(), "LAP-7", {"V1": {0}})
    with pytest.raises(MissingOption):
        evaluate(bowtie(), "STR-4")
    with pytest.raises(InvalidOption):
        evaluate(bowtie(), "LAP-3", {"S": {0, 9}})


def test_not_applicable_is_not_a_verdict_of_failure():
    two = make_hypergraph(6, [(0, 1, 2), (3, 4, 5)])
    reports = audit_all(two)
    assert len(reports) == len(BOUND_IDS)
    assert any(r.verdict == "not-applicable" for r in reports)
    for r in reports:
        if r.verdict == "not-applicable":
            assert not r.preconditions_met and r.reasons and r.margin is None


def test_edgeless_does_not_raise():
    reports = audit_all(make_hypergraph(3, []))
    assert all(r.verdict in ("holds", "not-applicable", "violated") for r in reports)


@pytest.mark.parametrize("g", [complete_uniform(5, 3), cube_hypergraph(2, 3), uniform_chain(3),
                               random_uniform(9, 3, 10, seed=4, connected=True)])
def test_audit_margins_consistent(g):
    for r in audit_all(g):
        assert r.bound_id in BOUND_IDS
        if r.preconditions_met:
            assert np.isfinite(r.margin) or r.verdict == "violated"
            if r.relation in ("<=", ">="):
                assert (r.verdict == "holds") == (r.margin >= -1e-7)


def test_audit_deterministic():
    g = random_uniform(10, 3, 12, seed=1, connected=True)
    a = [r.as_dict() for r in audit_all(g, seed=3)]
    b = [r.as_dict() for r in audit_all(g, seed=3)]
    assert a == b


def test_thread_count_does_not_change_results(monkeypatch):
    g = complete_bipartite_uniform(2, 3, 3)
    monkeypatch.setenv("HYPERSPEC_THREADS", "1")
    one = [r.as_dict() for r in audit_all(g)]
    monkeypatch.setenv("HYPERSPEC_THREADS", "4")
    four = [r.as_dict() for r in audit_all(g)]
    assert one == four


def test_bound_subset_selection():
    reports = audit_all(bowtie(), bound_ids=["COL-1", "ADJ-1"])
    assert [r.bound_id for r in reports] == ["COL-1", "ADJ-1"]


@settings(max_examples=40, deadline=None)
@given(hypergraphs(min_n=1, max_n=7))
def test_audit_never_raises(g):
    reports = audit_all(g)
    assert [r.bound_id for r in reports] == list(BOUND_IDS)
    for r in reports:
        assert r.verdict in ("holds", "violated", "not-applicable")
