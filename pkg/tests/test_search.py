import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from catalog import models
from pseudoeq.algebra import FiniteEqAlgebra, classify, is_isomorphic, relabel
from pseudoeq.errors import SizeBoundExceeded, UnknownClaim
from pseudoeq.search import (
    CLAIMS,
    PROPERTIES,
    SearchSpec,
    canonical_form,
    enumerate_models,
    find_counterexample,
    from_form,
    oracle_count,
    raw_forms,
    resolve_claim,
)
from pseudoeq.states import enumerate_states

# [DERIVED] isomorphism classes per size, computed by the search engine and
# confirmed by two independent brute-force counts at sizes 2 and 3
COUNTS = {1: 1, 2: 2, 3: 9, 4: 72}
COUNT_5 = 1328


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counts(n):
    assert len(enumerate_models(SearchSpec(n))) == COUNTS[n]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_match_brute_force(n):
    assert oracle_count(n) == COUNTS[n]
    assert oracles.count_models(n) == COUNTS[n]


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("PSEUDOEQ_SLOW"), reason="set PSEUDOEQ_SLOW=1 (takes minutes)")
def test_count_size_five():
    assert len(raw_forms(5)) == COUNT_5


def test_jobs_do_not_change_results():
    assert raw_forms(4, jobs=2, split=2) == raw_forms(4)
    assert raw_forms(3, jobs=1, split=3) == raw_forms(3)


def test_forms_are_canonical_and_distinct():
    for A in models():
        assert canonical_form(A) == canonical_form(from_form(canonical_form(A)))
    forms = [canonical_form(A) for A in models()]
    assert len(set(forms)) == len(forms)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_canonical_form_ignores_labels(data):
    A = data.draw(st.sampled_from(list(models())))
    perm = data.draw(st.permutations(range(A.n)))
    meet, tilde, btilde = relabel((A.meet, A.tilde, A.btilde), perm)
    Y = FiniteEqAlgebra(A.names, perm[A.top], meet, tilde, btilde)
    assert canonical_form(Y) == canonical_form(A)


def test_fixtures_found(A, B, C):
    four = enumerate_models(SearchSpec(4))
    for X in (A, B, C):
        assert canonical_form(X) in {canonical_form(M) for M in four}


def test_require_and_forbid(B):
    hits = enumerate_models(SearchSpec(4, require=["invariant", "commutative", "symmetric"]))
    assert len(hits) == 2
    assert any(is_isomorphic(M, B) for M in hits)
    for M in enumerate_models(SearchSpec(4, require=["equality"], forbid=["linear"])):
        f = classify(M, with_simple=False)
        assert f.equality and not f.linear


def test_property_filters_partition_catalog():
    for name in PROPERTIES:
        yes = enumerate_models(SearchSpec(3, require=[name]))
        no = enumerate_models(SearchSpec(3, forbid=[name]))
        assert len(yes) + len(no) == COUNTS[3]


def test_limit():
    assert len(enumerate_models(SearchSpec(4, limit=5))) == 5


def test_size_bound():
    with pytest.raises(SizeBoundExceeded):
        SearchSpec(9).check()
    with pytest.raises(SizeBoundExceeded):
        SearchSpec(0).check()


def test_type_claim_minimal_witness():
    assert find_counterexample(SearchSpec(2), "IS_I ≠ IS_II") is None
    w = find_counterexample(SearchSpec(4), "IS_I ≠ IS_II")
    assert w.n == 3 and classify(w, with_simple=False).linear
    assert enumerate_states(w, "I") != enumerate_states(w, "II")


def test_type_claim_four_element_witnesses(C):
    w = find_counterexample(SearchSpec(4), "IS_I ≠ IS_II", exact=True)
    assert w.n == 4
    witnesses = [M for M in enumerate_models(SearchSpec(4)) if CLAIMS["IS_I ≠ IS_II"](M)]
    assert len(witnesses) == 62
    assert all(classify(M, with_simple=False).linear for M in witnesses)
    assert any(is_isomorphic(M, C) for M in witnesses)


def test_phi_never_equality():
    assert find_counterexample(SearchSpec(4), "phi-equality") is None


def test_not_invariant_witness(A):
    w = find_counterexample(SearchSpec(4), "not invariant")
    assert w is not None and not classify(w, with_simple=False).invariant


@pytest.mark.parametrize("text", ["IS_I≠IS_II", "is_i != is_ii", "  IS_I  !=  IS_II "])
def test_claim_names_normalised(text):
    assert resolve_claim(text) == "IS_I ≠ IS_II"


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        resolve_claim("nonsense")
