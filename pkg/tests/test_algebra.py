import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from catalog import models, tables
from pseudoeq import fixtures
from pseudoeq.algebra import (
    FiniteEqAlgebra,
    build_algebra,
    classify,
    derived_law_suite,
    is_isomorphic,
    is_pseudo_eq,
    isomorphism,
    product,
    relabel,
    trivial_algebra,
    verify_axioms,
)
from pseudoeq.errors import (
    BadTableShape,
    DuplicateElement,
    NotASemilattice,
    SizeBoundExceeded,
    TopNotGreatest,
    UnknownToken,
)


def test_fixtures_satisfy_axioms(A, B, C):
    for X in (A, B, C, trivial_algebra()):
        assert verify_axioms(X).ok
        assert oracles.axioms_hold(*tables(X))


def test_fixture_b_flags(B):
    f = classify(B)
    assert f.bounded and f.bottom == B.index("0")
    assert f.invariant and f.commutative and f.symmetric
    assert not f.linear and not f.equality


def test_fixture_a_flags(A):
    f = classify(A)
    assert f.equality
    assert not f.invariant


def test_fixture_c_is_a_chain(C):
    f = classify(C)
    assert f.linear and f.equality


def test_implications_of_b(B):
    # x→y = (x∧y)~x, read straight off the tables
    a, b, one, zero = (B.index(t) for t in "ab10")
    assert B.arrow[a][b] == b
    assert B.arrow[b][a] == a
    assert B.arrow[one][zero] == zero
    assert B.arrow[zero][a] == one
    assert B.squig == B.arrow


def test_axioms_agree_with_oracle_on_catalog():
    for X in models():
        assert verify_axioms(X).ok
        assert oracles.axioms_hold(*tables(X))


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_axioms_agree_with_oracle_on_mutations(data):
    X = data.draw(st.sampled_from([m for m in models() if m.n >= 2]))
    which = data.draw(st.sampled_from(["tilde", "btilde"]))
    x = data.draw(st.integers(0, X.n - 1))
    y = data.draw(st.integers(0, X.n - 1))
    v = data.draw(st.integers(0, X.n - 1))
    T = [list(r) for r in getattr(X, which)]
    T[x][y] = v
    T = tuple(tuple(r) for r in T)
    Y = FiniteEqAlgebra(X.names, X.top, X.meet,
                        T if which == "tilde" else X.tilde,
                        T if which == "btilde" else X.btilde)
    assert is_pseudo_eq(Y) == oracles.axioms_hold(*tables(Y))


def test_derived_laws_hold_on_catalog():
    bad = [X for X in models() if not derived_law_suite(X).ok]
    assert bad == []


def test_axiom_failure_has_witness(B):
    t = [list(r) for r in B.tilde]
    t[0][0] = B.index("a")
    X = FiniteEqAlgebra(B.names, B.top, B.meet, tuple(map(tuple, t)), B.btilde)
    rep = verify_axioms(X)
    assert not rep.ok
    assert any(c.witness is not None for c in rep.failures())


@pytest.mark.parametrize("names,meet,exc", [
    (["0", "0"], [["0", "0"], ["0", "0"]], DuplicateElement),
    (["0", "1"], [["0", "0"]], BadTableShape),
    (["0", "1"], [["0", "x"], ["0", "1"]], UnknownToken),
    (["0", "1"], [["0", "1"], ["0", "1"]], NotASemilattice),
])
def test_build_rejects_bad_input(names, meet, exc):
    ident = [[n for n in names] for _ in names]
    with pytest.raises(exc):
        build_algebra(names, meet, ident, ident, names[-1])


def test_build_rejects_wrong_top():
    meet = fixtures.DIAMOND_MEET
    with pytest.raises(TopNotGreatest):
        build_algebra(fixtures.DIAMOND, meet, fixtures.B_TILDE, fixtures.B_BTILDE, "a")


def test_size_bound():
    names = [f"e{i}" for i in range(9)]
    with pytest.raises(SizeBoundExceeded):
        build_algebra(names, [names] * 9, [names] * 9, [names] * 9, "e8", max_size=8)


def test_product_of_models_is_a_model():
    small = [m for m in models() if 2 <= m.n <= 2]
    for X, Y in itertools.product(small, repeat=2):
        P = product(X, Y)
        assert P.n == 4
        assert verify_axioms(P).ok


def test_product_size_bound(B):
    with pytest.raises(SizeBoundExceeded):
        product(B, B, max_size=8)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_relabel_is_isomorphic(data):
    X = data.draw(st.sampled_from(list(models())))
    perm = data.draw(st.permutations(range(X.n)))
    meet, tilde, btilde = relabel((X.meet, X.tilde, X.btilde), perm)
    Y = FiniteEqAlgebra(X.names, perm[X.top], meet, tilde, btilde)
    f = isomorphism(X, Y)
    assert f is not None
    for T, U in ((X.meet, Y.meet), (X.tilde, Y.tilde), (X.btilde, Y.btilde)):
        for x, y in itertools.product(range(X.n), repeat=2):
            assert f[T[x][y]] == U[f[x]][f[y]]
    assert oracles.isomorphic(tables(X), tables(Y))


def test_catalog_members_pairwise_non_isomorphic():
    for n in range(1, 5):
        same = [m for m in models() if m.n == n]
        for X, Y in itertools.combinations(same, 2):
            assert not is_isomorphic(X, Y)


def test_a_and_b_not_isomorphic(A, B):
    assert not is_isomorphic(A, B)
