import pytest

import oracles
from catalog import models
from pseudoeq.algebra import FiniteEqAlgebra, classify, verify_axioms
from pseudoeq.bck import psi
from pseudoeq.deduction import ds_status
from pseudoeq.errors import BadLength, UnknownToken
from pseudoeq.states import (
    check_morphism,
    check_state,
    enumerate_bck_morphisms,
    enumerate_bck_states,
    enumerate_morphisms,
    enumerate_morphisms_raw,
    enumerate_states,
    enumerate_states_raw,
    identity,
    is_bck_morphism,
    is_bck_state,
    is_morphism,
    is_state,
    is_strong,
    kernel,
    kernel_mask,
    state_consequences,
    state_correspondence,
    state_violations,
)

B_OPERATORS = [
    ("0", "0", "1", "1"),
    ("0", "a", "b", "1"),
    ("0", "1", "0", "1"),
    ("a", "a", "1", "1"),
    ("b", "1", "b", "1"),
    ("1", "1", "1", "1"),
]


def tokens(A, ops):
    return [tuple(A.names[v] for v in op) for op in ops]


def brute_states(A, kind):
    return sorted(s for s in oracles.all_maps(A.n)
                  if oracles.is_internal_state(A.meet, A.tilde, A.btilde, s, kind))


def brute_morphisms(A):
    return sorted(s for s in oracles.all_maps(A.n)
                  if oracles.is_state_morphism(A.meet, A.tilde, A.btilde, s))


def chain3():
    """0 < e < 1, symmetric and linear, with 1~0 = e."""
    tilde = ((2, 0, 0), (1, 2, 1), (1, 0, 2))
    btilde = tuple(tuple(tilde[y][x] for y in range(3)) for x in range(3))
    meet = ((0, 0, 0), (0, 1, 1), (0, 1, 2))
    return FiniteEqAlgebra(("0", "e", "1"), 2, meet, tilde, btilde)


def test_fixture_b_states(B):
    for kind in ("I", "II"):
        assert tokens(B, enumerate_states(B, kind)) == B_OPERATORS
    assert tokens(B, enumerate_morphisms(B)) == B_OPERATORS


def test_fixture_b_bck_side(B):
    P = psi(B)
    for kind in ("I", "II"):
        assert tokens(B, enumerate_bck_states(P, kind)) == B_OPERATORS
    assert tokens(B, enumerate_bck_morphisms(P)) == B_OPERATORS


def test_enumeration_independent_of_jobs(B):
    for kind in ("I", "II"):
        assert enumerate_states(B, kind, jobs=2) == enumerate_states(B, kind)
    assert enumerate_morphisms(B, jobs=2) == enumerate_morphisms(B)


def test_states_match_oracle():
    for A in models():
        for kind in ("I", "II"):
            got = enumerate_states(A, kind)
            assert got == brute_states(A, kind)
            assert got == enumerate_states_raw(A, kind)


def test_morphisms_match_oracle():
    for A in models():
        got = enumerate_morphisms(A)
        assert got == brute_morphisms(A)
        assert got == enumerate_morphisms_raw(A)


def test_bck_states_match_oracle():
    for A in models():
        P = psi(A)
        for kind in ("I", "II"):
            want = sorted(u for u in oracles.all_maps(A.n)
                          if oracles.is_bck_state(P.meet, P.arrow, P.squig, u, kind))
            assert enumerate_bck_states(P, kind) == want


def test_morphisms_are_type_one_states():
    for A in models():
        for s in enumerate_morphisms(A):
            assert is_state(A, s, "I")


def test_commutative_kinds_coincide():
    for A in models():
        if classify(A, with_simple=False).commutative:
            assert enumerate_states(A, "I") == enumerate_states(A, "II")


def test_state_consequences():
    for A in models():
        ops = set(enumerate_states(A, "I")) | set(enumerate_states(A, "II"))
        for s in ops:
            rep = state_consequences(A, s)
            assert rep.ok, rep.failures()
            assert s[A.top] == A.top
            assert all(s[s[x]] == s[x] for x in range(A.n))


def test_kernels():
    for A in models():
        for kind in ("I", "II"):
            for s in enumerate_states(A, kind):
                k = kernel(A, s)
                assert k.report.ok
                assert k.status.is_ds
            for s in enumerate_states(A, kind, strong=True):
                assert is_strong(A, s)
                assert ds_status(A, kernel_mask(A, s)).is_normal


def test_states_pass_bck_state_check():
    for A in models():
        P = psi(A)
        for kind in ("I", "II"):
            for s in enumerate_states(A, kind):
                assert is_bck_state(P, s, kind)
        for s in enumerate_morphisms(A):
            assert is_bck_morphism(P, s)


def test_correspondence_reports():
    for A in models():
        rep = state_correspondence(A)
        assert rep.ok, [r.name for r in rep.relations if r.asserted and not r.holds]


def test_linear_symmetric_converse_fails():
    A = chain3()
    assert verify_axioms(A).ok
    f = classify(A, with_simple=False)
    assert f.linear and f.symmetric
    mu = (0, 2, 2)
    P = psi(A)
    assert is_bck_morphism(P, mu)
    assert is_bck_state(P, mu, "I") and is_bck_state(P, mu, "II")
    assert not is_morphism(A, mu)
    assert not is_state(A, mu, "I")
    fails = check_morphism(A, mu).failures()
    assert fails and fails[0].witness == (1, 0)


def test_identity_on_c(C):
    ident = identity(C.n)
    assert check_state(C, ident, "I").ok
    rep = check_state(C, ident, "II")
    assert not rep.ok
    first = rep.failures()[0]
    assert first.witness == (C.index("0"), C.index("b"))
    bad = {(c.witness, c.lhs, c.rhs) for c in state_violations(C, ident, "II")}
    assert ((C.index("a"), C.index("b")), C.top, C.index("b")) in bad


def test_operator_shape_checked(B):
    with pytest.raises(BadLength):
        check_state(B, (0, 1, 2))
    with pytest.raises(UnknownToken):
        check_state(B, (0, 1, 2, 9))
