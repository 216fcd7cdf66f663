from fractions import Fraction as F

import pytest

import oracles
from catalog import pointed
from pseudoeq.bosbach import (
    bosbach_bck_compare,
    bosbach_verdict,
    compose_with_morphism,
    render_space,
    solve_bosbach,
    space_consequences,
    space_to_json,
)
from pseudoeq.errors import BadLength, NotAMorphism, OutOfBox, PointIsTop, PointNotFixed
from pseudoeq.linalg import satisfies
from pseudoeq.pointed import PointedEqAlgebra
from pseudoeq.states import enumerate_morphisms


def at(X, tok):
    return PointedEqAlgebra(X, X.index(tok))


def test_b_at_zero(B):
    sp = solve_bosbach(at(B, "0"))
    assert sp.dimension == 1
    assert sp.params == ["a"]
    assert sp.param_box == [(0, 1)]
    assert sp.vertices() == [(0, 0, 1, 1), (0, 1, 0, 1)]
    for u in (F(0), F(1, 3), F(1, 2), F(1)):
        s = sp.affine.point([u])
        assert s == (0, u, 1 - u, 1)
    assert render_space(sp) == [
        "dimension 1",
        "parameter u = s(a)",
        "s(0) = 0",
        "s(b) = 1 - s(a)",
        "s(1) = 1",
        "box u ∈ [0,1]",
    ]


@pytest.mark.parametrize("tok,vec", [("a", (0, 0, 1, 1)), ("b", (0, 1, 0, 1))])
def test_b_unique_points(B, tok, vec):
    sp = solve_bosbach(at(B, tok))
    assert sp.unique() == vec


def test_b_bck_spaces_equal(B):
    for tok in ("0", "a", "b"):
        cmp = bosbach_bck_compare(at(B, tok))
        assert cmp.invariant and cmp.contained and cmp.equal


def test_c_spaces(C):
    # [DERIVED] chain 0 < a < b < 1
    assert solve_bosbach(at(C, "0")).unique() == (0, F(1, 2), 1, 1)
    sp = solve_bosbach(at(C, "a"))
    assert sp.consistent and not sp.feasible
    assert not solve_bosbach(at(C, "b")).consistent


def test_point_is_top_rejected(B):
    with pytest.raises(PointIsTop):
        solve_bosbach(at(B, "1"))


def test_grid_oracle_agrees():
    for A, a in pointed():
        P = PointedEqAlgebra(A, a)
        sp = solve_bosbach(P)
        for d in (1, 2, 3):
            found = set(oracles.bosbach_on_grid(A.meet, A.tilde, A.btilde, A.top, a, d))
            for s in found:
                assert sp.feasible
                assert satisfies(sp.system.equations, s)
                assert bosbach_verdict(P, s).ok
            if sp.feasible:
                for v in sp.vertices():
                    if all((x * d).denominator == 1 for x in v):
                        assert v in found


def test_space_consequences_everywhere():
    for A, a in pointed():
        sp = solve_bosbach(PointedEqAlgebra(A, a))
        assert sp.cross_check
        assert space_consequences(PointedEqAlgebra(A, a), sp).ok


def test_bck_comparison_everywhere():
    for A, a in pointed():
        cmp = bosbach_bck_compare(PointedEqAlgebra(A, a))
        assert cmp.contained
        if cmp.invariant:
            assert cmp.equal


def test_composition_with_morphisms():
    for A, a in pointed():
        P = PointedEqAlgebra(A, a)
        verts = solve_bosbach(P).vertices()
        for s in verts:
            for sigma in enumerate_morphisms(A):
                if sigma[a] == a:
                    assert bosbach_verdict(P, compose_with_morphism(P, s, sigma)).ok


def test_composition_preconditions(B):
    P = at(B, "0")
    s = (0, F(1, 4), F(3, 4), 1)
    with pytest.raises(NotAMorphism):
        compose_with_morphism(P, s, B.indices(["0", "b", "a", "1"]))
    with pytest.raises(PointNotFixed):
        compose_with_morphism(P, s, B.indices(["1", "1", "1", "1"]))


def test_verdict_witness(B):
    P = at(B, "0")
    v = bosbach_verdict(P, (0, F(1, 2), F(1, 4), 1))
    assert not v.ok and v.witness[0] in ("BS1", "BS2")
    assert bosbach_verdict(P, (0, F(1, 2), F(1, 2), 0)).witness[0] == "BS3 s(1) = 1"
    with pytest.raises(BadLength):
        bosbach_verdict(P, (0, 1))
    with pytest.raises(OutOfBox):
        bosbach_verdict(P, (0, 2, 0, 1))


def test_json_shape(B):
    js = space_to_json(solve_bosbach(at(B, "0")))
    assert js["dimension"] == 1
