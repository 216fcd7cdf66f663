from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pseudoeq.linalg import (
    dot,
    eliminate,
    feasible_box,
    normalize_equation,
    prune,
    satisfies,
    solve_linear,
    vertices,
)

small = st.integers(-3, 3)


def test_unique_solution():
    sol = solve_linear([((1, 1), 3), ((1, -1), 1)], 2)
    assert sol.consistent and sol.dimension == 0
    assert sol.particular == (2, 1)


def test_inconsistent():
    sol = solve_linear([((1, 1), 1), ((2, 2), 3)], 2)
    assert not sol.consistent
    assert sol.dimension == -1


def test_free_variables_are_lowest_index():
    # x0 + x1 + x2 = 1 leaves x0, x1 free
    sol = solve_linear([((1, 1, 1), 1)], 3)
    assert sol.free == [0, 1]
    assert sol.basis == [(1, 0, -1), (0, 1, -1)]
    assert sol.particular == (0, 0, 1)


def test_normalize():
    assert normalize_equation((0, 2, 4), 6) == ((0, 1, 2), 3)
    assert normalize_equation((0, 0), 5) is None


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=6),
    st.lists(small, min_size=n, max_size=n),
)))
def test_known_solution_is_recovered(case):
    n, rows, x0 = case
    eqs = [(r, dot(r, x0)) for r in rows]
    sol = solve_linear(eqs, n)
    assert sol.consistent
    assert satisfies(eqs, sol.particular)
    for j, b in enumerate(sol.basis):
        assert satisfies(eqs, b, homogeneous=True)
        assert [b[f] for f in sol.free] == [int(k == j) for k in range(len(sol.free))]
    params = [Fraction(x0[f]) for f in sol.free]
    assert sol.point(params) == tuple(Fraction(v) for v in x0)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(small, min_size=3, max_size=3))
def test_perturbed_constant_detects_inconsistency(rows, x0):
    assume(any(any(r) for r in rows))
    eqs = [(r, dot(r, x0)) for r in rows]
    r0 = next(r for r in rows if any(r))
    eqs.append((r0, dot(r0, x0) + 1))
    assert not solve_linear(eqs, 3).consistent


def test_fourier_motzkin_square():
    # 0 ≤ t0 ≤ 1, 0 ≤ t1 ≤ 1, t0 + t1 ≤ 3/2
    ineqs = [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0), ((1, 1), Fraction(3, 2))]
    assert feasible_box(ineqs, 2) == [(0, 1), (0, 1)]
    assert vertices(ineqs, 2) == sorted([(0, 0), (1, 0), (0, 1), (1, Fraction(1, 2)), (Fraction(1, 2), 1)])
    projected = eliminate(prune(ineqs), 1)
    assert all(c[1] == 0 for c, _ in projected)


def test_empty_polytope():
    assert feasible_box([((1,), 0), ((-1,), -1)], 1) is None
    assert vertices([((1,), 0), ((-1,), -1)], 1) == []


def test_zero_dimensional():
    assert feasible_box([], 0) == []
    assert vertices([], 0) == [()]


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.tuples(small, small), st.integers(-4, 4)), max_size=5))
def test_box_is_spanned_by_vertices(extra):
    # extra constraints on top of the unit square keep the polytope bounded
    ineqs = [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)] + list(extra)
    box = feasible_box(ineqs, 2)
    verts = vertices(ineqs, 2)
    if box is None:
        assert verts == []
        return
    assert verts
    for v in verts:
        assert all(dot(c, v) <= k for c, k in ineqs)
    for j in range(2):
        assert box[j] == (min(v[j] for v in verts), max(v[j] for v in verts))
