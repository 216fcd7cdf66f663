"""Bosbach states on pointed algebras, solved exactly.

A Bosbach state at point a (a ≠ 1) is s: A → [0, 1] with

    s(x) + s(x∧y ~ x) = s(y) + s(x∧y ~ y)
    s(x) + s(x ∽ x∧y) = s(y) + s(y ∽ x∧y)
    s(1) = 1, s(a) = 0.

These are linear in the n unknowns s(x), so the set of states is an affine
space cut by the unit box.  Parameters are the free unknowns of the
elimination; the box on them comes from Fourier–Motzkin.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bck import psi
from .errors import BadLength, NotAMorphism, OutOfBox, PointIsTop, PointNotFixed
from .algebra import is_invariant
from .laws import Check, Report
from .linalg import (
    AffineSolution,
    affine_contained,
    feasible_box,
    frac,
    normalize_equation,
    solve_linear,
    vertices,
)
from .pointed import PointedEqAlgebra, negations
from .states import is_morphism


@dataclass
class LinearSystem:
    names: tuple
    equations: list  # (coeff tuple, const) pairs, canonical and deduplicated

    @property
    def n(self) -> int:
        return len(self.names)


def _eq(n, terms, const) -> Optional[tuple]:
    co = [Fraction(0)] * n
    for idx, c in terms:
        co[idx] += c
    return normalize_equation(co, const)


def _build(names, rows) -> LinearSystem:
    seen = set()
    out = []
    for row in rows:
        if row is None or row in seen:
            continue
        seen.add(row)
        out.append(row)
    return LinearSystem(tuple(names), sorted(out))


def _require_point(P: PointedEqAlgebra):
    if P.point == P.base.top:
        raise PointIsTop("the point must differ from the top element")


def _anchor_rows(n, top, a):
    return [_eq(n, [(top, 1)], 1), _eq(n, [(a, 1)], 0)]


def bosbach_system(P: PointedEqAlgebra) -> LinearSystem:
    _require_point(P)
    A, a, n = P.base, P.point, P.base.n
    m, t, b = A.meet, A.tilde, A.btilde
    rows = _anchor_rows(n, A.top, a)
    for x, y in itertools.combinations(range(n), 2):
        w = m[x][y]
        rows.append(_eq(n, [(x, 1), (t[w][x], 1), (y, -1), (t[w][y], -1)], 0))
        rows.append(_eq(n, [(x, 1), (b[x][w], 1), (y, -1), (b[y][w], -1)], 0))
    return _build(A.names, rows)


def comparable_system(P: PointedEqAlgebra) -> LinearSystem:
    """Second formulation: s(a) = 0 and, for y ≤ x,
    s(y ~ x) = s(x ∽ y) = 1 - s(x) + s(y)."""
    _require_point(P)
    A, a, n = P.base, P.point, P.base.n
    rows = [_eq(n, [(a, 1)], 0)]
    for x, y in itertools.product(range(n), repeat=2):
        if not A.leq[y][x]:
            continue
        rows.append(_eq(n, [(A.tilde[y][x], 1), (x, 1), (y, -1)], 1))
        rows.append(_eq(n, [(A.btilde[x][y], 1), (x, 1), (y, -1)], 1))
    return _build(A.names, rows)


def bck_bosbach_system(P: PointedEqAlgebra) -> LinearSystem:
    """s(x) + s(x→y) = s(y) + s(y→x), the same with ⇝, on Ψ(A)."""
    _require_point(P)
    B, a, n = psi(P.base), P.point, P.base.n
    ar, sq = B.arrow, B.squig
    rows = _anchor_rows(n, B.top, a)
    for x, y in itertools.combinations(range(n), 2):
        rows.append(_eq(n, [(x, 1), (ar[x][y], 1), (y, -1), (ar[y][x], -1)], 0))
        rows.append(_eq(n, [(x, 1), (sq[x][y], 1), (y, -1), (sq[y][x], -1)], 0))
    return _build(B.names, rows)


@dataclass
class BosbachSolutionSpace:
    names: tuple
    system: LinearSystem
    affine: AffineSolution
    param_box: Optional[list]  # [(lo, hi)] per parameter, None when empty
    vertex_params: list = field(default_factory=list)
    cross_check: Optional[bool] = None

    @property
    def consistent(self) -> bool:
        return self.affine.consistent

    @property
    def feasible(self) -> bool:
        return self.consistent and self.param_box is not None

    @property
    def dimension(self) -> int:
        return self.affine.dimension

    @property
    def particular(self) -> tuple:
        return self.affine.particular

    @property
    def basis(self) -> list:
        return self.affine.basis

    @property
    def params(self) -> list:
        """Parameter names: the unknown s(x) carried by each basis vector."""
        return [self.names[f] for f in self.affine.free]

    def vertices(self) -> list:
        """Solution vectors at the vertices of the feasible polytope."""
        return [self.affine.point(t) for t in self.vertex_params]

    def unique(self) -> Optional[tuple]:
        """The only state, when the feasible set is a single point."""
        if not self.feasible:
            return None
        verts = self.vertices()
        return verts[0] if len(verts) == 1 else None


def _box_inequalities(sol: AffineSolution) -> list:
    """0 ≤ particular_i + Σ_j t_j basis_j[i] ≤ 1 as constraints on t."""
    out = []
    for i in range(len(sol.particular)):
        row = tuple(b[i] for b in sol.basis)
        p = sol.particular[i]
        out.append((row, 1 - p))
        out.append((tuple(-c for c in row), p))
    return out


def solve_system(system: LinearSystem) -> BosbachSolutionSpace:
    sol = solve_linear(system.equations, system.n)
    if not sol.consistent:
        return BosbachSolutionSpace(system.names, system, sol, None)
    ineqs = _box_inequalities(sol)
    k = sol.dimension
    box = feasible_box(ineqs, k)
    verts = vertices(ineqs, k) if box is not None else []
    return BosbachSolutionSpace(system.names, system, sol, box, verts)


def spaces_equal(s1: BosbachSolutionSpace, s2: BosbachSolutionSpace) -> bool:
    return affine_contained(s1.affine, s2.system.equations) and affine_contained(
        s2.affine, s1.system.equations
    )


def space_contained(s1: BosbachSolutionSpace, s2: BosbachSolutionSpace) -> bool:
    return affine_contained(s1.affine, s2.system.equations)


def solve_bosbach(P: PointedEqAlgebra) -> BosbachSolutionSpace:
    space = solve_system(bosbach_system(P))
    other = solve_system(comparable_system(P))
    space.cross_check = spaces_equal(space, other)
    return space


def space_consequences(P: PointedEqAlgebra, space: BosbachSolutionSpace) -> Report:
    """Checks every solved space must pass: the two formulations agree and
    each vertex is a state satisfying the derived identities."""
    checks = [Check("cross-check with the comparable-pair formulation", bool(space.cross_check))]
    bad = None
    for v in space.vertices():
        verdict = bosbach_verdict(P, v)
        if not verdict.ok or not verdict.consequences.ok:
            bad = v
            break
    checks.append(Check("every vertex is a Bosbach state with its consequences", bad is None,
                        note="" if bad is None else "vertex " + render_vector(bad)))
    return Report("Bosbach space consequences", checks)


# -- membership ---------------------------------------------------------------

def _check_vector(P, s) -> tuple:
    s = tuple(frac(v) for v in s)
    if len(s) != P.base.n:
        raise BadLength(f"expected {P.base.n} values, got {len(s)}")
    for v in s:
        if v < 0 or v > 1:
            raise OutOfBox(f"value {v} outside [0, 1]")
    return s


@dataclass
class BosbachVerdict:
    ok: bool
    witness: Optional[tuple] = None  # (axiom, x, y)
    consequences: Optional[Report] = None


def bosbach_verdict(P: PointedEqAlgebra, s) -> BosbachVerdict:
    A, a = P.base, P.point
    s = _check_vector(P, s)
    if s[A.top] != 1:
        return BosbachVerdict(False, ("BS3 s(1) = 1", A.top, A.top))
    if s[a] != 0:
        return BosbachVerdict(False, ("BS3 s(a) = 0", a, a))
    m, t, b = A.meet, A.tilde, A.btilde
    for x, y in itertools.product(range(A.n), repeat=2):
        w = m[x][y]
        if s[x] + s[t[w][x]] != s[y] + s[t[w][y]]:
            return BosbachVerdict(False, ("BS1", x, y))
        if s[x] + s[b[x][w]] != s[y] + s[b[y][w]]:
            return BosbachVerdict(False, ("BS2", x, y))
    return BosbachVerdict(True, None, bosbach_consequences(P, s))


def is_bosbach(P: PointedEqAlgebra, s) -> BosbachVerdict:
    return bosbach_verdict(P, s)


def bosbach_consequences(P: PointedEqAlgebra, s) -> Report:
    A, a, le = P.base, P.point, P.base.leq
    t, b = A.tilde, A.btilde
    N = negations(P)
    pairs = list(itertools.product(range(A.n), repeat=2))

    def first(pred):
        return next(((x, y) for x, y in pairs if not pred(x, y)), None)

    def mk(name, w):
        return Check(name, w is None, w)

    singles = [(x, x) for x in range(A.n)]
    return Report("Bosbach consequences", [
        mk("x ≤ y ⇒ s(x) ≤ s(y)", first(lambda x, y: not le[x][y] or s[x] <= s[y])),
        mk("x ≤ y ⇒ s(x~y) = 1 + s(x) - s(y)",
           first(lambda x, y: not le[x][y] or s[t[x][y]] == 1 + s[x] - s[y])),
        mk("x ≤ y ⇒ s(y∽x) = 1 + s(x) - s(y)",
           first(lambda x, y: not le[x][y] or s[b[y][x]] == 1 + s[x] - s[y])),
        mk("x ≤ a ⇒ s(x) = 0", next((w for w in singles if le[w[0]][a] and s[w[0]] != 0), None)),
        mk("x ≤ a ⇒ s(x~a) = s(a∽x) = 1",
           next((w for w in singles if le[w[0]][a] and not (s[t[w[0]][a]] == 1 == s[b[a][w[0]]])), None)),
        mk("x ≥ a ⇒ s(x^{~a}) = s(x^{∽a}) = 1 - s(x)",
           next((w for w in singles if le[a][w[0]]
                 and not (s[N.tilde_a[w[0]]] == 1 - s[w[0]] == s[N.btilde_a[w[0]]])), None)),
        mk("x ≥ a ⇒ s(x^{~a∽a}) = s(x^{∽a~a}) = s(x)",
           next((w for w in singles if le[a][w[0]]
                 and not (s[N.btilde_a[N.tilde_a[w[0]]]] == s[w[0]] == s[N.tilde_a[N.btilde_a[w[0]]]])),
                None)),
    ])


def compose_with_morphism(P: PointedEqAlgebra, s, sigma) -> tuple:
    s = _check_vector(P, s)
    sigma = tuple(sigma)
    if not is_morphism(P.base, sigma):
        raise NotAMorphism("operator is not a state-morphism")
    if sigma[P.point] != P.point:
        raise PointNotFixed(f"σ({P.base.names[P.point]}) = {P.base.names[sigma[P.point]]}")
    return tuple(s[sigma[x]] for x in range(P.base.n))


@dataclass
class BckComparison:
    eqa: BosbachSolutionSpace
    bck: BosbachSolutionSpace
    contained: bool
    equal: bool
    invariant: bool

    @property
    def ok(self) -> bool:
        return self.contained and (self.equal or not self.invariant)


def bosbach_bck_compare(P: PointedEqAlgebra) -> BckComparison:
    eqa = solve_bosbach(P)
    bck = solve_system(bck_bosbach_system(P))
    return BckComparison(eqa, bck, space_contained(eqa, bck), spaces_equal(eqa, bck),
                         is_invariant(P.base))


# -- rendering -------------------------------------------------------------------

def fmt_q(v) -> str:
    v = frac(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def render_vector(v) -> str:
    return "(" + ", ".join(fmt_q(x) for x in v) + ")"


def _linear(const, terms) -> str:
    parts = []
    if const != 0 or not terms:
        parts.append(fmt_q(const))
    for c, name in terms:
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else fmt_q(abs(c)) + "·"
        if not parts:
            parts.append(("-" if c < 0 else "") + mag + name)
        else:
            parts.append(("- " if c < 0 else "+ ") + mag + name)
    return " ".join(parts) if parts else "0"


PARAM_LETTERS = "uvwpqr"


def param_names(k: int) -> list:
    if k <= len(PARAM_LETTERS):
        return list(PARAM_LETTERS[:k])
    return [f"u{j + 1}" for j in range(k)]


def render_space(space: BosbachSolutionSpace) -> list:
    """Human-readable lines: dimension, each parameter, every other s(x)
    in terms of the free unknowns, and the parameter box."""
    if not space.consistent:
        return ["no solution (equations inconsistent)"]
    if not space.feasible:
        return [f"dimension {space.dimension}", "no solution inside [0,1]"]
    names = space.names
    free = [f"s({p})" for p in space.params]
    letters = param_names(space.dimension)
    lines = [f"dimension {space.dimension}"]
    for letter, f in zip(letters, free):
        lines.append(f"parameter {letter} = {f}")
    for i, nm in enumerate(names):
        if i in space.affine.free:
            continue
        terms = [(b[i], free[j]) for j, b in enumerate(space.basis)]
        lines.append(f"s({nm}) = " + _linear(space.particular[i], terms))
    for letter, (lo, hi) in zip(letters, space.param_box):
        lines.append(f"box {letter} ∈ [{fmt_q(lo)},{fmt_q(hi)}]")
    if space.unique() is not None:
        lines.append("unique " + render_vector(space.unique()))
    return lines


def space_to_json(space: BosbachSolutionSpace) -> dict:
    out = {
        "consistent": space.consistent,
        "feasible": space.feasible,
        "dimension": space.dimension,
        "elements": list(space.names),
    }
    if space.consistent:
        out["particular"] = [fmt_q(v) for v in space.particular]
        out["basis"] = [[fmt_q(v) for v in b] for b in space.basis]
        out["parameters"] = [
            {"name": letter, "variable": p} for letter, p in zip(param_names(space.dimension), space.params)
        ]
    if space.feasible:
        out["param_box"] = [[fmt_q(lo), fmt_q(hi)] for lo, hi in space.param_box]
        out["vertices"] = [[fmt_q(v) for v in vec] for vec in space.vertices()]
        u = space.unique()
        out["unique"] = None if u is None else [fmt_q(v) for v in u]
    if space.cross_check is not None:
        out["cross_check"] = space.cross_check
    return out
