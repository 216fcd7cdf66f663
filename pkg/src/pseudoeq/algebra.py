"""Finite pseudo equality algebras as explicit operation tables.

Elements are indices ``0..n-1`` into ``names``; every table is a tuple of
rows (row = left operand).  ``~`` is written ``tilde`` and the second
equality operation ``∽`` is written ``btilde``.  Throughout, ``∧`` binds
tighter than the equality operations, so ``x∧y ~ x`` means ``(x∧y) ~ x``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from . import laws as L
from .errors import (
    BadTableShape,
    DuplicateElement,
    NotASemilattice,
    SizeBoundExceeded,
    TopNotGreatest,
    UnknownToken,
)
from .laws import Check, Report

MAX_SIZE = 12

Table = tuple  # tuple[tuple[int, ...], ...]


def freeze(table) -> Table:
    return tuple(tuple(int(v) for v in row) for row in table)


def index_table(table, names: Sequence[str], label: str = "table") -> Table:
    """Convert a token (or index) matrix to an index table, validating shape."""
    n = len(names)
    pos = {t: i for i, t in enumerate(names)}
    if len(table) != n:
        raise BadTableShape(f"{label}: expected {n} rows, got {len(table)}")
    rows = []
    for r, row in enumerate(table):
        if len(row) != n:
            raise BadTableShape(f"{label}: row {r} has {len(row)} entries, expected {n}")
        out = []
        for v in row:
            if isinstance(v, str):
                if v not in pos:
                    raise UnknownToken(v)
                out.append(pos[v])
            else:
                if not 0 <= int(v) < n:
                    raise UnknownToken(v)
                out.append(int(v))
        rows.append(tuple(out))
    return tuple(rows)


def check_names(names: Sequence[str], max_size: int = MAX_SIZE) -> tuple:
    names = tuple(names)
    if not names:
        raise BadTableShape("carrier must be nonempty")
    if len(names) > max_size:
        raise SizeBoundExceeded(f"carrier of size {len(names)} exceeds bound {max_size}")
    seen = set()
    for t in names:
        if not isinstance(t, str) or not t or any(c.isspace() for c in t):
            raise BadTableShape(f"bad element token {t!r}")
        if t in seen:
            raise DuplicateElement(f"duplicate element {t!r}")
        seen.add(t)
    return names


def check_semilattice(meet: Table, top: int) -> None:
    """Raise unless ``meet`` is a commutative idempotent associative table with greatest ``top``."""
    n = len(meet)
    for x in range(n):
        if meet[x][x] != x:
            raise NotASemilattice(f"meet not idempotent at {x}", (x,))
    for x, y in itertools.product(range(n), repeat=2):
        if meet[x][y] != meet[y][x]:
            raise NotASemilattice(f"meet not commutative at ({x}, {y})", (x, y))
    for x, y, z in itertools.product(range(n), repeat=3):
        if meet[meet[x][y]][z] != meet[x][meet[y][z]]:
            raise NotASemilattice(f"meet not associative at ({x}, {y}, {z})", (x, y, z))
    for x in range(n):
        if meet[top][x] != x:
            raise TopNotGreatest(f"top is not above element {x}", (x,))


def order_matrix(meet: Table) -> tuple:
    n = len(meet)
    return tuple(tuple(meet[x][y] == x for y in range(n)) for x in range(n))


def bottom_of(meet: Table) -> Optional[int]:
    n = len(meet)
    for x in range(n):
        if all(meet[x][y] == x for y in range(n)):
            return x
    return None


@dataclass(frozen=True)
class FiniteEqAlgebra:
    names: tuple
    top: int
    meet: Table
    tilde: Table
    btilde: Table

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, token: str) -> int:
        try:
            return self.names.index(token)
        except ValueError:
            raise UnknownToken(token) from None

    def indices(self, tokens) -> list:
        return [self.index(t) for t in tokens]

    @cached_property
    def leq(self) -> tuple:
        return order_matrix(self.meet)

    @cached_property
    def arrow(self) -> Table:
        """x → y = (x∧y) ~ x"""
        m, t = self.meet, self.tilde
        return tuple(tuple(t[m[x][y]][x] for y in range(self.n)) for x in range(self.n))

    @cached_property
    def squig(self) -> Table:
        """x ⇝ y = x ∽ (x∧y)"""
        m, b = self.meet, self.btilde
        return tuple(tuple(b[x][m[x][y]] for y in range(self.n)) for x in range(self.n))

    @cached_property
    def bottom(self) -> Optional[int]:
        return bottom_of(self.meet)

    def tables(self) -> dict:
        return {"meet": self.meet, "tilde": self.tilde, "btilde": self.btilde}

    def renamed(self, names) -> "FiniteEqAlgebra":
        return FiniteEqAlgebra(tuple(names), self.top, self.meet, self.tilde, self.btilde)


def build_algebra(names, meet, tilde, btilde, top, max_size: int = MAX_SIZE) -> FiniteEqAlgebra:
    """Construct an algebra value; only the meet-semilattice part is validated.

    Tables may hold tokens or indices.  ``top`` may be a token or an index.
    Equality axioms are checked separately by :func:`verify_axioms`.
    """
    names = check_names(names, max_size)
    if isinstance(top, str):
        if top not in names:
            raise UnknownToken(top)
        top = names.index(top)
    elif not 0 <= top < len(names):
        raise UnknownToken(top)
    meet = index_table(meet, names, "meet")
    tilde = index_table(tilde, names, "tilde")
    btilde = index_table(btilde, names, "btilde")
    check_semilattice(meet, top)
    return FiniteEqAlgebra(names, top, meet, tilde, btilde)


def semilattice_check(meet: Table, top: int) -> Check:
    try:
        check_semilattice(meet, top)
    except (NotASemilattice, TopNotGreatest) as exc:
        return Check("A1 meet-semilattice with top", False, exc.witness, note=str(exc))
    return Check("A1 meet-semilattice with top", True)


def axiom_laws(A: FiniteEqAlgebra) -> list:
    m, t, b, one, le = A.meet, A.tilde, A.btilde, A.top, A.leq
    chain = lambda x, y, z: le[x][y] and le[y][z]
    return [
        L.eq("A2 x~x = 1", 1, lambda x: t[x][x], lambda x: one),
        L.eq("A2 x∽x = 1", 1, lambda x: b[x][x], lambda x: one),
        L.eq("A3 x~1 = x", 1, lambda x: t[x][one], lambda x: x),
        L.eq("A3 1∽x = x", 1, lambda x: b[one][x], lambda x: x),
        L.le("A4 x~z ≤ y~z", 3, lambda x, y, z: t[x][z], lambda x, y, z: t[y][z], chain),
        L.le("A4 x~z ≤ x~y", 3, lambda x, y, z: t[x][z], lambda x, y, z: t[x][y], chain),
        L.le("A4 z∽x ≤ z∽y", 3, lambda x, y, z: b[z][x], lambda x, y, z: b[z][y], chain),
        L.le("A4 z∽x ≤ y∽x", 3, lambda x, y, z: b[z][x], lambda x, y, z: b[y][x], chain),
        L.le("A5 x~y ≤ (x∧z)~(y∧z)", 3,
             lambda x, y, z: t[x][y], lambda x, y, z: t[m[x][z]][m[y][z]]),
        L.le("A5 x∽y ≤ (x∧z)∽(y∧z)", 3,
             lambda x, y, z: b[x][y], lambda x, y, z: b[m[x][z]][m[y][z]]),
        L.le("A6 x~y ≤ (z~x)∽(z~y)", 3,
             lambda x, y, z: t[x][y], lambda x, y, z: b[t[z][x]][t[z][y]]),
        L.le("A6 x∽y ≤ (x∽z)~(y∽z)", 3,
             lambda x, y, z: b[x][y], lambda x, y, z: t[b[x][z]][b[y][z]]),
        L.le("A7 x~y ≤ (x~z)~(y~z)", 3,
             lambda x, y, z: t[x][y], lambda x, y, z: t[t[x][z]][t[y][z]]),
        L.le("A7 x∽y ≤ (z∽x)∽(z∽y)", 3,
             lambda x, y, z: b[x][y], lambda x, y, z: b[b[z][x]][b[z][y]]),
    ]


def verify_axioms(A: FiniteEqAlgebra) -> Report:
    """Exhaustively check A1-A7, one entry per sub-(in)equality."""
    report = Report("pseudo equality algebra axioms", [semilattice_check(A.meet, A.top)])
    report.extend(L.run_laws("", axiom_laws(A), A.n, A.leq))
    return report


def is_pseudo_eq(A: FiniteEqAlgebra) -> bool:
    return all(law.sweep(A.n, A.leq).ok for law in axiom_laws(A))


def implications(A: FiniteEqAlgebra) -> tuple:
    return A.arrow, A.squig


@dataclass(frozen=True)
class PropertyFlags:
    bounded: bool
    bottom: Optional[int]
    linear: bool
    symmetric: bool
    invariant: bool
    commutative: bool
    equality: bool
    simple: Optional[bool] = None

    def as_dict(self, names=None) -> dict:
        bottom = self.bottom
        if names is not None and bottom is not None:
            bottom = names[bottom]
        return {
            "bounded": self.bounded,
            "bottom": bottom,
            "linear": self.linear,
            "symmetric": self.symmetric,
            "invariant": self.invariant,
            "commutative": self.commutative,
            "equality": self.equality,
            "simple": self.simple,
        }


def is_linear(A) -> bool:
    le = A.leq
    return all(le[x][y] or le[y][x] for x in range(A.n) for y in range(A.n))


def is_symmetric(A: FiniteEqAlgebra) -> bool:
    """x∽y = y~x for all x, y."""
    return all(A.btilde[x][y] == A.tilde[y][x] for x in range(A.n) for y in range(A.n))


def is_invariant(A: FiniteEqAlgebra) -> bool:
    """x∧y ~ y = x~y and x ∽ x∧y = x∽y for all x, y."""
    m, t, b = A.meet, A.tilde, A.btilde
    return all(
        t[m[x][y]][y] == t[x][y] and b[x][m[x][y]] == b[x][y]
        for x in range(A.n)
        for y in range(A.n)
    )


def is_commutative(A: FiniteEqAlgebra) -> bool:
    m, t, b = A.meet, A.tilde, A.btilde
    for x in range(A.n):
        for y in range(A.n):
            u = m[x][y]
            if b[t[u][x]][y] != b[t[u][y]][x]:
                return False
            if t[y][b[x][u]] != t[x][b[y][u]]:
                return False
    return True


def is_equality(A: FiniteEqAlgebra) -> bool:
    return A.tilde == A.btilde


def classify(A: FiniteEqAlgebra, with_simple: bool = True) -> PropertyFlags:
    simple = None
    if with_simple:
        from .deduction import is_simple

        simple = is_simple(A)
    bottom = A.bottom
    return PropertyFlags(
        bounded=bottom is not None,
        bottom=bottom,
        linear=is_linear(A),
        symmetric=is_symmetric(A),
        invariant=is_invariant(A),
        commutative=is_commutative(A),
        equality=is_equality(A),
        simple=simple,
    )


def derived_laws(A: FiniteEqAlgebra) -> list:
    """Identities and inequalities that hold in every pseudo equality algebra."""
    m, t, b, one, le = A.meet, A.tilde, A.btilde, A.top, A.leq
    ar, sq = A.arrow, A.squig
    return [
        # monotonicity of the implications in the meet
        L.le("(x∧y)~x ≤ (x∧y∧z)~(x∧z)", 3,
             lambda x, y, z: t[m[x][y]][x], lambda x, y, z: t[m[m[x][y]][z]][m[x][z]]),
        # printed as "x→y ≤ x∧z ≤ x∧z→y"; the chained reading is a typo
        L.le("x→y ≤ (x∧z)→y", 3, lambda x, y, z: ar[x][y], lambda x, y, z: ar[m[x][z]][y]),
        L.le("x∽(x∧y) ≤ (x∧z)∽(x∧y∧z)", 3,
             lambda x, y, z: b[x][m[x][y]], lambda x, y, z: b[m[x][z]][m[m[x][y]][z]]),
        L.le("x⇝y ≤ (x∧z)⇝y", 3, lambda x, y, z: sq[x][y], lambda x, y, z: sq[m[x][z]][y]),
        # basic properties of ~, ∽, →, ⇝
        L.le("x~y ≤ y→x", 2, lambda x, y: t[x][y], lambda x, y: ar[y][x]),
        L.le("x∽y ≤ x⇝y", 2, lambda x, y: b[x][y], lambda x, y: sq[x][y]),
        L.le("x ≤ ((y~x)∽y) ∧ (y~(x∽y))", 2,
             lambda x, y: x, lambda x, y: m[b[t[y][x]][y]][t[y][b[x][y]]]),
        L.le("x∽y = 1 ⇒ x ≤ y", 2, lambda x, y: x, lambda x, y: y,
             lambda x, y: b[x][y] == one),
        L.le("y~x = 1 ⇒ x ≤ y", 2, lambda x, y: x, lambda x, y: y,
             lambda x, y: t[y][x] == one),
        L.le("x~y = 1 ⇒ z~x ≤ z~y", 3, lambda x, y, z: t[z][x], lambda x, y, z: t[z][y],
             lambda x, y, z: t[x][y] == one),
        L.le("x∽y = 1 ⇒ y∽z ≤ x∽z", 3, lambda x, y, z: b[y][z], lambda x, y, z: b[x][z],
             lambda x, y, z: b[x][y] == one),
        L.iff("x ≤ y iff x→y = 1", 2, lambda x, y: le[x][y], lambda x, y: ar[x][y] == one),
        L.iff("x ≤ y iff x⇝y = 1", 2, lambda x, y: le[x][y], lambda x, y: sq[x][y] == one),
        L.eq("1→x = x", 1, lambda x: ar[one][x], lambda x: x),
        L.eq("1⇝x = x", 1, lambda x: sq[one][x], lambda x: x),
        L.eq("x→1 = 1", 1, lambda x: ar[x][one], lambda x: one),
        L.eq("x⇝1 = 1", 1, lambda x: sq[x][one], lambda x: one),
        L.eq("x→x = 1", 1, lambda x: ar[x][x], lambda x: one),
        L.eq("x⇝x = 1", 1, lambda x: sq[x][x], lambda x: one),
        L.le("x ≤ (y→x) ∧ (y⇝x)", 2, lambda x, y: x, lambda x, y: m[ar[y][x]][sq[y][x]]),
        L.le("x ≤ ((x→y)⇝y) ∧ ((x⇝y)→y)", 2,
             lambda x, y: x, lambda x, y: m[sq[ar[x][y]][y]][ar[sq[x][y]][y]]),
        L.le("x→y ≤ (y→z)⇝(x→z)", 3,
             lambda x, y, z: ar[x][y], lambda x, y, z: sq[ar[y][z]][ar[x][z]]),
        L.le("x⇝y ≤ (y⇝z)→(x⇝z)", 3,
             lambda x, y, z: sq[x][y], lambda x, y, z: ar[sq[y][z]][sq[x][z]]),
        L.iff("x ≤ y→z iff y ≤ x⇝z", 3,
              lambda x, y, z: le[x][ar[y][z]], lambda x, y, z: le[y][sq[x][z]]),
        L.eq("x→(y⇝z) = y⇝(x→z)", 3,
             lambda x, y, z: ar[x][sq[y][z]], lambda x, y, z: sq[y][ar[x][z]]),
        L.le("x→y ≤ (x∧z)→(y∧z)", 3,
             lambda x, y, z: ar[x][y], lambda x, y, z: ar[m[x][z]][m[y][z]]),
        L.le("x⇝y ≤ (x∧z)⇝(y∧z)", 3,
             lambda x, y, z: sq[x][y], lambda x, y, z: sq[m[x][z]][m[y][z]]),
        L.eq("x→y = x→(x∧y)", 2, lambda x, y: ar[x][y], lambda x, y: ar[x][m[x][y]]),
        L.eq("x⇝y = x⇝(x∧y)", 2, lambda x, y: sq[x][y], lambda x, y: sq[x][m[x][y]]),
        L.eq("1~x = x∽1", 1, lambda x: t[one][x], lambda x: b[x][one]),
        L.le("x ≤ y ⇒ x ≤ (x~y) ∧ (y∽x)", 2,
             lambda x, y: x, lambda x, y: m[t[x][y]][b[y][x]], lambda x, y: le[x][y]),
        L.le("x~y ≤ 1~(y~x)", 2, lambda x, y: t[x][y], lambda x, y: t[one][t[y][x]]),
        L.le("x∽y ≤ 1~(y∽x)", 2, lambda x, y: b[x][y], lambda x, y: t[one][b[y][x]]),
        # bounds by the implications
        L.le("y ≤ ((x∧y)~x) ∧ (x∽(x∧y))", 2,
             lambda x, y: y, lambda x, y: m[t[m[x][y]][x]][b[x][m[x][y]]]),
        L.le("x ≤ (((x∧y)~x)∽y) ∧ (y~(x∽(x∧y)))", 2,
             lambda x, y: x, lambda x, y: m[b[t[m[x][y]][x]][y]][t[y][b[x][m[x][y]]]]),
        L.le("y ≤ (((x∧y)~x)∽y) ∧ (y~(x∽(x∧y)))", 2,
             lambda x, y: y, lambda x, y: m[b[t[m[x][y]][x]][y]][t[y][b[x][m[x][y]]]]),
        L.le("x~y ≤ (x∧y)~y", 2, lambda x, y: t[x][y], lambda x, y: t[m[x][y]][y]),
        L.le("x∽y ≤ x∽(x∧y)", 2, lambda x, y: b[x][y], lambda x, y: b[x][m[x][y]]),
        # antitonicity in the first argument, for x ≤ y
        L.le("x ≤ y ⇒ (y∧z)~y ≤ (x∧z)~x", 3,
             lambda x, y, z: t[m[y][z]][y], lambda x, y, z: t[m[x][z]][x],
             lambda x, y, z: le[x][y]),
        L.le("x ≤ y ⇒ y∽(y∧z) ≤ x∽(x∧z)", 3,
             lambda x, y, z: b[y][m[y][z]], lambda x, y, z: b[x][m[x][z]],
             lambda x, y, z: le[x][y]),
        L.le("x ≤ y ⇒ (z∧x)~z ≤ (z∧y)~z", 3,
             lambda x, y, z: t[m[z][x]][z], lambda x, y, z: t[m[z][y]][z],
             lambda x, y, z: le[x][y]),
        L.le("x ≤ y ⇒ z∽(z∧x) ≤ z∽(z∧y)", 3,
             lambda x, y, z: b[z][m[z][x]], lambda x, y, z: b[z][m[z][y]],
             lambda x, y, z: le[x][y]),
        # the two absorption identities
        L.eq("y~(((x∧y)~x)∽y) = (x∧y)~x", 2,
             lambda x, y: t[y][b[t[m[x][y]][x]][y]], lambda x, y: t[m[x][y]][x]),
        L.eq("(y~(x∽(x∧y)))∽y = x∽(x∧y)", 2,
             lambda x, y: b[t[y][b[x][m[x][y]]]][y], lambda x, y: b[x][m[x][y]]),
    ]


def derived_law_suite(A: FiniteEqAlgebra) -> Report:
    return L.run_laws("derived laws", derived_laws(A), A.n, A.leq)


def product(A1: FiniteEqAlgebra, A2: FiniteEqAlgebra, max_size: int = MAX_SIZE) -> FiniteEqAlgebra:
    """Componentwise product; element (i, j) gets index i*n2 + j and token ``x|y``."""
    n1, n2 = A1.n, A2.n
    if n1 * n2 > max_size:
        raise SizeBoundExceeded(f"product of size {n1 * n2} exceeds bound {max_size}")
    names = tuple(f"{x}|{y}" for x in A1.names for y in A2.names)
    pairs = [(i, j) for i in range(n1) for j in range(n2)]

    def lift(T1, T2):
        return tuple(
            tuple(T1[i][k] * n2 + T2[j][l] for (k, l) in pairs) for (i, j) in pairs
        )

    return FiniteEqAlgebra(
        names,
        A1.top * n2 + A2.top,
        lift(A1.meet, A2.meet),
        lift(A1.tilde, A2.tilde),
        lift(A1.btilde, A2.btilde),
    )


def pair_index(A1: FiniteEqAlgebra, A2: FiniteEqAlgebra, i: int, j: int) -> int:
    return i * A2.n + j


def trivial_algebra(name: str = "1") -> FiniteEqAlgebra:
    return FiniteEqAlgebra((name,), 0, ((0,),), ((0,),), ((0,),))


def relabel(tables, perm) -> tuple:
    """Apply the bijection ``perm`` (old index -> new index) to index tables."""
    n = len(perm)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(
        tuple(tuple(perm[T[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        for T in tables
    )


def isomorphism(A: FiniteEqAlgebra, B: FiniteEqAlgebra) -> Optional[list]:
    """Return a map f (index of A -> index of B) preserving top and all tables, or None."""
    if A.n != B.n:
        return None
    n = A.n
    ops_a = (A.meet, A.tilde, A.btilde)
    ops_b = (B.meet, B.tilde, B.btilde)

    def sig(X, x):
        le = X.leq
        return (sum(le[y][x] for y in range(n)), sum(le[x][y] for y in range(n)),
                X.tilde[x][x] == X.top, X.btilde[x][x] == X.top)

    sig_b = [sig(B, y) for y in range(n)]
    f = [-1] * n
    used = [False] * n
    f[A.top] = B.top
    used[B.top] = True
    order = [x for x in range(n) if x != A.top]

    def consistent(upto) -> bool:
        done = [x for x in range(n) if f[x] >= 0]
        for T, U in zip(ops_a, ops_b):
            for x in done:
                for y in done:
                    v = T[x][y]
                    if f[v] >= 0 and f[v] != U[f[x]][f[y]]:
                        return False
        return True

    def rec(k) -> bool:
        if k == len(order):
            return True
        x = order[k]
        sx = sig(A, x)
        for y in range(n):
            if used[y] or sig_b[y] != sx:
                continue
            f[x] = y
            used[y] = True
            if consistent(k) and rec(k + 1):
                return True
            f[x] = -1
            used[y] = False
        return False

    if not consistent(0):
        return None
    return list(f) if rec(0) else None


def is_isomorphic(A: FiniteEqAlgebra, B: FiniteEqAlgebra) -> bool:
    return isomorphism(A, B) is not None
