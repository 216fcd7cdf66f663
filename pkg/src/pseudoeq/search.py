"""Finite model search up to isomorphism.

The carrier of a finite meet-semilattice with top is a lattice, so models are
found per unlabeled lattice skeleton: each skeleton is labeled by its
lexicographically least linear extension (top last), then the ~ and ∽ tables
are filled cell by cell.  Axiom instances are watched on the first unknown
cell their evaluation hits, so a partial table is rejected as soon as any
fully determined instance fails.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import (
    FiniteEqAlgebra,
    is_commutative,
    is_equality,
    is_invariant,
    is_linear,
    is_symmetric,
    verify_axioms,
)
from .bck import check_conditions, phi, psi
from .errors import SizeBoundExceeded, UnknownClaim

SEARCH_BOUND = 5

Table = tuple


# -- relabeling -------------------------------------------------------------

def relabel_table(T, p) -> Table:
    """Table under the relabeling p (old index -> new index)."""
    n = len(T)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out[p[x]][p[y]] = p[T[x][y]]
    return tuple(tuple(r) for r in out)


def order_of(meet) -> tuple:
    n = len(meet)
    return tuple(tuple(meet[x][y] == x for y in range(n)) for x in range(n))


def linear_extensions(meet):
    """Relabelings p (old -> new) with x < y ⇒ p[x] < p[y]; top ends last."""
    n = len(meet)
    le = order_of(meet)
    p = [-1] * n

    def rec(pos):
        if pos == n:
            yield tuple(p)
            return
        for x in range(n):
            if p[x] >= 0:
                continue
            if all(p[y] >= 0 for y in range(n) if le[y][x] and y != x):
                p[x] = pos
                yield from rec(pos + 1)
                p[x] = -1

    yield from rec(0)


def automorphisms(meet) -> list:
    return [p for p in linear_extensions(meet) if relabel_table(meet, p) == meet]


def canonical_form(A: FiniteEqAlgebra) -> tuple:
    """Least (meet, tilde, btilde) over order-respecting relabelings fixing top."""
    best = None
    for p in linear_extensions(A.meet):
        cand = (relabel_table(A.meet, p), relabel_table(A.tilde, p), relabel_table(A.btilde, p))
        if best is None or cand < best:
            best = cand
    return best


def model_names(n: int) -> tuple:
    return tuple(f"e{i}" for i in range(n - 1)) + ("1",)


def from_form(form) -> FiniteEqAlgebra:
    meet, tilde, btilde = form
    n = len(meet)
    return FiniteEqAlgebra(model_names(n), n - 1, meet, tilde, btilde)


# -- lattice skeletons ---------------------------------------------------------

def _meet_from_order(le, n) -> Optional[Table]:
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            lower = [z for z in range(n) if le[z][x] and le[z][y]]
            glb = [z for z in lower if all(le[w][z] for w in lower)]
            if len(glb) != 1:
                return None
            row.append(glb[0])
        rows.append(tuple(row))
    return tuple(rows)


def lattices(n: int) -> list:
    """One meet table per isomorphism class of n-element lattices, each in
    its least linear-extension labeling, sorted."""
    if n < 1:
        return []
    if n == 1:
        return [((0,),)]
    top = n - 1
    pairs = [(i, j) for i in range(n - 1) for j in range(i + 1, n - 1)]
    found = set()
    for bits in range(1 << len(pairs)):
        le = [[x == y or y == top for y in range(n)] for x in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                le[i][j] = True
        if any(le[x][y] and le[y][z] and not le[x][z]
               for x, y, z in itertools.product(range(n), repeat=3)):
            continue
        meet = _meet_from_order(le, n)
        if meet is None:
            continue
        found.add(min(relabel_table(meet, p) for p in linear_extensions(meet)))
    return sorted(found)


# -- constraint engine -------------------------------------------------------

# Expression trees over variables 0..2: ("v", i) | (op, e1, e2), op in "mtb".
def _v(i):
    return ("v", i)


def _op(o, a, b):
    return (o, a, b)


X, Y, Z = _v(0), _v(1), _v(2)
T_ = lambda a, b: _op("t", a, b)
B_ = lambda a, b: _op("b", a, b)
M_ = lambda a, b: _op("m", a, b)

# (lhs, rhs, guard) meaning lhs ≤ rhs whenever guard(le, x, y, z).
_chain = lambda le, x, y, z: le[x][y] and le[y][z]
LE_AXIOMS = [
    (T_(X, Z), T_(Y, Z), _chain),
    (T_(X, Z), T_(X, Y), _chain),
    (B_(Z, X), B_(Z, Y), _chain),
    (B_(Z, X), B_(Y, X), _chain),
    (T_(X, Y), T_(M_(X, Z), M_(Y, Z)), None),
    (B_(X, Y), B_(M_(X, Z), M_(Y, Z)), None),
    (T_(X, Y), B_(T_(Z, X), T_(Z, Y)), None),
    (B_(X, Y), T_(B_(X, Z), B_(Y, Z)), None),
    (T_(X, Y), T_(T_(X, Z), T_(Y, Z)), None),
    (B_(X, Y), B_(B_(Z, X), B_(Z, Y)), None),
]


def _bind(e, args):
    if e[0] == "v":
        return ("c", args[e[1]])
    return (e[0], _bind(e[1], args), _bind(e[2], args))


class _Engine:
    """Backtracking filler for the ~ and ∽ tables over one meet table."""

    def __init__(self, meet):
        n = self.n = len(meet)
        self.meet = meet
        self.le = order_of(meet)
        top = self.top = n - 1
        # cell id: 0..n²-1 for ~, n²..2n²-1 for ∽
        self.val = [-1] * (2 * n * n)
        for x in range(n):
            self.val[self._c(0, x, x)] = top
            self.val[self._c(1, x, x)] = top
            self.val[self._c(0, x, top)] = x
            self.val[self._c(1, top, x)] = x
        self.free = []
        for x in range(n):
            for y in range(n):
                for k in (0, 1):
                    c = self._c(k, x, y)
                    if self.val[c] < 0:
                        self.free.append(c)
        self.instances = []
        for lhs, rhs, guard in LE_AXIOMS:
            for args in itertools.product(range(n), repeat=3):
                if guard is not None and not guard(self.le, *args):
                    continue
                self.instances.append((_bind(lhs, args), _bind(rhs, args)))
        self.watch = {c: set() for c in self.free}
        self.dead = False
        for i in range(len(self.instances)):
            r = self._check(i)
            if r is False:
                self.dead = True
            elif r is not True:
                self.watch[r].add(i)

    def _c(self, k, x, y):
        return k * self.n * self.n + x * self.n + y

    def _eval(self, e):
        """Value ≥ 0, or -1 - cell for the first unknown cell."""
        tag = e[0]
        if tag == "c":
            return e[1]
        a = self._eval(e[1])
        if a < 0:
            return a
        b = self._eval(e[2])
        if b < 0:
            return b
        if tag == "m":
            return self.meet[a][b]
        c = self._c(0 if tag == "t" else 1, a, b)
        v = self.val[c]
        return v if v >= 0 else -1 - c

    def _check(self, i):
        """True if satisfied, False if violated, else the blocking cell."""
        lhs, rhs = self.instances[i]
        a = self._eval(lhs)
        if a < 0:
            return -1 - a
        b = self._eval(rhs)
        if b < 0:
            return -1 - b
        return bool(self.le[a][b])

    def _assign(self, c, v, trail) -> bool:
        self.val[c] = v
        for i in list(self.watch[c]):
            r = self._check(i)
            if r is False:
                return False
            if r is not True:
                self.watch[c].discard(i)
                self.watch[r].add(i)
                trail.append((i, c, r))
        return True

    def _undo(self, c, trail):
        while trail:
            i, src, dst = trail.pop()
            self.watch[dst].discard(i)
            self.watch[src].add(i)
        self.val[c] = -1

    def _domain(self, c):
        n, le, top = self.n, self.le, self.top
        k, rest = divmod(c, n * n)
        x, y = divmod(rest, n)
        for v in range(n):
            # 1 only between comparable arguments in the right direction
            if v == top and not (le[y][x] if k == 0 else le[x][y]):
                continue
            yield v

    def solutions(self, prefix=()):
        if self.dead:
            return
        yield from self._rec(0, prefix)

    def _rec(self, depth, prefix):
        if depth == len(self.free):
            n = self.n
            v = self.val
            tilde = tuple(tuple(v[x * n + y] for y in range(n)) for x in range(n))
            btilde = tuple(tuple(v[n * n + x * n + y] for y in range(n)) for x in range(n))
            yield tilde, btilde
            return
        c = self.free[depth]
        choices = [prefix[depth]] if depth < len(prefix) else self._domain(c)
        for v in choices:
            trail = []
            if self._assign(c, v, trail):
                yield from self._rec(depth + 1, prefix)
            self._undo(c, trail)


def _min_under(meet, autos, tilde, btilde) -> tuple:
    return min(
        (meet, relabel_table(tilde, p), relabel_table(btilde, p)) for p in autos
    )


def _job(args) -> list:
    meet, prefix = args
    eng = _Engine(meet)
    autos = automorphisms(meet)
    out = set()
    for tilde, btilde in eng.solutions(prefix):
        out.add(_min_under(meet, autos, tilde, btilde))
    return sorted(out)


def _jobs_for(meet, split: int) -> list:
    """Disjoint jobs fixing the values of the first ``split`` free cells."""
    if split <= 0:
        return [(meet, ())]
    eng = _Engine(meet)
    n = eng.n
    cells = eng.free[:split]
    return [(meet, pre) for pre in itertools.product(range(n), repeat=len(cells))]


def raw_forms(n: int, jobs: int = 1, split: int = 1) -> list:
    """Canonical forms of every pseudo equality algebra of size n, sorted."""
    work = []
    for meet in lattices(n):
        work.extend(_jobs_for(meet, split if jobs > 1 else 0))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_job, work))
    else:
        parts = [_job(w) for w in work]
    return sorted(set().union(*map(set, parts))) if parts else []


# -- properties and claims ------------------------------------------------------

def _bck_flags(A):
    return check_conditions(psi(A))


def _simple(A):
    from .deduction import is_simple
    return is_simple(A)


PROPERTIES: dict = {
    "pseudo-eq": lambda A: verify_axioms(A).ok,
    "equality": is_equality,
    "invariant": is_invariant,
    "commutative": is_commutative,
    "symmetric": is_symmetric,
    "linear": is_linear,
    "bounded": lambda A: A.bottom is not None,
    "simple": _simple,
    "pC": lambda A: _bck_flags(A).pC,
    "pD": lambda A: _bck_flags(A).pD,
    "pP": lambda A: _bck_flags(A).pP,
}


def _is_differs(A):
    from .states import TYPE_I, TYPE_II, enumerate_states
    return enumerate_states(A, TYPE_I) != enumerate_states(A, TYPE_II)


def _phi_equality(A):
    return is_equality(phi(psi(A)))


CLAIMS: dict = {
    "IS_I ≠ IS_II": _is_differs,
    "not invariant": lambda A: not is_invariant(A),
    "phi-not-equality": lambda A: not _phi_equality(A),
    # a nontrivial model whose Φ(Ψ(A)) is an equality algebra; expected none
    "phi-equality": lambda A: A.n > 1 and _phi_equality(A),
}


def _claim_key(name: str) -> str:
    return "".join(name.split()).replace("!=", "≠").replace("-", "").lower()


def resolve_claim(name: str) -> str:
    """Claim names match ignoring whitespace, case, hyphens and != for ≠."""
    key = _claim_key(name)
    for known in CLAIMS:
        if _claim_key(known) == key:
            return known
    raise UnknownClaim(f"unknown claim {name!r}; known: {', '.join(sorted(CLAIMS))}")


def resolve_property(name: str) -> str:
    if name not in PROPERTIES:
        raise UnknownClaim(f"unknown property {name!r}; known: {', '.join(PROPERTIES)}")
    return name


@dataclass
class SearchSpec:
    size: int
    require: list = field(default_factory=list)
    forbid: list = field(default_factory=list)
    limit: Optional[int] = None
    jobs: int = 1
    split: int = 1  # number of leading free cells used to partition jobs
    bound: int = SEARCH_BOUND

    def check(self):
        if self.size < 1 or self.size > self.bound:
            raise SizeBoundExceeded(f"size {self.size} outside 1..{self.bound}")
        for p in list(self.require) + list(self.forbid):
            resolve_property(p)


def matches(A, require, forbid) -> bool:
    return all(PROPERTIES[p](A) for p in require) and not any(PROPERTIES[p](A) for p in forbid)


def enumerate_models(spec: SearchSpec) -> list:
    spec.check()
    out = []
    for form in raw_forms(spec.size, spec.jobs, spec.split):
        A = from_form(form)
        if not verify_axioms(A).ok:
            raise AssertionError(f"search produced a non-model: {form}")
        if matches(A, spec.require, spec.forbid):
            out.append(A)
            if spec.limit is not None and len(out) >= spec.limit:
                break
    return out


def find_counterexample(spec: SearchSpec, claim: str, exact: bool = False) -> Optional[FiniteEqAlgebra]:
    """Smallest model (size, then canonical form) up to spec.size witnessing
    ``claim`` and matching spec's require/forbid lists.  With ``exact`` only
    models of size spec.size are considered."""
    claim = resolve_claim(claim)
    pred: Callable = CLAIMS[claim]
    spec.check()
    for n in range(spec.size if exact else 1, spec.size + 1):
        sub = SearchSpec(n, spec.require, spec.forbid, None, spec.jobs, spec.split, spec.bound)
        for A in enumerate_models(sub):
            if pred(A):
                return A
    return None


# -- unpruned oracle ------------------------------------------------------------

def oracle_count(n: int) -> int:
    """Isomorphism classes of size-n models by brute force: every meet table
    with top n-1, every ~/∽ table agreeing with the forced diagonal and
    top cells, a direct axiom filter, then orbits under all permutations
    fixing n-1.  Practical for n ≤ 3."""
    if n == 1:
        return 1
    top = n - 1
    from .algebra import check_semilattice

    meets = []
    for flat in itertools.product(range(n), repeat=n * n):
        meet = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        try:
            check_semilattice(meet, top)
        except Exception:
            continue
        meets.append(meet)
    t_free = [(x, y) for x in range(n) for y in range(n) if x != y and y != top]
    b_free = [(x, y) for x in range(n) for y in range(n) if x != y and x != top]

    def fill(free, forced):
        for vals in itertools.product(range(n), repeat=len(free)):
            T = [[-1] * n for _ in range(n)]
            for (x, y), v in forced.items():
                T[x][y] = v
            for (x, y), v in zip(free, vals):
                T[x][y] = v
            yield tuple(tuple(r) for r in T)

    t_forced = {(x, x): top for x in range(n)} | {(x, top): x for x in range(n)}
    b_forced = {(x, x): top for x in range(n)} | {(top, x): x for x in range(n)}
    perms = [p + (top,) for p in itertools.permutations(range(n - 1))]
    classes = set()
    for meet in meets:
        for tilde in fill(t_free, t_forced):
            for btilde in fill(b_free, b_forced):
                A = FiniteEqAlgebra(model_names(n), top, meet, tilde, btilde)
                if not verify_axioms(A).ok:
                    continue
                classes.add(min(
                    (relabel_table(meet, p), relabel_table(tilde, p), relabel_table(btilde, p))
                    for p in perms
                ))
    return len(classes)
