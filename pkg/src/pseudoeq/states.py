"""Internal states, state-morphisms and their BCK-side counterparts.

A unary operator is a tuple ``op`` with ``op[x]`` the image of element x.
Type I states use the exchange axiom IS2, type II use IS2'.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import laws as L
from .algebra import MAX_SIZE, FiniteEqAlgebra
from .bck import FiniteBckMs, phi, psi
from .deduction import DsStatus, ds_status, mask_of, members
from .errors import (
    BadLength,
    NotAMorphismOnReg,
    NotCompatible,
    PointNotFixed,
    SizeBoundExceeded,
    UnknownToken,
)
from .laws import Check, Report
from .pointed import PointedEqAlgebra, gamma_table, is_compatible, negations, regular_elements

TYPE_I = "I"
TYPE_II = "II"
KINDS = (TYPE_I, TYPE_II)


def identity(n: int) -> tuple:
    return tuple(range(n))


def constant_top(A) -> tuple:
    return (A.top,) * A.n


def check_operator(A, op) -> tuple:
    op = tuple(op)
    if len(op) != A.n:
        raise BadLength(f"operator has {len(op)} entries, expected {A.n}")
    for v in op:
        if not 0 <= v < A.n:
            raise UnknownToken(v)
    return op


def _kind(kind) -> str:
    k = str(kind).upper().replace("TYPE", "").strip()
    if k not in KINDS:
        raise ValueError(f"unknown state kind {kind!r}")
    return k


# -- pseudo equality side ---------------------------------------------------

def state_laws(A: FiniteEqAlgebra, s, kind=TYPE_I, strong: bool = False) -> list:
    m, t, b, le = A.meet, A.tilde, A.btilde, A.leq
    kind = _kind(kind)
    laws = [L.le("IS1 x ≤ y ⇒ σx ≤ σy", 2, lambda x, y: s[x], lambda x, y: s[y],
                 lambda x, y: le[x][y])]
    if kind == TYPE_I:
        laws += [
            L.eq("IS2 σ(x∧y ~ x) = σy ~ σ((x∧y ~ x) ∽ y)", 2,
                 lambda x, y: s[t[m[x][y]][x]],
                 lambda x, y: t[s[y]][s[b[t[m[x][y]][x]][y]]]),
            L.eq("IS2 σ(x ∽ x∧y) = σ(y ~ (x ∽ x∧y)) ∽ σy", 2,
                 lambda x, y: s[b[x][m[x][y]]],
                 lambda x, y: b[s[t[y][b[x][m[x][y]]]]][s[y]]),
        ]
    else:
        laws += [
            L.eq("IS2' σ(x∧y ~ x) = σy ~ σ((x∧y ~ y) ∽ x)", 2,
                 lambda x, y: s[t[m[x][y]][x]],
                 lambda x, y: t[s[y]][s[b[t[m[x][y]][y]][x]]]),
            L.eq("IS2' σ(x ∽ x∧y) = σ(x ~ (y ∽ x∧y)) ∽ σy", 2,
                 lambda x, y: s[b[x][m[x][y]]],
                 lambda x, y: b[s[t[x][b[y][m[x][y]]]]][s[y]]),
        ]
    laws += [
        L.eq("IS3 σ(σx ~ σy) = σx ~ σy", 2, lambda x, y: s[t[s[x]][s[y]]], lambda x, y: t[s[x]][s[y]]),
        L.eq("IS3 σ(σx ∽ σy) = σx ∽ σy", 2, lambda x, y: s[b[s[x]][s[y]]], lambda x, y: b[s[x]][s[y]]),
        L.eq("IS4 σ(σx ∧ σy) = σx ∧ σy", 2, lambda x, y: s[m[s[x]][s[y]]], lambda x, y: m[s[x]][s[y]]),
    ]
    if strong:
        laws.append(L.eq("IS5 σ(x~y) = σ(x∽y)", 2, lambda x, y: s[t[x][y]], lambda x, y: s[b[x][y]]))
    return laws


def check_state(A: FiniteEqAlgebra, sigma, kind=TYPE_I, strong: bool = False) -> Report:
    s = check_operator(A, sigma)
    title = f"internal state of type {_kind(kind)}" + (" (strong)" if strong else "")
    return L.run_laws(title, state_laws(A, s, kind, strong), A.n, A.leq)


def is_state(A, sigma, kind=TYPE_I, strong: bool = False) -> bool:
    s = tuple(sigma)
    for law in state_laws(A, s, kind, strong):
        if not law.sweep(A.n, A.leq).ok:
            return False
    return True


def is_strong(A, sigma) -> bool:
    t, b = A.tilde, A.btilde
    return all(sigma[t[x][y]] == sigma[b[x][y]] for x in range(A.n) for y in range(A.n))


def morphism_laws(A: FiniteEqAlgebra, s) -> list:
    m, t, b = A.meet, A.tilde, A.btilde
    return [
        L.eq("SM1 σ(x~y) = σx ~ σy", 2, lambda x, y: s[t[x][y]], lambda x, y: t[s[x]][s[y]]),
        L.eq("SM2 σ(x∽y) = σx ∽ σy", 2, lambda x, y: s[b[x][y]], lambda x, y: b[s[x]][s[y]]),
        L.eq("SM3 σ(x∧y) = σx ∧ σy", 2, lambda x, y: s[m[x][y]], lambda x, y: m[s[x]][s[y]]),
        L.eq("SM4 σσx = σx", 1, lambda x: s[s[x]], lambda x: s[x]),
    ]


def check_morphism(A: FiniteEqAlgebra, sigma) -> Report:
    s = check_operator(A, sigma)
    return L.run_laws("state-morphism", morphism_laws(A, s), A.n, A.leq)


def is_morphism(A, sigma) -> bool:
    s = tuple(sigma)
    return all(law.sweep(A.n, A.leq).ok for law in morphism_laws(A, s))


# -- candidate generation ----------------------------------------------------

def candidate_operators(A, first=None):
    """Self-maps with σ(1) = 1 that are idempotent and monotone.

    Every internal state and every state-morphism has these three
    properties, so they are safe to prune on.  ``first`` fixes σ(0).
    """
    n, le, top = A.n, A.leq, A.top
    s = [-1] * n

    def ok(x, v):
        if x == top and v != top:
            return False
        # idempotence: σ(v) must be v, and anything already sent to x pins x
        if v != x and (s[v] >= 0 and s[v] != v or x in s):
            return False
        for u in range(x):
            su = s[u]
            if le[u][x] and not le[su][v]:
                return False
            if le[x][u] and not le[v][su]:
                return False
        return True

    def rec(x):
        if x == n:
            yield tuple(s)
            return
        choices = [first] if x == 0 and first is not None else range(n)
        for v in choices:
            if ok(x, v):
                s[x] = v
                yield from rec(x + 1)
                s[x] = -1

    yield from rec(0)


def _states_for_first(args):
    A, kind, strong, first = args
    return [op for op in candidate_operators(A, first) if is_state(A, op, kind, strong)]


def _morphisms_for_first(args):
    A, first = args
    return [op for op in candidate_operators(A, first) if is_morphism(A, op)]


def _partitioned(worker, A, extra, jobs):
    firsts = list(range(A.n))
    tasks = [(A, *extra, f) for f in firsts]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(worker, tasks))
    else:
        parts = [worker(t) for t in tasks]
    return sorted(op for part in parts for op in part)


def enumerate_states(A: FiniteEqAlgebra, kind=TYPE_I, strong: bool = False, jobs: int = 1,
                     max_size: int = MAX_SIZE) -> list:
    if A.n > max_size:
        raise SizeBoundExceeded(f"carrier of size {A.n} exceeds bound {max_size}")
    return _partitioned(_states_for_first, A, (_kind(kind), strong), jobs)


def enumerate_states_raw(A: FiniteEqAlgebra, kind=TYPE_I, strong: bool = False) -> list:
    """Unpruned n^n sweep; the oracle for ``enumerate_states``."""
    return sorted(op for op in itertools.product(range(A.n), repeat=A.n)
                  if is_state(A, op, kind, strong))


def enumerate_morphisms(A: FiniteEqAlgebra, jobs: int = 1, max_size: int = MAX_SIZE) -> list:
    if A.n > max_size:
        raise SizeBoundExceeded(f"carrier of size {A.n} exceeds bound {max_size}")
    return _partitioned(_morphisms_for_first, A, (), jobs)


def enumerate_morphisms_raw(A: FiniteEqAlgebra) -> list:
    return sorted(op for op in itertools.product(range(A.n), repeat=A.n) if is_morphism(A, op))


# -- consequences ------------------------------------------------------------

def image_mask(op) -> int:
    return mask_of(set(op))


def fixed_mask(op) -> int:
    return mask_of(x for x, v in enumerate(op) if v == x)


def is_extensive(A, op) -> bool:
    """x ≤ σx for all x (operator-level predicate)."""
    return all(A.leq[x][op[x]] for x in range(A.n))


def _closed_under(A, mask, tables) -> bool:
    for x, y in itertools.product(members(mask, A.n), repeat=2):
        for T in tables:
            if not mask >> T[x][y] & 1:
                return False
    return True


def state_consequences(A: FiniteEqAlgebra, s) -> Report:
    """Table-level facts every internal state (either type) must satisfy."""
    n, le, t, b = A.n, A.leq, A.tilde, A.btilde
    ar, sq = A.arrow, A.squig
    checks = [
        Check("σ(1) = 1", s[A.top] == A.top, None if s[A.top] == A.top else (A.top,)),
        L.eq("σσx = σx", 1, lambda x: s[s[x]], lambda x: s[x]).sweep(n, le),
        Check("Fix(σ) = Im(σ)", fixed_mask(s) == image_mask(s)),
        Check("Im(σ) is a subalgebra",
              _closed_under(A, image_mask(s), (A.meet, A.tilde, A.btilde))),
    ]
    comp = lambda x, y: le[y][x]
    laws = [
        L.le("y ≤ x ⇒ σ(y~x) ≤ σy ~ σx", 2, lambda x, y: s[t[y][x]], lambda x, y: t[s[y]][s[x]], comp),
        L.le("y ≤ x ⇒ σ(x∽y) ≤ σx ∽ σy", 2, lambda x, y: s[b[x][y]], lambda x, y: b[s[x]][s[y]], comp),
        L.eq("y ≤ x ⇒ σy ~ σx = σx → σy", 2, lambda x, y: t[s[y]][s[x]], lambda x, y: ar[s[x]][s[y]], comp),
        L.eq("y ≤ x ⇒ σx ∽ σy = σx ⇝ σy", 2, lambda x, y: b[s[x]][s[y]], lambda x, y: sq[s[x]][s[y]], comp),
        L.le("y ≤ x ⇒ σ(x→y) ≤ σx → σy", 2, lambda x, y: s[ar[x][y]], lambda x, y: ar[s[x]][s[y]], comp),
        L.le("y ≤ x ⇒ σ(x⇝y) ≤ σx ⇝ σy", 2, lambda x, y: s[sq[x][y]], lambda x, y: sq[s[x]][s[y]], comp),
    ]
    checks += [law.sweep(n, le) for law in laws]
    return Report("internal state consequences", checks)


def kernel_mask(A, op) -> int:
    return mask_of(x for x in range(A.n) if op[x] == A.top)


@dataclass
class KernelReport:
    mask: int
    status: DsStatus
    report: Report

    @property
    def ok(self) -> bool:
        return self.report.ok


def kernel(A: FiniteEqAlgebra, sigma) -> KernelReport:
    s = check_operator(A, sigma)
    K = kernel_mask(A, s)
    status = ds_status(A, K)
    state = is_state(A, s, TYPE_I) or is_state(A, s, TYPE_II)
    morph = is_morphism(A, s)
    checks = [Check("operator is an internal state or a state-morphism", state or morph)]
    if state or morph:
        checks.append(Check("Ker is a deductive system", status.is_ds))
        checks.append(Check("Ker ∩ Im = {1}", K & image_mask(s) == 1 << A.top))
    if state and A.n and _invariant(A):
        checks.append(Check("invariant ⇒ Ker is a subalgebra",
                            _closed_under(A, K, (A.meet, A.tilde, A.btilde))))
    if state and is_strong(A, s):
        checks.append(Check("strong ⇒ Ker is normal", status.is_normal))
    if morph:
        checks.append(Check("morphism ⇒ Ker is normal", status.is_normal))
        left = mask_of(A.tilde[x][s[x]] for x in range(A.n))
        right = mask_of(A.btilde[s[x]][x] for x in range(A.n))
        checks.append(Check("Ker = {x ~ σx}", K == left))
        checks.append(Check("Ker = {σx ∽ x}", K == right))
    return KernelReport(K, status, Report("kernel", checks))


def _invariant(A) -> bool:
    from .algebra import is_invariant

    return is_invariant(A)


def point_lemma(P: PointedEqAlgebra, sigma) -> Report:
    """For a morphism fixing the point, σ commutes with the negations."""
    A, s = P.base, tuple(sigma)
    N = negations(P)
    ta, ba = N.tilde_a, N.btilde_a
    laws = [
        L.eq("σ(x^{~a}) = σ(x)^{~a}", 1, lambda x: s[ta[x]], lambda x: ta[s[x]]),
        L.eq("σ(x^{∽a}) = σ(x)^{∽a}", 1, lambda x: s[ba[x]], lambda x: ba[s[x]]),
        L.eq("σ(x^{~a∽a}) = σ(x)^{~a∽a}", 1, lambda x: s[ba[ta[x]]], lambda x: ba[ta[s[x]]]),
        L.eq("σ(x^{∽a~a}) = σ(x)^{∽a~a}", 1, lambda x: s[ta[ba[x]]], lambda x: ta[ba[s[x]]]),
    ]
    return L.run_laws("morphism and negations", laws, A.n, A.leq)


# -- extension from the regular elements --------------------------------------

def check_morphism_on(A, sigma, domain: int) -> Optional[str]:
    """Return None if ``sigma`` restricted to ``domain`` is a state-morphism of
    that subalgebra, else a short reason."""
    dom = members(domain, A.n)
    for x in dom:
        if not domain >> sigma[x] & 1:
            return f"image of {A.names[x]} leaves the domain"
    for x, y in itertools.product(dom, repeat=2):
        for name, T in (("~", A.tilde), ("∽", A.btilde), ("∧", A.meet)):
            if not domain >> T[x][y] & 1:
                return f"domain not closed under {name}"
            if sigma[T[x][y]] != T[sigma[x]][sigma[y]]:
                return f"not a homomorphism for {name} at ({A.names[x]}, {A.names[y]})"
    for x in dom:
        if sigma[sigma[x]] != sigma[x]:
            return f"not idempotent at {A.names[x]}"
    return None


@dataclass
class Extension:
    op: tuple
    report: Report


def extend_morphism(P: PointedEqAlgebra, sigma_on_reg) -> Extension:
    """σ̃(x) = σ(γx) where γx = x^{~a∽a}; entries of ``sigma_on_reg`` outside
    Reg_a are ignored."""
    A, a = P.base, P.point
    s = check_operator(A, sigma_on_reg)
    if not is_compatible(P):
        raise NotCompatible(f"not compatible with respect to {A.names[a]}")
    reg = regular_elements(P)
    bad = check_morphism_on(A, s, reg)
    if bad is not None:
        raise NotAMorphismOnReg(bad)
    if s[a] != a:
        raise PointNotFixed(f"σ({A.names[a]}) = {A.names[s[a]]}")
    g = gamma_table(P)
    ext = tuple(s[g[x]] for x in range(A.n))
    rep = check_morphism(A, ext)
    rep.checks.append(Check("restriction to Reg equals σ",
                            all(ext[x] == s[x] for x in members(reg, A.n))))
    return Extension(ext, rep)


def restrict_candidates(P: PointedEqAlgebra) -> list:
    """All state-morphisms of the subalgebra Reg_a fixing a, as total tables
    that are the identity off Reg_a."""
    A, a = P.base, P.point
    reg = regular_elements(P)
    dom = members(reg, A.n)
    out = []
    for images in itertools.product(dom, repeat=len(dom)):
        s = list(range(A.n))
        for x, v in zip(dom, images):
            s[x] = v
        if s[a] != a:
            continue
        if check_morphism_on(A, s, reg) is None:
            out.append(tuple(s))
    return out


# -- BCK side ------------------------------------------------------------------

def bck_state_laws(B: FiniteBckMs, u, kind=TYPE_I) -> list:
    m, ar, sq, le = B.meet, B.arrow, B.squig, B.leq
    kind = _kind(kind)
    laws = [L.le("SB1 x ≤ y ⇒ μx ≤ μy", 2, lambda x, y: u[x], lambda x, y: u[y],
                 lambda x, y: le[x][y])]
    if kind == TYPE_I:
        laws += [
            L.eq("SB2 μ(x→y) = μ((x→y)⇝y) → μy", 2,
                 lambda x, y: u[ar[x][y]], lambda x, y: ar[u[sq[ar[x][y]][y]]][u[y]]),
            L.eq("SB2 μ(x⇝y) = μ((x⇝y)→y) ⇝ μy", 2,
                 lambda x, y: u[sq[x][y]], lambda x, y: sq[u[ar[sq[x][y]][y]]][u[y]]),
        ]
    else:
        laws += [
            L.eq("SB2' μ(x→y) = μ((y→x)⇝x) → μy", 2,
                 lambda x, y: u[ar[x][y]], lambda x, y: ar[u[sq[ar[y][x]][x]]][u[y]]),
            L.eq("SB2' μ(x⇝y) = μ((y⇝x)→x) ⇝ μy", 2,
                 lambda x, y: u[sq[x][y]], lambda x, y: sq[u[ar[sq[y][x]][x]]][u[y]]),
        ]
    laws += [
        L.eq("SB3 μ(μx → μy) = μx → μy", 2, lambda x, y: u[ar[u[x]][u[y]]], lambda x, y: ar[u[x]][u[y]]),
        L.eq("SB3 μ(μx ⇝ μy) = μx ⇝ μy", 2, lambda x, y: u[sq[u[x]][u[y]]], lambda x, y: sq[u[x]][u[y]]),
        L.eq("SB4 μ(μx ∧ μy) = μx ∧ μy", 2, lambda x, y: u[m[u[x]][u[y]]], lambda x, y: m[u[x]][u[y]]),
    ]
    return laws


def check_bck_state(B: FiniteBckMs, mu, kind=TYPE_I) -> Report:
    u = check_operator(B, mu)
    return L.run_laws(f"BCK internal state of type {_kind(kind)}", bck_state_laws(B, u, kind), B.n, B.leq)


def is_bck_state(B, mu, kind=TYPE_I) -> bool:
    u = tuple(mu)
    return all(law.sweep(B.n, B.leq).ok for law in bck_state_laws(B, u, kind))


def bck_morphism_laws(B: FiniteBckMs, u) -> list:
    m, ar, sq = B.meet, B.arrow, B.squig
    return [
        L.eq("μ(x→y) = μx → μy", 2, lambda x, y: u[ar[x][y]], lambda x, y: ar[u[x]][u[y]]),
        L.eq("μ(x⇝y) = μx ⇝ μy", 2, lambda x, y: u[sq[x][y]], lambda x, y: sq[u[x]][u[y]]),
        L.eq("μ(x∧y) = μx ∧ μy", 2, lambda x, y: u[m[x][y]], lambda x, y: m[u[x]][u[y]]),
        L.eq("μ(1) = 1", 0, lambda: u[B.top], lambda: B.top),
        L.eq("μμx = μx", 1, lambda x: u[u[x]], lambda x: u[x]),
    ]


def is_bck_morphism(B, mu) -> bool:
    u = tuple(mu)
    return all(law.sweep(B.n, B.leq).ok for law in bck_morphism_laws(B, u))


def enumerate_bck_states(B: FiniteBckMs, kind=TYPE_I) -> list:
    return sorted(op for op in candidate_operators(B) if is_bck_state(B, op, kind))


def enumerate_bck_morphisms(B: FiniteBckMs) -> list:
    return sorted(op for op in candidate_operators(B) if is_bck_morphism(B, op))


# -- correspondence -------------------------------------------------------------

@dataclass
class Relation:
    name: str
    holds: bool
    asserted: bool
    witness: Optional[tuple] = None


@dataclass
class CorrespondenceReport:
    sets: dict
    relations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.relations if r.asserted)

    def relation(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)


def _subset(name, left, right, asserted) -> Relation:
    extra = [op for op in left if op not in set(right)]
    return Relation(name, not extra, asserted, extra[0] if extra else None)


def _equal(name, left, right, asserted) -> Relation:
    a, b = set(left), set(right)
    diff = sorted(a ^ b)
    return Relation(name, not diff, asserted, diff[0] if diff else None)


def state_correspondence(A: FiniteEqAlgebra, max_size: int = MAX_SIZE) -> CorrespondenceReport:
    from .algebra import is_commutative

    if A.n > max_size:
        raise SizeBoundExceeded(f"carrier of size {A.n} exceeds bound {max_size}")
    B = psi(A)
    cands = list(candidate_operators(A))
    sets = {
        "IS_I": [op for op in cands if is_state(A, op, TYPE_I)],
        "IS_II": [op for op in cands if is_state(A, op, TYPE_II)],
        "SM": [op for op in cands if is_morphism(A, op)],
        "SB_I": [op for op in cands if is_bck_state(B, op, TYPE_I)],
        "SB_II": [op for op in cands if is_bck_state(B, op, TYPE_II)],
        "SM_BCK": [op for op in cands if is_bck_morphism(B, op)],
    }
    back = phi(B, check=False)
    sets["IS_I(Φ)"] = [op for op in cands if is_state(back, op, TYPE_I)]
    sets["IS_II(Φ)"] = [op for op in cands if is_state(back, op, TYPE_II)]
    sets["SM(Φ)"] = [op for op in cands if is_morphism(back, op)]
    rel = [
        _subset("SM ⊆ IS_I", sets["SM"], sets["IS_I"], True),
        _subset("IS_I ⊆ SB_I", sets["IS_I"], sets["SB_I"], True),
        _subset("IS_II ⊆ SB_II", sets["IS_II"], sets["SB_II"], True),
        _subset("SM ⊆ SM_BCK", sets["SM"], sets["SM_BCK"], True),
        _subset("SB_I ⊆ IS_I(Φ)", sets["SB_I"], sets["IS_I(Φ)"], True),
        _subset("SB_II ⊆ IS_II(Φ)", sets["SB_II"], sets["IS_II(Φ)"], True),
        _subset("SM_BCK ⊆ SM(Φ)", sets["SM_BCK"], sets["SM(Φ)"], True),
    ]
    # The reverse inclusions on linear symmetric algebras are measured, not
    # asserted: the 3-chain with 1~0 = e and μ = (0, 1, 1) is a BCK
    # morphism of Ψ(A) but not a state-morphism of A, because Ψ forgets ~
    # values such as 1~0.
    rel += [
        _subset("SB_I ⊆ IS_I", sets["SB_I"], sets["IS_I"], False),
        _subset("SB_II ⊆ IS_II", sets["SB_II"], sets["IS_II"], False),
        _subset("SM_BCK ⊆ SM", sets["SM_BCK"], sets["SM"], False),
        _equal("IS_I = IS_II", sets["IS_I"], sets["IS_II"], is_commutative(A)),
    ]
    return CorrespondenceReport(sets, rel)


def state_violations(A: FiniteEqAlgebra, sigma, kind=TYPE_I, strong: bool = False) -> list:
    """Every violating tuple of every state law, not just the first."""
    s = check_operator(A, sigma)
    return L.all_violations(state_laws(A, s, kind, strong), A.n, A.leq)
