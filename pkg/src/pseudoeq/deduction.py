"""Deductive systems, congruences and quotients.

Subsets of the carrier are plain ``int`` bitmasks (bit i set iff element i is
a member).  Lists of subsets are sorted by (popcount, mask).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .algebra import MAX_SIZE, FiniteEqAlgebra, is_invariant, verify_axioms
from .errors import NotNormal, SizeBoundExceeded

RAW_CONGRUENCE_BOUND = 6


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask: int, n: int) -> list:
    return [i for i in range(n) if mask >> i & 1]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_key(mask: int) -> tuple:
    return (popcount(mask), mask)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_tokens(A, mask: int) -> list:
    return [A.names[i] for i in members(mask, A.n)]


def is_up_closed(A, mask: int) -> bool:
    le = A.leq
    for x in members(mask, A.n):
        for y in range(A.n):
            if le[x][y] and not mask >> y & 1:
                return False
    return True


# -- individual conditions ------------------------------------------------

def _ds1(A, D):
    return None if D >> A.top & 1 else (A.top,)


def _ds2(A, D):
    le = A.leq
    for x in range(A.n):
        if not D >> x & 1:
            continue
        for y in range(A.n):
            if le[x][y] and not D >> y & 1:
                return (x, y)
    return None


def _detach(A, D, term):
    """First (x, y) with x and term(x, y) in D but y not in D."""
    for x in range(A.n):
        if not D >> x & 1:
            continue
        for y in range(A.n):
            if D >> term(x, y) & 1 and not D >> y & 1:
                return (x, y)
    return None


def _ds3(A, D):
    # x, y~x ∈ D ⇒ y ∈ D
    return _detach(A, D, lambda x, y: A.tilde[y][x])


def _ds3p(A, D):
    # x, x∽y ∈ D ⇒ y ∈ D
    return _detach(A, D, lambda x, y: A.btilde[x][y])


def _normal(A, D):
    t, b = A.tilde, A.btilde
    for x, y in itertools.product(range(A.n), repeat=2):
        left = D >> t[x][y] & 1 and D >> t[y][x] & 1
        right = D >> b[y][x] & 1 and D >> b[x][y] & 1
        if bool(left) != bool(right):
            return (x, y)
    return None


def _closed(A, D):
    for x, y in itertools.product(members(D, A.n), repeat=2):
        if not (D >> A.tilde[x][y] & 1 and D >> A.btilde[x][y] & 1):
            return (x, y)
    return None


def _subalgebra(A, D):
    for x, y in itertools.product(members(D, A.n), repeat=2):
        for T in (A.meet, A.tilde, A.btilde):
            if not D >> T[x][y] & 1:
                return (x, y)
    return None


@dataclass
class DsStatus:
    mask: int
    is_ds: bool
    is_normal: bool
    is_closed: bool
    is_proper: bool
    is_maximal: bool
    witnesses: dict = field(default_factory=dict)
    # set when DS3 and DS3' disagree on this subset
    ds3_mismatch: bool = False

    def flags(self) -> dict:
        return {
            "ds": self.is_ds,
            "normal": self.is_normal,
            "closed": self.is_closed,
            "proper": self.is_proper,
            "maximal": self.is_maximal,
        }


def ds_status(A: FiniteEqAlgebra, D: int, all_ds: Optional[list] = None) -> DsStatus:
    w = {}
    for name, fn in (("DS1", _ds1), ("DS2", _ds2), ("DS3", _ds3), ("DS3'", _ds3p)):
        bad = fn(A, D)
        if bad is not None:
            w[name] = bad
    ds3 = "DS3" not in w
    ds3p = "DS3'" not in w
    is_ds = "DS1" not in w and "DS2" not in w and ds3 and ds3p
    normal = closed = False
    if is_ds:
        bad = _normal(A, D)
        normal = bad is None
        if bad is not None:
            w["DS4"] = bad
        bad = _closed(A, D)
        closed = bad is None
        if bad is not None:
            w["closed"] = bad
    proper = D != full_mask(A.n)
    maximal = False
    if is_ds and proper:
        if all_ds is None:
            all_ds = enumerate_ds(A)
        bigger = [E for E in all_ds if E != D and E & D == D and E != full_mask(A.n)]
        maximal = not bigger
        if bigger:
            w["maximal"] = tuple(members(bigger[0], A.n))
    return DsStatus(D, is_ds, normal, closed, proper, maximal, w, ds3 != ds3p)


def is_ds(A, D: int) -> bool:
    return all(fn(A, D) is None for fn in (_ds1, _ds2, _ds3, _ds3p))


def is_normal_ds(A, D: int) -> bool:
    return is_ds(A, D) and _normal(A, D) is None


def up_sets(A) -> list:
    """All up-closed subsets containing top, by a pruned walk over the elements.

    Elements are decided from the top of a linear extension downwards, so
    every element's strict upper bounds are decided first.
    """
    n, le = A.n, A.leq
    order = sorted(range(n), key=lambda x: sum(le[x][y] for y in range(n)))
    out = []

    def rec(k, mask):
        if k == n:
            out.append(mask)
            return
        x = order[k]
        if x == A.top:
            rec(k + 1, mask | 1 << x)
            return
        rec(k + 1, mask)
        if all(mask >> y & 1 for y in range(n) if le[x][y] and y != x):
            rec(k + 1, mask | 1 << x)

    rec(0, 0)
    return sorted(out, key=mask_key)


def enumerate_ds(A: FiniteEqAlgebra, normal_only: bool = False, max_size: int = MAX_SIZE) -> list:
    if A.n > max_size:
        raise SizeBoundExceeded(f"carrier of size {A.n} exceeds bound {max_size}")
    out = [D for D in up_sets(A) if is_ds(A, D)]
    if normal_only:
        out = [D for D in out if _normal(A, D) is None]
    return out


def enumerate_ds_raw(A: FiniteEqAlgebra) -> list:
    """Unpruned powerset filter; used to cross-check ``enumerate_ds``."""
    return sorted((D for D in range(1 << A.n) if is_ds(A, D)), key=mask_key)


def generated_ds(A: FiniteEqAlgebra, X: int) -> int:
    """Least deductive system containing X: close under up-sets and detachment."""
    D = X | 1 << A.top
    le, t, b = A.leq, A.tilde, A.btilde
    changed = True
    while changed:
        changed = False
        for x in members(D, A.n):
            for y in range(A.n):
                if D >> y & 1:
                    continue
                if le[x][y] or D >> t[y][x] & 1 or D >> b[x][y] & 1:
                    D |= 1 << y
                    changed = True
    return D


def is_simple(A: FiniteEqAlgebra) -> bool:
    ds = enumerate_ds(A)
    return ds == sorted({1 << A.top, full_mask(A.n)}, key=mask_key)


# -- congruences -----------------------------------------------------------

def canonical_partition(classes) -> tuple:
    """Class-id vector where ids are assigned in order of first appearance."""
    ids = {}
    out = []
    for c in classes:
        if c not in ids:
            ids[c] = len(ids)
        out.append(ids[c])
    return tuple(out)


def partition_classes(part) -> list:
    groups = {}
    for i, c in enumerate(part):
        groups.setdefault(c, []).append(i)
    return [groups[c] for c in sorted(groups)]


def is_congruence(A: FiniteEqAlgebra, part) -> Optional[tuple]:
    """Return None if ``part`` satisfies CG1-CG3, else the first bad (x1, y1, x2, y2)."""
    n = A.n
    pairs = [(x, y) for x in range(n) for y in range(n) if part[x] == part[y]]
    for (x1, y1), (x2, y2) in itertools.product(pairs, repeat=2):
        for T in (A.meet, A.tilde, A.btilde):
            if part[T[x1][x2]] != part[T[y1][y2]]:
                return (x1, y1, x2, y2)
    return None


def _partitions(n):
    """Restricted growth strings of length n."""
    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(top + 2):
            yield from rec(prefix + [c], max(top, c))

    if n == 0:
        return
    yield from rec([0], 0)


def theta(A: FiniteEqAlgebra, H: int) -> tuple:
    """Θ_H: x ~ y and y ~ x both in H; returned as a canonical class-id vector."""
    n, t = A.n, A.tilde
    rel = [[bool(H >> t[x][y] & 1 and H >> t[y][x] & 1) for y in range(n)] for x in range(n)]
    cls = []
    for x in range(n):
        cls.append(min(y for y in range(n) if rel[x][y] or x == y))
    return canonical_partition(cls)


def theta_is_equivalence(A, H: int) -> bool:
    n, t = A.n, A.tilde
    rel = lambda x, y: bool(H >> t[x][y] & 1 and H >> t[y][x] & 1)
    for x, y, z in itertools.product(range(n), repeat=3):
        if rel(x, y) and rel(y, z) and not rel(x, z):
            return False
    return all(rel(x, x) for x in range(n))


def one_class(A, part) -> int:
    return mask_of(i for i in range(A.n) if part[i] == part[A.top])


@dataclass
class CongruenceReport:
    partitions: list
    raw: bool
    from_normal_ds: dict
    bijection: Optional[bool]  # all normal deductive systems
    closed_bijection: Optional[bool] = None  # closed normal ones only
    invariant: bool = False

    @property
    def ok(self) -> bool:
        """Closed normal systems always match the congruences; for an
        invariant algebra every deductive system is closed, so all do."""
        if not self.raw:
            return True
        return bool(self.closed_bijection) and (self.bijection or not self.invariant)


def congruences(A: FiniteEqAlgebra, raw_bound: int = RAW_CONGRUENCE_BOUND) -> CongruenceReport:
    """Congruence partitions plus the H ↦ Θ_H map over normal deductive systems.

    Raw enumeration of all partitions is done only when n ≤ raw_bound;
    otherwise the list holds the Θ_H partitions only and ``raw`` is False.
    """
    normal = enumerate_ds(A, normal_only=True)
    induced = {H: theta(A, H) for H in normal}
    if A.n <= raw_bound:
        parts = sorted(p for p in _partitions(A.n) if is_congruence(A, p) is None)
        raw = True
    else:
        parts = sorted({p for p in induced.values() if is_congruence(A, p) is None})
        raw = False
    bijection = closed_bijection = None
    if raw:
        images = set(induced.values())
        bijection = len(images) == len(normal) and images == set(parts)
        closed = [H for H in normal if _closed(A, H) is None]
        cimages = {induced[H] for H in closed}
        closed_bijection = len(cimages) == len(closed) and cimages == set(parts)
    return CongruenceReport(parts, raw, induced, bijection, closed_bijection, is_invariant(A))


def quotient(A: FiniteEqAlgebra, H: int) -> tuple:
    """Return (A/Θ_H, projection list old index -> class index)."""
    if not is_normal_ds(A, H):
        raise NotNormal(f"{mask_tokens(A, H)} is not a normal deductive system")
    part = theta(A, H)
    classes = partition_classes(part)
    rep = [c[0] for c in classes]
    proj = list(part)
    names = tuple(A.names[r] + "/H" for r in rep)

    def induced(T):
        return tuple(tuple(proj[T[x][y]] for y in rep) for x in rep)

    Q = FiniteEqAlgebra(names, proj[A.top], induced(A.meet), induced(A.tilde), induced(A.btilde))
    return Q, proj


def projection_is_homomorphism(A, Q, proj) -> bool:
    for x, y in itertools.product(range(A.n), repeat=2):
        for T, U in ((A.meet, Q.meet), (A.tilde, Q.tilde), (A.btilde, Q.btilde)):
            if proj[T[x][y]] != U[proj[x]][proj[y]]:
                return False
    return proj[A.top] == Q.top


def quotient_ok(A, H) -> bool:
    Q, proj = quotient(A, H)
    return verify_axioms(Q).ok and projection_is_homomorphism(A, Q, proj)


# -- BCK-side deductive systems ----------------------------------------------

def is_bck_ds(B, D: int) -> bool:
    if not D >> B.top & 1:
        return False
    for x in members(D, B.n):
        for y in range(B.n):
            if D >> B.arrow[x][y] & 1 and not D >> y & 1:
                return False
    return True


def enumerate_bck_ds(B) -> list:
    return sorted((D for D in range(1 << B.n) if is_bck_ds(B, D)), key=mask_key)


def is_bck_subalgebra(B, D: int) -> bool:
    for x, y in itertools.product(members(D, B.n), repeat=2):
        for T in (B.meet, B.arrow, B.squig):
            if not D >> T[x][y] & 1:
                return False
    return True
