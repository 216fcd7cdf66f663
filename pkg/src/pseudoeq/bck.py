"""Pseudo BCK-meet-semilattices, pseudo-hoops and the two transforms between
pseudo equality algebras and pseudo BCK(pC)-meet-semilattices.

``psi`` sends an algebra to ``(∧, →, ⇝)`` with x→y = (x∧y)~x and
x⇝y = x∽(x∧y); ``phi`` goes back with x~y = y→x and x∽y = x⇝y.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from . import laws as L
from .algebra import (
    MAX_SIZE,
    FiniteEqAlgebra,
    bottom_of,
    check_names,
    check_semilattice,
    classify,
    index_table,
    is_linear,
    order_matrix,
    semilattice_check,
)
from .errors import MeetIllDefined, NotASemilattice, PreconditionPCFailed, TopNotGreatest, UnknownToken
from .laws import Check, Report


@dataclass(frozen=True)
class FiniteBckMs:
    names: tuple
    top: int
    meet: tuple
    arrow: tuple
    squig: tuple

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def leq(self) -> tuple:
        return order_matrix(self.meet)

    @cached_property
    def bottom(self) -> Optional[int]:
        return bottom_of(self.meet)

    def tables(self) -> dict:
        return {"meet": self.meet, "arrow": self.arrow, "squig": self.squig}


@dataclass(frozen=True)
class FinitePseudoHoop:
    names: tuple
    top: int
    prod: tuple
    arrow: tuple
    squig: tuple

    @property
    def n(self) -> int:
        return len(self.names)

    def tables(self) -> dict:
        return {"prod": self.prod, "arrow": self.arrow, "squig": self.squig}


def _resolve_top(names, top):
    if isinstance(top, str):
        if top not in names:
            raise UnknownToken(top)
        return names.index(top)
    if not 0 <= top < len(names):
        raise UnknownToken(top)
    return top


def build_bck(names, meet, arrow, squig, top, max_size: int = MAX_SIZE) -> FiniteBckMs:
    names = check_names(names, max_size)
    top = _resolve_top(names, top)
    meet = index_table(meet, names, "meet")
    arrow = index_table(arrow, names, "arrow")
    squig = index_table(squig, names, "squig")
    check_semilattice(meet, top)
    return FiniteBckMs(names, top, meet, arrow, squig)


def build_hoop(names, prod, arrow, squig, top, max_size: int = MAX_SIZE) -> FinitePseudoHoop:
    names = check_names(names, max_size)
    top = _resolve_top(names, top)
    return FinitePseudoHoop(
        names,
        top,
        index_table(prod, names, "prod"),
        index_table(arrow, names, "arrow"),
        index_table(squig, names, "squig"),
    )


def bck_laws(B: FiniteBckMs) -> list:
    ar, sq, one, le = B.arrow, B.squig, B.top, B.leq
    return [
        L.eq("B1' (x→y)⇝((y→z)⇝(x→z)) = 1", 3,
             lambda x, y, z: sq[ar[x][y]][sq[ar[y][z]][ar[x][z]]], lambda x, y, z: one),
        L.eq("B2' (x⇝y)→((y⇝z)→(x⇝z)) = 1", 3,
             lambda x, y, z: ar[sq[x][y]][ar[sq[y][z]][sq[x][z]]], lambda x, y, z: one),
        L.eq("B3' 1→x = x", 1, lambda x: ar[one][x], lambda x: x),
        L.eq("B4' 1⇝x = x", 1, lambda x: sq[one][x], lambda x: x),
        L.eq("B5' x→1 = 1", 1, lambda x: ar[x][one], lambda x: one),
        L.eq("B6' x→y = 1 = y→x ⇒ x = y", 2, lambda x, y: x, lambda x, y: y,
             lambda x, y: ar[x][y] == one and ar[y][x] == one),
        L.iff("order: x ≤ y iff x→y = 1", 2, lambda x, y: le[x][y], lambda x, y: ar[x][y] == one),
        L.iff("order: x ≤ y iff x⇝y = 1", 2, lambda x, y: le[x][y], lambda x, y: sq[x][y] == one),
    ]


def verify_bck(B: FiniteBckMs) -> Report:
    report = Report("pseudo BCK-meet-semilattice axioms", [semilattice_check(B.meet, B.top)])
    report.extend(L.run_laws("", bck_laws(B), B.n, B.leq))
    return report


def pc_check(B) -> list:
    m, ar, sq = B.meet, B.arrow, B.squig
    return [
        L.le("pC x→y ≤ (x∧z)→(y∧z)", 3,
             lambda x, y, z: ar[x][y], lambda x, y, z: ar[m[x][z]][m[y][z]]).sweep(B.n, B.leq),
        L.le("pC x⇝y ≤ (x∧z)⇝(y∧z)", 3,
             lambda x, y, z: sq[x][y], lambda x, y, z: sq[m[x][z]][m[y][z]]).sweep(B.n, B.leq),
    ]


def pd_check(B) -> list:
    m, ar, sq = B.meet, B.arrow, B.squig
    return [
        L.eq("pD x→(y∧z) = (x→y)∧(x→z)", 3,
             lambda x, y, z: ar[x][m[y][z]], lambda x, y, z: m[ar[x][y]][ar[x][z]]).sweep(B.n, B.leq),
        L.eq("pD x⇝(y∧z) = (x⇝y)∧(x⇝z)", 3,
             lambda x, y, z: sq[x][m[y][z]], lambda x, y, z: m[sq[x][y]][sq[x][z]]).sweep(B.n, B.leq),
    ]


def _unique_min(cands, le) -> Optional[int]:
    for c in cands:
        if all(le[c][d] for d in cands):
            return c
    return None


def product_table(B) -> tuple:
    """Return (prod table or None, first failing pair or None).

    x⊙y must be the least element of {z | x ≤ y→z} and of {z | y ≤ x⇝z}.
    """
    n, le, ar, sq = B.n, B.leq, B.arrow, B.squig
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            s1 = [z for z in range(n) if le[x][ar[y][z]]]
            s2 = [z for z in range(n) if le[y][sq[x][z]]]
            m1, m2 = _unique_min(s1, le), _unique_min(s2, le)
            if m1 is None or m2 is None or m1 != m2:
                return None, (x, y)
            row.append(m1)
        rows.append(tuple(row))
    return tuple(rows), None


@dataclass
class BckConditionReport:
    pC: bool
    pD: bool
    pP: bool
    prod: Optional[tuple]
    commutative: bool
    linear: bool
    report: Report

    @property
    def ok(self) -> bool:
        # "ok" means the structural implication pD ⇒ pC held
        return self.report["pD ⇒ pC"].ok


def bck_commutative_checks(B) -> list:
    ar, sq = B.arrow, B.squig
    return [
        L.eq("(x→y)⇝y = (y→x)⇝x", 2,
             lambda x, y: sq[ar[x][y]][y], lambda x, y: sq[ar[y][x]][x]).sweep(B.n, B.leq),
        L.eq("(x⇝y)→y = (y⇝x)→x", 2,
             lambda x, y: ar[sq[x][y]][y], lambda x, y: ar[sq[y][x]][x]).sweep(B.n, B.leq),
    ]


def check_conditions(B: FiniteBckMs) -> BckConditionReport:
    pc = pc_check(B)
    pd = pd_check(B)
    prod, bad = product_table(B)
    comm = bck_commutative_checks(B)
    is_pc = all(c.ok for c in pc)
    is_pd = all(c.ok for c in pd)
    checks = pc + pd
    checks.append(Check("pP x⊙y = min{z | x ≤ y→z} = min{z | y ≤ x⇝z}", prod is not None, bad))
    checks.extend(comm)
    checks.append(Check("pD ⇒ pC", is_pc or not is_pd))
    rem = []
    if is_pc:
        m, ar, sq = B.meet, B.arrow, B.squig
        rem = [
            L.eq("pC ⇒ x→(x∧y) = x→y", 2,
                 lambda x, y: ar[x][m[x][y]], lambda x, y: ar[x][y]).sweep(B.n, B.leq),
            L.eq("pC ⇒ x⇝(x∧y) = x⇝y", 2,
                 lambda x, y: sq[x][m[x][y]], lambda x, y: sq[x][y]).sweep(B.n, B.leq),
        ]
    checks.extend(rem)
    return BckConditionReport(
        pC=is_pc,
        pD=is_pd,
        pP=prod is not None,
        prod=prod,
        commutative=all(c.ok for c in comm),
        linear=is_linear(B),
        report=Report("BCK conditions", checks),
    )


def is_pc(B) -> bool:
    return all(c.ok for c in pc_check(B))


def psi(A: FiniteEqAlgebra) -> FiniteBckMs:
    return FiniteBckMs(A.names, A.top, A.meet, A.arrow, A.squig)


def phi(B: FiniteBckMs, check: bool = True) -> FiniteEqAlgebra:
    if check:
        rep = verify_bck(B)
        if not rep.ok:
            bad = rep.failures()[0]
            raise PreconditionPCFailed(f"not a pseudo BCK-meet-semilattice: {bad.name}", bad.witness)
        for c in pc_check(B):
            if not c.ok:
                raise PreconditionPCFailed(f"(pC) fails: {c.name}", c.witness)
    n = B.n
    tilde = tuple(tuple(B.arrow[y][x] for y in range(n)) for x in range(n))
    return FiniteEqAlgebra(B.names, B.top, B.meet, tilde, B.squig)


@dataclass(frozen=True)
class RoundTrip:
    psi_phi_psi_equal: bool
    phi_psi_equal: bool
    invariant: bool

    @property
    def consistent(self) -> bool:
        return self.psi_phi_psi_equal and self.phi_psi_equal == self.invariant


def roundtrip_report(A: FiniteEqAlgebra) -> RoundTrip:
    P = psi(A)
    back = phi(P, check=False)
    rt = RoundTrip(
        psi_phi_psi_equal=psi(back) == P,
        phi_psi_equal=back == A,
        invariant=classify(A, with_simple=False).invariant,
    )
    assert rt.psi_phi_psi_equal, "psi(phi(psi(A))) differs from psi(A)"
    assert rt.phi_psi_equal == rt.invariant, "invariance test disagrees with the round trip"
    return rt


def hoop_laws(H: FinitePseudoHoop) -> list:
    p, ar, sq, one = H.prod, H.arrow, H.squig, H.top
    return [
        L.eq("PH1 x⊙1 = x", 1, lambda x: p[x][one], lambda x: x),
        L.eq("PH1 1⊙x = x", 1, lambda x: p[one][x], lambda x: x),
        L.eq("PH2 x→x = 1", 1, lambda x: ar[x][x], lambda x: one),
        L.eq("PH2 x⇝x = 1", 1, lambda x: sq[x][x], lambda x: one),
        L.eq("PH3 (x⊙y)→z = x→(y→z)", 3,
             lambda x, y, z: ar[p[x][y]][z], lambda x, y, z: ar[x][ar[y][z]]),
        L.eq("PH4 (x⊙y)⇝z = y⇝(x⇝z)", 3,
             lambda x, y, z: sq[p[x][y]][z], lambda x, y, z: sq[y][sq[x][z]]),
        L.eq("PH5 (x→y)⊙x = (y→x)⊙y", 2,
             lambda x, y: p[ar[x][y]][x], lambda x, y: p[ar[y][x]][y]),
        L.eq("PH5 (x→y)⊙x = x⊙(x⇝y)", 2,
             lambda x, y: p[ar[x][y]][x], lambda x, y: p[x][sq[x][y]]),
        L.eq("PH5 (x→y)⊙x = y⊙(y⇝x)", 2,
             lambda x, y: p[ar[x][y]][x], lambda x, y: p[y][sq[y][x]]),
    ]


def verify_pseudo_hoop(H: FinitePseudoHoop) -> Report:
    return L.run_laws("pseudo-hoop axioms", hoop_laws(H), H.n, None)


def hoop_meet(H: FinitePseudoHoop) -> tuple:
    n, p, ar, sq = H.n, H.prod, H.arrow, H.squig
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            vals = {p[ar[x][y]][x], p[ar[y][x]][y], p[x][sq[x][y]], p[y][sq[y][x]]}
            if len(vals) != 1:
                raise MeetIllDefined(f"meet expressions disagree at ({x}, {y})", (x, y))
            row.append(vals.pop())
        rows.append(tuple(row))
    return tuple(rows)


def hoop_to_bck(H: FinitePseudoHoop) -> FiniteBckMs:
    meet = hoop_meet(H)
    try:
        check_semilattice(meet, H.top)
    except (NotASemilattice, TopNotGreatest) as exc:
        raise MeetIllDefined(f"induced meet invalid: {exc}", exc.witness) from None
    return FiniteBckMs(H.names, H.top, meet, H.arrow, H.squig)


def hoop_to_eq(H: FinitePseudoHoop) -> FiniteEqAlgebra:
    """x~y = y→x, x∽y = x⇝y, x∧y = (x→y)⊙x."""
    return phi(hoop_to_bck(H), check=False)
