"""Pointed algebras: negations relative to a point, goodness, involutivity,
compatibility, the closure γ and the regular elements.

For a point a the four negations are

    x^{~a} = a ~ x      x^{∽a} = x ∽ a
    x^{→a} = x → a      x^{⇝a} = x ⇝ a

and γ(x) = x^{~a∽a} = (a ~ x) ∽ a.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import laws as L
from .algebra import FiniteEqAlgebra
from .deduction import mask_of
from .errors import NotCompatible, UnknownToken
from .laws import Check, Report


@dataclass(frozen=True)
class PointedEqAlgebra:
    base: FiniteEqAlgebra
    point: int

    def __post_init__(self):
        if not 0 <= self.point < self.base.n:
            raise UnknownToken(self.point)

    @classmethod
    def at(cls, A: FiniteEqAlgebra, token) -> "PointedEqAlgebra":
        return cls(A, A.index(token) if isinstance(token, str) else token)


@dataclass(frozen=True)
class NegationTables:
    tilde_a: tuple
    btilde_a: tuple
    arrow_a: tuple
    squig_a: tuple


def negations(P: PointedEqAlgebra) -> NegationTables:
    A, a, r = P.base, P.point, range(P.base.n)
    return NegationTables(
        tuple(A.tilde[a][x] for x in r),
        tuple(A.btilde[x][a] for x in r),
        tuple(A.arrow[x][a] for x in r),
        tuple(A.squig[x][a] for x in r),
    )


def _compose(f, g):
    """x ↦ g(f(x)), i.e. the exponent order x^{f g}."""
    return tuple(g[v] for v in f)


def double_negations(P: PointedEqAlgebra) -> dict:
    N = negations(P)
    return {
        "~∽": _compose(N.tilde_a, N.btilde_a),
        "∽~": _compose(N.btilde_a, N.tilde_a),
        "→⇝": _compose(N.arrow_a, N.squig_a),
        "⇝→": _compose(N.squig_a, N.arrow_a),
    }


def gamma_table(P: PointedEqAlgebra) -> tuple:
    return double_negations(P)["~∽"]


@dataclass
class PointedClass:
    good_sim: bool
    good_arrow: bool
    involutive_sim: bool
    involutive_arrow: bool
    compatible: bool
    report: Report

    def as_dict(self) -> dict:
        return {
            "good_sim": self.good_sim,
            "good_arrow": self.good_arrow,
            "involutive_sim": self.involutive_sim,
            "involutive_arrow": self.involutive_arrow,
            "compatible": self.compatible,
        }


def compatibility_laws(P: PointedEqAlgebra) -> list:
    A = P.base
    N = negations(P)
    g = gamma_table(P)
    t, b, m = A.tilde, A.btilde, A.meet
    ta, ba = N.tilde_a, N.btilde_a
    return [
        L.eq("C1 γ(x~y) = γx ~ γy", 2, lambda x, y: g[t[x][y]], lambda x, y: t[g[x]][g[y]]),
        L.eq("C2 γ(x∽y) = γx ∽ γy", 2, lambda x, y: g[b[x][y]], lambda x, y: b[g[x]][g[y]]),
        L.eq("C3 γ(x∧y) = γx ∧ γy", 2, lambda x, y: g[m[x][y]], lambda x, y: m[g[x]][g[y]]),
        L.eq("C4 x^{~a∽a~a} = x^{~a}", 1, lambda x: ta[ba[ta[x]]], lambda x: ta[x]),
        L.eq("C4 x^{∽a~a∽a} = x^{∽a}", 1, lambda x: ba[ta[ba[x]]], lambda x: ba[x]),
    ]


def pointed_class(P: PointedEqAlgebra) -> PointedClass:
    A = P.base
    d = double_negations(P)
    checks = [
        L.eq("good x^{~a∽a} = x^{∽a~a}", 1, lambda x: d["~∽"][x], lambda x: d["∽~"][x]),
        L.eq("good x^{→a⇝a} = x^{⇝a→a}", 1, lambda x: d["→⇝"][x], lambda x: d["⇝→"][x]),
        L.eq("involutive x^{~a∽a} = x", 1, lambda x: d["~∽"][x], lambda x: x),
        L.eq("involutive x^{∽a~a} = x", 1, lambda x: d["∽~"][x], lambda x: x),
        L.eq("involutive x^{→a⇝a} = x", 1, lambda x: d["→⇝"][x], lambda x: x),
        L.eq("involutive x^{⇝a→a} = x", 1, lambda x: d["⇝→"][x], lambda x: x),
    ]
    checks += compatibility_laws(P)
    report = L.run_laws("pointed class", checks, A.n, A.leq)
    c = report.checks
    good_sim = c[0].ok
    compat = good_sim and all(x.ok for x in c[6:])
    return PointedClass(
        good_sim=good_sim,
        good_arrow=c[1].ok,
        involutive_sim=c[2].ok and c[3].ok,
        involutive_arrow=c[4].ok and c[5].ok,
        compatible=compat,
        report=report,
    )


def is_compatible(P: PointedEqAlgebra) -> bool:
    return pointed_class(P).compatible


def closure_checks(A, g) -> list:
    n, le = A.n, A.leq
    return [
        L.le("extensive x ≤ γx", 1, lambda x: x, lambda x: g[x]).sweep(n, le),
        L.le("monotone x ≤ y ⇒ γx ≤ γy", 2, lambda x, y: g[x], lambda x, y: g[y],
             lambda x, y: le[x][y]).sweep(n, le),
        L.eq("idempotent γγx = γx", 1, lambda x: g[g[x]], lambda x: g[x]).sweep(n, le),
    ]


def gamma_closure(P: PointedEqAlgebra) -> tuple:
    """Return (γ table, closure-operator Report). Requires compatibility."""
    if not is_compatible(P):
        raise NotCompatible(f"not compatible with respect to {P.base.names[P.point]}")
    g = gamma_table(P)
    return g, Report("γ closure operator", closure_checks(P.base, g))


def regular_elements(P: PointedEqAlgebra) -> int:
    d = double_negations(P)
    return mask_of(x for x in range(P.base.n) if d["~∽"][x] == x and d["∽~"][x] == x)


def is_subalgebra_mask(A, mask: int) -> bool:
    for x in range(A.n):
        if not mask >> x & 1:
            continue
        for y in range(A.n):
            if not mask >> y & 1:
                continue
            for T in (A.meet, A.tilde, A.btilde):
                if not mask >> T[x][y] & 1:
                    return False
    return bool(mask >> A.top & 1)


def pointed_laws(P: PointedEqAlgebra) -> Report:
    """Identities that hold for every pointed algebra, plus the conditional ones
    whose hypotheses hold at this point."""
    A, a = P.base, P.point
    one, le, n = A.top, A.leq, A.n
    t, b, ar, sq = A.tilde, A.btilde, A.arrow, A.squig
    N = negations(P)
    ta, ba, ra, qa = N.tilde_a, N.btilde_a, N.arrow_a, N.squig_a
    d = double_negations(P)
    laws = [
        L.eq("1^{~a} = a", 0, lambda: ta[one], lambda: a),
        L.eq("1^{∽a} = a", 0, lambda: ba[one], lambda: a),
        L.eq("1^{~a∽a} = 1", 0, lambda: d["~∽"][one], lambda: one),
        L.eq("1^{∽a~a} = 1", 0, lambda: d["∽~"][one], lambda: one),
        L.eq("a^{~a} = 1", 0, lambda: ta[a], lambda: one),
        L.eq("a^{∽a} = 1", 0, lambda: ba[a], lambda: one),
        L.eq("a^{~a∽a} = a", 0, lambda: d["~∽"][a], lambda: a),
        L.eq("a^{∽a~a} = a", 0, lambda: d["∽~"][a], lambda: a),
        L.le("x ≤ x^{~a∽a}", 1, lambda x: x, lambda x: d["~∽"][x]),
        L.le("x ≤ x^{∽a~a}", 1, lambda x: x, lambda x: d["∽~"][x]),
        L.le("x~y ≤ x^{~a} ∽ y^{~a}", 2, lambda x, y: t[x][y], lambda x, y: b[ta[x]][ta[y]]),
        L.le("x^{~a} ∽ y^{~a} ≤ γx ~ γy", 2,
             lambda x, y: b[ta[x]][ta[y]], lambda x, y: t[d["~∽"][x]][d["~∽"][y]]),
        L.le("x∽y ≤ x^{∽a} ~ y^{∽a}", 2, lambda x, y: b[x][y], lambda x, y: t[ba[x]][ba[y]]),
        L.le("x^{∽a} ~ y^{∽a} ≤ x^{∽a~a} ∽ y^{∽a~a}", 2,
             lambda x, y: t[ba[x]][ba[y]], lambda x, y: b[d["∽~"][x]][d["∽~"][y]]),
        L.eq("1^{→a} = a", 0, lambda: ra[one], lambda: a),
        L.eq("1^{⇝a} = a", 0, lambda: qa[one], lambda: a),
        L.eq("1^{→a⇝a} = 1", 0, lambda: d["→⇝"][one], lambda: one),
        L.eq("1^{⇝a→a} = 1", 0, lambda: d["⇝→"][one], lambda: one),
        L.eq("a^{→a} = 1", 0, lambda: ra[a], lambda: one),
        L.eq("a^{⇝a} = 1", 0, lambda: qa[a], lambda: one),
        L.eq("a^{→a⇝a} = a", 0, lambda: d["→⇝"][a], lambda: a),
        L.eq("a^{⇝a→a} = a", 0, lambda: d["⇝→"][a], lambda: a),
        L.le("x ≤ x^{→a⇝a}", 1, lambda x: x, lambda x: d["→⇝"][x]),
        L.le("x ≤ x^{⇝a→a}", 1, lambda x: x, lambda x: d["⇝→"][x]),
        L.le("a ≤ x^{→a⇝a}", 1, lambda x: a, lambda x: d["→⇝"][x]),
        L.le("a ≤ x^{⇝a→a}", 1, lambda x: a, lambda x: d["⇝→"][x]),
        L.eq("x^{→a⇝a→a} = x^{→a}", 1, lambda x: ra[qa[ra[x]]], lambda x: ra[x]),
        L.eq("x^{⇝a→a⇝a} = x^{⇝a}", 1, lambda x: qa[ra[qa[x]]], lambda x: qa[x]),
        L.le("x→y ≤ y^{→a} ⇝ x^{→a}", 2, lambda x, y: ar[x][y], lambda x, y: sq[ra[y]][ra[x]]),
        L.le("y^{→a} ⇝ x^{→a} ≤ x^{→a⇝a} → y^{→a⇝a}", 2,
             lambda x, y: sq[ra[y]][ra[x]], lambda x, y: ar[d["→⇝"][x]][d["→⇝"][y]]),
        L.le("x⇝y ≤ y^{⇝a} → x^{⇝a}", 2, lambda x, y: sq[x][y], lambda x, y: ar[qa[y]][qa[x]]),
        L.le("y^{⇝a} → x^{⇝a} ≤ x^{⇝a→a} ⇝ y^{⇝a→a}", 2,
             lambda x, y: ar[qa[y]][qa[x]], lambda x, y: sq[d["⇝→"][x]][d["⇝→"][y]]),
        L.le("x^{~a} ≤ x^{→a}", 1, lambda x: ta[x], lambda x: ra[x]),
        L.le("x^{∽a} ≤ x^{⇝a}", 1, lambda x: ba[x], lambda x: qa[x]),
        L.eq("x ≥ a ⇒ x^{~a} = x^{→a}", 1, lambda x: ta[x], lambda x: ra[x], lambda x: le[a][x]),
        L.eq("x ≥ a ⇒ x^{∽a} = x^{⇝a}", 1, lambda x: ba[x], lambda x: qa[x], lambda x: le[a][x]),
    ]
    if A.bottom == a:
        laws += [
            L.eq("a = 0 ⇒ x^{~a∽a~a} = x^{~a}", 1, lambda x: ta[ba[ta[x]]], lambda x: ta[x]),
            L.eq("a = 0 ⇒ x^{∽a~a∽a} = x^{∽a}", 1, lambda x: ba[ta[ba[x]]], lambda x: ba[x]),
        ]
    cls = pointed_class(P)
    if cls.involutive_sim:
        laws += [
            L.eq("involutive ⇒ x~y = x^{~a} ∽ y^{~a}", 2,
                 lambda x, y: t[x][y], lambda x, y: b[ta[x]][ta[y]]),
            L.eq("involutive ⇒ x∽y = x^{∽a} ~ y^{∽a}", 2,
                 lambda x, y: b[x][y], lambda x, y: t[ba[x]][ba[y]]),
        ]
    if cls.involutive_arrow:
        laws += [
            L.eq("→-involutive ⇒ x→y = y^{→a} ⇝ x^{→a}", 2,
                 lambda x, y: ar[x][y], lambda x, y: sq[ra[y]][ra[x]]),
            L.eq("→-involutive ⇒ x⇝y = y^{⇝a} → x^{⇝a}", 2,
                 lambda x, y: sq[x][y], lambda x, y: ar[qa[y]][qa[x]]),
        ]
    report = L.run_laws("pointed laws", laws, n, le)
    # goodness transfer under the side condition on F1, F2
    f1 = lambda u, x: b[t[u][x]][a]
    f2 = lambda u, x: t[a][b[x][u]]
    side = all(f1(A.meet[x][a], x) == f1(a, x) and f2(A.meet[x][a], x) == f2(a, x) for x in range(n))
    if side:
        report.checks.append(Check("side condition ⇒ (~,∽)-good iff (→,⇝)-good",
                                   cls.good_sim == cls.good_arrow))
    if cls.involutive_sim:
        report.checks.append(Check("involutive ⇒ compatible", cls.compatible))
    reg = regular_elements(P)
    report.checks.append(Check("Reg contains a", bool(reg >> a & 1)))
    report.checks.append(Check("Reg contains 1", bool(reg >> one & 1)))
    report.checks.append(Check("(~,∽)-involutive iff Reg = A",
                               cls.involutive_sim == (reg == (1 << n) - 1)))
    if cls.compatible:
        report.checks.append(Check("compatible ⇒ Reg is a subalgebra", is_subalgebra_mask(A, reg)))
        report.checks.extend(closure_checks(A, gamma_table(P)))
    return report


def crossed_negation_orders(P: PointedEqAlgebra) -> Report:
    """x^{~a} against x^{⇝a} and x^{∽a} against x^{→a}.

    Unlike the matched pairs these are not identities: the 4-element chains
    already contain counterexamples, so the result is informational.
    """
    A = P.base
    N = negations(P)
    laws = [
        L.le("x^{~a} ≤ x^{⇝a}", 1, lambda x: N.tilde_a[x], lambda x: N.squig_a[x]),
        L.le("x^{∽a} ≤ x^{→a}", 1, lambda x: N.btilde_a[x], lambda x: N.arrow_a[x]),
    ]
    return L.run_laws("crossed negation orders", laws, A.n, A.leq)
