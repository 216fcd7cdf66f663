"""Exact linear algebra over the rationals.

Everything here works on ``fractions.Fraction`` values; no floating point.
An equation is a pair ``(coeffs, const)`` meaning ``coeffs · v = const``; an
inequality ``(coeffs, const)`` means ``coeffs · t ≤ const``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional


def frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def normalize_equation(coeffs, const) -> Optional[tuple]:
    """Scale so the first nonzero coefficient is 1; None for the zero row."""
    coeffs = [frac(c) for c in coeffs]
    for c in coeffs:
        if c != 0:
            return tuple(x / c for x in coeffs), frac(const) / c
    return None


@dataclass
class AffineSolution:
    """Solutions of a linear system: ``particular + Σ t_j basis[j]``.

    ``free`` lists the variable index carried by each parameter; basis vector
    j has a 1 at ``free[j]`` and 0 at every other free variable.
    """

    consistent: bool
    particular: tuple = ()
    basis: list = field(default_factory=list)
    free: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis) if self.consistent else -1

    def point(self, params) -> tuple:
        v = list(self.particular)
        for t, b in zip(params, self.basis):
            for i, bi in enumerate(b):
                v[i] += frac(t) * bi
        return tuple(v)


def solve_linear(equations, nvars: int) -> AffineSolution:
    """Reduced row echelon form with pivots taken from the highest-index
    columns first, so the free variables are the lowest-index ones."""
    order = list(reversed(range(nvars)))
    rows = [[frac(c) for c in co] + [frac(k)] for co, k in equations]
    pivots = []
    r = 0
    for col in order:
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    for row in rows[r:]:
        if row[-1] != 0:
            return AffineSolution(False)
    free = [c for c in range(nvars) if c not in pivots]
    particular = [Fraction(0)] * nvars
    for i, col in enumerate(pivots):
        particular[col] = rows[i][-1]
    basis = []
    for f in free:
        v = [Fraction(0)] * nvars
        v[f] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -rows[i][f]
        basis.append(tuple(v))
    return AffineSolution(True, tuple(particular), basis, free)


def satisfies(equations, v, homogeneous: bool = False) -> bool:
    for co, k in equations:
        if dot(co, v) != (0 if homogeneous else frac(k)):
            return False
    return True


def affine_contained(sol: AffineSolution, equations) -> bool:
    """Is every solution in ``sol`` a solution of ``equations``?"""
    if not sol.consistent:
        return True
    return satisfies(equations, sol.particular) and all(
        satisfies(equations, b, homogeneous=True) for b in sol.basis
    )


# -- inequalities -----------------------------------------------------------

def _norm_ineq(co, k):
    """Scale by the largest |coefficient| so equal half-spaces compare equal."""
    m = max((abs(c) for c in co), default=Fraction(0))
    if m == 0:
        return tuple(co), k
    return tuple(c / m for c in co), k / m


def prune(ineqs) -> list:
    """Drop duplicates and keep only the tightest constant per direction."""
    best = {}
    trivial_bad = False
    for co, k in ineqs:
        co, k = _norm_ineq([frac(c) for c in co], frac(k))
        if all(c == 0 for c in co):
            if k < 0:
                trivial_bad = True
            continue
        if co not in best or k < best[co]:
            best[co] = k
    out = sorted(best.items())
    if trivial_bad:
        dim = len(out[0][0]) if out else 0
        out.append((tuple([Fraction(0)] * dim), Fraction(-1)))
    return out


def eliminate(ineqs, j: int) -> list:
    """Fourier–Motzkin elimination of variable j."""
    pos, neg, zero = [], [], []
    for co, k in ineqs:
        (pos if co[j] > 0 else neg if co[j] < 0 else zero).append((co, k))
    out = list(zero)
    for (cp, kp), (cn, kn) in itertools.product(pos, neg):
        a, b = cp[j], -cn[j]
        co = tuple(b * x + a * y for x, y in zip(cp, cn))
        out.append((co, b * kp + a * kn))
    return prune(out)


def feasible_box(ineqs, dim: int) -> Optional[list]:
    """Per-variable interval [lo, hi] of the projection of the polytope onto
    each coordinate, or None when the polytope is empty."""
    ineqs = prune(ineqs)
    box = []
    for j in range(dim):
        cur = ineqs
        for i in range(dim):
            if i != j:
                cur = eliminate(cur, i)
        lo, hi = None, None
        for co, k in cur:
            c = co[j]
            if c == 0:
                if k < 0:
                    return None
            elif c > 0:
                hi = k / c if hi is None else min(hi, k / c)
            else:
                lo = k / c if lo is None else max(lo, k / c)
        if lo is not None and hi is not None and lo > hi:
            return None
        box.append((lo, hi))
    if dim == 0 and any(k < 0 for _, k in ineqs):
        return None
    return box


def vertices(ineqs, dim: int) -> list:
    """Vertices of a bounded polytope {t : co·t ≤ k}, sorted."""
    ineqs = prune(ineqs)
    if dim == 0:
        return [()] if all(k >= 0 for _, k in ineqs) else []
    found = set()
    for combo in itertools.combinations(ineqs, dim):
        sol = solve_linear([(co, k) for co, k in combo], dim)
        if not sol.consistent or sol.dimension != 0:
            continue
        t = sol.particular
        if all(dot(co, t) <= k for co, k in ineqs):
            found.add(t)
    return sorted(found)
