"""Sweep every model up to a given size and check the structural invariants.

Failures of asserted properties are listed with the first counterexample.
Properties that are only measured (known not to hold in general) are
reported as counts.
"""
import argparse
import itertools
import sys
import time
from collections import Counter

from pseudoeq.algebra import classify, derived_law_suite
from pseudoeq.bck import check_conditions, psi, verify_bck
from pseudoeq.bosbach import bosbach_bck_compare, compose_with_morphism, is_bosbach, solve_bosbach, space_consequences
from pseudoeq.deduction import (
    congruences,
    ds_status,
    enumerate_bck_ds,
    enumerate_ds,
    enumerate_ds_raw,
    full_mask,
    is_bck_subalgebra,
    mask_key,
    one_class,
    quotient_ok,
    theta,
)
from pseudoeq.pointed import (
    PointedEqAlgebra,
    crossed_negation_orders,
    is_compatible,
    is_subalgebra_mask,
    pointed_laws,
)
from pseudoeq.search import SearchSpec, canonical_form, enumerate_models
from pseudoeq.states import (
    enumerate_morphisms,
    enumerate_morphisms_raw,
    enumerate_states,
    enumerate_states_raw,
    extend_morphism,
    is_state,
    kernel,
    kernel_mask,
    point_lemma,
    restrict_candidates,
    state_consequences,
    state_correspondence,
)


class Sweep:
    def __init__(self):
        self.failures = Counter()
        self.first = {}
        self.measured = Counter()

    def fail(self, key, A, where=None):
        self.failures[key] += 1
        self.first.setdefault(key, (A.n, canonical_form(A), where))


def check_model(A, sw):
    B = psi(A)
    if not derived_law_suite(A).ok:
        sw.fail("derived laws", A)
    if not verify_bck(B).ok:
        sw.fail("BCK image", A)
    cond = check_conditions(B)
    if not cond.pC:
        sw.fail("pC", A)
    f = classify(A)
    if f.equality and not f.symmetric:
        sw.fail("equality implies symmetric", A)

    ds = enumerate_ds(A)
    if ds != enumerate_ds_raw(A):
        sw.fail("DS pruned = raw", A)
    for D, E in itertools.combinations(ds, 2):
        if D & E not in ds:
            sw.fail("DS closed under intersection", A, (D, E))
    if f.invariant:
        for D in ds:
            if not ds_status(A, D, ds).is_closed:
                sw.fail("invariant: DS closed", A, D)
            if not is_subalgebra_mask(A, D):
                sw.fail("invariant: DS subalgebra", A, D)
    for H in enumerate_ds(A, normal_only=True):
        if f.invariant and one_class(A, theta(A, H)) != H:
            sw.fail("class of 1 under Θ_H", A, H)
        if not quotient_ok(A, H):
            sw.fail("quotient", A, H)
    if cond.pD:
        for D in enumerate_bck_ds(B):
            if not is_bck_subalgebra(B, D):
                sw.fail("pD: BCK DS subalgebra", A, D)
    if f.simple != (ds == sorted({1 << A.top, full_mask(A.n)}, key=mask_key)):
        sw.fail("simple", A)
    rep = congruences(A)
    if not rep.ok:
        sw.fail("congruences", A)
    if rep.bijection is False:
        sw.measured["normal DS with colliding Θ_H"] += 1

    s1, s2, sm = enumerate_states(A, "I"), enumerate_states(A, "II"), enumerate_morphisms(A)
    if (s1, s2, sm) != (enumerate_states_raw(A, "I"), enumerate_states_raw(A, "II"), enumerate_morphisms_raw(A)):
        sw.fail("operators pruned = raw", A)
    for s in sm:
        if not is_state(A, s, "I"):
            sw.fail("morphism is a type I state", A, s)
    if f.commutative and s1 != s2:
        sw.fail("commutative: type I = type II", A)
    for s in set(s1) | set(s2) | set(sm):
        if not state_consequences(A, s).ok:
            sw.fail("state consequences", A, s)
        if not kernel(A, s).ok:
            sw.fail("kernel", A, s)
    for kind in ("I", "II"):
        for s in enumerate_states(A, kind, strong=True):
            if not ds_status(A, kernel_mask(A, s)).is_normal:
                sw.fail("strong kernel normal", A, s)
    corr = state_correspondence(A)
    if not corr.ok:
        sw.fail("state correspondence", A)
    for r in corr.relations:
        if not r.asserted and not r.holds:
            sw.measured[f"fails: {r.name}"] += 1

    for a in range(A.n):
        if a == A.top:
            continue
        P = PointedEqAlgebra(A, a)
        if not pointed_laws(P).ok:
            sw.fail("pointed laws", A, a)
        if not crossed_negation_orders(P).ok:
            sw.measured["crossed negation orders fail"] += 1
        for s in sm:
            if s[a] == a and not point_lemma(P, s).ok:
                sw.fail("morphism commutes with negations", A, (a, s))
        if is_compatible(P):
            sw.measured["compatible pointed models"] += 1
            for s in restrict_candidates(P):
                if not extend_morphism(P, s).report.ok:
                    sw.fail("extension", A, (a, s))
        sp = solve_bosbach(P)
        if not space_consequences(P, sp).ok:
            sw.fail("Bosbach consequences", A, a)
        cmp = bosbach_bck_compare(P)
        if not cmp.ok:
            sw.fail("Bosbach vs BCK", A, a)
        if not cmp.equal:
            sw.measured["Bosbach space ≠ BCK space"] += 1
        for v in sp.vertices():
            for s in sm:
                if s[a] == a and not is_bosbach(P, compose_with_morphism(P, v, s)).ok:
                    sw.fail("Bosbach state after morphism", A, (a, v, s))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=4)
    args = ap.parse_args(argv)
    start = time.time()
    sw = Sweep()
    total = 0
    for n in range(1, args.max_size + 1):
        for A in enumerate_models(SearchSpec(n)):
            check_model(A, sw)
            total += 1
    print(f"{total} models of size ≤ {args.max_size} in {time.time() - start:.1f}s")
    for key, count in sorted(sw.measured.items()):
        print(f"measured  {key}: {count}")
    for key, count in sorted(sw.failures.items()):
        print(f"FAIL      {key}: {count}, first {sw.first[key]}")
    if not sw.failures:
        print("all asserted invariants hold")
    return 1 if sw.failures else 0


if __name__ == "__main__":
    sys.exit(main())
