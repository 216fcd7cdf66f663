"""Command-line interface.

Exit codes: 0 when every check passes (or a result was produced), 1 when a
checked property fails (the report is still printed), 2 on input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra as alg
from . import bck as bckmod
from . import bosbach as bos
from . import deduction as ded
from . import document as doc
from . import pointed as pt
from . import search as srch
from . import states as st
from .errors import AlgebraError, PreconditionPCFailed

PASS, FAIL, INPUT = 0, 1, 2


class Output:
    """Collects text lines and a JSON payload; only one is printed."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines = []
        self.data = {}

    def line(self, text=""):
        self.lines.append(text)

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if self.as_json:
            stream.write(json.dumps(self.data, ensure_ascii=False, indent=2) + "\n")
        else:
            stream.write("\n".join(self.lines) + ("\n" if self.lines else ""))


# -- loading ---------------------------------------------------------------------

def read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_document(path):
    return doc.parse_document(read_text(path))


def load_eq(path, check: bool = True):
    d = load_document(path)
    if d.kind != "eq":
        raise AlgebraError(f"{path}: expected a document of kind eq, got {d.kind}")
    return d, doc.from_document(d, check=check)


def load_op(path, A) -> tuple:
    op = doc.parse_operator(read_text(path), A.names)
    return op.name, doc.operator_indices(op, A.names)


def tokens_arg(A, text) -> int:
    toks = [t for t in text.split(",") if t.strip()]
    return ded.mask_of(A.index(t.strip()) for t in toks)


def point_of(A, d, token):
    tok = token if token is not None else d.point
    if tok is None:
        raise AlgebraError("no point given: use --point or a 'point' line in the document")
    return pt.PointedEqAlgebra.at(A, tok)


def set_str(A, mask) -> str:
    return "{" + ", ".join(ded.mask_tokens(A, mask)) + "}"


def report_lines(out, report, names):
    for c in report.checks:
        out.line(c.describe(names))


def report_json(report, names) -> dict:
    return {"title": report.title, "ok": report.ok, "checks": [c.to_json(names) for c in report.checks]}


def op_row(A, op) -> list:
    return [A.names[v] for v in op]


def op_table(out, A, ops, label="σ"):
    width = max(len(t) for t in A.names)
    lw = max(len(label) + len(str(len(ops))), 1)
    cell = lambda t: t.ljust(width)
    out.line("x".ljust(lw) + "  " + " ".join(cell(t) for t in A.names).rstrip())
    for i, op in enumerate(ops, 1):
        out.line(f"{label}{i}".ljust(lw) + "  " + " ".join(cell(t) for t in op_row(A, op)).rstrip())


def flag(v) -> str:
    return "true" if v else "false"


# -- commands ----------------------------------------------------------------------

def cmd_validate(args, out):
    d = load_document(args.file)
    if d.kind == "eq":
        A = doc.from_document(d, check=False)
        report = alg.verify_axioms(A)
        label = "A1–A7"
    elif d.kind == "bck":
        A = doc.from_document(d, check=False)
        report = bckmod.verify_bck(A)
        label = "pseudo BCK-meet-semilattice"
    else:
        A = doc.from_document(d)
        report = bckmod.verify_pseudo_hoop(A)
        label = "pseudo-hoop"
    report_lines(out, report, A.names)
    out.line(f"{label}: {'pass' if report.ok else 'FAIL'}")
    out.data = {"algebra": d.name, "kind": d.kind, "report": report_json(report, A.names)}
    return PASS if report.ok else FAIL


def cmd_props(args, out):
    d, A = load_eq(args.file)
    axioms = alg.verify_axioms(A)
    f = alg.classify(A)
    flags = f.as_dict(A.names)
    out.line(f"pseudo-eq: {flag(axioms.ok)}")
    for k, v in flags.items():
        out.line(f"{k}: {v if isinstance(v, str) or v is None else flag(v)}")
    cond = bckmod.check_conditions(bckmod.psi(A))
    for k in ("pC", "pD", "pP"):
        out.line(f"Ψ {k}: {flag(getattr(cond, k))}")
    out.data = {"algebra": d.name, "pseudo_eq": axioms.ok, "properties": flags,
                "psi": {"pC": cond.pC, "pD": cond.pD, "pP": cond.pP}}
    return PASS if axioms.ok else FAIL


def cmd_laws(args, out):
    d, A = load_eq(args.file)
    report = alg.derived_law_suite(A)
    report_lines(out, report, A.names)
    out.line(f"derived laws: {'pass' if report.ok else 'FAIL'}")
    out.data = {"algebra": d.name, "report": report_json(report, A.names)}
    return PASS if report.ok else FAIL


def _emit_document(out, document):
    text = doc.render_document(document)
    for ln in text.rstrip("\n").split("\n"):
        out.line(ln)
    out.data = {
        "algebra": document.name,
        "kind": document.kind,
        "elements": list(document.elements),
        "top": document.top,
        "tables": {k: [list(r) for r in v] for k, v in document.tables.items()},
    }


def cmd_psi(args, out):
    d, A = load_eq(args.file)
    _emit_document(out, doc.to_document(bckmod.psi(A), f"Psi({d.name})"))
    return PASS


def cmd_phi(args, out):
    d = load_document(args.file)
    if d.kind == "eq":
        raise AlgebraError("phi expects a bck or hoop document")
    B = doc.from_document(d)
    if d.kind == "hoop":
        B = bckmod.hoop_to_bck(B)
    try:
        A = bckmod.phi(B)
    except PreconditionPCFailed as exc:
        out.line(f"pC condition fails: {exc}")
        out.data = {"algebra": d.name, "error": str(exc)}
        return FAIL
    _emit_document(out, doc.to_document(A, f"Phi({d.name})"))
    return PASS


def cmd_roundtrip(args, out):
    d, A = load_eq(args.file)
    rt = bckmod.roundtrip_report(A)
    out.line(f"Ψ(Φ(Ψ(A))) = Ψ(A): {flag(rt.psi_phi_psi_equal)}")
    out.line(f"Φ(Ψ(A)) = A: {flag(rt.phi_psi_equal)}")
    out.line(f"invariant: {flag(rt.invariant)}")
    out.data = {"algebra": d.name, "psi_phi_psi_equal": rt.psi_phi_psi_equal,
                "phi_psi_equal": rt.phi_psi_equal, "invariant": rt.invariant}
    if args.compare is not None:
        d2, A2 = load_eq(args.compare)
        same = bckmod.psi(A) == bckmod.psi(A2)
        out.line(f"Ψ(A) = Ψ({d2.name}): {flag(same)}")
        out.data["psi_equal_to"] = {"algebra": d2.name, "equal": same}
    return PASS if rt.consistent else FAIL


def cmd_ds(args, out):
    d, A = load_eq(args.file)
    all_ds = ded.enumerate_ds(A)
    shown = [D for D in all_ds if not args.normal or ded.is_normal_ds(A, D)]
    rows = []
    for D in shown:
        s = ded.ds_status(A, D, all_ds)
        out.line(f"{set_str(A, D)}  normal={flag(s.is_normal)} closed={flag(s.is_closed)} "
                 f"proper={flag(s.is_proper)} maximal={flag(s.is_maximal)}")
        rows.append({"members": ded.mask_tokens(A, D), **s.flags()})
    out.line(f"count {len(shown)}")
    out.data = {"algebra": d.name, "normal_only": args.normal, "deductive_systems": rows}
    return PASS


def cmd_gen_ds(args, out):
    d, A = load_eq(args.file)
    X = tokens_arg(A, args.from_)
    D = ded.generated_ds(A, X)
    out.line(f"generated by {set_str(A, X)}: {set_str(A, D)}")
    out.data = {"algebra": d.name, "from": ded.mask_tokens(A, X), "generated": ded.mask_tokens(A, D)}
    return PASS


def cmd_quotient(args, out):
    d, A = load_eq(args.file)
    H = tokens_arg(A, args.ds)
    Q, proj = ded.quotient(A, H)
    ok = alg.verify_axioms(Q).ok and ded.projection_is_homomorphism(A, Q, proj)
    _emit_document(out, doc.to_document(Q, f"{d.name}/H"))
    out.line("# classes: " + " ".join(
        "{" + ",".join(A.names[x] for x in cls) + "}" for cls in ded.partition_classes(proj)))
    out.line(f"# quotient is a pseudo equality algebra and the projection a homomorphism: {flag(ok)}")
    out.data["projection"] = {A.names[x]: Q.names[proj[x]] for x in range(A.n)}
    out.data["ok"] = ok
    return PASS if ok else FAIL


def cmd_congruences(args, out):
    d, A = load_eq(args.file)
    rep = ded.congruences(A)
    fmt = lambda p: "".join("{" + ",".join(A.names[x] for x in c) + "}" for c in ded.partition_classes(p))
    for p in rep.partitions:
        out.line(fmt(p))
    out.line(f"count {len(rep.partitions)}")
    for H, p in rep.from_normal_ds.items():
        out.line(f"Θ{set_str(A, H)} = {fmt(p)}")
    if rep.raw:
        out.line(f"closed normal deductive systems ↔ congruences: {flag(rep.closed_bijection)}")
        out.line(f"normal deductive systems ↔ congruences: {flag(rep.bijection)}"
                 + ("" if rep.invariant else " (not invariant)"))
    out.data = {"algebra": d.name, "congruences": [fmt(p) for p in rep.partitions],
                "exhaustive": rep.raw, "bijection": rep.bijection,
                "closed_bijection": rep.closed_bijection, "invariant": rep.invariant,
                "theta": {",".join(ded.mask_tokens(A, H)): fmt(p) for H, p in rep.from_normal_ds.items()}}
    return PASS if rep.ok else FAIL


def cmd_pointed(args, out):
    d, A = load_eq(args.file)
    P = point_of(A, d, args.point)
    N = pt.negations(P)
    a = A.names[P.point]
    rows = [(f"x^{{~{a}}}", N.tilde_a), (f"x^{{∽{a}}}", N.btilde_a),
            (f"x^{{→{a}}}", N.arrow_a), (f"x^{{⇝{a}}}", N.squig_a), ("γx", pt.gamma_table(P))]
    width = max(len(r[0]) for r in rows + [("x", None)])
    out.line("x".ljust(width) + "  " + " ".join(A.names))
    for label, T in rows:
        out.line(label.ljust(width) + "  " + " ".join(A.names[v] for v in T))
    cls = pt.pointed_class(P)
    for k, v in cls.as_dict().items():
        out.line(f"{k}: {flag(v)}")
    reg = pt.regular_elements(P)
    out.line(f"Reg_{a} = {set_str(A, reg)}")
    laws = pt.pointed_laws(P)
    report_lines(out, laws, A.names)
    out.data = {"algebra": d.name, "point": a,
                "negations": {label: [A.names[v] for v in T] for label, T in rows},
                "class": cls.as_dict(), "regular": ded.mask_tokens(A, reg),
                "laws": report_json(laws, A.names)}
    return PASS if laws.ok else FAIL


def _ops_out(out, A, ops, label, key, extra):
    op_table(out, A, ops, label)
    out.line(f"count {len(ops)}")
    out.data = {**extra, key: [op_row(A, op) for op in ops]}


def cmd_states(args, out):
    d, A = load_eq(args.file)
    ops = st.enumerate_states(A, args.kind, args.strong, jobs=args.jobs)
    _ops_out(out, A, ops, "σ", "states",
             {"algebra": d.name, "kind": args.kind, "strong": args.strong, "elements": list(A.names)})
    return PASS


def cmd_morphisms(args, out):
    d, A = load_eq(args.file)
    ops = st.enumerate_morphisms(A, jobs=args.jobs)
    _ops_out(out, A, ops, "σ", "morphisms", {"algebra": d.name, "elements": list(A.names)})
    return PASS


def _operator(args, A):
    if getattr(args, "identity", False):
        return "id", st.identity(A.n)
    if args.op_file is None:
        raise AlgebraError("an operator is required: --op-file FILE or --identity")
    return load_op(args.op_file, A)


def cmd_check_state(args, out):
    d, A = load_eq(args.file)
    name, op = _operator(args, A)
    report = st.check_state(A, op, args.kind, args.strong)
    out.line(f"{name}: " + " ".join(op_row(A, op)))
    report_lines(out, report, A.names)
    out.data = {"algebra": d.name, "operator": op_row(A, op), "kind": args.kind,
                "strong": args.strong, "report": report_json(report, A.names)}
    if args.all:
        viol = st.state_violations(A, op, args.kind, args.strong)
        out.line(f"all violations ({len(viol)}):")
        for c in viol:
            out.line("  " + c.describe(A.names))
        out.data["violations"] = [c.to_json(A.names) for c in viol]
    out.line(f"type {args.kind} internal state: {'pass' if report.ok else 'FAIL'}")
    return PASS if report.ok else FAIL


def cmd_check_morphism(args, out):
    d, A = load_eq(args.file)
    name, op = _operator(args, A)
    report = st.check_morphism(A, op)
    out.line(f"{name}: " + " ".join(op_row(A, op)))
    report_lines(out, report, A.names)
    out.line(f"state-morphism: {'pass' if report.ok else 'FAIL'}")
    out.data = {"algebra": d.name, "operator": op_row(A, op), "report": report_json(report, A.names)}
    return PASS if report.ok else FAIL


def cmd_kernel(args, out):
    d, A = load_eq(args.file)
    name, op = _operator(args, A)
    k = st.kernel(A, op)
    out.line(f"Ker({name}) = {set_str(A, k.mask)}")
    report_lines(out, k.report, A.names)
    out.data = {"algebra": d.name, "operator": op_row(A, op), "kernel": ded.mask_tokens(A, k.mask),
                "status": k.status.flags(), "report": report_json(k.report, A.names)}
    return PASS if k.ok else FAIL


def cmd_extend(args, out):
    d, A = load_eq(args.file)
    P = point_of(A, d, args.point)
    name, op = _operator(args, A)
    ext = st.extend_morphism(P, op)
    reg = pt.regular_elements(P)
    out.line(f"Reg_{A.names[P.point]} = {set_str(A, reg)}")
    out.line(f"extension of {name}: " + " ".join(op_row(A, ext.op)))
    report_lines(out, ext.report, A.names)
    out.data = {"algebra": d.name, "point": A.names[P.point], "regular": ded.mask_tokens(A, reg),
                "extension": op_row(A, ext.op), "report": report_json(ext.report, A.names)}
    return PASS if ext.report.ok else FAIL


def cmd_correspondence(args, out):
    d, A = load_eq(args.file)
    rep = st.state_correspondence(A)
    for k, ops in rep.sets.items():
        out.line(f"{k}: {len(ops)}")
    for r in rep.relations:
        tag = "asserted" if r.asserted else "measured"
        wit = "" if r.witness is None else " witness " + " ".join(op_row(A, r.witness))
        out.line(f"{r.name}: {flag(r.holds)} ({tag}){wit}")
    out.data = {"algebra": d.name,
                "sets": {k: [op_row(A, op) for op in v] for k, v in rep.sets.items()},
                "relations": [{"name": r.name, "holds": r.holds, "asserted": r.asserted,
                               "witness": None if r.witness is None else op_row(A, r.witness)}
                              for r in rep.relations]}
    return PASS if rep.ok else FAIL


def cmd_bosbach(args, out):
    d, A = load_eq(args.file)
    P = point_of(A, d, args.point)
    space = bos.solve_bosbach(P)
    for ln in bos.render_space(space):
        out.line(ln)
    cons = bos.space_consequences(P, space)
    report_lines(out, cons, A.names)
    out.data = {"algebra": d.name, "point": A.names[P.point], "space": bos.space_to_json(space),
                "checks": report_json(cons, A.names)}
    ok = cons.ok
    if args.compare_bck:
        cmp = bos.bosbach_bck_compare(P)
        out.line(f"EQA space ⊆ BCK space: {flag(cmp.contained)}")
        out.line(f"EQA space = BCK space: {flag(cmp.equal)} (invariant: {flag(cmp.invariant)})")
        out.data["compare_bck"] = {"contained": cmp.contained, "equal": cmp.equal,
                                   "invariant": cmp.invariant,
                                   "bck_space": bos.space_to_json(cmp.bck)}
        ok = ok and cmp.ok
    return PASS if ok else FAIL


def cmd_check_bosbach(args, out):
    d, A = load_eq(args.file)
    P = point_of(A, d, args.point)
    values = doc.parse_rationals(args.values)
    v = bos.is_bosbach(P, values)
    out.line("s = " + bos.render_vector(values))
    out.data = {"algebra": d.name, "point": A.names[P.point], "values": [bos.fmt_q(x) for x in values],
                "ok": v.ok}
    if v.ok:
        report_lines(out, v.consequences, A.names)
        out.data["consequences"] = report_json(v.consequences, A.names)
        out.line("Bosbach state: pass")
        return PASS if v.consequences.ok else FAIL
    law, x, y = v.witness
    out.line(f"Bosbach state: FAIL {law} at ({A.names[x]}, {A.names[y]})")
    out.data["witness"] = {"law": law, "at": [A.names[x], A.names[y]]}
    return FAIL


def _model_lines(out, A, i):
    out.line(f"# model {i}")
    for ln in doc.render_document(doc.to_document(A, f"M{i}")).rstrip("\n").split("\n"):
        out.line(ln)


def _model_json(A) -> dict:
    tables = doc.to_document(A, "M").tables
    return {"elements": list(A.names), "top": A.names[A.top],
            **{k: [list(r) for r in v] for k, v in tables.items()}}


def cmd_search(args, out):
    spec = srch.SearchSpec(args.size, args.require, args.forbid, args.limit, args.jobs)
    if args.claim is not None:
        claim = srch.resolve_claim(args.claim)
        A = srch.find_counterexample(spec, claim, exact=not args.up_to)
        scope = f"size ≤ {args.size}" if args.up_to else f"size {args.size}"
        out.data = {"claim": claim, "scope": scope, "found": A is not None}
        if A is None:
            out.line(f"claim {claim!r}: no witness at {scope}")
            return PASS
        out.line(f"claim {claim!r}: witness with {A.n} elements")
        _model_lines(out, A, 1)
        out.data["witness"] = _model_json(A)
        return PASS
    models = srch.enumerate_models(spec)
    out.line(f"size {args.size}: {len(models)} model(s)")
    for i, A in enumerate(models, 1):
        _model_lines(out, A, i)
    out.data = {"size": args.size, "require": args.require, "forbid": args.forbid,
                "count": len(models),
                "models": [_model_json(A) for A in models]}
    return PASS


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    p = argparse.ArgumentParser(prog="pseudoeq", description="Finite pseudo equality algebra toolkit")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True):
        sp = sub.add_parser(name, help=help_, parents=[common])
        if file:
            sp.add_argument("file")
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "check the axioms of a document")
    add("props", cmd_props, "classify an algebra")
    add("laws", cmd_laws, "run the derived-law suite")
    add("psi", cmd_psi, "print the BCK structure of an algebra")
    add("phi", cmd_phi, "print the algebra of a BCK(pC) or hoop document")
    sp = add("roundtrip", cmd_roundtrip, "compare Φ(Ψ(A)) with A")
    sp.add_argument("--compare", metavar="FILE", help="also compare Ψ(A) with Ψ of another algebra")
    sp = add("ds", cmd_ds, "list deductive systems")
    sp.add_argument("--normal", action="store_true", help="normal ones only")
    sp = add("gen-ds", cmd_gen_ds, "deductive system generated by a set")
    sp.add_argument("--from", dest="from_", required=True, metavar="T1,T2")
    sp = add("quotient", cmd_quotient, "quotient by a normal deductive system")
    sp.add_argument("--ds", required=True, metavar="T1,T2")
    add("congruences", cmd_congruences, "list congruences")
    sp = add("pointed", cmd_pointed, "negations and classes at a point")
    sp.add_argument("--point")
    for name, fn in (("states", cmd_states), ("morphisms", cmd_morphisms)):
        sp = add(name, fn, f"enumerate {'internal states' if name == 'states' else 'state-morphisms'}")
        if name == "states":
            sp.add_argument("--kind", choices=st.KINDS, required=True)
            sp.add_argument("--strong", action="store_true")
        sp.add_argument("--jobs", type=int, default=1)
    for name, fn in (("check-state", cmd_check_state), ("check-morphism", cmd_check_morphism),
                     ("kernel", cmd_kernel), ("extend", cmd_extend)):
        sp = add(name, fn, {"check-state": "check one operator against the state axioms",
                            "check-morphism": "check one operator against the morphism axioms",
                            "kernel": "kernel of a state or morphism",
                            "extend": "extend a morphism of the regular elements"}[name])
        sp.add_argument("--op-file")
        sp.add_argument("--identity", action="store_true", help="use the identity operator")
        if name == "check-state":
            sp.add_argument("--kind", choices=st.KINDS, default=st.TYPE_I)
            sp.add_argument("--strong", action="store_true")
            sp.add_argument("--all", action="store_true", help="list every violating pair")
        if name == "extend":
            sp.add_argument("--point")
    add("correspondence", cmd_correspondence, "compare state sets on A and Ψ(A)")
    sp = add("bosbach", cmd_bosbach, "solve for Bosbach states")
    sp.add_argument("--point")
    sp.add_argument("--compare-bck", action="store_true")
    sp = add("check-bosbach", cmd_check_bosbach, "check one vector")
    sp.add_argument("--point")
    sp.add_argument("--values", required=True, metavar="R1,...,RN")
    sp = add("search", cmd_search, "enumerate models up to isomorphism", file=False)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--require", action="append", default=[], choices=list(srch.PROPERTIES))
    sp.add_argument("--forbid", action="append", default=[], choices=list(srch.PROPERTIES))
    sp.add_argument("--claim")
    sp.add_argument("--up-to", action="store_true", help="with --claim, search every size up to --size")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    return p


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT if exc.code else PASS
    out = Output(args.json)
    try:
        code = args.func(args, out)
    except (AlgebraError, OSError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return INPUT
    out.emit(stdout)
    return code


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
