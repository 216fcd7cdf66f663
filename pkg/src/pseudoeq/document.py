"""Text format for algebras and unary operators.

An algebra document::

    algebra B
    kind eq
    elements 0 a b 1
    top 1
    meet
    0 0 0 0
    ...
    tilde
    ...
    btilde
    ...
    end

Rows are left operands in ``elements`` order.  ``#`` starts a comment.
``kind`` is eq (meet, tilde, btilde), bck (meet, arrow, squig) or hoop
(prod, arrow, squig).  An operator file is ``op <name>``, one ``x -> y``
line per element, then ``end``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DocumentSyntaxError, DocumentTokenError, ShapeError

TABLE_NAMES = ("meet", "tilde", "btilde", "arrow", "squig", "prod")
REQUIRED = {
    "eq": ("meet", "tilde", "btilde"),
    "bck": ("meet", "arrow", "squig"),
    "hoop": ("prod", "arrow", "squig"),
}


@dataclass
class AlgebraDocument:
    name: str
    kind: str
    elements: tuple
    top: str
    tables: dict = field(default_factory=dict)  # table name -> tuple of token rows
    point: Optional[str] = None

    @property
    def n(self) -> int:
        return len(self.elements)


def _tokens(line: str):
    """(token, 1-based column) pairs, comments stripped."""
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def parse_document(text: str) -> AlgebraDocument:
    name = kind = top = point = None
    elements = None
    tables = {}
    lines = [(i + 1, _tokens(raw)) for i, raw in enumerate(text.splitlines())]
    lines = [(no, toks) for no, toks in lines if toks]
    pos = 0
    ended = False

    def need_elements(no, col):
        if elements is None:
            raise DocumentSyntaxError("'elements' must come before this directive", no, col)

    def check_token(tok, no, col):
        if tok not in elements:
            raise DocumentTokenError(tok, no, col)
        return tok

    while pos < len(lines):
        no, toks = lines[pos]
        pos += 1
        word, col = toks[0]
        args = toks[1:]
        if ended:
            raise DocumentSyntaxError("content after 'end'", no, col)
        if word == "end":
            if args:
                raise DocumentSyntaxError("'end' takes no arguments", no, args[0][1])
            ended = True
        elif word in ("algebra", "kind", "top", "point"):
            if len(args) != 1:
                raise DocumentSyntaxError(f"'{word}' takes exactly one argument", no, col)
            arg, acol = args[0]
            if word == "algebra":
                name = arg
            elif word == "kind":
                if arg not in REQUIRED:
                    raise DocumentSyntaxError(f"unknown kind {arg!r}", no, acol)
                kind = arg
            else:
                need_elements(no, col)
                check_token(arg, no, acol)
                if word == "top":
                    top = arg
                else:
                    point = arg
        elif word == "elements":
            if elements is not None:
                raise DocumentSyntaxError("'elements' given twice", no, col)
            if not args:
                raise DocumentSyntaxError("'elements' needs at least one token", no, col)
            seen = set()
            for tok, tcol in args:
                if tok in seen:
                    raise DocumentSyntaxError(f"duplicate element {tok!r}", no, tcol)
                seen.add(tok)
            elements = tuple(t for t, _ in args)
        elif word in TABLE_NAMES:
            need_elements(no, col)
            if args:
                raise DocumentSyntaxError(f"'{word}' takes no arguments", no, args[0][1])
            if word in tables:
                raise DocumentSyntaxError(f"table {word!r} given twice", no, col)
            n = len(elements)
            rows = []
            for _ in range(n):
                if pos >= len(lines):
                    raise ShapeError(f"table {word!r}: expected {n} rows, got {len(rows)}", no)
                rno, rtoks = lines[pos]
                if rtoks[0][0] in TABLE_NAMES or rtoks[0][0] == "end":
                    raise ShapeError(f"table {word!r}: expected {n} rows, got {len(rows)}", rno)
                pos += 1
                if len(rtoks) != n:
                    raise ShapeError(f"table {word!r}: row has {len(rtoks)} tokens, expected {n}", rno)
                rows.append(tuple(check_token(t, rno, c) for t, c in rtoks))
            tables[word] = tuple(rows)
        else:
            raise DocumentSyntaxError(f"unknown directive {word!r}", no, col)

    last = lines[-1][0] if lines else 1
    if not ended:
        raise DocumentSyntaxError("missing 'end'", last)
    for key, val in (("algebra", name), ("kind", kind), ("elements", elements), ("top", top)):
        if val is None:
            raise DocumentSyntaxError(f"missing '{key}' directive", last)
    missing = [t for t in REQUIRED[kind] if t not in tables]
    if missing:
        raise DocumentSyntaxError(f"kind {kind} requires table(s): {', '.join(missing)}", last)
    return AlgebraDocument(name, kind, elements, top, tables, point)


def render_document(doc: AlgebraDocument) -> str:
    width = max(len(t) for t in doc.elements)
    out = [f"algebra {doc.name}", f"kind {doc.kind}", "elements " + " ".join(doc.elements),
           f"top {doc.top}"]
    if doc.point is not None:
        out.append(f"point {doc.point}")
    for tname in TABLE_NAMES:
        if tname not in doc.tables:
            continue
        out.append(tname)
        for row in doc.tables[tname]:
            out.append(" ".join(t.ljust(width) for t in row).rstrip())
    out.append("end")
    return "\n".join(out) + "\n"


# -- conversion to and from algebra values ------------------------------------------

def _token_table(T, names):
    return tuple(tuple(names[v] for v in row) for row in T)


def to_document(obj, name: str, point: Optional[int] = None) -> AlgebraDocument:
    """Document for a FiniteEqAlgebra, FiniteBckMs or FinitePseudoHoop."""
    from .bck import FiniteBckMs, FinitePseudoHoop

    names = obj.names
    if isinstance(obj, FinitePseudoHoop):
        kind = "hoop"
    elif isinstance(obj, FiniteBckMs):
        kind = "bck"
    else:
        kind = "eq"
    tables = {k: _token_table(getattr(obj, k), names) for k in REQUIRED[kind]}
    pt = None if point is None else names[point]
    return AlgebraDocument(name, kind, tuple(names), names[obj.top], tables, pt)


def from_document(doc: AlgebraDocument, check: bool = True):
    """Build the algebra value.  With ``check`` the meet table must be a
    semilattice with the declared top; without it the raw tables are kept so
    a validator can report the failure."""
    from .algebra import FiniteEqAlgebra, build_algebra, index_table
    from .bck import FiniteBckMs, build_bck, build_hoop

    t = doc.tables
    if doc.kind == "eq":
        if check:
            return build_algebra(doc.elements, t["meet"], t["tilde"], t["btilde"], doc.top)
        names = doc.elements
        return FiniteEqAlgebra(names, names.index(doc.top), index_table(t["meet"], names),
                               index_table(t["tilde"], names), index_table(t["btilde"], names))
    if doc.kind == "bck":
        if check:
            return build_bck(doc.elements, t["meet"], t["arrow"], t["squig"], doc.top)
        names = doc.elements
        return FiniteBckMs(names, names.index(doc.top), index_table(t["meet"], names),
                           index_table(t["arrow"], names), index_table(t["squig"], names))
    return build_hoop(doc.elements, t["prod"], t["arrow"], t["squig"], doc.top)


# -- operator files ------------------------------------------------------------------

@dataclass
class OperatorDocument:
    name: str
    mapping: tuple  # (source token, target token) pairs in file order


def parse_operator(text: str, elements) -> OperatorDocument:
    elements = tuple(elements)
    lines = [(i + 1, _tokens(raw)) for i, raw in enumerate(text.splitlines())]
    lines = [(no, toks) for no, toks in lines if toks]
    if not lines or lines[0][1][0][0] != "op" or len(lines[0][1]) != 2:
        no = lines[0][0] if lines else 1
        raise DocumentSyntaxError("operator file must start with 'op <name>'", no, 1)
    name = lines[0][1][1][0]
    pairs = []
    seen = set()
    ended = False
    for no, toks in lines[1:]:
        if ended:
            raise DocumentSyntaxError("content after 'end'", no, toks[0][1])
        if toks[0][0] == "end" and len(toks) == 1:
            ended = True
            continue
        if len(toks) != 3 or toks[1][0] != "->":
            raise DocumentSyntaxError("expected 'token -> token'", no, toks[0][1])
        (src, sc), _, (dst, dc) = toks
        for tok, c in ((src, sc), (dst, dc)):
            if tok not in elements:
                raise DocumentTokenError(tok, no, c)
        if src in seen:
            raise DocumentSyntaxError(f"{src!r} mapped twice", no, sc)
        seen.add(src)
        pairs.append((src, dst))
    if not ended:
        raise DocumentSyntaxError("missing 'end'", lines[-1][0])
    if len(pairs) != len(elements):
        raise ShapeError(f"operator maps {len(pairs)} elements, expected {len(elements)}", lines[-1][0])
    return OperatorDocument(name, tuple(pairs))


def operator_indices(op: OperatorDocument, elements) -> tuple:
    elements = tuple(elements)
    table = dict(op.mapping)
    return tuple(elements.index(table[x]) for x in elements)


def render_operator(name: str, sigma, elements) -> str:
    lines = [f"op {name}"] + [f"{elements[x]} -> {elements[v]}" for x, v in enumerate(sigma)]
    return "\n".join(lines + ["end"]) + "\n"


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise DocumentSyntaxError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise DocumentSyntaxError(f"zero denominator in {text!r}") from None


def parse_rationals(text: str) -> list:
    return [parse_rational(p) for p in text.split(",")]
