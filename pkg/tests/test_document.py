from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog import models
from pseudoeq import fixtures
from pseudoeq.bck import psi
from pseudoeq.document import (
    from_document,
    operator_indices,
    parse_document,
    parse_operator,
    parse_rational,
    parse_rationals,
    render_document,
    render_operator,
    to_document,
)
from pseudoeq.errors import DocumentSyntaxError, DocumentTokenError, NotASemilattice, ShapeError

B_TEXT = """\
algebra B
kind eq
elements 0 a b 1
top 1
meet
0 0 0 0
0 a 0 a
0 0 b b
0 a b 1
tilde
1 b a 0
1 1 a a
1 b 1 b
1 1 1 1
btilde
1 1 1 1
b 1 b 1
a a 1 1
0 a b 1
end
"""


def test_parse_b(B):
    doc = parse_document(B_TEXT)
    assert doc.name == "B" and doc.kind == "eq"
    assert from_document(doc) == B
    assert render_document(doc) == B_TEXT


def test_fixture_files_load(fixture_dir, A, B, C):
    for name, X in (("A", A), ("B", B), ("C", C)):
        doc = parse_document((fixture_dir / f"{name}.eqa").read_text())
        assert from_document(doc) == X
    doc = parse_document((fixture_dir / "B_psi.eqa").read_text())
    assert from_document(doc) == psi(B)
    doc = parse_document((fixture_dir / "B_hoop.eqa").read_text())
    assert from_document(doc) == fixtures.hoop_b()


token = st.text(alphabet="abcdefghxyz0123456789_", min_size=1, max_size=4)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_round_trip(data):
    X = data.draw(st.sampled_from(list(models())))
    names = data.draw(st.lists(token, min_size=X.n, max_size=X.n, unique=True))
    X = X.renamed(names)
    text = render_document(to_document(X, "M"))
    assert from_document(parse_document(text)) == X
    # comments and blank lines are ignored
    noisy = "# header\n\n" + text.replace("\n", "   # note\n", 3)
    assert from_document(parse_document(noisy)) == X


def _err(text, exc):
    with pytest.raises(exc) as info:
        parse_document(text)
    return info.value


def test_unknown_directive():
    e = _err(B_TEXT.replace("top 1", "apex 1"), DocumentSyntaxError)
    assert (e.line, e.column) == (4, 1)


def test_unknown_token_position():
    e = _err(B_TEXT.replace("1 b 1 b", "1 b 1 q"), DocumentTokenError)
    assert e.token == "q" and (e.line, e.column) == (13, 7)


def test_short_row():
    e = _err(B_TEXT.replace("0 a b 1\ntilde", "0 a b\ntilde"), ShapeError)
    assert e.line == 9


def test_missing_rows():
    text = B_TEXT.replace("0 a b 1\nend", "end")
    _err(text, ShapeError)


def test_duplicate_element():
    e = _err(B_TEXT.replace("elements 0 a b 1", "elements 0 a a 1"), DocumentSyntaxError)
    assert e.column == 14


def test_missing_end():
    _err(B_TEXT.replace("end\n", ""), DocumentSyntaxError)


def test_content_after_end():
    _err(B_TEXT + "top 1\n", DocumentSyntaxError)


def test_missing_table():
    start = B_TEXT.index("btilde")
    _err(B_TEXT[:start] + "end\n", DocumentSyntaxError)


def test_bad_meet_reported_by_builder():
    doc = parse_document(B_TEXT.replace("0 a 0 a", "0 a b a"))
    with pytest.raises(NotASemilattice):
        from_document(doc)
    raw = from_document(doc, check=False)
    assert raw.meet[1][2] == 2


def test_operator_round_trip(fixture_dir, B):
    op = parse_operator((fixture_dir / "ops" / "sigma1.op").read_text(), B.names)
    sigma = operator_indices(op, B.names)
    assert sigma == tuple(B.indices(["0", "0", "1", "1"]))
    text = render_operator("sigma1", sigma, B.names)
    assert operator_indices(parse_operator(text, B.names), B.names) == sigma


@pytest.mark.parametrize("text,exc", [
    ("0 -> 0\nend\n", DocumentSyntaxError),
    ("op s\n0 -> 0\n0 -> a\na -> a\nb -> b\n1 -> 1\nend\n", DocumentSyntaxError),
    ("op s\n0 -> 0\na -> z\nb -> b\n1 -> 1\nend\n", DocumentTokenError),
    ("op s\n0 -> 0\na -> a\nend\n", ShapeError),
    ("op s\n0 => 0\nend\n", DocumentSyntaxError),
    ("op s\n0 -> 0\na -> a\nb -> b\n1 -> 1\n", DocumentSyntaxError),
])
def test_operator_errors(text, exc, B):
    with pytest.raises(exc):
        parse_operator(text, B.names)


def test_rationals():
    assert parse_rationals("0, 1/3,2/3 ,1") == [0, Fraction(1, 3), Fraction(2, 3), 1]
    assert parse_rational("-2/4") == Fraction(-1, 2)
    for bad in ("0.5", "1/0", "a", "", "1//2"):
        with pytest.raises(DocumentSyntaxError):
            parse_rational(bad)
