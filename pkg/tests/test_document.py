import json

import pytest
from hypothesis import given

from qlrinv.document import TableauDocument, parse_document
from qlrinv.errors import ParseError
from qlrinv.shapes import SkewTableau

from strategies import semistandard
from worked import Q_FIVE_STRIPS


@given(semistandard(max_size=10, max_entry=6))
def test_both_formats_round_trip(T):
    doc = TableauDocument(T, 3)
    assert parse_document(doc.to_json()).tableau == T
    assert parse_document(doc.to_text()).tableau == T


def test_structured_fields_override_defaults():
    text = TableauDocument(Q_FIVE_STRIPS, 3, "recording").to_json()
    doc = parse_document(text, kind="tableau", n=5)
    assert (doc.kind, doc.n, doc.tableau) == ("recording", 3, Q_FIVE_STRIPS)


def test_recording_validation():
    assert parse_document(". 1\n1", "recording", 1).tableau.inner == (1,)
    with pytest.raises(ParseError):
        parse_document(". .\n1", "recording", 1)
    assert parse_document(". .\n1", "recording", 1, raw=True).tableau.size == 1


@pytest.mark.parametrize("text", [
    "{", '{"format": "other"}', "[1, 2]",
    '{"format": "qlrinv-tableau", "version": 2, "outer": [1], "rows": [[1]]}',
    '{"format": "qlrinv-tableau", "version": 1, "kind": "x", "outer": [1], "rows": [[1]]}',
    '{"format": "qlrinv-tableau", "version": 1, "outer": [2], "rows": [[1]]}',
    "1 a", "2 1",
])
def test_malformed_input(text):
    with pytest.raises(ParseError):
        parse_document(text)


def test_bound_checks():
    with pytest.raises(ParseError):
        parse_document("1 5", n=2)
    with pytest.raises(ParseError):
        parse_document("1", n=0)
    record = json.loads(TableauDocument(SkewTableau.from_rows([(1,)]), None).to_json())
    assert record["n"] is None and record["rows"] == [[1]]
