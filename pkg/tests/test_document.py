import json

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from syncro.document import AutomatonDocument, DocumentError, parse, schema, serialize, validate

from conftest import DATA


def test_fig3_document_loads():
    doc = parse((DATA / "fig3.json").read_text())
    A = doc.automaton()
    assert (A.n, A.k, doc.name) == (4, 2, "fig3")
    assert A.delta == ((1, 1), (2, 2), (1, 3), (3, 0))


@pytest.mark.parametrize("name", ["fig3.json", "kn7.json"])
def test_shipped_documents_match_schema(name):
    jsonschema.validate(json.loads((DATA / name).read_text()), schema())


def test_malformed_delta_names_the_field():
    with pytest.raises(DocumentError, match=r"delta\[1\]\[1\]"):
        parse((DATA / "malformed_delta.json").read_text())


def test_syntax_error_names_the_line():
    with pytest.raises(DocumentError, match=r"line \d+, column \d+"):
        parse((DATA / "truncated.json").read_text())


@pytest.mark.parametrize("data,field", [
    ([], "document"),
    ({"n": 2, "alphabet": ["a"]}, "delta"),
    ({"n": 0, "alphabet": ["a"], "delta": []}, "n"),
    ({"n": 1, "alphabet": ["a", "a"], "delta": [[0, 0]]}, "alphabet"),
    ({"n": 1, "alphabet": ["a b"], "delta": [[0]]}, "alphabet[0]"),
    ({"n": 2, "alphabet": ["a"], "delta": [[0]]}, "delta"),
    ({"n": 1, "alphabet": ["a"], "delta": [[0, 0]]}, "delta[0]"),
    ({"n": 1, "alphabet": ["a"], "delta": [[True]]}, "delta[0][0]"),
    ({"n": 1, "alphabet": ["a"], "delta": [[0]], "extra": 1}, "extra"),
])
def test_validation_errors(data, field):
    with pytest.raises(DocumentError, match=field.replace("[", r"\[").replace("]", r"\]")):
        validate(data)


def test_schema_rejects_what_validate_rejects():
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"n": 1, "alphabet": ["a"], "delta": [[0]], "extra": 1}, schema())


documents = st.integers(1, 5).flatmap(lambda n: st.builds(
    AutomatonDocument,
    st.just(n),
    st.lists(st.text("abcxyz01", min_size=1, max_size=3), min_size=1, max_size=3, unique=True).map(tuple),
    st.none(),
    st.one_of(st.none(), st.text(max_size=10)),
    st.one_of(st.none(), st.text(max_size=10)),
).flatmap(lambda d: st.lists(
    st.lists(st.integers(0, n - 1), min_size=len(d.alphabet), max_size=len(d.alphabet)).map(tuple),
    min_size=n, max_size=n,
).map(lambda rows: AutomatonDocument(d.n, d.alphabet, tuple(rows), d.name, d.source))))


@given(documents)
def test_round_trip(doc):
    text = serialize(doc)
    assert parse(text) == doc
    jsonschema.validate(json.loads(text), schema())
