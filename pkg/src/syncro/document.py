"""JSON automaton documents: parsing with diagnostics, and serialisation.

The document schema ships as ``schema/automaton.schema.json``::

    {"n": 4, "alphabet": ["a", "b"], "delta": [[1, 1], [2, 2], [1, 3], [3, 0]],
     "name": "fig3", "source": "optional free text"}

``delta[state][letter]`` is the successor state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .core import AutomatonError, SemiAutomaton, make_automaton

FIELDS = ("n", "alphabet", "delta", "name", "source")


class DocumentError(AutomatonError):
    """A document failed to parse or validate; the message names the location."""


@dataclass(frozen=True)
class AutomatonDocument:
    n: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    name: str | None = None
    source: str | None = None

    def automaton(self) -> SemiAutomaton:
        return make_automaton(self.n, len(self.alphabet), self.delta, self.alphabet)

    @classmethod
    def from_automaton(cls, A: SemiAutomaton, name: str | None = None,
                       source: str | None = None) -> AutomatonDocument:
        return cls(A.n, tuple(A.names), tuple(tuple(r) for r in A.delta), name, source)

    def to_dict(self) -> dict:
        out = {"n": self.n, "alphabet": list(self.alphabet), "delta": [list(r) for r in self.delta]}
        if self.name is not None:
            out["name"] = self.name
        if self.source is not None:
            out["source"] = self.source
        return out


def schema() -> dict:
    text = resources.files("syncro").joinpath("schema/automaton.schema.json").read_text()
    return json.loads(text)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def validate(data) -> AutomatonDocument:
    """Validate decoded JSON against the document contract."""
    if not isinstance(data, dict):
        raise DocumentError("document: expected a JSON object at top level")
    for key in data:
        if key not in FIELDS:
            raise DocumentError(f"field '{key}': unknown field (allowed: {', '.join(FIELDS)})")
    for key in ("n", "alphabet", "delta"):
        if key not in data:
            raise DocumentError(f"field '{key}': missing")
    n = data["n"]
    if not _is_int(n) or n < 1:
        raise DocumentError(f"field 'n': expected an integer >= 1, got {n!r}")
    alphabet = data["alphabet"]
    if not isinstance(alphabet, list) or not alphabet:
        raise DocumentError("field 'alphabet': expected a non-empty list of letter names")
    for i, name in enumerate(alphabet):
        if not isinstance(name, str) or not name or any(c.isspace() or c == "^" for c in name):
            raise DocumentError(f"field 'alphabet[{i}]': letter names are non-empty strings "
                                "without whitespace or '^'")
    if len(set(alphabet)) != len(alphabet):
        raise DocumentError("field 'alphabet': letter names must be distinct")
    delta = data["delta"]
    k = len(alphabet)
    if not isinstance(delta, list):
        raise DocumentError("field 'delta': expected a list of rows, one per state")
    if len(delta) != n:
        raise DocumentError(f"field 'delta': has {len(delta)} rows, expected n = {n}")
    for q, row in enumerate(delta):
        if not isinstance(row, list):
            raise DocumentError(f"field 'delta[{q}]': expected a list with one entry per letter")
        if len(row) != k:
            raise DocumentError(f"field 'delta[{q}]': has {len(row)} entries, expected {k} (one per letter)")
        for a, target in enumerate(row):
            if not _is_int(target) or not 0 <= target < n:
                raise DocumentError(f"field 'delta[{q}][{a}]': {target!r} is not a state in [0, {n})")
    for key in ("name", "source"):
        if key in data and not isinstance(data[key], str):
            raise DocumentError(f"field '{key}': expected a string")
    return AutomatonDocument(n, tuple(alphabet), tuple(tuple(r) for r in delta),
                             data.get("name"), data.get("source"))


def parse(text: str) -> AutomatonDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return validate(data)


def serialize(doc: AutomatonDocument) -> str:
    # one delta row per line keeps diffs readable
    d = doc.to_dict()
    lines = ["{", f'  "n": {d["n"]},', f'  "alphabet": {json.dumps(d["alphabet"])},', '  "delta": [']
    rows = [f"    {json.dumps(r)}" for r in d["delta"]]
    lines.append(",\n".join(rows))
    tail = "  ]"
    extras = [f'  "{key}": {json.dumps(d[key], ensure_ascii=False)}' for key in ("name", "source") if key in d]
    if extras:
        tail += ",\n" + ",\n".join(extras)
    lines.append(tail)
    lines.append("}")
    return "\n".join(lines) + "\n"


def load(path: str) -> AutomatonDocument:
    """Read a document from a path, or from stdin when ``path`` is ``-``."""
    import sys

    if path == "-":
        return parse(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from None
