"""Reading and writing tableaux.

Two formats are understood:

* text: the output of :func:`~qlrinv.shapes.render`, one row per line,
  entries separated by spaces, inner cells written ``.``;
* structured: a JSON object with ``format``, ``version``, ``kind``, ``n``,
  ``outer``, ``inner`` and ``rows`` (present entries of each row).

Input whose first non-blank character is ``{`` is read as structured.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError
from .recording import is_recording
from .shapes import SkewTableau, parse_text, render

FORMAT = "qlrinv-tableau"
VERSION = 1
KINDS = ("tableau", "recording")


@dataclass(frozen=True)
class TableauDocument:
    tableau: SkewTableau
    n: Optional[int] = None
    kind: str = "tableau"

    def to_json(self) -> str:
        T = self.tableau
        return json.dumps({
            "format": FORMAT,
            "version": VERSION,
            "kind": self.kind,
            "n": self.n,
            "outer": list(T.outer),
            "inner": list(T.inner),
            "rows": [list(r) for r in T.rows],
        }, sort_keys=True)

    def to_text(self) -> str:
        return render(self.tableau)


def _check(doc: TableauDocument, raw: bool) -> TableauDocument:
    if raw:
        return doc
    T = doc.tableau
    if doc.kind == "recording":
        if doc.n is not None and not is_recording(T, doc.n):
            raise ParseError(f"not a recording tableau for n={doc.n}:\n{render(T)}")
    elif not T.is_semistandard():
        raise ParseError(f"not semistandard:\n{render(T)}")
    if doc.kind == "tableau" and doc.n is not None and T.max_entry() > 2 * doc.n:
        raise ParseError(f"entry {T.max_entry()} exceeds 2n = {2 * doc.n}")
    return doc


def parse_document(text: str, kind: str = "tableau", n: Optional[int] = None,
                   raw: bool = False) -> TableauDocument:
    """Parse either format.  ``kind`` and ``n`` are defaults that a structured document overrides.

    Raises:
        ParseError: on malformed input, or (unless ``raw``) a tableau that is
            not semistandard, respectively not a recording tableau.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict) or data.get("format") != FORMAT:
            raise ParseError(f"not a {FORMAT} document")
        if data.get("version") != VERSION:
            raise ParseError(f"unsupported version {data.get('version')!r}")
        kind = data.get("kind", kind)
        if kind not in KINDS:
            raise ParseError(f"unknown kind {kind!r}")
        n = data.get("n", n)
        try:
            T = SkewTableau(tuple(data["outer"]), tuple(data.get("inner", ())),
                            tuple(tuple(r) for r in data["rows"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed tableau: {exc}") from None
    else:
        try:
            T = parse_text(stripped)
        except ValueError as exc:
            raise ParseError(f"malformed tableau text: {exc}") from None
    if n is not None and (not isinstance(n, int) or n < 1):
        raise ParseError(f"n must be a positive integer, got {n!r}")
    return _check(TableauDocument(T, n, kind), raw)
