"""
JSON documents for event structures.

::

    {"kind": "aes",
     "events": [{"id": "c0", "label": "c"}, ...],
     "relations": {"le": [["d", "c1"]], "aconf": [["d", "c0+c1"]], "conf": [["c0", "d"]]}}

``le`` is causality (closed on load, stored as its transitive reduction),
``aconf`` asymmetric conflict, ``flow`` the FES flow relation and ``conf``
symmetric conflict.  For AES documents ``conf`` is shorthand for
asymmetric conflict in both directions and causal pairs are implied in
``aconf``.  Unknown keys are rejected.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from esfold.relations import transitive_reduction
from esfold.structures import Aes, EventStructure, Fes, Pes, StructureError, validate

ALLOWED = {
    "pes": ("le", "conf"),
    "aes": ("le", "aconf", "conf"),
    "fes": ("flow", "conf"),
}
KINDS = {"pes": Pes, "aes": Aes, "fes": Fes}


class DocumentError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.line = line
        self.column = column


def _pairs(name, raw):
    if not isinstance(raw, list):
        raise DocumentError(f"relation {name!r} must be a list of [source, target] pairs")
    out = []
    for item in raw:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(v, str) for v in item)):
            raise DocumentError(f"bad edge in {name!r}: {item!r}")
        out.append(tuple(item))
    return out


def from_dict(doc: dict, check: bool = True) -> EventStructure:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    extra = set(doc) - {"kind", "events", "relations", "name", "note"}
    if extra:
        raise DocumentError(f"unknown field(s): {', '.join(sorted(extra))}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"kind must be one of {sorted(KINDS)}, got {kind!r}")
    events = []
    for ev in doc.get("events", []):
        if not isinstance(ev, dict) or set(ev) != {"id", "label"}:
            raise DocumentError(f"event entries need exactly 'id' and 'label': {ev!r}")
        events.append((ev["id"], ev["label"]))
    rels = doc.get("relations", {})
    if not isinstance(rels, dict):
        raise DocumentError("'relations' must be an object")
    bad = set(rels) - set(ALLOWED[kind])
    if bad:
        raise DocumentError(f"relation(s) {', '.join(sorted(bad))} not allowed for kind {kind!r}")
    kwargs = {name: _pairs(name, edges) for name, edges in rels.items()}
    try:
        s = KINDS[kind].build(events, **kwargs)
    except StructureError as exc:
        raise DocumentError(str(exc)) from exc
    if check:
        report = validate(s)
        if not report.ok:
            raise DocumentError(f"invalid {kind.upper()}:\n{report}")
    return s


def parse(text: str, check: bool = True) -> EventStructure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}",
                            exc.lineno, exc.colno) from exc
    return from_dict(doc, check=check)


def load(path: Union[str, Path], check: bool = True) -> EventStructure:
    return parse(Path(path).read_text(), check=check)


def _unordered(rel):
    return sorted({tuple(sorted(p)) for p in rel})


def to_dict(s: EventStructure) -> dict:
    doc = {"kind": s.kind, "events": [{"id": e, "label": s.labels[e]} for e in s.events]}
    rels = {}
    if isinstance(s, Pes):
        rels["le"] = sorted(transitive_reduction(s.lt))
        rels["conf"] = _unordered(s.conflict)
    elif isinstance(s, Aes):
        rels["le"] = sorted(transitive_reduction(s.lt))
        rest = s.aconf - s.lt
        mutual = {p for p in rest if (p[1], p[0]) in rest}
        rels["aconf"] = sorted(rest - mutual)
        rels["conf"] = _unordered(mutual)
    elif isinstance(s, Fes):
        rels["flow"] = sorted(s.flow)
        rels["conf"] = _unordered(s.conf)
    doc["relations"] = {k: [list(p) for p in v] for k, v in rels.items() if v}
    return doc


def serialize(s: EventStructure, note: Optional[str] = None) -> str:
    """Canonical text: sorted, one event or edge per line.  ``note`` is kept as free text."""
    doc = to_dict(s)
    lines = ["{", f'  "kind": {json.dumps(doc["kind"])},']
    if note:
        lines.append(f'  "note": {json.dumps(note, ensure_ascii=False)},')
    lines.append('  "events": [')
    lines += [f"    {json.dumps(ev)}," for ev in doc["events"]]
    if doc["events"]:
        lines[-1] = lines[-1].rstrip(",")
    lines += ["  ],", '  "relations": {']
    blocks = []
    for name, edges in doc["relations"].items():
        body = ",\n".join(f"      {json.dumps(e)}" for e in edges)
        blocks.append(f'    {json.dumps(name)}: [\n{body}\n    ]')
    if blocks:
        lines.append(",\n".join(blocks))
    lines += ["  }", "}"]
    return "\n".join(lines) + "\n"


def save(s: EventStructure, path: Union[str, Path], note: Optional[str] = None) -> None:
    Path(path).write_text(serialize(s, note))
