"""Pieces shared by AES and FES folding: condition verdicts, the folding map, merged ids."""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import FrozenSet, Iterable, Mapping, Tuple

from esfold.structures import EventStructure


class FoldingError(ValueError):
    """Folding refused because the candidate set failed its combinability gate."""


@dataclass(frozen=True)
class ConditionResult:
    name: str
    holds: bool
    witness: Tuple[str, ...] = ()
    note: str = ""

    def __str__(self) -> str:
        if self.holds:
            return f"{self.name}: ok"
        return f"{self.name}: FAIL ({', '.join(self.witness)}) {self.note}".rstrip()


@dataclass(frozen=True)
class FoldingMap:
    """Total map E -> E/X: identity off X, constant ``merged`` on X."""

    folded: FrozenSet[str]
    merged: str
    mapping: Mapping[str, str]

    @classmethod
    def of(cls, s: EventStructure, x: Iterable[str], merged: str) -> "FoldingMap":
        x = frozenset(x)
        m = {e: (merged if e in x else e) for e in s.events}
        return cls(x, merged, MappingProxyType(m))

    def __call__(self, e: str) -> str:
        return self.mapping[e]

    def image(self, events: Iterable[str]) -> FrozenSet[str]:
        return frozenset(self.mapping[e] for e in events)

    def restricted(self, events: Iterable[str]) -> dict:
        return {e: self.mapping[e] for e in events}


def merged_id(s: EventStructure, x: Iterable[str]) -> str:
    """
    Fresh id recording the folded set: ``c0, c1`` become ``c01`` when all
    ids are one stem plus a numeric suffix, otherwise ``p+q``.
    """
    xs = sorted(x)
    parts = [re.fullmatch(r"(.*?[^\d])(\d+)", e) for e in xs]
    if all(parts) and len({m.group(1) for m in parts}) == 1:
        base = parts[0].group(1) + "".join(m.group(2) for m in parts)
    else:
        base = "+".join(xs)
    name = base
    while name in s.labels:
        name += "'"
    return name


def first_failure(name: str, failures, note_fmt=None) -> ConditionResult:
    for w in failures:
        note = note_fmt(*w) if note_fmt else ""
        return ConditionResult(name, False, tuple(w), note)
    return ConditionResult(name, True)
