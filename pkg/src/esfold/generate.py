"""Seeded random prime event structures for property tests and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass

from esfold.relations import transitive_closure
from esfold.semantics import DEFAULT_CAP
from esfold.structures import Pes


@dataclass(frozen=True)
class GenParams:
    event_count: int = 6
    label_count: int = 3
    causality_density: float = 0.25
    conflict_density: float = 0.3
    seed: int = 0

    def __post_init__(self):
        if not 0 <= self.event_count <= DEFAULT_CAP:
            raise ValueError(f"event_count must be within 0..{DEFAULT_CAP}")
        if self.label_count < 1:
            raise ValueError("label_count must be positive")
        for name in ("causality_density", "conflict_density"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def generate_random_pes(p: GenParams) -> Pes:
    """
    Random DAG for causality, then random base conflicts between events with
    no common upper bound, closed under inheritance along causality.  The
    result always satisfies the PES axioms.
    """
    rng = random.Random(p.seed)
    width = len(str(max(p.event_count - 1, 0)))
    ids = [f"e{i:0{width}d}" for i in range(p.event_count)]
    labels = {e: chr(ord("a") + rng.randrange(p.label_count)) if p.label_count <= 26
              else f"l{rng.randrange(p.label_count)}" for e in ids}
    edges = {(ids[i], ids[j]) for i in range(len(ids)) for j in range(i + 1, len(ids))
             if rng.random() < p.causality_density}
    lt = transitive_closure(edges)
    up = {e: {e} | {b for a, b in lt if a == e} for e in ids}
    base = set()
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            a, b = ids[i], ids[j]
            if up[a] & up[b]:
                continue
            if rng.random() < p.conflict_density:
                base.add((a, b))
    conflict = set()
    for a, b in base:
        for x in up[a]:
            for y in up[b]:
                conflict.add((x, y))
                conflict.add((y, x))
    return Pes(labels, lt=lt, conflict=frozenset(conflict))
