"""
History-preserving bisimilarity of finite event structures.

Triples ``(C1, f, C2)`` pair configurations with an isomorphism of their
labelled local orders.  Starting from ``(∅, ∅, ∅)`` we build every triple
reachable by matched single-event steps (``f' = f ∪ {e1 ↦ e2}``), then
compute the greatest fixed point by deleting triples that have an
unmatched step on either side.  The structures are equivalent iff the
empty triple survives.  Restricting to reachable triples does not change
that verdict.

Steps follow each variant's extension order (``⊑`` for AES, inclusion
otherwise); local orders are ``<`` for PES, ``(↗|C)*`` for AES and
``(≺|C)*`` for FES.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from esfold.semantics import Configuration, EventSet, check_capacity, configuration_graph, local_order
from esfold.structures import EventStructure

Iso = FrozenSet[Tuple[str, str]]
Triple = Tuple[EventSet, Iso, EventSet]

EQUIVALENT = "equivalent"
DISTINGUISHED = "distinguished"


def _as_config(s: EventStructure, c) -> Configuration:
    if isinstance(c, Configuration):
        return c
    c = frozenset(c)
    return Configuration(c, local_order(s, c))


def is_pomset_iso(x: EventStructure, c1, y: EventStructure, c2, mapping: Dict[str, str]) -> bool:
    c1, c2 = _as_config(x, c1), _as_config(y, c2)
    if set(mapping) != set(c1.events) or set(mapping.values()) != set(c2.events):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    if any(x.labels[a] != y.labels[b] for a, b in mapping.items()):
        return False
    return all(((a, b) in c1.order) == ((mapping[a], mapping[b]) in c2.order)
               for a in c1.events for b in c1.events)


def pomset_iso(x: EventStructure, c1, y: EventStructure, c2) -> List[Dict[str, str]]:
    """All label- and order-preserving/reflecting bijections from ``c1`` (in x) to ``c2`` (in y)."""
    c1, c2 = _as_config(x, c1), _as_config(y, c2)
    src = sorted(c1.events)
    if sorted(x.labels[e] for e in src) != sorted(y.labels[e] for e in c2.events):
        return []
    out = []
    for image in permutations(sorted(c2.events)):
        m = dict(zip(src, image))
        if is_pomset_iso(x, c1, y, c2, m):
            out.append(m)
    return out


@dataclass(frozen=True)
class Certificate:
    """An unmatched move: from ``(config1, mapping, config2)`` side ``side`` fires ``event``."""

    side: int
    config1: EventSet
    config2: EventSet
    mapping: Iso
    event: str
    label: str
    reached: EventSet
    path: Tuple[Tuple[str, str], ...] = ()

    def __str__(self) -> str:
        fmt = lambda c: "{" + ", ".join(sorted(c)) + "}"  # noqa: E731
        steps = " ".join(f"{a}/{b}" for a, b in self.path) or "(start)"
        return (f"after matched steps {steps}: structure {self.side} reaches {fmt(self.reached)} "
                f"by firing {self.event} (label {self.label!r}) from "
                f"{fmt(self.config1 if self.side == 1 else self.config2)}; "
                f"no history-preserving match from {fmt(self.config2 if self.side == 1 else self.config1)}")


@dataclass
class HpWitness:
    verdict: str
    triples: Set[Triple] = field(default_factory=set)
    certificate: Optional[Certificate] = None
    explored: int = 0

    @property
    def equivalent(self) -> bool:
        return self.verdict == EQUIVALENT

    def report(self, max_triples: int = 25) -> str:
        lines = ["hp-equivalent" if self.equivalent else "not hp-equivalent",
                 f"triples explored: {self.explored}, surviving: {len(self.triples)}"]
        if self.certificate is not None:
            lines.append("certificate: " + str(self.certificate))
        if self.equivalent and len(self.triples) <= max_triples:
            for c1, f, c2 in sorted(self.triples, key=lambda t: (len(t[0]), sorted(t[1]))):
                lines.append("  " + ", ".join(f"{a}->{b}" for a, b in sorted(f)) if f else "  (empty)")
        return "\n".join(lines)


class _Side:
    def __init__(self, s: EventStructure):
        self.s = s
        self.graph = configuration_graph(s)
        self._orders: Dict[EventSet, frozenset] = {}

    def order(self, c: EventSet):
        o = self._orders.get(c)
        if o is None:
            o = self._orders[c] = local_order(self.s, c)
        return o


def _extend_ok(s1: _Side, c1: EventSet, e1: str, s2: _Side, c2: EventSet, e2: str, f: Dict[str, str]) -> bool:
    o1, o2 = s1.order(c1 | {e1}), s2.order(c2 | {e2})
    for a in c1:
        b = f[a]
        if ((a, e1) in o1) != ((b, e2) in o2) or ((e1, a) in o1) != ((e2, b) in o2):
            return False
    return True


def hp_bisimilar(x: EventStructure, y: EventStructure) -> HpWitness:
    check_capacity(x)
    check_capacity(y)
    s1, s2 = _Side(x), _Side(y)
    root: Triple = (frozenset(), frozenset(), frozenset())

    moves1: Dict[Triple, Dict[str, List[Triple]]] = {}
    moves2: Dict[Triple, Dict[str, List[Triple]]] = {}
    parent: Dict[Triple, Tuple[Optional[Triple], Tuple[str, str]]] = {root: (None, ("", ""))}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        t = queue.popleft()
        c1, f, c2 = t
        fmap = dict(f)
        m1: Dict[str, List[Triple]] = {e: [] for e in s1.graph[c1]}
        m2: Dict[str, List[Triple]] = {e: [] for e in s2.graph[c2]}
        for e1 in s1.graph[c1]:
            lab = x.labels[e1]
            for e2 in s2.graph[c2]:
                if y.labels[e2] != lab or not _extend_ok(s1, c1, e1, s2, c2, e2, fmap):
                    continue
                nxt = (c1 | {e1}, f | {(e1, e2)}, c2 | {e2})
                m1[e1].append(nxt)
                m2[e2].append(nxt)
                if nxt not in parent:
                    parent[nxt] = (t, (e1, e2))
                    depth[nxt] = depth[t] + 1
                    queue.append(nxt)
        moves1[t], moves2[t] = m1, m2

    alive = set(parent)
    removed_first: List[Tuple[Triple, int, str]] = []
    changed, first_round = True, True
    while changed:
        changed = False
        dead = []
        for t in alive:
            bad = _unmatched(t, moves1, moves2, alive)
            if bad is not None:
                dead.append(t)
                if first_round:
                    removed_first.append((t, *bad))
        if dead:
            changed = True
            alive.difference_update(dead)
        first_round = False

    if root in alive:
        return HpWitness(EQUIVALENT, alive, None, len(parent))

    cert = None
    if removed_first:
        t, side, ev = min(removed_first, key=lambda r: (depth[r[0]], r[1], sorted(r[0][0]), sorted(r[0][2]), r[2]))
        path = []
        node = t
        while parent[node][0] is not None:
            node, step = parent[node][0], parent[node][1]
            path.append(step)
        c1, f, c2 = t
        lab = (x if side == 1 else y).labels[ev]
        reached = (c1 if side == 1 else c2) | {ev}
        cert = Certificate(side, c1, c2, f, ev, lab, reached, tuple(reversed(path)))
    return HpWitness(DISTINGUISHED, alive, cert, len(parent))


def _unmatched(t, moves1, moves2, alive):
    for side, moves in ((1, moves1), (2, moves2)):
        for ev, succs in sorted(moves[t].items()):
            if not any(s in alive for s in succs):
                return side, ev
    return None


def verify_witness(x: EventStructure, y: EventStructure, w: HpWitness) -> bool:
    """Independently re-check that ``w.triples`` is an hp-bisimulation containing the empty triple."""
    if not w.equivalent:
        return False
    g1, g2 = configuration_graph(x), configuration_graph(y)
    triples = w.triples
    if (frozenset(), frozenset(), frozenset()) not in triples:
        return False
    for c1, f, c2 in triples:
        if c1 not in g1 or c2 not in g2 or not is_pomset_iso(x, c1, y, c2, dict(f)):
            return False
        for e1 in g1[c1]:
            if not any((c1 | {e1}, f | {(e1, e2)}, c2 | {e2}) in triples for e2 in g2[c2]):
                return False
        for e2 in g2[c2]:
            if not any((c1 | {e1}, f | {(e1, e2)}, c2 | {e2}) in triples for e1 in g1[c1]):
                return False
    return True
