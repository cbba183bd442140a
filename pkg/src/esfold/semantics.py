"""
Configurations and derived relations of event structures.

Configurations are enumerated by DFS over single-event steps that respect
each variant's extension order.  Every configuration is reachable that way
(add its events in any linearisation of the local order), so the same
step graph is reused as the transition system of the hp-bisimulation
checker.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from esfold.relations import (
    Relation,
    down_closure,
    is_acyclic,
    predecessors,
    restrict,
    successors,
    transitive_closure,
)
from esfold.structures import Aes, CapacityError, EventStructure, Fes, KindMismatch, Pes

DEFAULT_CAP = 24

EventSet = FrozenSet[str]


def capacity() -> int:
    """Event-count cap for exponential procedures; ``ESFOLD_CAP`` overrides the default."""
    raw = os.environ.get("ESFOLD_CAP")
    return int(raw) if raw else DEFAULT_CAP


def check_capacity(s: EventStructure, cap: Optional[int] = None) -> None:
    cap = capacity() if cap is None else cap
    if len(s) > cap:
        raise CapacityError(f"{s.kind.upper()} has {len(s)} events, cap is {cap} (set ESFOLD_CAP to raise it)")


@dataclass(frozen=True)
class Configuration:
    """A configuration with its local order (strict pairs, transitively closed)."""

    events: EventSet
    order: Relation

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self):
        return iter(sorted(self.events))

    def __contains__(self, e) -> bool:
        return e in self.events

    def before(self, a: str, b: str) -> bool:
        return (a, b) in self.order

    def __str__(self) -> str:
        return "{" + ", ".join(sorted(self.events)) + "}"


def _events(c) -> EventSet:
    return c.events if isinstance(c, Configuration) else frozenset(c)


def local_order(s: EventStructure, events: Iterable[str]) -> Relation:
    events = frozenset(events)
    if isinstance(s, Pes):
        return restrict(s.lt, events)
    if isinstance(s, Aes):
        return transitive_closure(restrict(s.aconf, events))
    if isinstance(s, Fes):
        return transitive_closure(restrict(s.flow, events))
    raise KindMismatch(type(s).__name__)


def is_configuration(s: EventStructure, events: Iterable[str]) -> bool:
    """Check the variant's configuration clauses directly (no enumeration)."""
    c = frozenset(events)
    if isinstance(s, Pes):
        return down_closure(c, s.lt) == c and not any((a, b) in s.conflict for a in c for b in c)
    if isinstance(s, Aes):
        return down_closure(c, s.lt) == c and is_acyclic(restrict(s.aconf, c))
    if isinstance(s, Fes):
        if any((a, b) in s.conf for a in c for b in c):
            return False
        if not is_acyclic(restrict(s.flow, c)):
            return False
        for e2, e in s.flow:
            if e in c and e2 not in c:
                if not any((e2, e3) in s.conf and (e3, e) in s.flow for e3 in c):
                    return False
        return True
    raise KindMismatch(type(s).__name__)


def extends(s: EventStructure, c1, c2) -> bool:
    """Extension order: subset inclusion, plus for AES no added event disables an old one."""
    a, b = _events(c1), _events(c2)
    if not a <= b:
        return False
    if isinstance(s, Aes):
        return not any((new, old) in s.aconf for new in b - a for old in a)
    return True


class _Stepper:
    """Precomputed adjacency used to test single-event extensions quickly."""

    def __init__(self, s: EventStructure):
        self.s = s
        if isinstance(s, (Pes, Aes)):
            self.causes = predecessors(s.lt)
        if isinstance(s, Pes):
            self.conf = successors(s.conflict)
        elif isinstance(s, Aes):
            self.disables = successors(s.aconf)  # e -> {x | e ↗ x}
        elif isinstance(s, Fes):
            self.conf = successors(s.conf)
            self.pre = predecessors(s.flow)

    def can_add(self, c: EventSet, e: str) -> bool:
        """True iff ``c ∪ {e}`` is a configuration extending ``c``."""
        s = self.s
        if e in c:
            return False
        if isinstance(s, Pes):
            return self.causes.get(e, set()) <= c and not (self.conf.get(e, set()) & (c | {e}))
        if isinstance(s, Aes):
            return self.causes.get(e, set()) <= c and not (self.disables.get(e, set()) & (c | {e}))
        conf_e = self.conf.get(e, set())
        if e in conf_e or conf_e & c:
            return False
        for p in self.pre.get(e, ()):
            if p not in c and not any(q in c and q in self.conf.get(p, ()) for q in self.pre[e]):
                return False
        return True


def configuration_graph(s: EventStructure) -> Dict[EventSet, Tuple[str, ...]]:
    """Map each configuration to the events that extend it by one step."""
    check_capacity(s)
    return _configuration_graph(s)


@lru_cache(maxsize=512)
def _configuration_graph(s: EventStructure) -> Dict[EventSet, Tuple[str, ...]]:
    step = _Stepper(s)
    events = s.events
    graph: Dict[EventSet, Tuple[str, ...]] = {}
    stack = [frozenset()]
    while stack:
        c = stack.pop()
        if c in graph:
            continue
        enabled = tuple(e for e in events if step.can_add(c, e))
        graph[c] = enabled
        for e in reversed(enabled):
            nxt = c | {e}
            if nxt not in graph:
                stack.append(nxt)
    return graph


def _sort_key(c: EventSet):
    return (len(c), sorted(c))


def configurations(s: EventStructure) -> List[Configuration]:
    """All configurations (including the empty one), ordered by size then ids."""
    graph = configuration_graph(s)
    return [Configuration(c, local_order(s, c)) for c in sorted(graph, key=_sort_key)]


def configuration_sets(s: EventStructure) -> Set[EventSet]:
    return set(configuration_graph(s))


def maximal_configurations(s: EventStructure) -> List[EventSet]:
    family = configuration_sets(s)
    return sorted((c for c in family if not any(c < d for d in family)), key=_sort_key)


# --------------------------------------------------------------------------
# AES: histories, direct relations, conflicts
# --------------------------------------------------------------------------

def history_in(a: Aes, c: Iterable[str], e: str) -> EventSet:
    """Events of ``c`` that must precede ``e`` in ``c``, i.e. ``{e' | e' (↗|c)* e}``."""
    c = frozenset(c)
    order = transitive_closure(restrict(a.aconf, c))
    return frozenset(x for x in c if x == e or (x, e) in order)


def histories(a: Aes, e: str) -> Set[EventSet]:
    if e not in a.labels:
        raise KeyError(f"unknown event {e!r}")
    return {history_in(a, c, e) for c in configuration_sets(a) if e in c}


def hist_union(a: Aes, xs: Iterable[str]) -> Set[EventSet]:
    out: Set[EventSet] = set()
    for x in xs:
        out |= histories(a, x)
    return out


def history_minus(h: EventSet, owner: str) -> EventSet:
    return h - {owner}


@dataclass(frozen=True)
class DirectRelations:
    imm_cause: Relation
    direct_aconf: Relation
    direct_conf: Relation


def direct_relations_aes(a: Aes) -> DirectRelations:
    lt, ac = a.lt, a.aconf
    succ_lt = successors(lt)
    imm = frozenset((x, y) for x, y in lt if not any((m, y) in lt for m in succ_lt.get(x, ())))
    ac_succ = successors(ac)
    direct = frozenset(
        (x, z) for x, z in ac
        if not any((y, z) in lt for y in ac_succ.get(x, ()))
    )
    dconf = frozenset((x, y) for x, y in direct if (y, x) in direct)
    return DirectRelations(imm, direct, dconf)


def binary_conflict_aes(a: Aes, e: str, e2: str) -> bool:
    return (e, e2) in a.aconf and (e2, e) in a.aconf


def _strongly_connected_cyclic_sets(rel: Relation, universe: EventSet) -> Set[EventSet]:
    """Vertex sets of closed ↗-walks inside ``universe``."""
    out = set()
    nodes = sorted(universe)
    for k in range(1, len(nodes) + 1):
        for combo in combinations(nodes, k):
            z = frozenset(combo)
            closed = transitive_closure(restrict(rel, z))
            if all((x, y) in closed for x in z for y in z):
                out.add(z)
    return out


def derivable_conflicts(a: Aes, xs: Iterable[str], cap: int = 16) -> Set[EventSet]:
    """
    Least fixed point of the two set-conflict rules over subsets of ``⌊xs⌋``.

    Seeds are the vertex sets of ↗-cycles; the lifting rule replaces (or
    keeps and adds) an element ``e`` by any causal successor ``e'``.
    """
    universe = down_closure(xs, a.lt)
    if len(universe) > cap:
        raise CapacityError(f"set conflict over {len(universe)} events exceeds cap {cap}")
    above = {e: {e2 for e2 in universe if (e, e2) in a.lt} for e in universe}
    derived = set(_strongly_connected_cyclic_sets(a.aconf, universe))
    frontier = list(derived)
    while frontier:
        d = frontier.pop()
        for e in d:
            for e2 in above[e]:
                for nxt in ((d - {e}) | {e2}, d | {e2}):
                    if nxt not in derived:
                        derived.add(nxt)
                        frontier.append(nxt)
    return derived


def set_conflict_aes(a: Aes, xs: Iterable[str]) -> bool:
    """True iff ``xs`` includes a subset whose conflict is derivable by the set-conflict rules."""
    xs = frozenset(xs)
    if not xs:
        raise ValueError("set conflict needs a non-empty set")
    return any(d <= xs for d in derivable_conflicts(a, xs))


def consistent_aes(a: Aes, xs: Iterable[str]) -> bool:
    """Some configuration contains ``xs`` (its causal closure has no ↗-cycle)."""
    return is_acyclic(restrict(a.aconf, down_closure(xs, a.lt)))


# --------------------------------------------------------------------------
# FES: semantic conflict, mcons, direct conflict
# --------------------------------------------------------------------------

def semantic_conflict_fes(f: Fes, method: str = "enumeration") -> Relation:
    """
    Pairs (diagonal included) that no configuration contains.

    ``method="enumeration"`` reads the cached configuration family;
    ``method="definition"`` searches all subsets directly with
    :func:`is_configuration`.
    """
    events = f.events
    if method == "enumeration":
        together = set()
        for c in configuration_graph(f):
            for x in c:
                for y in c:
                    together.add((x, y))
    elif method == "definition":
        check_capacity(f)
        together = set()
        for k in range(1, len(events) + 1):
            for combo in combinations(events, k):
                if is_configuration(f, combo):
                    together.update((x, y) for x in combo for y in combo)
    else:
        raise ValueError(f"unknown method {method!r}")
    return frozenset((x, y) for x in events for y in events if (x, y) not in together)


def mcons(f: Fes, zs: Iterable[str]) -> List[EventSet]:
    """Maximal conflict-free subsets of ``zs`` (self-conflicting events never qualify)."""
    nodes = sorted(z for z in set(zs) if (z, z) not in f.conf)
    compatible = {z: {w for w in nodes if w != z and (z, w) not in f.conf} for z in nodes}
    found: List[EventSet] = []

    def expand(r: Set[str], p: Set[str], x: Set[str]) -> None:
        if not p and not x:
            found.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(compatible[u] & p))
        for v in sorted(p - compatible[pivot]):
            expand(r | {v}, p & compatible[v], x & compatible[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(nodes), set())
    return sorted(found, key=lambda s: sorted(s))


def conflict_set(f: Fes, e: str) -> EventSet:
    if e not in f.labels:
        raise KeyError(f"unknown event {e!r}")
    return frozenset(x for x, y in f.conf if y == e)


def direct_conflict_fes(f: Fes, e: str, e2: str) -> bool:
    """``e #_μ e2``: in conflict, and some maximal consistent set of ``pre(e)`` avoids ``#(e2)``."""
    if (e, e2) not in f.conf:
        return False
    blockers = conflict_set(f, e2)
    return any(not (y & blockers) for y in mcons(f, f.pre(e)))


def direct_conflicts_fes(f: Fes) -> Relation:
    return frozenset((a, b) for a, b in f.conf if direct_conflict_fes(f, a, b))
