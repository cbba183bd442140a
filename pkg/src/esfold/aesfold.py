"""
Folding of asymmetric event structures.

A set ``X`` of equally labelled, pairwise conflicting events is folded
into a single event ``e_X`` when it is *similar* (members share their
asymmetric conflicts up to history events) and *combinable* (every
consistent set of weak predecessors is matched by the history of some
member).  The folded structure is hp-bisimilar to the original.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Tuple

from esfold.folding import ConditionResult, FoldingError, FoldingMap, first_failure, merged_id
from esfold.relations import down_closure
from esfold.semantics import consistent_aes, direct_relations_aes, histories
from esfold.structures import Aes

EventSet = FrozenSet[str]


def strict_causes(a: Aes, x: Iterable[str]) -> EventSet:
    """Events strictly below every member of ``x``."""
    x = frozenset(x)
    if not x:
        raise ValueError("empty candidate set")
    return frozenset(e for e in a.events if all((e, m) in a.lt for m in x))


def weak_predecessors(a: Aes, x: Iterable[str]) -> EventSet:
    """``↗``-predecessors of some member that some (possibly other) member does not disable."""
    x = frozenset(x)
    found = {
        e2 for e2 in a.events
        for e in x if (e2, e) in a.aconf
        if any((e1, e2) not in a.aconf for e1 in x)
    }
    return frozenset(found) - strict_causes(a, x) - x


def is_similar(a: Aes, x: Iterable[str]) -> Tuple[ConditionResult, ConditionResult, ConditionResult]:
    x = sorted(set(x))
    outside = [e for e in a.events if e not in x]
    ac = a.aconf
    pairs = [(e, e1) for e in x for e1 in x if e != e1]

    c1 = first_failure(
        "similar.1",
        ((e, e1) for e, e1 in pairs
         if a.labels[e] != a.labels[e1] or (e, e1) not in ac or (e1, e) not in ac),
        lambda e, e1: f"{e},{e1} differ in label or are not in mutual conflict")
    c2 = first_failure(
        "similar.2",
        ((e, e1, e2) for e, e1 in pairs for e2 in outside
         if (e, e2) in ac and (e1, e2) not in ac and (e2, e) not in ac),
        lambda e, e1, e2: f"{e} ↗ {e2} but neither {e1} ↗ {e2} nor {e2} ↗ {e}")
    direct = direct_relations_aes(a).direct_aconf
    c3 = first_failure(
        "similar.3",
        ((e2, e, e1) for e, e1 in pairs for e2 in outside
         if (e2, e) in direct and (e2, e1) not in ac),
        lambda e2, e, e1: f"{e2} ↗μ {e} but not {e2} ↗ {e1}")
    return c1, c2, c3


@dataclass(frozen=True)
class WeakSetCheck:
    """Outcome of the combinability clause for one consistent set of weak predecessors."""

    y: EventSet
    member: Optional[str]
    history: Optional[EventSet]

    @property
    def holds(self) -> bool:
        return self.member is not None

    def __str__(self) -> str:
        ys = "{" + ", ".join(sorted(self.y)) + "}"
        if not self.holds:
            return f"Y={ys}: no member with a fitting history"
        h = "{" + ", ".join(sorted(self.history)) + "}"
        return f"Y={ys}: {self.member} with history {h}"


@dataclass(frozen=True)
class AesFoldingPlan:
    x: EventSet
    strict_causes: EventSet
    weak_preds: EventSet
    similarity: Tuple[ConditionResult, ...]
    weak_checks: Tuple[WeakSetCheck, ...]
    merged_id: str
    strict: bool = False

    @property
    def is_similar(self) -> bool:
        return all(c.holds for c in self.similarity)

    @property
    def is_combinable(self) -> bool:
        return self.is_similar and all(w.holds for w in self.weak_checks)

    @property
    def ok(self) -> bool:
        return len(self.x) >= 2 and self.is_combinable

    def failing(self) -> Optional[str]:
        if len(self.x) < 2:
            return "size"
        for c in self.similarity:
            if not c.holds:
                return c.name
        for w in self.weak_checks:
            if not w.holds:
                return "combinable"
        return None

    def report(self) -> str:
        fmt = lambda s: "{" + ", ".join(sorted(s)) + "}"  # noqa: E731
        lines = [f"X = {fmt(self.x)} -> {self.merged_id}: {'combinable' if self.ok else 'rejected'}",
                 f"  S(X) = {fmt(self.strict_causes)}, W(X) = {fmt(self.weak_preds)}"]
        lines += [f"  {c}" for c in self.similarity]
        lines += [f"  {w}" for w in self.weak_checks]
        return "\n".join(lines)


def is_combinable_aes(a: Aes, x: Iterable[str], strict: bool = False) -> AesFoldingPlan:
    """
    Evaluate similarity and combinability of ``x``.

    For each consistent ``Y ⊆ W(X)`` look for a member ``e`` disabling no
    event of ``Y`` with a history ``h`` such that ``h - {e} ⊆ S(X) ∪ ⌊Y⌋``
    (``strict=True`` demands equality instead of inclusion).
    """
    x = frozenset(x)
    s = strict_causes(a, x)
    w = weak_predecessors(a, x)
    sim = is_similar(a, x)
    hists = {e: sorted(histories(a, e), key=lambda h: (len(h), sorted(h))) for e in sorted(x)}
    checks = []
    wl = sorted(w)
    for k in range(len(wl) + 1):
        for combo in combinations(wl, k):
            y = frozenset(combo)
            if y and not consistent_aes(a, y):
                continue
            bound = s | down_closure(y, a.lt)
            found = None
            for e in sorted(x):
                if any((e, e1) in a.aconf for e1 in y):
                    continue
                for h in hists[e]:
                    minus = h - {e}
                    if (minus == bound) if strict else (minus <= bound):
                        found = (e, h)
                        break
                if found:
                    break
            checks.append(WeakSetCheck(y, *(found or (None, None))))
    return AesFoldingPlan(x, s, w, sim, tuple(checks), merged_id(a, x), strict)


def fold_aes_set(a: Aes, x: Iterable[str], merged: Optional[str] = None) -> Tuple[Aes, FoldingMap]:
    """The folding construction itself, with no combinability gate."""
    x = frozenset(x)
    merged = merged or merged_id(a, x)
    rest = [e for e in a.events if e not in x]
    rest_set = set(rest)
    s = strict_causes(a, x)
    lt = {(p, q) for p, q in a.lt if p in rest_set and q in rest_set}
    lt |= {(e, merged) for e in s}
    lt |= {(merged, e) for e in rest if any((m, e) in a.lt for m in x)}
    ac = {(p, q) for p, q in a.aconf if p in rest_set and q in rest_set}
    ac |= {(e, merged) for e in rest if all((e, m) in a.aconf for m in x)}
    ac |= {(merged, e) for e in rest if all((m, e) in a.aconf for m in x)}
    labels = {e: a.labels[e] for e in rest}
    labels[merged] = a.labels[min(x)]
    return Aes(labels, lt=frozenset(lt), aconf=frozenset(ac)), FoldingMap.of(a, x, merged)


def fold_aes(a: Aes, plan, force: bool = False) -> Tuple[Aes, FoldingMap]:
    """Fold ``a`` on a combinable set (a plan or a plain event set); ``force`` skips the gate."""
    if not isinstance(plan, AesFoldingPlan):
        plan = is_combinable_aes(a, plan)
    if not plan.ok and not force:
        raise FoldingError(f"refusing to fold {sorted(plan.x)}: {plan.failing()} failed\n{plan.report()}")
    return fold_aes_set(a, plan.x, plan.merged_id)
