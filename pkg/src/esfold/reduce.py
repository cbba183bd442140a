"""
Iterated folding.

``minimize`` folds greedily until no combinable set is left.  The result
depends on the order of folds, so ``all_minimal_forms`` explores every
fold sequence and returns the irreducible structures reached, one per
isomorphism class.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple, Union

from esfold.aesfold import fold_aes, is_combinable_aes
from esfold.fesfold import fold_fes, is_combinable_fes
from esfold.hpbisim import hp_bisimilar
from esfold.isomorphism import fingerprint, isomorphic
from esfold.semantics import check_capacity
from esfold.structures import Aes, Fes, KindMismatch

Foldable = Union[Aes, Fes]
STRATEGIES = ("first", "smallest-result")


def _plan(s: Foldable, x, strict: bool = False):
    if isinstance(s, Aes):
        return is_combinable_aes(s, x, strict=strict)
    if isinstance(s, Fes):
        return is_combinable_fes(s, x)
    raise KindMismatch(f"folding needs an AES or FES, got {type(s).__name__}")


def _fold(s: Foldable, plan):
    return fold_aes(s, plan) if isinstance(s, Aes) else fold_fes(s, plan)


def _in_conflict(s: Foldable, a: str, b: str) -> bool:
    if isinstance(s, Aes):
        return (a, b) in s.aconf and (b, a) in s.aconf
    return (a, b) in s.conf


def enumerate_candidates(s: Foldable, k: Optional[int] = None, include_rejected: bool = False,
                         strict: bool = False) -> List[Tuple[frozenset, object]]:
    """
    Plans for candidate sets of size 2..k grouped by label, in (label, ids) order.

    Without ``include_rejected`` only combinable sets are returned, and sets
    that are not pairwise in conflict are skipped before planning.
    """
    if not isinstance(s, (Aes, Fes)):
        raise KindMismatch(f"folding needs an AES or FES, got {type(s).__name__}")
    check_capacity(s)
    groups: Dict[str, List[str]] = {}
    for e in s.events:
        groups.setdefault(s.labels[e], []).append(e)
    if k is None:
        k = max((len(g) for g in groups.values()), default=0)
    out = []
    for label in sorted(groups):
        members = groups[label]
        for size in range(2, min(k, len(members)) + 1):
            for combo in combinations(members, size):
                if not include_rejected and not all(
                        _in_conflict(s, a, b) for a, b in combinations(combo, 2)):
                    continue
                plan = _plan(s, combo, strict)
                if plan.ok or include_rejected:
                    out.append((frozenset(combo), plan))
    return out


def _relation_size(s: Foldable) -> int:
    return sum(len(r) for r in s.relations().values())


@dataclass(frozen=True)
class Step:
    x: frozenset
    merged: str
    summary: str
    events_after: int
    structure_hash: str


@dataclass
class ReductionTrace:
    initial: Foldable
    final: Foldable
    steps: List[Step] = field(default_factory=list)
    strategy: str = "first"

    def to_json(self) -> dict:
        return {
            "strategy": self.strategy,
            "initial_events": len(self.initial),
            "final_events": len(self.final),
            "steps": [{"fold": sorted(st.x), "merged": st.merged, "events_after": st.events_after,
                       "hash": st.structure_hash, "plan": st.summary} for st in self.steps],
        }

    def __str__(self) -> str:
        lines = [f"{len(self.initial)} -> {len(self.final)} events in {len(self.steps)} fold(s) ({self.strategy})"]
        for i, st in enumerate(self.steps, 1):
            lines.append(f"  {i}. fold {{{', '.join(sorted(st.x))}}} into {st.merged} "
                         f"({st.events_after} events, {st.structure_hash[:10]})")
        return "\n".join(lines)


def minimize(s: Foldable, strategy: str = "first", strict: bool = False) -> ReductionTrace:
    """Fold until no combinable set remains, choosing among candidates by ``strategy``."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    trace = ReductionTrace(s, s, strategy=strategy)
    current = s
    while True:
        cands = enumerate_candidates(current, strict=strict)
        if not cands:
            break
        if strategy == "first":
            x, plan = cands[0]
            nxt, _ = _fold(current, plan)
        else:
            options = []
            for i, (x, plan) in enumerate(cands):
                folded, _ = _fold(current, plan)
                options.append((_relation_size(folded), i, x, plan, folded))
            _, _, x, plan, nxt = min(options, key=lambda o: (o[0], o[1]))
        assert len(nxt) < len(current)
        trace.steps.append(Step(x, plan.merged_id, plan.report(), len(nxt), fingerprint(nxt)))
        current = nxt
    trace.final = current
    return trace


@dataclass
class MinimalForm:
    structure: Foldable
    path: List[Tuple[frozenset, str]]
    hp_equivalent: Optional[bool] = None


@dataclass
class MinimalForms:
    classes: List[MinimalForm]
    complete: bool = True
    explored: int = 0

    def __len__(self) -> int:
        return len(self.classes)


def all_minimal_forms(s: Foldable, bound: int = 10_000, verify: bool = True,
                      strict: bool = False) -> MinimalForms:
    """
    Explore every fold sequence (BFS), deduplicating reached structures up to
    isomorphism.  Stops after ``bound`` expanded structures and then flags
    the result as incomplete.
    """
    seen: Dict[str, List[Foldable]] = {}

    def known(t: Foldable) -> bool:
        bucket = seen.setdefault(fingerprint(t), [])
        if any(isomorphic(t, u) is not None for u in bucket):
            return True
        bucket.append(t)
        return False

    known(s)
    queue = deque([(s, [])])
    minimal: List[MinimalForm] = []
    expanded = 0
    complete = True
    while queue:
        if expanded >= bound:
            complete = False
            break
        t, path = queue.popleft()
        expanded += 1
        cands = enumerate_candidates(t, strict=strict)
        if not cands:
            minimal.append(MinimalForm(t, path))
            continue
        for x, plan in cands:
            nxt, _ = _fold(t, plan)
            if not known(nxt):
                queue.append((nxt, path + [(x, plan.merged_id)]))
    if verify:
        for m in minimal:
            m.hp_equivalent = hp_bisimilar(s, m.structure).equivalent
    return MinimalForms(minimal, complete, expanded)
