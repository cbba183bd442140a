"""
Folding of flow event structures.

Members of ``X`` must carry one label and be pairwise in conflict, share
their direct conflicts, agree on successors and predecessors up to
conflict, and must not lose a conflict that is needed to form the maximal
consistent predecessor sets of some event.  The merged event gets every
flow edge of any member and the conflicts common to all members.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Tuple

from esfold.folding import ConditionResult, FoldingError, FoldingMap, first_failure, merged_id
from esfold.semantics import direct_conflict_fes, mcons
from esfold.structures import Fes

EventSet = FrozenSet[str]


@dataclass(frozen=True)
class FesFoldingPlan:
    x: EventSet
    conditions: Tuple[ConditionResult, ...]
    merged_id: str

    @property
    def ok(self) -> bool:
        return len(self.x) >= 2 and all(c.holds for c in self.conditions)

    def failing(self) -> Optional[str]:
        if len(self.x) < 2:
            return "size"
        for c in self.conditions:
            if not c.holds:
                return c.name
        return None

    def report(self) -> str:
        fmt = lambda s: "{" + ", ".join(sorted(s)) + "}"  # noqa: E731
        lines = [f"X = {fmt(self.x)} -> {self.merged_id}: {'combinable' if self.ok else 'rejected'}"]
        lines += [f"  {c}" for c in self.conditions]
        return "\n".join(lines)


def _cond5_failures(f: Fes, x: EventSet):
    conf = f.conf
    outside = [e for e in f.events if e not in x]
    for e in outside:
        pre_e = f.pre(e)
        ys = None
        for xm in sorted(x & pre_e):
            for e1 in sorted(pre_e - x):
                if (xm, e1) not in conf or all((m, e1) in conf for m in x):
                    continue
                if ys is None:
                    ys = mcons(f, pre_e)
                for y in ys:
                    if xm in y and not any((e2, e1) in conf for e2 in y - {xm}):
                        yield (xm, e1, e, "{" + ",".join(sorted(y)) + "}")
                    if not (x & y) and not any(all((m, e2) in conf for m in x) for e2 in y):
                        yield (xm, e1, e, "{" + ",".join(sorted(y)) + "}")


def is_combinable_fes(f: Fes, x: Iterable[str], mcons_guard: bool = True) -> FesFoldingPlan:
    """
    Evaluate the five combinability conditions on ``x``.

    ``mcons_guard=False`` checks the fourth condition only as the pairwise
    predecessor clause; that reading admits folds that change behaviour and
    is kept for experiments.
    """
    x = frozenset(x)
    xs = sorted(x)
    conf, flow = f.conf, f.flow
    outside = [e for e in f.events if e not in x]
    pairs = [(a, b) for a in xs for b in xs if a != b]
    pre = {e: f.pre(e) for e in f.events}

    c1 = first_failure(
        "fes.1",
        ((a, b) for a, b in pairs if f.labels[a] != f.labels[b] or (a, b) not in conf),
        lambda a, b: f"{a},{b} differ in label or are not in conflict")
    c2 = first_failure(
        "fes.2",
        ((a, b, e) for a, b in pairs for e in outside
         if (b, e) not in conf and direct_conflict_fes(f, a, e)),
        lambda a, b, e: f"{a} #μ {e} but not {b} # {e}")
    c3 = first_failure(
        "fes.3",
        ((a, b, e) for a, b in pairs for e in outside
         if (a, e) in flow and (b, e) not in flow and (b, e) not in conf),
        lambda a, b, e: f"{a} ≺ {e} but {b} neither precedes nor conflicts with {e}")

    def c4_fail():
        for a, b in pairs:
            for e in outside:
                if (e, a) not in flow:
                    continue
                if not pre[b]:
                    yield (a, b, e)
                elif (e, b) not in flow and not all((e, e1) in conf for e1 in pre[b] - pre[a]):
                    yield (a, b, e)

    def c4_note(*w):
        if w[0] == "mcons":
            return "maximal consistent in pre of a member but not in pre(X)"
        a, b, e = w
        return f"{e} ≺ {a}, but {b} has no matching or conflicting predecessor"

    def c4_all():
        yield from c4_fail()
        # The clause above is vacuous when pre(x') ⊆ pre(x); folding is only
        # sound when the members' maximal consistent predecessor sets are
        # exactly those of pre(X), so that is required as well.
        holds, witness = check_mcons_lemma(f, x) if mcons_guard else (True, None)
        if not holds:
            yield ("mcons", "{" + ",".join(sorted(witness)) + "}")

    c4 = first_failure("fes.4", c4_all(), c4_note)
    c5 = first_failure("fes.5", _cond5_failures(f, x),
                       lambda xm, e1, e, y: f"pre({e}) ∋ {xm},{e1}: the conflict {xm} # {e1} is needed in {y}")
    return FesFoldingPlan(x, (c1, c2, c3, c4, c5), merged_id(f, x))


def fold_fes_set(f: Fes, x: Iterable[str], merged: Optional[str] = None) -> Tuple[Fes, FoldingMap]:
    x = frozenset(x)
    merged = merged or merged_id(f, x)
    rest = [e for e in f.events if e not in x]
    rest_set = set(rest)
    conf = {(p, q) for p, q in f.conf if p in rest_set and q in rest_set}
    common = [e for e in rest if all((e, m) in f.conf for m in x)]
    conf |= {(e, merged) for e in common} | {(merged, e) for e in common}
    flow = {(p, q) for p, q in f.flow if p in rest_set and q in rest_set}
    flow |= {(e, merged) for e in rest if any((e, m) in f.flow for m in x)}
    flow |= {(merged, e) for e in rest if any((m, e) in f.flow for m in x)}
    labels = {e: f.labels[e] for e in rest}
    labels[merged] = f.labels[min(x)]
    return Fes(labels, flow=frozenset(flow), conf=frozenset(conf)), FoldingMap.of(f, x, merged)


def fold_fes(f: Fes, plan, force: bool = False) -> Tuple[Fes, FoldingMap]:
    if not isinstance(plan, FesFoldingPlan):
        plan = is_combinable_fes(f, plan)
    if not plan.ok and not force:
        raise FoldingError(f"refusing to fold {sorted(plan.x)}: {plan.failing()} failed\n{plan.report()}")
    return fold_fes_set(f, plan.x, plan.merged_id)


def check_mcons_lemma(f: Fes, x: Iterable[str]):
    """
    For consistent ``Y``: ``Y ⊆ pre(X)`` iff ``Y ⊆ pre(x)`` for some member ``x``;
    and ``mcons(pre(X))`` is the union of the members' ``mcons(pre(x))``.

    Returns ``(True, None)`` or ``(False, counterexample)``.
    """
    x = frozenset(x)
    pres = {m: f.pre(m) for m in x}
    pre_x = frozenset().union(*pres.values())
    items = sorted(pre_x)
    for k in range(len(items) + 1):
        for combo in combinations(items, k):
            y = frozenset(combo)
            if any((p, q) in f.conf for p in y for q in y):
                continue
            if not any(y <= pres[m] for m in x):
                return False, y
    whole = set(mcons(f, pre_x))
    parts = set()
    for m in x:
        parts.update(mcons(f, pres[m]))
    if whole != parts:
        return False, frozenset(sorted(whole ^ parts, key=sorted)[0])
    return True, None

