"""Small helpers for finite binary relations stored as sets of pairs."""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, FrozenSet, Hashable, Iterable, Set, Tuple

Pair = Tuple[str, str]
Relation = FrozenSet[Pair]


def successors(rel: Iterable[Pair]) -> Dict[str, Set[str]]:
    out: Dict[str, Set[str]] = defaultdict(set)
    for a, b in rel:
        out[a].add(b)
    return out


def predecessors(rel: Iterable[Pair]) -> Dict[str, Set[str]]:
    out: Dict[str, Set[str]] = defaultdict(set)
    for a, b in rel:
        out[b].add(a)
    return out


def restrict(rel: Iterable[Pair], nodes: Iterable[Hashable]) -> Relation:
    keep = set(nodes)
    return frozenset((a, b) for a, b in rel if a in keep and b in keep)


def transitive_closure(rel: Iterable[Pair]) -> Relation:
    """Return the (non-reflexive) transitive closure of ``rel``."""
    succ = successors(rel)
    closed = set()
    for start in list(succ):
        stack = list(succ[start])
        seen: Set[str] = set()
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            closed.add((start, node))
            stack.extend(succ.get(node, ()))
    return frozenset(closed)


def is_acyclic(rel: Iterable[Pair]) -> bool:
    return not any(a == b for a, b in transitive_closure(rel))


def find_cycle(rel: Iterable[Pair]):
    """Return one cycle as a list of nodes (first node repeated at the end), or None."""
    succ = successors(rel)
    WHITE, GREY, BLACK = 0, 1, 2
    colour: Dict[str, int] = defaultdict(int)
    nodes = sorted(set(succ) | {b for vs in succ.values() for b in vs})
    for root in nodes:
        if colour[root] != WHITE:
            continue
        path = [root]
        iters = [iter(sorted(succ.get(root, ())))]
        colour[root] = GREY
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                colour[path.pop()] = BLACK
                iters.pop()
                continue
            if colour[nxt] == GREY:
                return path[path.index(nxt):] + [nxt]
            if colour[nxt] == WHITE:
                colour[nxt] = GREY
                path.append(nxt)
                iters.append(iter(sorted(succ.get(nxt, ()))))
    return None


def transitive_reduction(rel: Iterable[Pair]) -> Relation:
    """Hasse diagram of a strict partial order (input must be acyclic)."""
    closed = transitive_closure(rel)
    succ = successors(closed)
    return frozenset(
        (a, b)
        for a, b in closed
        if not any(b in succ.get(m, ()) for m in succ.get(a, ()) if m != b)
    )


def symmetrize(rel: Iterable[Pair]) -> Relation:
    rel = set(rel)
    return frozenset(rel | {(b, a) for a, b in rel})


def down_closure(nodes: Iterable[str], lt: Iterable[Pair]) -> FrozenSet[str]:
    """All nodes below (or equal to) some node of ``nodes`` w.r.t. the strict order ``lt``."""
    preds = predecessors(lt)
    out = set(nodes)
    stack = list(out)
    while stack:
        n = stack.pop()
        for p in preds.get(n, ()):
            if p not in out:
                out.add(p)
                stack.append(p)
    return frozenset(out)
