"""Isomorphism of event structures of the same kind, by backtracking over refined colour classes."""

from __future__ import annotations

import hashlib
from typing import Dict, List, Optional

from esfold.structures import EventStructure, KindMismatch


def _refined_colours(s: EventStructure, rounds: Optional[int] = None) -> Dict[str, str]:
    """Colour refinement: start from labels, split by multisets of neighbour colours per relation."""
    colours = {e: s.labels[e] for e in s.events}
    rels = list(s.relations().values())
    out_adj = [{e: [] for e in s.events} for _ in rels]
    in_adj = [{e: [] for e in s.events} for _ in rels]
    for i, rel in enumerate(rels):
        for a, b in rel:
            out_adj[i][a].append(b)
            in_adj[i][b].append(a)
    for _ in range(rounds if rounds is not None else len(colours) + 1):
        sig = {}
        for e in s.events:
            parts = [colours[e]]
            for i in range(len(rels)):
                parts.append(",".join(sorted(colours[x] for x in out_adj[i][e])))
                parts.append(",".join(sorted(colours[x] for x in in_adj[i][e])))
            sig[e] = "|".join(parts)
        short = {v: hashlib.sha1(v.encode()).hexdigest()[:12] for v in set(sig.values())}
        new = {e: short[sig[e]] for e in s.events}
        if len(set(new.values())) == len(set(colours.values())):
            colours = new
            break
        colours = new
    return colours


def fingerprint(s: EventStructure) -> str:
    """Isomorphism-invariant hash; equal for isomorphic structures, usually distinct otherwise."""
    colours = _refined_colours(s)
    edges = []
    for name, rel in s.relations().items():
        edges.extend(f"{name}:{colours[a]}>{colours[b]}" for a, b in rel)
    body = s.kind + ";" + ",".join(sorted(colours.values())) + ";" + ",".join(sorted(edges))
    return hashlib.sha1(body.encode()).hexdigest()


def isomorphic(x: EventStructure, y: EventStructure) -> Optional[Dict[str, str]]:
    """
    Return a label-preserving bijection x -> y preserving and reflecting every
    relation, or None.  The search tries candidates in sorted id order, so the
    returned bijection is deterministic.
    """
    if type(x) is not type(y):
        raise KindMismatch(f"cannot compare {x.kind} with {y.kind}")
    if len(x) != len(y):
        return None
    if sorted(x.labels.values()) != sorted(y.labels.values()):
        return None
    cx, cy = _refined_colours(x), _refined_colours(y)
    if sorted(cx.values()) != sorted(cy.values()):
        return None
    rx, ry = x.relations(), y.relations()
    if any(len(rx[n]) != len(ry[n]) for n in rx):
        return None

    order: List[str] = sorted(x.events, key=lambda e: (sum(v == cx[e] for v in cx.values()), e))
    mapping: Dict[str, str] = {}
    used = set()

    def consistent(a: str, b: str) -> bool:
        for name in rx:
            r1, r2 = rx[name], ry[name]
            if ((a, a) in r1) != ((b, b) in r2):
                return False
            for p, q in mapping.items():
                if ((a, p) in r1) != ((b, q) in r2) or ((p, a) in r1) != ((q, b) in r2):
                    return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        for b in sorted(y.events):
            if b in used or cy[b] != cx[a] or not consistent(a, b):
                continue
            mapping[a] = b
            used.add(b)
            if search(i + 1):
                return True
            del mapping[a]
            used.discard(b)
        return False

    return dict(sorted(mapping.items())) if search(0) else None
