"""Graphviz rendering following the usual drawing conventions for event structures."""

from __future__ import annotations

from esfold.relations import transitive_reduction
from esfold.semantics import direct_relations_aes
from esfold.structures import Aes, EventStructure, Fes, Pes


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _minimal_conflicts(p: Pes):
    """Conflicts not inherited from a conflict between causes."""
    below = {e: {a for a, b in p.lt if b == e} for e in p.events}
    return {(a, b) for a, b in p.conflict
            if not any((x, b) in p.conflict for x in below[a])
            and not any((a, y) in p.conflict for y in below[b])}


def to_dot(s: EventStructure, name: str = "es") -> str:
    """
    Only direct relations are drawn: solid arrows for immediate causality,
    dashed arrows for asymmetric conflict, dotted lines for conflict and
    double-headed arrows for flow.
    """
    lines = [f"digraph {_q(name)} {{"]
    if len(s):
        lines.append("  node [shape=plaintext];")
    for e in s.events:
        lines.append(f"  {_q(e)} [label={_q(s.labels[e] + ' (' + e + ')')}];")
    edges = []
    if isinstance(s, Pes):
        edges += [(a, b, "") for a, b in transitive_reduction(s.lt)]
        edges += [(a, b, "style=dotted, dir=none") for a, b in _minimal_conflicts(s) if a < b]
    elif isinstance(s, Aes):
        d = direct_relations_aes(s)
        edges += [(a, b, "") for a, b in d.imm_cause]
        edges += [(a, b, "style=dotted, dir=none") for a, b in d.direct_conf if a < b]
        edges += [(a, b, "style=dashed") for a, b in d.direct_aconf
                  if (a, b) not in s.lt and (b, a) not in s.aconf]
    elif isinstance(s, Fes):
        edges += [(a, b, "dir=both, arrowtail=none, arrowhead=normalnormal") for a, b in s.flow]
        edges += [(a, b, "style=dotted, dir=none") for a, b in s.conf if a < b]
    for a, b, attrs in sorted(edges):
        suffix = f" [{attrs}]" if attrs else ""
        lines.append(f"  {_q(a)} -> {_q(b)}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
