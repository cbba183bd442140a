"""
Prime, asymmetric and flow event structures.

All three variants are immutable values.  Events are string ids, each
carrying a label; relations are frozensets of ``(source, target)`` pairs.

* :class:`Pes` -- strict causality ``lt`` (transitively closed) and a
  symmetric ``conflict``.
* :class:`Aes` -- strict causality ``lt`` and asymmetric conflict
  ``aconf``, where ``(a, b) in aconf`` reads "a is disabled by b" or,
  equivalently, "a precedes b whenever both occur".
* :class:`Fes` -- an irreflexive ``flow`` relation of possible immediate
  causes and a symmetric ``conf``.

The ``build`` constructors accept causality in any form whose reflexive
transitive closure is a partial order and close it; the plain dataclass
constructors take relations verbatim, which is what the validators are
for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import ClassVar, Dict, Iterable, List, Mapping, Tuple

from esfold.relations import (
    Pair,
    Relation,
    down_closure,
    find_cycle,
    is_acyclic,
    restrict,
    symmetrize,
    transitive_closure,
    transitive_reduction,
)


class StructureError(ValueError):
    """Malformed input: duplicate ids, undeclared endpoints, causal cycles."""


class CapacityError(RuntimeError):
    """A structure exceeds the event-count cap of an exponential procedure."""


class KindMismatch(TypeError):
    pass


@dataclass(frozen=True)
class EventStructure:
    labels: Mapping[str, str]

    kind: ClassVar[str] = ""
    relation_names: ClassVar[Tuple[str, ...]] = ()

    def __post_init__(self) -> None:
        labels = dict(self.labels)
        for eid, lab in labels.items():
            if not isinstance(eid, str) or not eid:
                raise StructureError(f"event id must be a non-empty string, got {eid!r}")
            if not isinstance(lab, str) or not lab:
                raise StructureError(f"label of {eid!r} must be a non-empty string")
        object.__setattr__(self, "labels", MappingProxyType(labels))
        for name in self.relation_names:
            rel = frozenset(tuple(p) for p in getattr(self, name))
            for a, b in rel:
                if a not in labels or b not in labels:
                    raise StructureError(f"{name} edge ({a}, {b}) mentions an undeclared event")
            object.__setattr__(self, name, rel)

    @property
    def events(self) -> Tuple[str, ...]:
        return tuple(sorted(self.labels))

    def __len__(self) -> int:
        return len(self.labels)

    def relations(self) -> Dict[str, Relation]:
        return {name: getattr(self, name) for name in self.relation_names}

    def __hash__(self) -> int:
        return hash((self.kind, tuple(sorted(self.labels.items())),
                     tuple(frozenset(r) for r in self.relations().values())))

    def __eq__(self, other) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return dict(self.labels) == dict(other.labels) and self.relations() == other.relations()

    def renamed(self, mapping: Mapping[str, str]):
        """Copy with event ids renamed by ``mapping`` (missing ids unchanged)."""
        m = lambda e: mapping.get(e, e)  # noqa: E731
        labels = {m(e): lab for e, lab in self.labels.items()}
        if len(labels) != len(self.labels):
            raise StructureError("renaming is not injective")
        rels = {name: {(m(a), m(b)) for a, b in rel} for name, rel in self.relations().items()}
        return type(self)(labels, **rels)


def _labels_from(events: Iterable[Tuple[str, str]]) -> Dict[str, str]:
    labels: Dict[str, str] = {}
    for eid, lab in events:
        if eid in labels:
            raise StructureError(f"duplicate event id {eid!r}")
        labels[eid] = lab
    return labels


def _close_causality(le: Iterable[Pair]) -> Relation:
    strict = {(a, b) for a, b in le if a != b}
    cyc = find_cycle(strict)
    if cyc is not None:
        raise StructureError("causality is cyclic: " + " <= ".join(cyc))
    return transitive_closure(strict)


@dataclass(frozen=True, eq=False)
class Pes(EventStructure):
    lt: Relation = frozenset()
    conflict: Relation = frozenset()

    kind: ClassVar[str] = "pes"
    relation_names: ClassVar[Tuple[str, ...]] = ("lt", "conflict")

    @classmethod
    def build(cls, events, le=(), conf=()) -> "Pes":
        return cls(_labels_from(events), lt=_close_causality(le), conflict=symmetrize(conf))

    __hash__ = EventStructure.__hash__


@dataclass(frozen=True, eq=False)
class Aes(EventStructure):
    lt: Relation = frozenset()
    aconf: Relation = frozenset()

    kind: ClassVar[str] = "aes"
    relation_names: ClassVar[Tuple[str, ...]] = ("lt", "aconf")

    @classmethod
    def build(cls, events, le=(), aconf=(), conf=()) -> "Aes":
        """Close causality, add ``<`` into asymmetric conflict, expand ``conf`` pairs both ways."""
        lt = _close_causality(le)
        return cls(_labels_from(events), lt=lt, aconf=frozenset(lt | set(aconf) | symmetrize(conf)))

    __hash__ = EventStructure.__hash__


@dataclass(frozen=True, eq=False)
class Fes(EventStructure):
    flow: Relation = frozenset()
    conf: Relation = frozenset()

    kind: ClassVar[str] = "fes"
    relation_names: ClassVar[Tuple[str, ...]] = ("flow", "conf")

    @classmethod
    def build(cls, events, flow=(), conf=()) -> "Fes":
        return cls(_labels_from(events), flow=frozenset(flow), conf=symmetrize(conf))

    def pre(self, e: str) -> frozenset:
        return frozenset(a for a, b in self.flow if b == e)

    __hash__ = EventStructure.__hash__


# --------------------------------------------------------------------------
# validation
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    clause: str
    witness: Tuple[str, ...]
    message: str = ""

    def __str__(self) -> str:
        return f"{self.clause}: ({', '.join(self.witness)}) {self.message}".rstrip()


@dataclass
class ValidationReport:
    kind: str
    violations: List[Violation] = field(default_factory=list)
    checked: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def clauses(self) -> set:
        return {v.clause for v in self.violations}

    def add(self, clause: str, *witness: str, message: str = "") -> None:
        self.violations.append(Violation(clause, tuple(witness), message))

    def __str__(self) -> str:
        if self.ok:
            return f"{self.kind}: valid ({', '.join(self.checked)})"
        return "\n".join([f"{self.kind}: {len(self.violations)} violation(s)"]
                         + [f"  {v}" for v in self.violations])


def _check_strict_order(lt: Relation, report: ValidationReport) -> None:
    report.checked.append("order")
    for a, b in sorted(lt):
        if a == b:
            report.add("order.irreflexive", a)
        elif (b, a) in lt:
            if a < b:
                report.add("order.antisymmetric", a, b)
    succ = {}
    for a, b in lt:
        succ.setdefault(a, set()).add(b)
    for a, b in sorted(lt):
        for c in sorted(succ.get(b, ())):
            if (a, c) not in lt and a != c:
                report.add("order.transitive", a, b, c, message=f"missing {a} < {c}")


def validate_pes(p: Pes) -> ValidationReport:
    report = ValidationReport("pes")
    _check_strict_order(p.lt, report)
    report.checked.append("conflict")
    for a, b in sorted(p.conflict):
        if a == b:
            report.add("conflict.irreflexive", a)
        elif (b, a) not in p.conflict:
            report.add("conflict.symmetric", a, b)
    for a, b in sorted(p.conflict):
        for b2, c in sorted(p.lt):
            if b2 == b and (a, c) not in p.conflict:
                report.add("conflict.heredity", a, b, c, message=f"{a} # {b} <= {c} but not {a} # {c}")
    return report


def validate_aes(a: Aes) -> ValidationReport:
    report = ValidationReport("aes")
    _check_strict_order(a.lt, report)
    report.checked.extend(["aes.1", "aes.2", "aes.3", "aes.4"])
    for x, y in sorted(a.lt):
        if (x, y) not in a.aconf:
            report.add("aes.1", x, y, message=f"{x} < {y} but not {x} ↗ {y}")
    for x, y in sorted(a.aconf):
        for y2, z in sorted(a.lt):
            if y2 == y and (x, z) not in a.aconf:
                report.add("aes.2", x, y, z, message=f"{x} ↗ {y} < {z} but not {x} ↗ {z}")
    floors = {e: down_closure([e], a.lt) for e in a.events}
    acyclic_floor = {}
    for e in a.events:
        acyclic_floor[e] = is_acyclic(restrict(a.aconf, floors[e]))
        if not acyclic_floor[e]:
            report.add("aes.3", e, message=f"↗ has a cycle inside the causes of {e}")
    for e in a.events:
        for e2 in a.events:
            if e == e2 or (e, e2) in a.aconf:
                continue
            if not is_acyclic(restrict(a.aconf, floors[e] | floors[e2])):
                report.add("aes.4", e, e2, message=f"causes of {e},{e2} hold a ↗-cycle but not {e} ↗ {e2}")
    return report


def validate_fes(f: Fes, semantic: bool = False) -> ValidationReport:
    """Structural checks; with ``semantic`` also faithfulness and fullness via enumeration."""
    report = ValidationReport("fes")
    report.checked.extend(["flow", "conflict"])
    for a, b in sorted(f.flow):
        if a == b:
            report.add("flow.irreflexive", a)
    for a, b in sorted(f.conf):
        if a == b:
            report.add("conflict.irreflexive", a)
        elif (b, a) not in f.conf:
            report.add("conflict.symmetric", a, b)
    if semantic:
        from esfold.semantics import semantic_conflict_fes

        report.checked.extend(["faithful", "full"])
        sem = semantic_conflict_fes(f)
        for a, b in sorted(sem):
            if a == b:
                report.add("fes.full", a, message=f"{a} is not executable")
            if (a, b) not in f.conf and a <= b:
                report.add("fes.faithful", a, b,
                           message=f"{a},{b} never occur together but are not in conflict")
    return report


def validate(s: EventStructure, semantic: bool = False) -> ValidationReport:
    if isinstance(s, Pes):
        return validate_pes(s)
    if isinstance(s, Aes):
        return validate_aes(s)
    if isinstance(s, Fes):
        return validate_fes(s, semantic=semantic)
    raise KindMismatch(f"not an event structure: {type(s).__name__}")


# --------------------------------------------------------------------------
# embeddings
# --------------------------------------------------------------------------

def _require_valid_pes(p: Pes) -> None:
    report = validate_pes(p)
    if not report.ok:
        raise StructureError(f"invalid PES:\n{report}")


def pes_to_aes(p: Pes) -> Aes:
    """Each conflict becomes a pair of opposite asymmetric conflicts; causality is kept."""
    _require_valid_pes(p)
    return Aes(dict(p.labels), lt=p.lt, aconf=frozenset(p.lt | symmetrize(p.conflict)))


def pes_to_fes(p: Pes) -> Fes:
    """Flow is the transitive reduction of causality; conflict is kept."""
    _require_valid_pes(p)
    return Fes(dict(p.labels), flow=transitive_reduction(p.lt), conf=p.conflict)
