"""Hypothesis strategies producing small random structures."""

from hypothesis import strategies as st

from esfold.generate import GenParams, generate_random_pes
from esfold.structures import pes_to_aes, pes_to_fes


@st.composite
def pes(draw, max_events=7, labels=(2, 3)):
    p = GenParams(
        event_count=draw(st.integers(0, max_events)),
        label_count=draw(st.integers(*labels)),
        causality_density=draw(st.sampled_from([0.0, 0.15, 0.3, 0.5])),
        conflict_density=draw(st.sampled_from([0.0, 0.2, 0.4, 0.7])),
        seed=draw(st.integers(0, 2 ** 32)),
    )
    return generate_random_pes(p)


def aes(**kw):
    return pes(**kw).map(pes_to_aes)


def fes(**kw):
    return pes(**kw).map(pes_to_fes)


@st.composite
def renaming(draw, s):
    ids = list(s.events)
    fresh = draw(st.permutations([f"n{i}" for i in range(len(ids))]))
    return dict(zip(ids, fresh))


def _ids(n):
    return [f"e{i}" for i in range(n)]


@st.composite
def raw_aes(draw, max_events=6):
    """Random causality plus random asymmetric conflict, saturated until valid."""
    from esfold.relations import transitive_closure
    from esfold.structures import Aes, validate_aes

    n = draw(st.integers(0, max_events))
    ids = _ids(n)
    labels = {e: draw(st.sampled_from("abc")) for e in ids}
    pairs = [(a, b) for a in ids for b in ids if a != b]
    le = {(ids[i], ids[j]) for i in range(n) for j in range(i + 1, n) if draw(st.booleans()) and draw(st.booleans())}
    lt = transitive_closure(le)
    extra = set(draw(st.lists(st.sampled_from(pairs), max_size=2 * n))) if pairs else set()
    extra = {(a, b) for a, b in extra if (b, a) not in lt}
    aconf = set(lt) | extra
    for _ in range(n * n + 1):
        a = Aes(labels, lt=lt, aconf=frozenset(aconf))
        report = validate_aes(a)
        if report.ok:
            return a
        if "aes.3" in report.clauses():
            break
        for v in report.violations:
            if v.clause == "aes.2":
                aconf.add((v.witness[0], v.witness[2]))
            elif v.clause == "aes.4":
                aconf.add((v.witness[0], v.witness[1]))
    # fall back to dropping the asymmetric extras
    return Aes(labels, lt=lt, aconf=frozenset(lt))


@st.composite
def raw_fes(draw, max_events=6):
    """Arbitrary flow and conflict (not necessarily faithful or full)."""
    from esfold.structures import Fes

    n = draw(st.integers(0, max_events))
    ids = _ids(n)
    labels = {e: draw(st.sampled_from("abc")) for e in ids}
    pairs = [(a, b) for a in ids for b in ids if a != b]
    flow = set(draw(st.lists(st.sampled_from(pairs), max_size=2 * n))) if pairs else set()
    conf = set(draw(st.lists(st.sampled_from(pairs), max_size=n))) if pairs else set()
    return Fes.build(labels.items(), flow=flow, conf=conf)
