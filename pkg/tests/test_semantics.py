import pytest
from hypothesis import given, strategies as st

import oracles
from esfold.semantics import (DEFAULT_CAP, binary_conflict_aes, capacity, check_capacity,
                              configuration_sets, configurations, consistent_aes, direct_conflict_fes,
                              direct_relations_aes, extends, histories, is_configuration, local_order,
                              maximal_configurations, mcons, semantic_conflict_fes, set_conflict_aes)
from esfold.structures import CapacityError, Pes
from strategies import aes, fes, pes, raw_aes, raw_fes

any_structure = st.one_of(pes(), aes(), fes(), raw_aes(), raw_fes())


def sets(xs):
    return {frozenset(x) for x in xs}


# -- fixtures ----------------------------------------------------------------

def test_a0_configurations(fx):
    a0 = fx("a0")
    assert configuration_sets(a0) == sets([[], ["c0"], ["d"], ["e"], ["d", "e"], ["d", "c1"], ["d", "e", "c2"]])
    assert sets(maximal_configurations(a0)) == sets([["c0"], ["d", "c1"], ["d", "e", "c2"]])


def test_f0_and_f1_maximal_configurations(fx):
    assert sets(maximal_configurations(fx("f0"))) == sets([["c0", "d", "e"], ["b", "c1"], ["d", "e", "c2"]])
    assert sets(maximal_configurations(fx("f1"))) == sets([["c0", "d", "e"], ["b", "c12"], ["d", "e", "c12"]])


def test_forced_fold_histories(fx):
    assert histories(fx("a2"), "c02") == sets([["c02"], ["d", "c02"], ["e", "c02"], ["d", "e", "c02"]])
    with pytest.raises(KeyError):
        histories(fx("a2"), "zz")


def test_histories_in_a0_are_causal_pasts(fx):
    a0 = fx("a0")
    assert histories(a0, "c2") == sets([["d", "e", "c2"]])
    assert histories(a0, "c0") == sets([["c0"]])


def test_a1_merged_event_has_two_histories(fx):
    assert histories(fx("a1"), "c01") == sets([["c01"], ["d", "c01"]])


def test_direct_asymmetric_conflicts(fx):
    d = direct_relations_aes(fx("inherited_aconf"))
    assert ("e", "e'") in d.direct_aconf and ("e", "e''") not in d.direct_aconf
    d = direct_relations_aes(fx("direct_mix"))
    assert ("e'", "e") in d.direct_aconf
    assert ("e", "e''") in d.direct_conf and ("e''", "e") in d.direct_conf
    assert ("e", "e'") not in d.direct_conf


def test_direct_conflict_in_fes_is_not_symmetric(fx):
    f4 = fx("f4")
    assert direct_conflict_fes(f4, "e", "a1")
    assert not direct_conflict_fes(f4, "a1", "e")
    f0 = fx("f0")
    assert direct_conflict_fes(f0, "c2", "c0")
    assert not direct_conflict_fes(f0, "c1", "d")


def test_mcons_examples(fx):
    f1 = fx("f1")
    assert sets(mcons(f1, f1.pre("c12"))) == sets([["b"], ["d", "e"]])
    assert mcons(f1, []) == [frozenset()]


def test_extension_order_blocks_disabled_events(fx):
    a1 = fx("a1")
    # d ↗ c01: d cannot be added once c01 happened
    assert is_configuration(a1, {"d", "c01"})
    assert extends(a1, {"d"}, {"d", "c01"})
    assert not extends(a1, {"c01"}, {"d", "c01"})


def test_local_order_reflects_asymmetric_conflict(fx):
    o = local_order(fx("a1"), {"d", "c01"})
    assert o == {("d", "c01")}


def test_capacity_guard(monkeypatch):
    big = Pes.build([(f"e{i}", "a") for i in range(DEFAULT_CAP + 1)])
    with pytest.raises(CapacityError):
        configurations(big)
    monkeypatch.setenv("ESFOLD_CAP", str(DEFAULT_CAP + 5))
    assert capacity() == DEFAULT_CAP + 5
    check_capacity(big)
    monkeypatch.setenv("ESFOLD_CAP", "3")
    with pytest.raises(CapacityError):
        check_capacity(Pes.build([(f"e{i}", "a") for i in range(4)]))


# -- oracle comparisons -------------------------------------------------------

@given(any_structure)
def test_enumeration_matches_subset_oracle(s):
    assert configuration_sets(s) == oracles.configs(s)


@given(any_structure)
def test_is_configuration_matches_oracle_on_all_subsets(s):
    for c in oracles.subsets(s.events):
        assert is_configuration(s, c) == oracles.is_config(s, c)


@given(any_structure)
def test_maximal_configurations_match_oracle(s):
    assert sets(maximal_configurations(s)) == oracles.maximal(s)


@given(st.one_of(aes(), raw_aes()))
def test_histories_match_oracle(a):
    for e in a.events:
        assert histories(a, e) == oracles.histories(a, e)


@given(st.one_of(aes(), raw_aes()))
def test_binary_conflict_is_absence_of_common_configuration(a):
    for x in a.events:
        for y in a.events:
            if x != y:
                assert binary_conflict_aes(a, x, y) == oracles.no_common_config(a, x, y)


@given(st.one_of(aes(), raw_aes()), st.data())
def test_set_conflict_is_inconsistency(a, data):
    if not len(a):
        return
    xs = data.draw(st.sets(st.sampled_from(a.events), min_size=1))
    together = any(frozenset(xs) <= c for c in oracles.configs(a))
    assert consistent_aes(a, xs) == together
    assert set_conflict_aes(a, xs) == (not together)


@given(st.one_of(fes(), raw_fes()))
def test_semantic_conflict_two_ways(f):
    assert semantic_conflict_fes(f, "definition") == semantic_conflict_fes(f, "enumeration")
    assert semantic_conflict_fes(f) == oracles.semantic_conflict(f)


@given(raw_fes(), st.data())
def test_mcons_matches_oracle(f, data):
    zs = data.draw(st.sets(st.sampled_from(f.events))) if len(f) else set()
    assert sets(mcons(f, zs)) == oracles.mcons(f, zs)


@given(any_structure)
def test_configurations_carry_their_local_order(s):
    for c in configurations(s):
        assert c.order == oracles.order(s, c.events)
