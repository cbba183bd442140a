import pytest
from hypothesis import given, strategies as st

from dot_grammar import DotSyntaxError, parse_dot
from esfold.dot import to_dot
from esfold.structures import Pes
from strategies import aes, fes, pes, raw_aes, raw_fes


def edges(text, style=None):
    _, es = parse_dot(text)
    return [(a, b) for a, b, attrs in es if style is None or attrs.get("style") == style]


def test_empty_structure_has_empty_body():
    nodes, es = parse_dot(to_dot(Pes.build([])))
    assert nodes == [] and es == []


def test_a1_single_dashed_edge(fx):
    assert edges(to_dot(fx("a1")), "dashed") == [("d", "c01")]


def test_a1_solid_and_dotted(fx):
    _, es = parse_dot(to_dot(fx("a1")))
    solid = [(a, b) for a, b, at in es if "style" not in at]
    dotted = [(a, b) for a, b, at in es if at.get("style") == "dotted"]
    assert sorted(solid) == [("d", "c2"), ("e", "c2")]
    assert dotted == [("c01", "e")]


def test_f1_double_headed_flow(fx):
    _, es = parse_dot(to_dot(fx("f1")))
    flow = sorted((a, b) for a, b, at in es if at.get("dir") == "both")
    assert flow == [("b", "c12"), ("d", "c12"), ("e", "c12")]


def test_pes_draws_only_minimal_conflicts(fx):
    dotted = edges(to_dot(fx("a0_pes")), "dotted")
    assert sorted(dotted) == [("c0", "d"), ("c0", "e"), ("c1", "e")]


@given(pes(max_events=7))
def test_pes_drawn_conflicts_generate_the_rest(p):
    drawn = {frozenset(e) for e in edges(to_dot(p), "dotted")}
    up = {e: {e} | {b for a, b in p.lt if a == e} for e in p.events}
    inherited = {(x, y) for a, b in map(sorted, drawn) for x in up[a] for y in up[b]}
    assert inherited | {(y, x) for x, y in inherited} == set(p.conflict)


def test_output_is_deterministic(fx):
    assert to_dot(fx("a0")) == to_dot(fx("a0").renamed({}))


def test_quotes_are_escaped():
    p = Pes.build([('a"b', "x\\y")])
    nodes, _ = parse_dot(to_dot(p))
    assert nodes[0][0] == 'a"b'


def test_grammar_checker_rejects_garbage():
    with pytest.raises(DotSyntaxError):
        parse_dot("digraph { a -> ; }")
    with pytest.raises(DotSyntaxError):
        parse_dot("digraph { a -> b [style=] }")


@given(st.one_of(pes(), aes(), fes(), raw_aes(), raw_fes()))
def test_output_is_valid_dot(s):
    nodes, _ = parse_dot(to_dot(s))
    assert [n for n, _ in nodes] == list(s.events)
