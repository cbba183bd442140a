"""
Regenerate ``fixtures/*.json`` from the hand-entered relations below.

Folded fixtures (a1, a2, a12, f1, f3, f5) are written out by hand rather
than computed, so tests can compare them against the folding code.
"""

from pathlib import Path

from esfold import Aes, Fes, Pes, pes_to_aes, pes_to_fes, save, validate

OUT = Path(__file__).resolve().parent.parent / "fixtures"

A0_PES = Pes.build(
    [("c0", "c"), ("c1", "c"), ("c2", "c"), ("d", "d"), ("e", "e")],
    le=[("d", "c1"), ("d", "c2"), ("e", "c2")],
    conf=[("c0", "d"), ("c0", "e"), ("c0", "c1"), ("c0", "c2"), ("c1", "e"), ("c1", "c2")],
)

FIXTURES = {
    "a0_pes": A0_PES,
    "a0": pes_to_aes(A0_PES),
    # fold of {c0, c1}
    "a1": Aes.build(
        [("c01", "c"), ("c2", "c"), ("d", "d"), ("e", "e")],
        le=[("d", "c2"), ("e", "c2")],
        aconf=[("d", "c01")],
        conf=[("c01", "e"), ("c01", "c2")],
    ),
    # the other irreducible fold, on {c1, c2}
    "a12": Aes.build(
        [("c0", "c"), ("c12", "c"), ("d", "d"), ("e", "e")],
        le=[("d", "c12")],
        aconf=[("e", "c12")],
        conf=[("c0", "c12"), ("c0", "d"), ("c0", "e")],
    ),
    # forced fold of the non-combinable {c0, c2}
    "a2": Aes.build(
        [("c02", "c"), ("c1", "c"), ("d", "d"), ("e", "e")],
        le=[("d", "c1")],
        aconf=[("d", "c02"), ("e", "c02")],
        conf=[("c02", "c1"), ("c1", "e")],
    ),
    "f0_pes": Pes.build(
        [("b", "b"), ("c0", "c"), ("c1", "c"), ("c2", "c"), ("d", "d"), ("e", "e")],
        le=[("b", "c1"), ("d", "c2"), ("e", "c2")],
        conf=[("c0", "b"), ("c0", "c1"), ("c0", "c2"), ("c1", "c2"), ("b", "d"), ("b", "e"),
              ("c1", "d"), ("c1", "e"), ("c2", "b")],
    ),
    "f1": Fes.build(
        [("b", "b"), ("c0", "c"), ("c12", "c"), ("d", "d"), ("e", "e")],
        flow=[("b", "c12"), ("d", "c12"), ("e", "c12")],
        conf=[("c12", "c0"), ("c0", "b"), ("b", "d"), ("b", "e")],
    ),
    # {ax, axp} fails only the last combinability condition
    "f2": Fes.build(
        [("ax", "a"), ("axp", "a"), ("b", "b"), ("c", "c"), ("d", "d"), ("e", "e")],
        flow=[("d", "ax"), ("e", "axp"), ("axp", "c"), ("b", "c")],
        conf=[("ax", "axp"), ("d", "e"), ("e", "b"), ("axp", "b"), ("axp", "d"), ("ax", "e"),
              ("ax", "c"), ("c", "d")],
    ),
    # forced fold of f2: c is dead
    "f3": Fes.build(
        [("a", "a"), ("b", "b"), ("c", "c"), ("d", "d"), ("e", "e")],
        flow=[("d", "a"), ("e", "a"), ("a", "c"), ("b", "c")],
        conf=[("b", "e"), ("c", "d"), ("d", "e")],
    ),
    "f4": Fes.build(
        [("a0", "a"), ("a1", "a"), ("b", "b"), ("c", "c"), ("d", "d"), ("e", "e"), ("f", "f")],
        flow=[("e", "a0"), ("d", "a1"), ("a0", "c"), ("a1", "c"), ("f", "c"), ("b", "c"), ("d", "b")],
        conf=[("e", "d"), ("a0", "a1"), ("e", "a1"), ("d", "a0"), ("f", "b"), ("a0", "b"), ("b", "e")],
    ),
    "f5": Fes.build(
        [("a01", "a"), ("b", "b"), ("c", "c"), ("d", "d"), ("e", "e"), ("f", "f")],
        flow=[("e", "a01"), ("d", "a01"), ("a01", "c"), ("f", "c"), ("b", "c"), ("d", "b")],
        conf=[("e", "d"), ("f", "b"), ("b", "e")],
    ),
    # b < c1 and a # c0; the weak predecessors of {c0, c1} are {a, b}
    "weak_preds": Aes.build(
        [("a", "a"), ("b", "b"), ("c0", "c"), ("c1", "c")],
        le=[("b", "c1")],
        conf=[("a", "c0"), ("c0", "c1")],
    ),
    # a is disabled by b'' but a' is not: not similar
    "dissimilar_pred": Aes.build(
        [("a", "a"), ("a'", "a"), ("b''", "b")],
        aconf=[("a", "b''")],
        conf=[("a", "a'")],
    ),
    # b'' disables a but not a'
    "dissimilar_succ": Aes.build(
        [("a", "a"), ("a'", "a"), ("b''", "b")],
        aconf=[("b''", "a")],
        conf=[("a", "a'")],
    ),
    # a <= b < c1, b # c2: folding the c's keeps b ↗ c but drops a ↗ c
    "chain": Aes.build(
        [("a", "a"), ("b", "b"), ("c1", "c"), ("c2", "c")],
        le=[("a", "b"), ("b", "c1")],
        conf=[("b", "c2"), ("c1", "c2")],
    ),
    # e ↗ e' < e'' with e ↗ e'': the last pair is inherited, not direct
    "inherited_aconf": Aes.build(
        [("e", "e"), ("e'", "e"), ("e''", "e")],
        le=[("e'", "e''")],
        aconf=[("e", "e'"), ("e", "e''")],
    ),
    # e' ↗ e and e # e''
    "direct_mix": Aes.build(
        [("e", "e"), ("e'", "e"), ("e''", "e")],
        aconf=[("e'", "e")],
        conf=[("e", "e''")],
    ),
}

# derived embeddings
FIXTURES["f0"] = pes_to_fes(FIXTURES["f0_pes"])


RECONSTRUCTED = ("Reconstruction: built to satisfy every stated fact about this example "
                 "(see tests/test_acceptance.py); the original drawing is not fully recoverable.")
NOTES = {name: RECONSTRUCTED for name in ("f2", "f3", "f4", "f5")}


def main():
    OUT.mkdir(exist_ok=True)
    for name, s in sorted(FIXTURES.items()):
        report = validate(s, semantic=name not in ("f3",))
        print(f"{name:16s} {s.kind} {len(s)} events  {'ok' if report.ok else 'INVALID'}")
        save(s, OUT / f"{name}.json", NOTES.get(name))
    # structurally broken on purpose: e ↗ e' < e'' without e ↗ e''
    (OUT / "missing_inherited_aconf.json").write_text(
        '{\n  "kind": "aes",\n  "events": [\n    {"id": "e", "label": "e"},\n'
        '    {"id": "e\'", "label": "e"},\n    {"id": "e\'\'", "label": "e"}\n  ],\n'
        '  "relations": {\n    "le": [\n      ["e\'", "e\'\'"]\n    ],\n'
        '    "aconf": [\n      ["e", "e\'"]\n    ]\n  }\n}\n')


if __name__ == "__main__":
    main()
