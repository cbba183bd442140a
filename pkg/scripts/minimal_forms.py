"""
Print every irreducible folding of a structure, one per isomorphism class,
with the fold sequence that reaches it.  Folding is not confluent: the
first fixture has two.

    python3 scripts/minimal_forms.py fixtures/a0.json
"""

import sys

from esfold import all_minimal_forms, load, serialize


def main(path):
    s = load(path)
    forms = all_minimal_forms(s)
    print(f"{len(forms)} minimal form(s), search {'complete' if forms.complete else 'truncated'}, "
          f"{forms.explored} structures expanded")
    for i, m in enumerate(forms.classes, 1):
        steps = " then ".join("{" + ",".join(sorted(x)) + "}" for x, _ in m.path)
        print(f"\n[{i}] via {steps or '(none)'}; hp-equivalent to input: {m.hp_equivalent}")
        print(serialize(m.structure), end="")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures/a0.json")
