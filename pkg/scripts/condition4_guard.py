"""
How often does the pairwise predecessor clause alone accept a FES fold that
changes behaviour?  Runs both readings of the fourth combinability
condition over seeded random PESs embedded as FESs.

    python3 scripts/condition4_guard.py --count 4000
"""

import argparse
import random
from collections import Counter

from esfold import GenParams, generate_random_pes, hp_bisimilar, pes_to_fes, serialize
from esfold.fesfold import fold_fes, is_combinable_fes
from esfold.reduce import enumerate_candidates


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=4000)
    ap.add_argument("--show", type=int, default=1, help="print this many counterexamples")
    args = ap.parse_args()
    stats = Counter()
    shown = 0
    for seed in range(args.count):
        rng = random.Random(seed)
        p = generate_random_pes(GenParams(rng.randint(4, 8), 3, rng.choice([0.1, 0.2, 0.3, 0.45]),
                                          rng.choice([0.2, 0.35, 0.5, 0.7]), seed))
        f = pes_to_fes(p)
        for x, _ in enumerate_candidates(f, include_rejected=True):
            literal = is_combinable_fes(f, x, mcons_guard=False)
            guarded = is_combinable_fes(f, x)
            if not literal.ok:
                continue
            stats["accepted (pairwise clause)"] += 1
            if guarded.ok:
                stats["accepted (with guard)"] += 1
            folded, _ = fold_fes(f, literal)
            if not hp_bisimilar(f, folded).equivalent:
                stats["behaviour changed"] += 1
                stats["behaviour changed, guard rejects" if not guarded.ok else "behaviour changed, guard accepts"] += 1
                if shown < args.show:
                    shown += 1
                    print(f"seed {seed}, X = {sorted(x)}")
                    print(serialize(f))
                    print(guarded.report())
    for k, v in sorted(stats.items()):
        print(f"{k:36s} {v}")


if __name__ == "__main__":
    main()
