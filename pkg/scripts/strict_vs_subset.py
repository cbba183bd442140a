"""
Compare the two readings of the AES combinability clause: the history of
the chosen member minus itself must be included in (default) or equal to
(strict) the strict causes plus the causal closure of Y.  Counts sets where
the readings disagree and checks every accepted fold for hp-bisimilarity.

    python3 scripts/strict_vs_subset.py --count 3000
"""

import argparse
import random
from collections import Counter

from esfold import GenParams, generate_random_pes, hp_bisimilar, pes_to_aes
from esfold.aesfold import fold_aes, is_combinable_aes
from esfold.reduce import enumerate_candidates


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=3000)
    args = ap.parse_args()
    stats = Counter()
    example = None
    for seed in range(args.count):
        rng = random.Random(seed)
        p = generate_random_pes(GenParams(rng.randint(4, 8), 3, rng.choice([0.1, 0.2, 0.3, 0.45]),
                                          rng.choice([0.2, 0.35, 0.5, 0.7]), seed))
        a = pes_to_aes(p)
        for x, plan in enumerate_candidates(a, include_rejected=True):
            if not plan.is_similar:
                continue
            subset = plan.ok
            strict = is_combinable_aes(a, x, strict=True).ok
            stats[f"subset={subset} strict={strict}"] += 1
            if subset:
                folded, _ = fold_aes(a, plan)
                if not hp_bisimilar(a, folded).equivalent:
                    stats["subset fold not hp-equivalent"] += 1
            if subset != strict and example is None:
                example = (seed, sorted(x), plan.report())
    for k, v in sorted(stats.items()):
        print(f"{k:32s} {v}")
    if example:
        print(f"\nfirst disagreement: seed {example[0]}, X = {example[1]}\n{example[2]}")


if __name__ == "__main__":
    main()
