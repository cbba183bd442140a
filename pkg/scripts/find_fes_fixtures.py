"""
Search small FESs for a pair of same-labelled events that passes every
combinability condition except the last one, and whose forced fold leaves
event ``c`` dead.  Prints the first hits as JSON documents.

    python3 scripts/find_fes_fixtures.py --seed 1 --tries 200000
"""

import argparse
import random

from esfold import Fes, hp_bisimilar, is_combinable_fes, serialize, validate
from esfold.fesfold import fold_fes
from esfold.semantics import configuration_sets, is_configuration

EVENTS = [("ax", "a"), ("axp", "a"), ("b", "b"), ("c", "c"), ("d", "d"), ("e", "e"), ("g", "g")]
IDS = [e for e, _ in EVENTS]

# Condition 2 only tolerates axp # b when that conflict is not direct, so
# every sample routes axp through a predecessor e that conflicts with b.
SEED_FLOW = [("e", "axp"), ("axp", "c"), ("b", "c")]
SEED_CONF = [("ax", "axp"), ("e", "b"), ("axp", "b")]


def candidate(rng: random.Random, flow_p: float, conf_p: float, extra: int) -> Fes:
    ids = IDS[:6 + extra]
    events = EVENTS[:6 + extra]
    flow = [(p, q) for p in ids for q in ids if p != q and rng.random() < flow_p]
    conf = [(p, q) for i, p in enumerate(ids) for q in ids[i + 1:] if rng.random() < conf_p]
    return Fes.build(events, flow=flow + SEED_FLOW, conf=conf + SEED_CONF)


def interesting(f: Fes, need_config: bool):
    if any(p in f.conf for p in f.flow):
        return None
    if not validate(f, semantic=True).ok:
        return None
    plan = is_combinable_fes(f, ("ax", "axp"))
    if plan.failing() != "fes.5" or sum(not c.holds for c in plan.conditions) != 1:
        return None
    if need_config and not is_configuration(f, {"d", "ax", "b"}):
        return None
    g, _ = fold_fes(f, plan, force=True)
    if any("c" in cfg for cfg in configuration_sets(g)):
        return None
    if ("b", "e") not in g.conf or ("b", plan.merged_id) in g.conf:
        return None
    if hp_bisimilar(f, g).equivalent:
        return None
    return g


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--tries", type=int, default=200_000)
    ap.add_argument("--hits", type=int, default=1)
    ap.add_argument("--no-config", action="store_true", help="drop the {d, ax, b} requirement")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    found = []
    for i in range(args.tries):
        try:
            f = candidate(rng, rng.uniform(0.05, 0.25), rng.uniform(0.05, 0.35), rng.randrange(2))
        except ValueError:
            continue
        g = interesting(f, not args.no_config)
        if g is not None:
            found.append((len(f.flow) + len(f.conf), i, f, g))
            if len(found) >= args.hits:
                break
    for size, i, f, g in sorted(found, key=lambda t: t[0]):
        print(f"# try {i}, {size} edges")
        print(serialize(f))
        print(serialize(g))
    if not found:
        print("no hit")


if __name__ == "__main__":
    main()
