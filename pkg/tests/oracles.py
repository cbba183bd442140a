"""
Brute-force reference implementations used to cross-check the library.

Everything here works straight from the definitions on explicit subsets
and permutations, so it is only usable on small structures.  Only the
structure classes are imported from the package.
"""

from itertools import combinations, permutations

from esfold.structures import Aes, Fes, Pes


def subsets(items):
    items = sorted(items)
    for k in range(len(items) + 1):
        for c in combinations(items, k):
            yield frozenset(c)


def closure(pairs):
    rel = set(pairs)
    while True:
        new = {(a, d) for a, b in rel for c, d in rel if b == c} - rel
        if not new:
            return frozenset(rel)
        rel |= new


def acyclic(pairs):
    return not any(a == b for a, b in closure(pairs))


def is_config(s, c):
    c = frozenset(c)
    if isinstance(s, Pes):
        return (all(a in c for a, b in s.lt if b in c)
                and not any((a, b) in s.conflict for a in c for b in c))
    if isinstance(s, Aes):
        return (all(a in c for a, b in s.lt if b in c)
                and acyclic([(a, b) for a, b in s.aconf if a in c and b in c]))
    if isinstance(s, Fes):
        if any((a, b) in s.conf for a in c for b in c):
            return False
        if not acyclic([(a, b) for a, b in s.flow if a in c and b in c]):
            return False
        for e in c:
            for p in (a for a, b in s.flow if b == e):
                if p not in c and not any((p, q) in s.conf and (q, e) in s.flow for q in c):
                    return False
        return True
    raise TypeError(s)


def configs(s):
    return {c for c in subsets(s.events) if is_config(s, c)}


def maximal(s):
    cs = configs(s)
    return {c for c in cs if not any(c < d for d in cs)}


def order(s, c):
    c = frozenset(c)
    rel = {Pes: lambda: s.lt, Aes: lambda: s.aconf, Fes: lambda: s.flow}[type(s)]()
    return closure([(a, b) for a, b in rel if a in c and b in c])


def step(s, c, e):
    """``c`` extended by ``e`` is a configuration and an extension of ``c``."""
    d = c | {e}
    if e in c or not is_config(s, d):
        return False
    if isinstance(s, Aes) and any((e, old) in s.aconf for old in c):
        return False
    return True


def histories(a, e):
    out = set()
    for c in configs(a):
        if e in c:
            o = order(a, c)
            out.add(frozenset(x for x in c if x == e or (x, e) in o))
    return out


def mcons(f, zs):
    zs = frozenset(zs)
    free = [y for y in subsets(zs) if not any((p, q) in f.conf for p in y for q in y)]
    return {y for y in free if not any(y < z for z in free)}


def no_common_config(s, a, b):
    return not any(a in c and b in c for c in configs(s))


def semantic_conflict(s):
    """Pairs (a, b) never together in a configuration, including a == b for dead events."""
    cs = configs(s)
    return {(a, b) for a in s.events for b in s.events if not any(a in c and b in c for c in cs)}


def isomorphic(x, y):
    if type(x) is not type(y) or len(x) != len(y):
        return False
    if sorted(x.labels.values()) != sorted(y.labels.values()):
        return False
    xs = list(x.events)
    rx, ry = x.relations(), y.relations()
    for image in permutations(y.events):
        m = dict(zip(xs, image))
        if any(x.labels[e] != y.labels[m[e]] for e in xs):
            continue
        if all({(m[a], m[b]) for a, b in rx[k]} == set(ry[k]) for k in rx):
            return True
    return False


def pomset_isos(x, c1, y, c2):
    c1, c2 = sorted(c1), sorted(c2)
    if len(c1) != len(c2):
        return []
    o1, o2 = order(x, c1), order(y, c2)
    out = []
    for image in permutations(c2):
        m = dict(zip(c1, image))
        if all(x.labels[e] == y.labels[m[e]] for e in c1) and \
                {(m[a], m[b]) for a, b in o1} == set(o2):
            out.append(m)
    return out


def hp_bisimilar(x, y):
    """Greatest fixed point over every (C1, f, C2) triple, then membership of the empty triple."""
    cx, cy = configs(x), configs(y)
    triples = set()
    for c1 in cx:
        for c2 in cy:
            for m in pomset_isos(x, c1, y, c2):
                triples.add((c1, frozenset(m.items()), c2))
    moves_x = {c: [e for e in x.events if step(x, c, e)] for c in cx}
    moves_y = {c: [e for e in y.events if step(y, c, e)] for c in cy}
    while True:
        keep = set()
        for c1, f, c2 in triples:
            ok = True
            for e1 in moves_x[c1]:
                if not any((c1 | {e1}, f | {(e1, e2)}, c2 | {e2}) in triples for e2 in moves_y[c2]):
                    ok = False
                    break
            if ok:
                for e2 in moves_y[c2]:
                    if not any((c1 | {e1}, f | {(e1, e2)}, c2 | {e2}) in triples for e1 in moves_x[c1]):
                        ok = False
                        break
            if ok:
                keep.add((c1, f, c2))
        if keep == triples:
            break
        triples = keep
    return (frozenset(), frozenset(), frozenset()) in triples
