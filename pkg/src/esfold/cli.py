"""
Command-line front end: ``esfold <command> ...``.

Exit status: 0 success or equivalent, 1 negative verdict, 2 usage or
input error, 3 capacity guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from esfold.aesfold import fold_aes, is_combinable_aes
from esfold.document import DocumentError, load, serialize
from esfold.dot import to_dot
from esfold.fesfold import fold_fes, is_combinable_fes
from esfold.folding import FoldingError
from esfold.generate import GenParams, generate_random_pes
from esfold.hpbisim import hp_bisimilar
from esfold.reduce import STRATEGIES, all_minimal_forms, enumerate_candidates, minimize
from esfold.semantics import configurations, histories, maximal_configurations
from esfold.structures import Aes, CapacityError, Fes, KindMismatch, Pes, pes_to_aes, pes_to_fes, validate

OK, NEGATIVE, USAGE, CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fmt(c) -> str:
    return "{" + ", ".join(sorted(c)) + "}"


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _foldable(s):
    if not isinstance(s, (Aes, Fes)):
        raise UsageError(f"folding needs an AES or FES document, got {s.kind!r} (use convert first)")
    return s


def cmd_validate(args) -> int:
    s = load(args.file, check=False)
    report = validate(s, semantic=args.semantic)
    print(report)
    return OK if report.ok else NEGATIVE


def cmd_configs(args) -> int:
    s = load(args.file)
    confs = ([frozenset(c) for c in maximal_configurations(s)] if args.maximal
             else [c.events for c in configurations(s)])
    for c in confs:
        print(_fmt(c))
    print(f"# {len(confs)} {'maximal ' if args.maximal else ''}configuration(s)", file=sys.stderr)
    return OK


def cmd_hist(args) -> int:
    s = load(args.file)
    if not isinstance(s, Aes):
        raise UsageError("hist needs an AES document")
    if args.event not in s.labels:
        raise UsageError(f"unknown event {args.event!r}")
    for h in sorted(histories(s, args.event), key=lambda h: (len(h), sorted(h))):
        print(_fmt(h))
    return OK


def cmd_candidates(args) -> int:
    s = _foldable(load(args.file))
    plans = enumerate_candidates(s, k=args.k, include_rejected=args.all, strict=args.strict)
    for _, plan in plans:
        print(plan.report())
    if not plans:
        print("no combinable sets")
    return OK


def cmd_fold(args) -> int:
    s = _foldable(load(args.file))
    x = [e.strip() for e in args.set.split(",") if e.strip()]
    unknown = [e for e in x if e not in s.labels]
    if unknown:
        raise UsageError(f"unknown event(s): {', '.join(unknown)}")
    plan = is_combinable_aes(s, x, strict=args.strict) if isinstance(s, Aes) else is_combinable_fes(s, x)
    if not plan.ok:
        print(plan.report(), file=sys.stderr)
        if not args.force:
            print("not combinable; use --force to fold anyway", file=sys.stderr)
            return NEGATIVE
    folded, _ = (fold_aes if isinstance(s, Aes) else fold_fes)(s, plan, force=args.force)
    _emit(serialize(folded), args.output)
    return OK


def cmd_minimize(args) -> int:
    s = _foldable(load(args.file))
    if args.all:
        forms = all_minimal_forms(s, strict=args.strict)
        if args.json:
            print(json.dumps({"complete": forms.complete, "explored": forms.explored, "classes": [
                {"events": len(m.structure), "path": [sorted(x) for x, _ in m.path],
                 "hp_equivalent": m.hp_equivalent, "document": json.loads(serialize(m.structure))}
                for m in forms.classes]}, indent=2))
        else:
            print(f"{len(forms)} minimal form(s) up to isomorphism"
                  f"{'' if forms.complete else ' (search bound reached)'}")
            for i, m in enumerate(forms.classes, 1):
                steps = " then ".join(_fmt(x) for x, _ in m.path) or "(no folds)"
                print(f"  {i}. {len(m.structure)} events via {steps}; hp-equivalent: {m.hp_equivalent}")
        return OK
    trace = minimize(s, strategy=args.strategy, strict=args.strict)
    if args.json:
        out = trace.to_json()
        out["document"] = json.loads(serialize(trace.final))
        print(json.dumps(out, indent=2))
    else:
        print(trace)
        if args.output:
            _emit(serialize(trace.final), args.output)
    return OK


def cmd_equiv(args) -> int:
    x, y = load(args.left), load(args.right)
    w = hp_bisimilar(x, y)
    print(w.report())
    return OK if w.equivalent else NEGATIVE


def cmd_convert(args) -> int:
    s = load(args.file)
    if s.kind == args.to:
        out = s
    elif isinstance(s, Pes):
        out = pes_to_aes(s) if args.to == "aes" else pes_to_fes(s)
    else:
        raise UsageError(f"cannot convert {s.kind} to {args.to}; only PES documents convert")
    _emit(serialize(out), args.output)
    return OK


def cmd_dot(args) -> int:
    _emit(to_dot(load(args.file)), args.output)
    return OK


def cmd_gen(args) -> int:
    try:
        p = GenParams(args.events, args.labels, args.causality, args.conflict, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    s = generate_random_pes(p)
    if args.kind == "aes":
        s = pes_to_aes(s)
    elif args.kind == "fes":
        s = pes_to_fes(s)
    _emit(serialize(s), args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="esfold", description="Event structures, hp-bisimilarity and folding.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the structural axioms")
    p.add_argument("file")
    p.add_argument("--semantic", action="store_true", help="also check FES faithfulness and fullness")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("configs", help="list configurations")
    p.add_argument("file")
    p.add_argument("--maximal", action="store_true")
    p.set_defaults(func=cmd_configs)

    p = sub.add_parser("hist", help="list the histories of an AES event")
    p.add_argument("file")
    p.add_argument("event")
    p.set_defaults(func=cmd_hist)

    p = sub.add_parser("candidates", help="show folding plans per label")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None, help="largest set size to try")
    p.add_argument("--all", action="store_true", help="include rejected sets")
    p.add_argument("--strict", action="store_true", help="AES: require h- = S(X) ∪ ⌊Y⌋ exactly")
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("fold", help="fold one set of events")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="comma-separated event ids")
    p.add_argument("--force", action="store_true", help="fold even if not combinable")
    p.add_argument("--strict", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fold)

    p = sub.add_parser("minimize", help="fold until irreducible")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--strategy", choices=STRATEGIES, default="first")
    g.add_argument("--all", action="store_true", help="enumerate every minimal form")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("equiv", help="decide hp-bisimilarity")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("convert", help="embed a PES as an AES or FES")
    p.add_argument("file")
    p.add_argument("--to", choices=("aes", "fes"), required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("dot", help="render as Graphviz DOT")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("gen", help="generate a random PES (optionally embedded)")
    p.add_argument("--events", type=int, default=6)
    p.add_argument("--labels", type=int, default=3)
    p.add_argument("--causality", type=float, default=0.25)
    p.add_argument("--conflict", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=("pes", "aes", "fes"), default="pes")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return CAPACITY
    except (DocumentError, UsageError, KindMismatch, FoldingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
