"""Command-line front end.

Exit codes: 0 success or verdict as expected, 1 refutation or mismatch,
2 usage error, 3 engine failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (MultiRelation, MultirelError, const, from_json,
                   make_universe, parse_literal, seq, to_json, union)
from .fixpoint import FixpointError, MonotoneFunctional, gfp, lfp, nabla_result
from .laws import repro as repro_mod
from .laws.algebra import FiniteAlgebra, builtin_algebra
from .laws.catalog import REFUTED, Law, axiom_group, catalog, get_law
from .laws.checker import (DEFAULT_SEED, EXHAUSTIVE, HOLDS,
                           HUNT_EXHAUSTIVE_LIMIT, Sampled, SearchSpaceError,
                           check_algebra, check_law, hunt, multirel_model,
                           run_suite, search_space, eval_term)
from .laws.models import AlgebraModel

OK, FAIL, USAGE, ENGINE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _universe(text):
    labels = [x.strip() for x in text.split(",") if x.strip()]
    if not labels:
        raise UsageError("empty universe")
    return make_universe(labels)


def read_value(spec: str, u=None) -> MultiRelation:
    """A multirelation from an inline literal or a file (JSON or literal)."""
    text = spec
    if not spec.lstrip().startswith(("<", "{")):
        if not os.path.exists(spec):
            raise UsageError(f"no such file: {spec}")
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except ValueError:
        obj = None
    if isinstance(obj, dict) and "pairs" in obj:
        return from_json(obj, u)
    if u is None:
        raise UsageError("a --universe is needed for literal multirelations")
    return parse_literal(text, u)


def _print_json(obj):
    print(json.dumps(obj, ensure_ascii=False))


# commands ------------------------------------------------------------------

def cmd_eval(args):
    u = _universe(args.universe) if args.universe else None
    env = {}
    for b in args.bind:
        if "=" not in b:
            raise UsageError(f"binding {b!r} is not name=value")
        name, value = b.split("=", 1)
        env[name.strip()] = read_value(value, u)
    if u is None and env:
        u = next(iter(env.values())).universe
    if u is None:
        raise UsageError("give --universe or at least one binding")
    r = eval_term(args.expr, env, u)
    _print_json(to_json(r))
    return OK


def cmd_fixpoint(args):
    u = _universe(args.universe) if args.universe else None
    r = read_value(args.input, u)
    u = r.universe
    binary = args.op in ("star_binary", "omega_binary")
    if binary and args.rhs is None:
        raise UsageError(f"--rhs is required for {args.op}")
    if args.op == "nabla":
        res = nabla_result(r)
    else:
        if binary:
            s = read_value(args.rhs, u)
        elif args.op == "omega":
            s = const(u, "empty")
        else:
            s = const(u, "one_sigma")
        f = MonotoneFunctional(lambda x: union(s, seq(r, x)), "S + R.X")
        res = (lfp if args.op in ("star", "star_binary") else gfp)(f, u)
    _print_json({"op": args.op, "value": to_json(res.value),
                 "iterations": res.iterations, "converged": res.converged})
    return OK


def _law_from_args(args) -> Law:
    if args.law:
        return get_law(args.law)
    if args.expr:
        return Law.parse("expr", args.expr, anchor="command line")
    raise UsageError("give --law or --expr")


def _algebra(spec):
    if spec in (None, "builtin"):
        return builtin_algebra()
    if not os.path.exists(spec):
        raise UsageError(f"no such file: {spec}")
    with open(spec, encoding="utf-8") as fh:
        return FiniteAlgebra.from_json(json.load(fh))


def _report(v):
    print(v.line())
    print(f"# {v.space}; {v.checked} checked, {v.satisfying} satisfied the hypotheses")


def cmd_check(args):
    law = _law_from_args(args)
    if args.algebra:
        v = check_law(law, model=AlgebraModel(_algebra(args.algebra)))
    elif args.mode == "exhaustive":
        v = check_law(law, args.n, EXHAUSTIVE)
    elif args.mode == "sampled":
        v = check_law(law, args.n, Sampled(args.samples, args.seed))
    else:
        v = None
        for k in range(1, args.n + 1):
            m = multirel_model(k)
            mode = (EXHAUSTIVE if search_space(law, m) <= HUNT_EXHAUSTIVE_LIMIT
                    else Sampled(args.samples, args.seed))
            v = check_law(law, model=m, mode=mode)
            if v.refuted:
                break
    _report(v)
    if args.law:
        expected_refuted = law.expected == REFUTED
        if args.algebra and law.algebra:
            expected_refuted = law.algebra == REFUTED
        return OK if v.refuted == expected_refuted else FAIL
    return FAIL if v.refuted else OK


def cmd_hunt(args):
    law = _law_from_args(args)
    if args.algebra:
        v = hunt(law, model=AlgebraModel(_algebra(args.algebra)))
    else:
        v = hunt(law, args.max_n, args.seed, args.samples)
    _report(v)
    return OK if v.refuted else FAIL


def cmd_catalog(args):
    laws = catalog()
    if args.group:
        laws = axiom_group(args.group)
    if args.name:
        laws = [get_law(n) for n in args.name]
    if not args.run:
        if args.json:
            _print_json([l.to_json() for l in laws])
        else:
            for l in laws:
                print(f"{l.name:28} {l.expected:8} {l.statement()}")
        return OK
    print(f"# seed {args.seed}")
    report = run_suite(args.n, laws, args.samples, args.seed,
                       progress=lambda e: print(e.line(), flush=True))
    print(report.lines()[-1])
    return OK if report.ok else FAIL


def cmd_repro(args):
    if args.list:
        for it in repro_mod.items():
            print(f"{it.name:40} {it.kind:15} {it.law}")
        return OK
    if not args.all and not args.name:
        raise UsageError("give --all, --name or --list")
    results = repro_mod.run(None if args.all else args.name)
    for r in results:
        print(r.line())
    passed = sum(r.ok for r in results)
    print(f"# {passed}/{len(results)} passed")
    return OK if passed == len(results) else FAIL


def cmd_algebra(args):
    alg = _algebra(args.file)
    v = check_algebra(alg, args.axioms)
    print(f"# carrier {alg.carrier}; derived d {[alg.carrier[i] for i in alg.d_table()]}")
    for p in v.parts:
        print(p.line())
    print(f"ALGEBRA {alg.name} {args.axioms} {v.status.upper()} ({v.details})")
    return OK if v.status == HOLDS else FAIL


# parser --------------------------------------------------------------------

def _positive(text):
    k = int(text)
    if k < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return k


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="multirel",
        description="Finite multirelations: evaluate, iterate and check laws.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a term")
    e.add_argument("--universe", help="comma-separated labels, e.g. a,b")
    e.add_argument("--expr", required=True)
    e.add_argument("--bind", action="append", default=[],
                   help="name=<{(a,{b})}> or name=FILE")
    e.set_defaults(func=cmd_eval)

    f = sub.add_parser("fixpoint", help="compute an iteration")
    f.add_argument("--op", required=True, choices=[
        "star", "omega", "infinity", "nabla", "star_binary", "omega_binary"])
    f.add_argument("--universe")
    f.add_argument("--input", required=True)
    f.add_argument("--rhs")
    f.set_defaults(func=cmd_fixpoint)

    def law_args(q):
        g = q.add_mutually_exclusive_group(required=True)
        g.add_argument("--law", help="catalog law name")
        g.add_argument("--expr", help="law text, e.g. 'z || z <= z => x . z = z'")
        q.add_argument("--seed", type=int, default=DEFAULT_SEED)
        q.add_argument("--samples", type=_positive, default=20000)
        q.add_argument("--algebra", nargs="?", const="builtin",
                       help="check in a finite algebra (builtin or JSON file)")

    c = sub.add_parser("check", help="check one law")
    law_args(c)
    c.add_argument("--n", type=_positive, default=2)
    c.add_argument("--mode", choices=["auto", "exhaustive", "sampled"],
                   default="auto")
    c.set_defaults(func=cmd_check)

    h = sub.add_parser("hunt", help="search for a counterexample")
    law_args(h)
    h.add_argument("--max-n", type=_positive, default=3)
    h.set_defaults(func=cmd_hunt)

    k = sub.add_parser("catalog", help="list or run the law catalog")
    k.add_argument("--json", action="store_true")
    k.add_argument("--group", help="axiom group, e.g. c-monoid")
    k.add_argument("--name", action="append")
    k.add_argument("--run", action="store_true", help="check every listed law")
    k.add_argument("--n", type=_positive, default=2)
    k.add_argument("--samples", type=_positive, default=20000)
    k.add_argument("--seed", type=int, default=DEFAULT_SEED)
    k.set_defaults(func=cmd_catalog)

    r = sub.add_parser("repro", help="replay stored counterexamples")
    r.add_argument("--all", action="store_true")
    r.add_argument("--name", action="append")
    r.add_argument("--list", action="store_true")
    r.set_defaults(func=cmd_repro)

    a = sub.add_parser("algebra", help="check a finite algebra")
    a.add_argument("--file", help="JSON tables; the builtin algebra by default")
    a.add_argument("--axioms", choices=["c-monoid", "c-trioid"], default="c-trioid")
    a.set_defaults(func=cmd_algebra)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except (UsageError, SearchSpaceError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except FixpointError as e:
        print(f"engine failure: {e}", file=sys.stderr)
        return ENGINE
    except MultirelError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except BrokenPipeError:
        # output piped into e.g. head; silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return OK


if __name__ == "__main__":
    sys.exit(main())
