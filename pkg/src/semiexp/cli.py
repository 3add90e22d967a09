"""Command line interface: ``semiexp <command> ...``."""
import argparse
import json
import sys

from . import corpus
from ._jit import BACKEND
from .cayley import TwoSidedCayleyGraph
from .errors import SemigroupError
from .expansions import DEFAULT_CAP, ExpansionKind, iterate
from .harness import SUITES, run_suite
from .io import format_catalog, format_entry, load_catalog, load_entry
from .omega import check_all, named_basis, parse_pseudoidentity
from .predicates import (Pseudovariety, is_equidivisible, is_member,
                         is_strongly_equidivisible, letter_cancelative)


def _emit(args, obj, text):
    print(json.dumps(obj) if args.json else text)


def _verdict(args, v, what):
    obj = {"check": what, **v.to_json()}
    text = f"{what}: {'true' if v.ok else 'false'}"
    if not v.ok:
        text += f"  witness={obj['witness']}"
    _emit(args, obj, text)
    return 0 if v.ok else 1


def cmd_validate(args):
    e = load_entry(args.file)
    gs = e.generated
    obj = {"order": e.semigroup.n, "valid": True,
           "generators": None if gs is None else gs.gen_map}
    _emit(args, obj, f"valid semigroup of order {e.semigroup.n}"
          + ("" if gs is None else f", generators {gs.gen_map}"))
    return 0


def cmd_check(args):
    e = load_entry(args.file)
    p = args.predicate
    if p == "equidivisible":
        return _verdict(args, is_equidivisible(e.semigroup), p)
    if p in ("strongly-equidivisible", "mcknight-storey"):
        return _verdict(args, is_strongly_equidivisible(e.semigroup), p)
    if p == "letter-cancelative":
        v = letter_cancelative(e.as_generated(), args.side, args.strict)
        return _verdict(args, v, f"{args.side} letter {args.strict}-cancelative")
    pv = Pseudovariety.parse(p)
    return _verdict(args, is_member(e.semigroup, pv), f"member of {pv.value}")


def cmd_expand(args):
    e = load_entry(args.file)
    kind = ExpansionKind.parse(args.kind)
    chain = iterate(e.as_generated(), kind, max(1, args.iterate), cap=args.cap)
    last = chain[-1]
    if args.emit == "table":
        _emit(args, {"table": last.quotient.base.tolist(), "generators": last.quotient.gen_map},
              format_entry(last.quotient.base, last.quotient,
                           f"expansion({kind.value}, depth={len(chain)})").rstrip())
    elif args.emit == "dot":
        dot = TwoSidedCayleyGraph(last.quotient).to_dot()
        _emit(args, {"dot": dot}, dot.rstrip())
    else:
        stages = [er.summary() for er in chain]
        lines = []
        for k, s in enumerate(stages, 1):
            lines.append(f"stage {k}: {s['kind']} expansion, source order {s['source_order']}"
                         f" -> order {s['order']}")
            lines.append(f"  max witness length {s['max_witness_length']}")
            lines.append("  projection: " + " ".join(
                f"{w}->{p}" for w, p in zip(s["witnesses"], s["projection"])))
        _emit(args, {"stages": stages, "order": last.order}, "\n".join(lines))
    return 0


def cmd_cayley2(args):
    e = load_entry(args.file)
    G = TwoSidedCayleyGraph(e.as_generated())
    dot = G.to_dot(args.word)
    _emit(args, {"dot": dot, "components": G.n_components, "edges": G.n_edges}, dot.rstrip())
    return 0


def cmd_pseudoid(args):
    e = load_entry(args.file)
    if args.action == "basis":
        pids = named_basis(args.name)
        what = f"basis {args.name}"
    else:
        texts = []
        if args.id:
            texts.extend(args.id)
        if args.ids_file:
            with open(args.ids_file, encoding="utf-8") as fh:
                texts.extend(l.strip() for l in fh if l.strip() and not l.startswith("#"))
        if not texts:
            raise _Usage("pseudoid check needs --id or --ids-file")
        pids = [parse_pseudoidentity(t) for t in texts]
        what = "; ".join(str(p) for p in pids)
    v = check_all(e.semigroup, pids, budget=args.budget)
    return _verdict(args, v, what)


def cmd_enumerate(args):
    entries = [corpus.Entry(S, None, f"enumerated(order={args.n}, index={i})")
               for i, S in enumerate(corpus.enumerate_order_n(args.n))]
    return _write_catalog(args, entries)


def cmd_sample(args):
    entries = corpus.sample_transformation_semigroups(args.degree, args.gens, args.count, args.seed)
    return _write_catalog(args, entries)


def _write_catalog(args, entries):
    text = format_catalog(entries)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    obj = {"count": len(entries), "orders": [e.semigroup.n for e in entries]}
    if args.output:
        _emit(args, obj, f"wrote {len(entries)} semigroups to {args.output}")
    elif args.json:
        _emit(args, {**obj, "catalog": text}, "")
    else:
        sys.stdout.write(text)
    return 0


def cmd_suite(args):
    catalog = load_catalog(args.catalog) if args.catalog else None
    names = SUITES if args.name == "all" else [args.name]
    status = 0
    for name in names:
        r = run_suite(name, catalog, jobs=args.jobs)
        status = status or (0 if r.passed else 1)
        text = (f"{name}: {'PASS' if r.passed else 'FAIL'}  instances={r.instances}"
                f" skipped={r.skipped} failures={len(r.failures)} time={r.millis / 1000:.2f}s")
        for f in r.failures[:5]:
            text += f"\n  {f['semigroup']}: {f['witness']}"
        _emit(args, r.to_json(), text)
    return status


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    p = _Parser(prog="semiexp", parents=[common],
                description=f"Two-sided expansions of finite semigroups (backend: {BACKEND}).")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("validate", parents=[common], help="parse and validate a table file")
    s.add_argument("file")
    s.set_defaults(fn=cmd_validate)

    s = sub.add_parser("check", parents=[common], help="decide a predicate")
    s.add_argument("predicate", help="equidivisible, strongly-equidivisible, "
                   "letter-cancelative, or a pseudovariety name ("
                   + ", ".join(pv.value for pv in Pseudovariety) + ")")
    s.add_argument("file")
    s.add_argument("--side", choices=["left", "right", "both"], default="right")
    s.add_argument("--strict", choices=["plain", "super"], default="plain")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("expand", parents=[common], help="compute an expansion")
    s.add_argument("--kind", choices=[k.value for k in ExpansionKind], required=True)
    s.add_argument("file")
    s.add_argument("--iterate", type=int, default=1)
    s.add_argument("--emit", choices=["table", "dot", "summary"], default="summary")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(fn=cmd_expand)

    s = sub.add_parser("cayley2", parents=[common], help="two-sided Cayley graph")
    s.add_argument("action", choices=["dot"])
    s.add_argument("file")
    s.add_argument("--word")
    s.set_defaults(fn=cmd_cayley2)

    s = sub.add_parser("pseudoid", parents=[common], help="check pseudoidentities")
    s.add_argument("action", choices=["check", "basis"])
    s.add_argument("args", nargs="+", metavar="ARG", help="check: FILE; basis: NAME FILE")
    s.add_argument("--id", action="append", help="an identity 'lhs = rhs' (repeatable)")
    s.add_argument("--ids-file", help="text file with one identity per line")
    s.add_argument("--budget", type=int, default=10_000_000)
    s.set_defaults(fn=cmd_pseudoid)

    s = sub.add_parser("enumerate", parents=[common], help="all labeled semigroups of order n <= 3")
    s.add_argument("n", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_enumerate)

    s = sub.add_parser("sample", parents=[common], help="sample transformation semigroups")
    s.add_argument("--degree", type=int, default=3)
    s.add_argument("--gens", type=int, default=2)
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_sample)

    s = sub.add_parser("suite", parents=[common], help="run a verification suite")
    s.add_argument("name", choices=list(SUITES) + ["all"])
    s.add_argument("--catalog", help="catalog file (default: built-in corpus)")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=cmd_suite)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.json = getattr(args, "json", False)
        if args.command is None:
            raise _Usage("a command is required")
        if args.command == "pseudoid":
            want = 2 if args.action == "basis" else 1
            if len(args.args) != want:
                raise _Usage(f"pseudoid {args.action} takes {want} positional argument(s)")
            if args.action == "basis":
                args.name, args.file = args.args
            else:
                args.file = args.args[0]
        return args.fn(args)
    except _Usage as exc:
        print(f"semiexp: error: {exc}", file=sys.stderr)
        return 2
    except (SemigroupError, KeyError, OSError) as exc:
        print(f"semiexp: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
