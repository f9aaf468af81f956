"""Command-line front end.

Exit status: 0 on success (including negative ``member``/``equiv`` verdicts),
1 on file, syntax or validation errors, 2 when a precondition fails, such as
simplifying a grammar whose language is empty.
"""

from __future__ import annotations

import argparse
import sys

from .closure import concat, star, union
from .cnf import cnf_violation, is_cnf, is_cnf_with_empty_rule, to_cnf
from .derivation import cyk_member, enumerate_language
from .equivalence import bounded_equiv
from .errors import EmptyLanguageError, GrammarError
from .grammar import Terminal, parse_grammar, render_form, render_grammar, validate
from .simplify import PASSES, check_predicates, simplify

DEFAULT_MAX_LEN = 6


class _InputError(Exception):
    pass


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return parse_grammar(text)
    except GrammarError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _cmd_validate(args, out):
    report = validate(_load(args.grammar))
    if report.ok:
        print("ok", file=out)
        return 0
    for v in report.violations:
        print(v, file=out)
    return 1


def _cmd_union(args, out):
    out.write(render_grammar(union(_load(args.g1), _load(args.g2))))
    return 0


def _cmd_concat(args, out):
    out.write(render_grammar(concat(_load(args.g1), _load(args.g2))))
    return 0


def _cmd_star(args, out):
    out.write(render_grammar(star(_load(args.grammar))))
    return 0


def _cmd_simplify(args, out):
    g = _load(args.grammar)
    result = simplify(g) if args.pass_ == "all" else PASSES[args.pass_](g)
    out.write(render_grammar(result))
    return 0


def _cmd_cnf(args, out):
    out.write(render_grammar(to_cnf(_load(args.grammar))))
    return 0


def _cmd_check(args, out):
    g = _load(args.grammar)
    flags = check_predicates(g).items()
    flags += [("is_cnf", is_cnf(g)), ("is_cnf_with_empty_rule", is_cnf_with_empty_rule(g))]
    for name, value in flags:
        print(f"{name}: {str(value).lower()}", file=out)
    return 0


def _cmd_enum(args, out):
    for w in enumerate_language(_load(args.grammar), args.max_len):
        print(render_form(w), file=out)
    return 0


def _cmd_member(args, out):
    g = _load(args.grammar)
    w = tuple(Terminal(t) for t in args.sentence)
    if cnf_violation(g) is not None:
        try:
            g = to_cnf(g)
        except EmptyLanguageError:
            print("no", file=out)
            return 0
    print("yes" if cyk_member(g, w) else "no", file=out)
    return 0


def _cmd_equiv(args, out):
    print(bounded_equiv(_load(args.g1), _load(args.g2), args.max_len), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfgkit", description="Transform and check context-free grammars.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, files=("grammar",)):
        p = sub.add_parser(name, help=help)
        for f in files:
            p.add_argument(f)
        p.set_defaults(func=func)
        return p

    add("validate", _cmd_validate, "check grammar invariants")
    add("union", _cmd_union, "grammar for L1 | L2", ("g1", "g2"))
    add("concat", _cmd_concat, "grammar for L1 L2", ("g1", "g2"))
    add("star", _cmd_star, "grammar for L*")
    p = add("simplify", _cmd_simplify, "eliminate empty/unit rules and useless/inaccessible symbols")
    p.add_argument("--pass", dest="pass_", default="all", choices=[*PASSES, "all"])
    add("cnf", _cmd_cnf, "convert to Chomsky Normal Form")
    add("check", _cmd_check, "print simplification and CNF predicate flags")
    p = add("enum", _cmd_enum, "list sentences up to a length bound")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p = add("member", _cmd_member, "decide membership of a sentence")
    p.add_argument("sentence", nargs="*", help="terminal tokens")
    p = add("equiv", _cmd_equiv, "bounded language equivalence", ("g1", "g2"))
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "max_len", 0) < 0:
        print("cfgkit: --max-len must be non-negative", file=sys.stderr)
        return 1
    try:
        return args.func(args, out)
    except _InputError as exc:
        print(f"cfgkit: {exc}", file=sys.stderr)
        return 1
    except GrammarError as exc:
        print(f"cfgkit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
