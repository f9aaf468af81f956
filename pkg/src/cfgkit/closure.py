"""Union, concatenation and Kleene star of grammars.

Operand nonterminals are wrapped in `Lifted1` / `Lifted2`, so the new
`FreshStart(0)` symbol cannot collide with anything from the operands, even
when constructions are nested.  Terminals are shared by name.
"""

from __future__ import annotations

from .grammar import FreshStart, Grammar, Lifted1, Lifted2, Nonterminal, Rule, require_valid


def _lifter(wrap):
    def lift(sym):
        return wrap(sym) if isinstance(sym, Nonterminal) else sym
    return lift


def _lift_rules(g: Grammar, wrap) -> list[Rule]:
    lift = _lifter(wrap)
    return [Rule(wrap(r.lhs), tuple(lift(s) for s in r.rhs)) for r in g.rules]


def _combine(start, new_rules, *operands):
    rules = list(new_rules)
    nts = [start]
    ts = []
    for g, wrap in operands:
        rules += _lift_rules(g, wrap)
        nts += [wrap(n) for n in g.nonterminals]
        ts += g.terminals
    return Grammar.from_rules(start, rules, nts, ts)


def union(g1: Grammar, g2: Grammar) -> Grammar:
    require_valid(g1)
    require_valid(g2)
    start = FreshStart(0)
    return _combine(start,
                    [Rule(start, (Lifted1(g1.start),)), Rule(start, (Lifted2(g2.start),))],
                    (g1, Lifted1), (g2, Lifted2))


def concat(g1: Grammar, g2: Grammar) -> Grammar:
    require_valid(g1)
    require_valid(g2)
    start = FreshStart(0)
    return _combine(start, [Rule(start, (Lifted1(g1.start), Lifted2(g2.start)))],
                    (g1, Lifted1), (g2, Lifted2))


def star(g: Grammar) -> Grammar:
    require_valid(g)
    start = FreshStart(0)
    return _combine(start,
                    [Rule(start, (start, Lifted1(g.start))), Rule(start, ())],
                    (g, Lifted1))
