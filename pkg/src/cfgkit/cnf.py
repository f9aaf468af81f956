"""Chomsky Normal Form conversion and shape checks.

The converted grammar names each nonterminal after the source sentential
form it stands for: ``Group((X,))`` replaces ``X``, ``Group((t,))`` is the
stand-in for terminal ``t``, and ``Group((Y, Z, d))`` derives the suffix
``Y Z d``.  A rule ``A -> s1 s2 ... sk`` becomes the right-leaning cascade::

    [A]          -> [s1] [s2...sk]
    [s2...sk]    -> [s2] [s3...sk]
    ...
    [sk-1 sk]    -> [sk-1] [sk]
"""

from __future__ import annotations

from .grammar import Grammar, Group, Nonterminal, Rule, Terminal, require_valid
from .simplify import is_unit, simplify


def _binary_or_terminal(r: Rule) -> bool:
    rhs = r.rhs
    if len(rhs) == 1:
        return isinstance(rhs[0], Terminal)
    return len(rhs) == 2 and all(isinstance(s, Nonterminal) for s in rhs)


def is_cnf(g: Grammar) -> bool:
    """Every rhs is one terminal or exactly two nonterminals."""
    return all(_binary_or_terminal(r) for r in g.rules)


def is_cnf_with_empty_rule(g: Grammar) -> bool:
    empties = [r for r in g.rules if not r.rhs]
    if len(empties) != 1 or empties[0].lhs != g.start:
        return False
    if any(g.start in r.rhs for r in g.rules):
        return False
    return all(_binary_or_terminal(r) for r in g.rules if r.rhs)


def cnf_violation(g: Grammar) -> Rule | None:
    """First rule (canonical order) keeping ``g`` out of CNF, else None."""
    start_in_rhs = any(g.start in r.rhs for r in g.rules)
    empties = [r for r in g.rules if not r.rhs]
    allow_empty = len(empties) == 1 and empties[0].lhs == g.start and not start_in_rhs
    for r in g.sorted_rules():
        if not r.rhs:
            if not allow_empty:
                return r
        elif not _binary_or_terminal(r):
            return r
    return None


def _lift(sym) -> Group:
    return Group((sym,))


def to_cnf(g: Grammar) -> Grammar:
    """Equivalent grammar in CNF, allowing a lone ``start -> %empty``.

    The grammar is simplified first; raises `EmptyLanguageError` if it
    generates nothing.
    """
    require_valid(g)
    s = simplify(g)
    start = _lift(s.start)
    rules = set()
    for r in s.rules:
        rhs = r.rhs
        if not rhs:
            # only the start can own an empty rule after simplification
            rules.add(Rule(start, ()))
            continue
        if len(rhs) == 1:
            assert not is_unit(r), r
            rules.add(Rule(_lift(r.lhs), rhs))
            continue
        for t in rhs:
            if isinstance(t, Terminal):
                rules.add(Rule(_lift(t), (t,)))
        left = _lift(r.lhs)
        while len(rhs) >= 2:
            head, tail = rhs[0], rhs[1:]
            rules.add(Rule(left, (_lift(head), Group(tail))))
            left, rhs = Group(tail), tail
    return Grammar.from_rules(start, rules, (), s.terminals)
