"""Elimination of empty rules, unit rules, useless and inaccessible symbols.

Each pass returns a new grammar generating the same language.  The sets the
passes depend on (nullable, unit pairs, useful, accessible) are computed as
least fixpoints / graph reachability, which agree with their derivation-based
definitions on finite grammars.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass, fields
from itertools import product

from .errors import EmptyLanguageError, ExpansionLimitError
from .grammar import FreshStart, Grammar, Nonterminal, Rule, Terminal, require_valid

MAX_NULLABLE_OCCURRENCES = 16


def nullable_set(g: Grammar) -> frozenset:
    """Nonterminals that derive the empty sentence."""
    nullable: set = set()
    changed = True
    while changed:
        changed = False
        for r in g.rules:
            if r.lhs not in nullable and all(s in nullable for s in r.rhs):
                nullable.add(r.lhs)
                changed = True
    return frozenset(nullable)


def fresh_start(g: Grammar) -> FreshStart:
    """A `FreshStart` id not already used by ``g``."""
    used = {n.generation for n in g.nonterminals if isinstance(n, FreshStart)}
    k = 0
    while k in used:
        k += 1
    return FreshStart(k)


def _deletion_variants(rhs: tuple, nullable: frozenset):
    spots = [i for i, s in enumerate(rhs) if s in nullable]
    if len(spots) > MAX_NULLABLE_OCCURRENCES:
        raise ExpansionLimitError(
            f"{len(spots)} nullable occurrences in one rule "
            f"(limit {MAX_NULLABLE_OCCURRENCES})")
    for keep in product((True, False), repeat=len(spots)):
        dropped = {i for i, k in zip(spots, keep) if not k}
        yield tuple(s for i, s in enumerate(rhs) if i not in dropped)


def remove_empty(g: Grammar) -> Grammar:
    """Drop empty rules, adding every variant with nullable occurrences deleted.

    The result has a fresh start symbol with a rule to the old start, plus
    ``fresh -> %empty`` exactly when the old start is nullable.
    """
    require_valid(g)
    nullable = nullable_set(g)
    start = fresh_start(g)
    rules = {Rule(start, (g.start,))}
    if g.start in nullable:
        rules.add(Rule(start, ()))
    for r in g.rules:
        if not r.rhs:
            continue
        for rhs in _deletion_variants(r.rhs, nullable):
            if rhs:
                rules.add(Rule(r.lhs, rhs))
    return Grammar.from_rules(start, rules, g.nonterminals, g.terminals)


def is_unit(r: Rule) -> bool:
    return len(r.rhs) == 1 and isinstance(r.rhs[0], Nonterminal)


def unit_pairs(g: Grammar) -> frozenset:
    """Pairs (a, b) with a =>+ b through unit rules alone.

    (a, a) appears only when a lies on a unit-rule cycle.
    """
    succ: dict = {}
    for r in g.rules:
        if is_unit(r):
            succ.setdefault(r.lhs, set()).add(r.rhs[0])
    pairs = set()
    for a in succ:
        stack = list(succ[a])
        seen = set()
        while stack:
            b = stack.pop()
            if b in seen:
                continue
            seen.add(b)
            stack.extend(succ.get(b, ()))
        pairs.update((a, b) for b in seen)
    return frozenset(pairs)


def remove_unit(g: Grammar) -> Grammar:
    require_valid(g)
    kept = [r for r in g.rules if not is_unit(r)]
    by_lhs: dict = {}
    for r in kept:
        by_lhs.setdefault(r.lhs, []).append(r.rhs)
    rules = set(kept)
    for a, b in unit_pairs(g):
        for rhs in by_lhs.get(b, ()):
            rules.add(Rule(a, rhs))
    return Grammar.from_rules(g.start, rules, g.nonterminals, g.terminals)


def useful_set(g: Grammar) -> frozenset:
    """Nonterminals that derive at least one sentence."""
    useful: set = set()
    changed = True
    while changed:
        changed = False
        for r in g.rules:
            if r.lhs in useful:
                continue
            if all(isinstance(s, Terminal) or s in useful for s in r.rhs):
                useful.add(r.lhs)
                changed = True
    return frozenset(useful)


def remove_useless(g: Grammar) -> Grammar:
    """Keep only rules built entirely from useful symbols.

    Raises `EmptyLanguageError` when the start symbol itself is useless.
    """
    require_valid(g)
    useful = useful_set(g)
    if g.start not in useful:
        raise EmptyLanguageError()
    rules = [r for r in g.rules
             if r.lhs in useful
             and all(isinstance(s, Terminal) or s in useful for s in r.rhs)]
    nts = [n for n in g.nonterminals if n in useful]
    return Grammar.from_rules(g.start, rules, nts, g.terminals)


def accessible_set(g: Grammar) -> frozenset:
    """Symbols (terminals included) occurring in some form derived from the start."""
    seen = {g.start}
    stack = [g.start]
    while stack:
        n = stack.pop()
        for r in g.rules_for(n):
            for s in r.rhs:
                if s not in seen:
                    seen.add(s)
                    if isinstance(s, Nonterminal):
                        stack.append(s)
    return frozenset(seen)


def remove_inaccessible(g: Grammar) -> Grammar:
    require_valid(g)
    acc = accessible_set(g)
    rules = [r for r in g.rules if r.lhs in acc]
    return Grammar.from_rules(
        g.start, rules,
        [n for n in g.nonterminals if n in acc],
        [t for t in g.terminals if t in acc])


PASSES = {
    "empty": remove_empty,
    "unit": remove_unit,
    "useless": remove_useless,
    "inaccessible": remove_inaccessible,
}


def simplify(g: Grammar) -> Grammar:
    """Run empty, unit, useless, inaccessible elimination in that order.

    Empty rules go first because their removal can create unit rules; unit
    removal never creates empty rules.  Raises `EmptyLanguageError` when the
    grammar generates nothing.
    """
    require_valid(g)
    if g.start not in useful_set(g):
        raise EmptyLanguageError()
    return remove_inaccessible(remove_useless(remove_unit(remove_empty(g))))


@dataclass(frozen=True)
class PredicateReport:
    has_no_empty_rules: bool
    has_one_empty_rule: bool
    has_no_unit_rules: bool
    has_no_useless_symbols: bool
    has_no_inaccessible_symbols: bool
    start_symbol_not_in_rhs: bool

    def items(self):
        return [(f.name, getattr(self, f.name)) for f in fields(self)]

    def all_simplified(self, with_empty: bool) -> bool:
        """Every flag in the polarity a simplified grammar must show."""
        empty_ok = (self.has_one_empty_rule if with_empty
                    else self.has_no_empty_rules)
        return empty_ok and all(astuple(self)[2:])


def check_predicates(g: Grammar) -> PredicateReport:
    empties = [r for r in g.rules if not r.rhs]
    useful = useful_set(g)
    acc = accessible_set(g)
    return PredicateReport(
        has_no_empty_rules=not empties,
        has_one_empty_rule=(len(empties) == 1 and empties[0].lhs == g.start),
        has_no_unit_rules=not any(is_unit(r) for r in g.rules),
        has_no_useless_symbols=all(n in useful for n in g.nonterminals),
        has_no_inaccessible_symbols=all(
            s in acc for s in (*g.nonterminals, *g.terminals)),
        start_symbol_not_in_rhs=not any(g.start in r.rhs for r in g.rules),
    )
