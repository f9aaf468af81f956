"""Random grammar generation and independent reference oracles for the tests.

None of the oracles here call into cfgkit's normalisation code; they work
straight from the rule set.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import product

from hypothesis import strategies as st

from cfgkit import (Base, DerivationTrace, Grammar, Nonterminal, Rule, Step,
                    Terminal, parse_grammar)

NT_NAMES = ["S", "A", "B", "C"]
T_NAMES = ["a", "b", "c"]


def g(text: str) -> Grammar:
    """Grammar from the text format; ``start:`` defaults to the first lhs."""
    if not text.lstrip().startswith("start:"):
        first = text.strip().split("->", 1)[0].strip()
        text = f"start: {first}\n{text}"
    return parse_grammar(text)


def words(*items: str) -> set:
    """Sentences from compact strings of one-letter terminals: words("", "ab")."""
    return {tuple(Terminal(c) for c in w) for w in items}


def random_grammar(rng: random.Random, max_nts=4, max_ts=3, max_rules=8, max_rhs=3) -> Grammar:
    nts = [Base(n) for n in NT_NAMES[:rng.randint(1, max_nts)]]
    ts = [Terminal(t) for t in T_NAMES[:rng.randint(1, max_ts)]]
    symbols = nts + ts
    rules = set()
    for _ in range(rng.randint(1, max_rules)):
        length = rng.choices(range(max_rhs + 1), weights=[1, 3, 3, 2][:max_rhs + 1])[0]
        rhs = tuple(rng.choice(symbols) for _ in range(length))
        rules.add(Rule(rng.choice(nts), rhs))
    return Grammar.from_rules(nts[0], rules, nts)


def random_nonempty_grammar(rng: random.Random, **kw) -> Grammar:
    while True:
        gr = random_grammar(rng, **kw)
        if _generates_something(gr):
            return gr


grammars = st.randoms(use_true_random=False).map(random_grammar)
nonempty_grammars = st.randoms(use_true_random=False).map(random_nonempty_grammar)


def fixpoint_language(gr: Grammar, k: int) -> set:
    """Sentences of length <= k by Kleene iteration over bounded string sets.

    Every subtree of a derivation of a sentence of length <= k yields a
    substring of length <= k, so truncating at k loses nothing.
    """
    lang = {n: set() for n in gr.nonterminals}
    changed = True
    while changed:
        changed = False
        for r in gr.rules:
            acc = {()}
            for s in r.rhs:
                options = {(s.name,)} if isinstance(s, Terminal) else lang[s]
                acc = {u + v for u in acc for v in options if len(u) + len(v) <= k}
                if not acc:
                    break
            if not acc <= lang[r.lhs]:
                lang[r.lhs] |= acc
                changed = True
    return {tuple(Terminal(t) for t in w) for w in lang[gr.start]}


def _generates_something(gr: Grammar) -> bool:
    return bool(_set_search(gr, gr.start, allow_terminals=True))


def _set_search(gr: Grammar, root: Nonterminal, allow_terminals: bool) -> bool:
    """Can ``root`` rewrite to a terminal-only (or empty) form?

    Explores the *sets* of nonterminals present in a form, rewriting every
    occurrence of each present nonterminal with one chosen rule per round.
    There are at most 2^|N| states, so the search is exhaustive.
    """
    options = {}
    for n in gr.nonterminals:
        options[n] = [frozenset(s for s in r.rhs if isinstance(s, Nonterminal))
                      for r in gr.rules
                      if r.lhs == n and (allow_terminals or not r.rhs or
                                         all(isinstance(s, Nonterminal) for s in r.rhs))]
    start = frozenset([root])
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if not state:
            return True
        members = sorted(state, key=str)
        for choice in product(*(options[n] for n in members)):
            nxt = frozenset().union(*choice)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def brute_useful(gr: Grammar) -> set:
    return {n for n in gr.nonterminals if _set_search(gr, n, allow_terminals=True)}


def brute_nullable(gr: Grammar) -> set:
    return {n for n in gr.nonterminals if _set_search(gr, n, allow_terminals=False)}


def brute_accessible(gr: Grammar, steps: int = 6) -> set:
    """Every symbol seen in forms reachable from the start in <= ``steps`` steps."""
    seen_forms = {(gr.start,)}
    frontier = [(gr.start,)]
    for _ in range(steps):
        nxt = []
        for form in frontier:
            for i, s in enumerate(form):
                if isinstance(s, Terminal):
                    continue
                for r in gr.rules:
                    if r.lhs == s:
                        new = form[:i] + r.rhs + form[i + 1:]
                        if new not in seen_forms:
                            seen_forms.add(new)
                            nxt.append(new)
        frontier = nxt
    return {s for f in seen_forms for s in f}


def brute_unit_pairs(gr: Grammar) -> set:
    """Pairs joined by a unit-rule path of 1..|N| edges, by explicit path enumeration."""
    edges = {(r.lhs, r.rhs[0]) for r in gr.rules
             if len(r.rhs) == 1 and isinstance(r.rhs[0], Nonterminal)}
    paths = [[a, b] for a, b in edges]
    pairs = set()
    for _ in range(len(gr.nonterminals)):
        longer = []
        for p in paths:
            pairs.add((p[0], p[-1]))
            longer += [p + [b] for a, b in edges if a == p[-1]]
        paths = longer
    return pairs


def bfs_language(gr: Grammar, k: int) -> set:
    """Reference leftmost-derivation BFS for a *simplified* grammar.

    Without unit rules and with the only empty rule on a start symbol that
    never reappears, forms never shrink, so pruning at length k is sound.
    """
    out = set()
    seen = {(gr.start,)}
    queue = deque(seen)
    while queue:
        form = queue.popleft()
        idx = next((i for i, s in enumerate(form) if not isinstance(s, Terminal)), None)
        if idx is None:
            out.add(form)
            continue
        for r in gr.rules:
            if r.lhs != form[idx]:
                continue
            new = form[:idx] + r.rhs + form[idx + 1:]
            if len(new) <= k and new not in seen:
                seen.add(new)
                queue.append(new)
    return out


def pairwise_concat(l1: set, l2: set, k: int) -> set:
    return {u + v for u in l1 for v in l2 if len(u) + len(v) <= k}


def star_closure(lang: set, k: int) -> set:
    result = {()}
    frontier = {()}
    while frontier:
        frontier = pairwise_concat(frontier, lang, k) - result
        result |= frontier
    return result


def random_trace(rng: random.Random, gr: Grammar, form: tuple, max_steps: int):
    """A random valid trace from ``form``; returns (trace, final form)."""
    steps = []
    for _ in range(max_steps):
        spots = [(i, r) for i, s in enumerate(form) if isinstance(s, Nonterminal)
                 for r in gr.rules if r.lhs == s]
        if not spots:
            break
        i, r = rng.choice(spots)
        steps.append(Step(i, r))
        form = form[:i] + r.rhs + form[i + 1:]
    return DerivationTrace(steps), form


def random_form(rng: random.Random, gr: Grammar, max_len: int = 3) -> tuple:
    symbols = sorted(gr.nonterminals, key=str) + sorted(gr.terminals, key=str)
    return tuple(rng.choice(symbols) for _ in range(rng.randint(0, max_len)))
