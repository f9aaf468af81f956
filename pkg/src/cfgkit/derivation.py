"""Derivation semantics: single steps, step-counted traces, bounded search,
CYK membership and bounded language enumeration.

A trace is a list of ``(position, rule)`` applications; replaying it from a
sentential form rewrites the nonterminal at ``position`` with the rule's rhs,
one step at a time.  Concatenating, shifting and splitting traces gives the
usual derivation lemmas (transitivity, context embedding, parallel
composition, splitting) an executable form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .cnf import cnf_violation, to_cnf
from .errors import (DerivationError, LhsMismatch, NotANonterminal, NotInCNFError,
                     PositionOutOfRange, SearchLimitExceeded, UnknownRule)
from .grammar import Grammar, Nonterminal, Rule, Terminal, require_valid, sentence_key
from .simplify import useful_set

DEFAULT_SEARCH_LIMIT = 200_000


@dataclass(frozen=True)
class Step:
    position: int
    rule: Rule


@dataclass(frozen=True)
class DerivationTrace:
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __add__(self, other: "DerivationTrace") -> "DerivationTrace":
        return DerivationTrace(self.steps + other.steps)

    @property
    def growth(self) -> int:
        """Change in form length caused by replaying the trace."""
        return sum(len(s.rule.rhs) - 1 for s in self.steps)

    def shifted(self, offset: int) -> "DerivationTrace":
        """The same derivation performed behind a prefix of ``offset`` symbols."""
        return DerivationTrace(Step(s.position + offset, s.rule) for s in self.steps)


def apply_step(g: Grammar, form, position: int, rule: Rule) -> tuple:
    form = tuple(form)
    if rule not in g.rules:
        raise UnknownRule(f"rule {rule} is not in the grammar")
    if not 0 <= position < len(form):
        raise PositionOutOfRange(f"position {position} outside form of length {len(form)}")
    sym = form[position]
    if not isinstance(sym, Nonterminal):
        raise NotANonterminal(f"symbol {sym} at position {position} is a terminal")
    if sym != rule.lhs:
        raise LhsMismatch(f"symbol {sym} at position {position} is not the lhs of {rule}")
    return form[:position] + rule.rhs + form[position + 1:]


def replay(g: Grammar, form, trace: Iterable[Step]) -> tuple:
    form = tuple(form)
    for i, step in enumerate(trace):
        try:
            form = apply_step(g, form, step.position, step.rule)
        except DerivationError as exc:
            exc.step = i
            raise
    return form


def parallel(left: DerivationTrace, left_len: int, right: DerivationTrace) -> DerivationTrace:
    """Combine s1 =>* s2 and s3 =>* s4 into s1 s3 =>* s2 s4 (``left_len = |s1|``)."""
    return left + right.shifted(left_len + left.growth)


def split(trace: DerivationTrace, left_len: int) -> tuple[DerivationTrace, DerivationTrace]:
    """Split a trace on s1 s2 (``|s1| = left_len``) into traces on s1 and on s2."""
    lsteps, rsteps = [], []
    for step in trace:
        if step.position < left_len:
            lsteps.append(step)
            left_len += len(step.rule.rhs) - 1
        else:
            rsteps.append(Step(step.position - left_len, step.rule))
    return DerivationTrace(lsteps), DerivationTrace(rsteps)


def _is_subsequence(needle, haystack) -> bool:
    it = iter(haystack)
    return all(any(x == y for y in it) for x in needle)


def derives_within(g: Grammar, source, target, max_steps: int,
                   limit: int = DEFAULT_SEARCH_LIMIT) -> DerivationTrace | None:
    """Shortest trace from ``source`` to ``target`` using at most ``max_steps``.

    ``None`` only means no derivation exists within the bound.  Raises
    `SearchLimitExceeded` once more than ``limit`` distinct forms are visited.
    """
    source, target = tuple(source), tuple(target)
    # terminals are never rewritten, so they must survive into the target in order
    target_terms = [s for s in target if isinstance(s, Terminal)]
    parent: dict = {source: None}
    frontier = deque([(source, 0)])
    while frontier:
        form, depth = frontier.popleft()
        if form == target:
            steps = []
            while parent[form] is not None:
                form, step = parent[form]
                steps.append(step)
            return DerivationTrace(reversed(steps))
        if depth == max_steps:
            continue
        for i, sym in enumerate(form):
            if not isinstance(sym, Nonterminal):
                continue
            for rule in g.rules_for(sym):
                nxt = form[:i] + rule.rhs + form[i + 1:]
                if nxt in parent:
                    continue
                if not _is_subsequence([s for s in nxt if isinstance(s, Terminal)],
                                       target_terms):
                    continue
                parent[nxt] = (form, Step(i, rule))
                if len(parent) > limit:
                    raise SearchLimitExceeded(limit)
                frontier.append((nxt, depth + 1))
    return None


def cyk_member(g: Grammar, w) -> bool:
    """CYK membership test; ``g`` must be in CNF (optionally with start -> %empty)."""
    bad = cnf_violation(g)
    if bad is not None:
        raise NotInCNFError(bad)
    w = tuple(w)
    n = len(w)
    if n == 0:
        return Rule(g.start, ()) in g.rules
    by_terminal: dict = {}
    by_pair: dict = {}
    for r in g.rules:
        if len(r.rhs) == 1:
            by_terminal.setdefault(r.rhs[0], set()).add(r.lhs)
        elif len(r.rhs) == 2:
            by_pair.setdefault(r.rhs, set()).add(r.lhs)
    # table[i][l]: nonterminals deriving w[i:i+l+1]
    table = [[set() for _ in range(n - i)] for i in range(n)]
    for i, t in enumerate(w):
        table[i][0] = set(by_terminal.get(t, ()))
    for length in range(2, n + 1):
        for i in range(n - length + 1):
            cell = table[i][length - 1]
            for k in range(1, length):
                lefts = table[i][k - 1]
                rights = table[i + k][length - k - 1]
                if not lefts or not rights:
                    continue
                for b in lefts:
                    for c in rights:
                        cell |= by_pair.get((b, c), set())
    return g.start in table[0][n - 1]


@dataclass(frozen=True)
class LanguageSample:
    max_len: int
    sentences: frozenset

    def __contains__(self, w) -> bool:
        return tuple(w) in self.sentences

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> list:
        return sorted(self.sentences, key=sentence_key)


def _cnf_language(g: Grammar, max_len: int) -> set:
    """All sentences of length <= max_len, built bottom-up over CNF rules."""
    ids = {n: i for i, n in enumerate(g.nonterminals)}
    by_len: list[list[set]] = [[set() for _ in ids] for _ in range(max_len + 1)]
    pairs = []
    for r in g.rules:
        if len(r.rhs) == 1 and max_len >= 1:
            by_len[1][ids[r.lhs]].add((r.rhs[0].name,))
        elif len(r.rhs) == 2:
            pairs.append((ids[r.lhs], ids[r.rhs[0]], ids[r.rhs[1]]))
    for length in range(2, max_len + 1):
        row = by_len[length]
        for a, b, c in pairs:
            for k in range(1, length):
                left, right = by_len[k][b], by_len[length - k][c]
                if left and right:
                    row[a].update(u + v for u in left for v in right)
    start = ids[g.start]
    out = {w for length in range(1, max_len + 1) for w in by_len[length][start]}
    if Rule(g.start, ()) in g.rules:
        out.add(())
    return out


def enumerate_language(g: Grammar, max_len: int) -> LanguageSample:
    """Exactly the sentences of length <= ``max_len`` generated by ``g``.

    The grammar is converted to CNF, whose rules can only lengthen a form,
    so bottom-up generation by length is complete within the bound.
    """
    require_valid(g)
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    if g.start not in useful_set(g):
        return LanguageSample(max_len, frozenset())
    names = _cnf_language(to_cnf(g), max_len)
    return LanguageSample(max_len, frozenset(
        tuple(Terminal(t) for t in w) for w in names))
