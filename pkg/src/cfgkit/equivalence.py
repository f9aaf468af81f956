"""Bounded language equivalence and simple language deciders.

Equivalence of context-free grammars is undecidable in general; the check
here compares the languages restricted to sentences of bounded length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .derivation import enumerate_language
from .grammar import Grammar, render_form, require_valid, sentence_key
from .simplify import nullable_set, useful_set


@dataclass(frozen=True)
class Verdict:
    """Outcome of `bounded_equiv`: equal, or a witness sentence and its side."""

    counterexample: tuple | None = None
    side: int | None = None

    @property
    def equal(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.equal

    def __str__(self) -> str:
        if self.equal:
            return "equal"
        return f"counterexample: {self.side} {render_form(self.counterexample)}"


def bounded_equiv(g1: Grammar, g2: Grammar, max_len: int) -> Verdict:
    """Compare both languages up to ``max_len``.

    On a mismatch the smallest differing sentence (length, then
    lexicographic by terminal name) is returned with the side (1 or 2)
    whose grammar produces it.
    """
    l1 = enumerate_language(g1, max_len).sentences
    l2 = enumerate_language(g2, max_len).sentences
    diff = l1 ^ l2
    if not diff:
        return Verdict()
    w = min(diff, key=sentence_key)
    return Verdict(w, 1 if w in l1 else 2)


def non_empty(g: Grammar) -> bool:
    require_valid(g)
    return g.start in useful_set(g)


def generates_empty(g: Grammar) -> bool:
    require_valid(g)
    return g.start in nullable_set(g)
