"""Grammar values, validation and the line-oriented text format.

A grammar is an immutable value: a start nonterminal, a finite set of rules
and the declared nonterminal/terminal alphabets.  Nonterminals are structured
ids so that every construction can mint symbols that cannot collide with the
ones it was built from::

    Base("S")                       # a name from a grammar file
    Lifted1(Base("S"))              # S, taken from the first operand
    FreshStart(0)                   # a new start symbol
    Group((Base("Y"), Terminal("d")))   # stands for the form  Y d

Text format::

    # comment
    start: S
    nonterminals: Unused         # optional, rule-less nonterminals
    S -> a S | b
    E -> %empty
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Union

from .errors import GrammarSyntaxError, InvalidGrammarError

EMPTY_TOKEN = "%empty"
RESERVED = frozenset({"->", "|", EMPTY_TOKEN, "#", "start:", "nonterminals:"})


@dataclass(frozen=True)
class Terminal:
    name: str

    def __str__(self) -> str:
        return self.name


class Nonterminal:
    """Common base of the structured nonterminal ids."""

    __slots__ = ()

    def __str__(self) -> str:
        return token(self)


@dataclass(frozen=True)
class Base(Nonterminal):
    name: str


@dataclass(frozen=True)
class Lifted1(Nonterminal):
    inner: Nonterminal


@dataclass(frozen=True)
class Lifted2(Nonterminal):
    inner: Nonterminal


@dataclass(frozen=True)
class FreshStart(Nonterminal):
    generation: int = 0


@dataclass(frozen=True)
class Group(Nonterminal):
    """Nonterminal standing for a non-empty sentential form."""

    body: tuple

    def __post_init__(self):
        body = tuple(self.body)
        if not body:
            raise ValueError("Group body must be non-empty")
        object.__setattr__(self, "body", body)


Symbol = Union[Nonterminal, Terminal]
SententialForm = tuple  # tuple[Symbol, ...]
Sentence = tuple  # tuple[Terminal, ...]


def token(sym: Symbol) -> str:
    """Printable token for a symbol; structured ids are flattened."""
    if isinstance(sym, Terminal):
        return sym.name
    if isinstance(sym, Base):
        return sym.name
    if isinstance(sym, Lifted1):
        return token(sym.inner) + "@1"
    if isinstance(sym, Lifted2):
        return token(sym.inner) + "@2"
    if isinstance(sym, FreshStart):
        return f"S%{sym.generation}"
    if isinstance(sym, Group):
        return "[" + ".".join(token(s) for s in sym.body) + "]"
    raise TypeError(f"not a grammar symbol: {sym!r}")


def render_form(form: Iterable[Symbol]) -> str:
    text = " ".join(token(s) for s in form)
    return text or EMPTY_TOKEN


def terminals(*names: str) -> tuple:
    """Sentence from terminal names: ``terminals("a", "a", "b")``."""
    return tuple(Terminal(n) for n in names)


def sentence_key(sentence) -> tuple:
    """Length-then-lexicographic ordering key over terminal names."""
    return (len(sentence), tuple(t.name for t in sentence))


@dataclass(frozen=True)
class Rule:
    lhs: Nonterminal
    rhs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rhs", tuple(self.rhs))

    def __str__(self) -> str:
        return f"{token(self.lhs)} -> {render_form(self.rhs)}"

    def sort_key(self) -> tuple:
        return (token(self.lhs), tuple(token(s) for s in self.rhs))


@dataclass(frozen=True)
class Grammar:
    """Immutable context-free grammar.

    Prefer :meth:`from_rules`, which deduplicates rules and infers the
    alphabets.  The raw constructor does not check invariants; use
    :func:`validate` for that.
    """

    start: Nonterminal
    rules: frozenset
    nonterminals: frozenset
    terminals: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_rules(cls, start: Nonterminal, rules: Iterable[Rule] = (),
                   nonterminals: Iterable[Nonterminal] = (),
                   terminals: Iterable[Terminal] = ()) -> "Grammar":
        rules = frozenset(rules)
        nts = {start, *nonterminals}
        ts = set(terminals)
        for r in rules:
            nts.add(r.lhs)
            for s in r.rhs:
                (ts if isinstance(s, Terminal) else nts).add(s)
        return cls(start, rules, frozenset(nts), frozenset(ts))

    @cached_property
    def by_lhs(self) -> dict:
        """Rules grouped by left-hand side, each list in canonical order."""
        table: dict = {}
        for r in sorted(self.rules, key=Rule.sort_key):
            table.setdefault(r.lhs, []).append(r)
        return table

    def rules_for(self, lhs: Nonterminal) -> list:
        return self.by_lhs.get(lhs, [])

    def sorted_rules(self) -> list:
        return sorted(self.rules, key=Rule.sort_key)

    def __str__(self) -> str:
        return render_grammar(self)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _bad_name(name) -> bool:
    return (not isinstance(name, str) or not name or name in RESERVED
            or any(c.isspace() for c in name)
            or "#" in name or "|" in name or "->" in name)


def _symbol_problem(sym) -> str | None:
    if isinstance(sym, Terminal):
        return f"invalid terminal name {sym.name!r}" if _bad_name(sym.name) else None
    if isinstance(sym, Base):
        return f"invalid nonterminal name {sym.name!r}" if _bad_name(sym.name) else None
    if isinstance(sym, (Lifted1, Lifted2)):
        if not isinstance(sym.inner, Nonterminal):
            return f"lifted id wraps a non-nonterminal {sym.inner!r}"
        return _symbol_problem(sym.inner)
    if isinstance(sym, FreshStart):
        if not isinstance(sym.generation, int) or sym.generation < 0:
            return f"invalid fresh start generation {sym.generation!r}"
        return None
    if isinstance(sym, Group):
        if not sym.body:
            return "empty Group body"
        for s in sym.body:
            problem = _symbol_problem(s)
            if problem:
                return problem
        return None
    return f"not a grammar symbol: {sym!r}"


def _show(x) -> str:
    try:
        return str(x)
    except TypeError:
        return repr(x)


def validate(g: Grammar) -> ValidationReport:
    """Check every grammar invariant and list the violations found."""
    out = []
    try:
        rules = list(g.rules)
        nts = set(g.nonterminals)
        ts = set(g.terminals)
    except TypeError as exc:
        return ValidationReport((f"malformed grammar fields: {exc}",))

    for sym in list(nts) + list(ts):
        problem = _symbol_problem(sym)
        if problem:
            out.append(problem)
    for n in nts:
        if not isinstance(n, Nonterminal):
            out.append(f"nonterminal set contains {n!r}")
    for t in ts:
        if not isinstance(t, Terminal):
            out.append(f"terminal set contains {t!r}")

    if not isinstance(g.start, Nonterminal):
        out.append(f"start {g.start!r} is not a nonterminal")
    elif g.start not in nts:
        out.append(f"start not declared: {_show(g.start)}")

    seen = set()
    for r in rules:
        if not isinstance(r, Rule):
            out.append(f"not a rule: {r!r}")
            continue
        if r in seen:
            out.append(f"duplicate rule {_show(r)}")
        seen.add(r)
        if not isinstance(r.lhs, Nonterminal):
            out.append(f"rule lhs {r.lhs!r} is not a nonterminal")
        elif r.lhs not in nts:
            out.append(f"undeclared nonterminal {_show(r.lhs)} on lhs of {_show(r)}")
        for s in r.rhs:
            if isinstance(s, Terminal):
                if s not in ts:
                    out.append(f"undeclared terminal {s.name} in rhs of {_show(r)}")
            elif isinstance(s, Nonterminal):
                if s not in nts:
                    out.append(f"undeclared nonterminal {_show(s)} in rhs of {_show(r)}")
            else:
                out.append(f"rhs of {r.lhs!r} contains non-symbol {s!r}")
    return ValidationReport(tuple(out))


def require_valid(g: Grammar) -> None:
    report = validate(g)
    if not report.ok:
        raise InvalidGrammarError(report.violations)


_START = re.compile(r"start:\s*(.*)$")
_TOKEN = re.compile(r"\S+")


def parse_grammar(text: str) -> Grammar:
    """Parse the text format into a grammar whose nonterminals are all `Base`."""
    start = None
    extras: list[str] = []
    parsed: list[tuple[str, list[list[str]]]] = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        stripped = line.strip()

        m = _START.match(stripped)
        if m:
            if start is not None:
                raise GrammarSyntaxError("duplicate start line", lineno, col0)
            if parsed or extras:
                raise GrammarSyntaxError("start line must come first", lineno, col0)
            names = m.group(1).split()
            if len(names) != 1:
                raise GrammarSyntaxError("start line needs exactly one symbol", lineno, col0)
            _check_name(names[0], lineno, col0)
            start = names[0]
            continue
        if start is None:
            raise GrammarSyntaxError("expected 'start: <symbol>'", lineno, col0)

        if stripped.startswith("nonterminals:"):
            rest = line[line.index("nonterminals:") + len("nonterminals:"):]
            base = line.index("nonterminals:") + len("nonterminals:")
            for m in _TOKEN.finditer(rest):
                _check_name(m.group(), lineno, base + m.start() + 1)
                extras.append(m.group())
            continue

        arrow = line.find("->")
        if arrow < 0:
            raise GrammarSyntaxError("expected '->'", lineno, col0)
        lhs = line[:arrow].split()
        if len(lhs) != 1:
            raise GrammarSyntaxError("rule needs exactly one lhs symbol", lineno, col0)
        _check_name(lhs[0], lineno, col0)

        alts = []
        offset = arrow + 2
        for chunk in line[arrow + 2:].split("|"):
            toks = [(m.group(), offset + m.start() + 1) for m in _TOKEN.finditer(chunk)]
            if not toks:
                raise GrammarSyntaxError("empty alternative (use %empty)", lineno,
                                         offset + 1)
            names = [t for t, _ in toks]
            if EMPTY_TOKEN in names:
                if len(names) != 1:
                    col = toks[names.index(EMPTY_TOKEN)][1]
                    raise GrammarSyntaxError("%empty must stand alone", lineno, col)
                names = []
            else:
                for name, col in toks:
                    _check_name(name, lineno, col)
            alts.append(names)
            offset += len(chunk) + 1
        parsed.append((lhs[0], alts))

    if start is None:
        raise GrammarSyntaxError("missing 'start:' line", 1, 1)

    nt_names = {start, *extras, *(lhs for lhs, _ in parsed)}

    def sym(name: str) -> Symbol:
        return Base(name) if name in nt_names else Terminal(name)

    rules = [Rule(Base(lhs), tuple(sym(n) for n in alt))
             for lhs, alts in parsed for alt in alts]
    g = Grammar.from_rules(Base(start), rules, [Base(n) for n in nt_names])
    require_valid(g)
    return g


def _check_name(name: str, line: int, col: int) -> None:
    if _bad_name(name):
        raise GrammarSyntaxError(f"reserved or malformed token {name!r}", line, col)


def render_grammar(g: Grammar) -> str:
    """Canonical text: one rule per line, sorted by lhs token then rhs tokens."""
    lines = [f"start: {token(g.start)}"]
    with_rules = {r.lhs for r in g.rules}
    extras = sorted(token(n) for n in g.nonterminals
                    if n not in with_rules and n != g.start)
    if extras:
        lines.append("nonterminals: " + " ".join(extras))
    lines.extend(str(r) for r in g.sorted_rules())
    return "\n".join(lines) + "\n"
