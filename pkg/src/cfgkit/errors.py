"""Exception hierarchy shared by every cfgkit module."""

from __future__ import annotations


class GrammarError(ValueError):
    """Base class for all cfgkit failures."""


class GrammarSyntaxError(GrammarError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InvalidGrammarError(GrammarError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid grammar: " + "; ".join(self.violations))


class EmptyLanguageError(GrammarError):
    """The start symbol derives no sentence, so the operation is undefined."""

    def __init__(self, message: str = "empty language"):
        super().__init__(message)


class ExpansionLimitError(GrammarError):
    pass


class NotInCNFError(GrammarError):
    def __init__(self, rule):
        super().__init__(f"grammar not in CNF: offending rule {rule}")
        self.rule = rule


class DerivationError(GrammarError):
    """A derivation step could not be applied.

    ``step`` is filled in by :func:`cfgkit.derivation.replay` with the index of
    the failing step; it is ``None`` for a direct :func:`apply_step` call.
    """

    step: int | None = None

    def __str__(self) -> str:
        text = super().__str__()
        if self.step is None:
            return text
        return f"step {self.step}: {text}"


class PositionOutOfRange(DerivationError):
    pass


class NotANonterminal(DerivationError):
    pass


class LhsMismatch(DerivationError):
    pass


class UnknownRule(DerivationError):
    pass


class SearchLimitExceeded(GrammarError):
    """Derivation search visited more forms than allowed without a verdict."""

    def __init__(self, limit: int):
        super().__init__(f"search space exceeded {limit} distinct sentential forms")
        self.limit = limit
