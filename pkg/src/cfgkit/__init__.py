"""Context-free grammar toolkit: closure constructions, simplification,
Chomsky Normal Form and bounded language equivalence."""

from .closure import concat, star, union
from .cnf import is_cnf, is_cnf_with_empty_rule, to_cnf
from .derivation import (DerivationTrace, LanguageSample, Step, apply_step,
                         cyk_member, derives_within, enumerate_language,
                         parallel, replay, split)
from .equivalence import Verdict, bounded_equiv, generates_empty, non_empty
from .errors import (DerivationError, EmptyLanguageError, ExpansionLimitError,
                     GrammarError, GrammarSyntaxError, InvalidGrammarError,
                     NotInCNFError, SearchLimitExceeded)
from .grammar import (Base, FreshStart, Grammar, Group, Lifted1, Lifted2,
                      Nonterminal, Rule, Terminal, ValidationReport,
                      parse_grammar, render_grammar, terminals, validate)
from .simplify import (PredicateReport, accessible_set, check_predicates,
                       nullable_set, remove_empty, remove_inaccessible,
                       remove_unit, remove_useless, simplify, unit_pairs,
                       useful_set)
