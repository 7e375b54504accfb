"""Equality of terms in free categories with finite sums and products."""

from ._core import (
    Graph,
    GuardExceeded,
    Oracle,
    ParseError,
    Term,
    Type,
    TypingError,
    annotate,
    compose,
    decide,
    equivalent,
    factor_inj,
    factor_proj,
    identity,
    injection_monic,
    load_module,
    parse_type,
    projection_epic,
    run_cli,
    term,
)

__all__ = [
    "Graph", "GuardExceeded", "Oracle", "ParseError", "Term", "Type", "TypingError",
    "annotate", "compose", "decide", "equivalent", "factor_inj", "factor_proj", "identity",
    "injection_monic", "load_module", "parse_type", "projection_epic", "run_cli", "term",
]
