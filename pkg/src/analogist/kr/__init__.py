"""Knowledge representation: micro-theory files, expressions, graphs."""

from .graph import Edge, ExpressionGraph, edge_count, to_graph
from .model import (
    CONNECTIVES,
    FLEXIBLE_CATEGORIES,
    SKOLEM_PREFIX,
    EntitySymbol,
    Experience,
    Expression,
    PredicateCategory,
    PredicateDecl,
    build_experience,
    categorize,
    make_entity,
)
from .parser import (
    Conventions,
    DEFAULT_CONVENTIONS,
    load_event_names,
    parse_experience,
    parse_file,
)
from .serialize import canonical_serialize
from .sexpr import ParseError

__all__ = [
    "CONNECTIVES",
    "Conventions",
    "DEFAULT_CONVENTIONS",
    "Edge",
    "EntitySymbol",
    "Experience",
    "Expression",
    "ExpressionGraph",
    "FLEXIBLE_CATEGORIES",
    "ParseError",
    "PredicateCategory",
    "PredicateDecl",
    "SKOLEM_PREFIX",
    "build_experience",
    "canonical_serialize",
    "categorize",
    "edge_count",
    "load_event_names",
    "make_entity",
    "parse_experience",
    "parse_file",
    "to_graph",
]
