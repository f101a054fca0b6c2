"""Micro-theory text parsing.

File format: UTF-8 text, ';' comments, optional (declare ...) header forms,
then one ground fact per top-level s-expression.

    (declare <name> <arity> <category> [event])
    (<functor> <arg> ...)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .model import (
    CONNECTIVES,
    Experience,
    Expression,
    PredicateCategory,
    PredicateDecl,
    build_experience,
    categorize,
    make_entity,
)
from .sexpr import Atom, Form, ParseError, read_forms

# Connectives are declared implicitly; all binary, never events.
_BUILTIN_DECLS = {
    name: PredicateDecl(name, 2, PredicateCategory.RELATION)
    for name in CONNECTIVES
}

_FIRST_ORDER = (
    PredicateCategory.ATTRIBUTE,
    PredicateCategory.AFFORDANCE,
    PredicateCategory.DESIRE,
    PredicateCategory.TRANSFORMATION,
    PredicateCategory.FUNCTION,
)


@dataclass(frozen=True)
class Conventions:
    """Parse-time vocabulary conventions.

    event_names flags observable action predicates; spelling repairs known
    misspellings; functor_aliases folds synonymous functors together.
    """

    event_names: frozenset[str] = frozenset()
    spelling: dict[str, str] = field(
        default_factory=lambda: {"aggresive": "aggressive"}
    )
    functor_aliases: dict[str, str] = field(
        default_factory=lambda: {"cause": "causes"}
    )

    def normalize(self, token: str) -> str:
        token = self.spelling.get(token, token)
        return self.functor_aliases.get(token, token)


DEFAULT_CONVENTIONS = Conventions()


def load_event_names(path: str | Path) -> frozenset[str]:
    """Read an event vocabulary file: one predicate name per line."""
    names = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split(";", 1)[0].strip()
        if line:
            names.append(line)
    return frozenset(names)


def _parse_declare(form: Form, conv: Conventions) -> PredicateDecl:
    items = form.items[1:]
    if len(items) not in (3, 4):
        raise ParseError(
            "declare takes a name, an arity, a category and an optional "
            "'event' flag",
            form.line,
            form.column,
        )
    for it in items:
        if not isinstance(it, Atom):
            raise ParseError("declare arguments must be atoms", form.line, form.column)
    name = conv.normalize(items[0].text)
    try:
        arity = int(items[1].text)
    except ValueError:
        raise ParseError(
            f"declare arity must be an integer, got {items[1].text!r}",
            items[1].line,
            items[1].column,
        ) from None
    if arity < 1:
        raise ParseError("declare arity must be >= 1", items[1].line, items[1].column)
    try:
        category = PredicateCategory(items[2].text)
    except ValueError:
        raise ParseError(
            f"unknown category {items[2].text!r}", items[2].line, items[2].column
        ) from None
    if category is PredicateCategory.RELATION and arity < 2:
        # Unary action predicates are attributes with the event flag.
        raise ParseError(
            "relations need arity >= 2; declare unary actions as "
            "'attribute event'",
            items[1].line,
            items[1].column,
        )
    if category is not PredicateCategory.RELATION and arity != 1:
        raise ParseError(
            f"{category.value} predicates take exactly one argument",
            items[1].line,
            items[1].column,
        )
    is_event = False
    if len(items) == 4:
        if items[3].text != "event":
            raise ParseError(
                f"unexpected declare flag {items[3].text!r}",
                items[3].line,
                items[3].column,
            )
        is_event = True
    return PredicateDecl(name, arity, category, is_event)


class _FactReader:
    """Turns forms into uninterned Expression trees, accumulating
    declarations for every functor it sees."""

    def __init__(self, conv: Conventions, decls: dict[str, PredicateDecl]):
        self.conv = conv
        self.decls = decls

    def read(self, form: Form) -> Expression:
        if not form.items:
            raise ParseError("empty functor", form.line, form.column)
        head = form.items[0]
        if not isinstance(head, Atom):
            raise ParseError(
                "functor position must be a predicate name", form.line, form.column
            )
        functor = self.conv.normalize(head.text)
        arity = len(form.items) - 1
        if arity == 0:
            raise ParseError(
                f"predicate {functor!r} applied to no arguments", head.line, head.column
            )
        decl = self.decls.get(functor)
        if decl is None:
            category = categorize(functor, arity, self.decls)
            decl = PredicateDecl(
                functor, arity, category, functor in self.conv.event_names
            )
            self.decls[functor] = decl
        elif decl.arity != arity:
            raise ParseError(
                f"arity conflict for {functor!r}: declared {decl.arity}, used with "
                f"{arity}",
                head.line,
                head.column,
            )
        args = []
        for item in form.items[1:]:
            if isinstance(item, Atom):
                args.append(make_entity(self.conv.normalize(item.text)))
            else:
                sub = self.read(item)
                self._check_nesting(decl, self.decls[sub.functor], item)
                args.append(sub)
        return Expression(functor, tuple(args))

    def _check_nesting(self, outer: PredicateDecl, inner: PredicateDecl, form: Form):
        if outer.name in CONNECTIVES:
            return
        if outer.category is PredicateCategory.RELATION:
            if inner.category is PredicateCategory.FUNCTION:
                return
            raise ParseError(
                f"relation {outer.name!r} takes entities or function terms, "
                f"not {inner.name!r}",
                form.line,
                form.column,
            )
        raise ParseError(
            f"{outer.category.value} predicate {outer.name!r} takes entity "
            "arguments only",
            form.line,
            form.column,
        )


def parse_experience(
    text: str,
    conventions: Conventions | None = None,
    experience_id: str = "experience",
) -> Experience:
    """Parse micro-theory text into an Experience.

    Raises ParseError with a 1-based line/column on malformed input.
    """
    conv = conventions or DEFAULT_CONVENTIONS
    decls: dict[str, PredicateDecl] = dict(_BUILTIN_DECLS)
    explicit: list[str] = []
    reader = _FactReader(conv, decls)
    trees: list[Expression] = []
    for form in read_forms(text):
        if (
            form.items
            and isinstance(form.items[0], Atom)
            and form.items[0].text == "declare"
        ):
            decl = _parse_declare(form, conv)
            prior = decls.get(decl.name)
            if prior is not None and prior.arity != decl.arity:
                raise ParseError(
                    f"arity conflict for {decl.name!r}: declared {prior.arity}, "
                    f"redeclared {decl.arity}",
                    form.line,
                    form.column,
                )
            decls[decl.name] = decl
            if decl.name not in explicit:
                explicit.append(decl.name)
            continue
        trees.append(reader.read(form))
    used: set[str] = set()
    for tree in trees:
        for node in tree.walk():
            used.add(node.functor)
    pruned = {
        name: d for name, d in decls.items() if name in used or name in explicit
    }
    return build_experience(
        experience_id,
        [(t.functor, t.args) for t in trees],
        pruned,
        tuple(explicit),
    )


def parse_file(
    path: str | Path,
    conventions: Conventions | None = None,
    experience_id: str | None = None,
) -> Experience:
    path = Path(path)
    return parse_experience(
        path.read_text(encoding="utf-8"),
        conventions,
        experience_id or path.stem,
    )
