"""Core knowledge types: entities, predicate declarations, expressions, experiences.

An Experience is an immutable set of ground facts over a small predicate
vocabulary. Structurally identical subexpressions are interned, so a fact
that also occurs as an argument of a rationale is a single node. This is
what makes argument-level correspondence checks and graph views cheap.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Union

SKOLEM_PREFIX = "skolem_"

# Higher-order functors whose arguments may themselves be expressions.
CONNECTIVES = ("and", "implies", "causes", "why", "advantage")


class PredicateCategory(str, enum.Enum):
    RELATION = "relation"
    ATTRIBUTE = "attribute"
    FUNCTION = "function"
    AFFORDANCE = "affordance"
    DESIRE = "desire"
    TRANSFORMATION = "transformation"


#: Categories whose members may cross-match on category rather than name.
FLEXIBLE_CATEGORIES = frozenset(
    {
        PredicateCategory.AFFORDANCE,
        PredicateCategory.DESIRE,
        PredicateCategory.TRANSFORMATION,
        PredicateCategory.FUNCTION,
    }
)


@dataclass(frozen=True)
class EntitySymbol:
    """A named individual. Skolems are conjectured individuals."""

    name: str
    origin: str = "declared"  # "declared" | "skolem"

    @property
    def is_skolem(self) -> bool:
        return self.origin == "skolem"

    def __repr__(self):
        return self.name


def make_entity(name: str) -> EntitySymbol:
    origin = "skolem" if name.startswith(SKOLEM_PREFIX) else "declared"
    return EntitySymbol(name, origin)


@dataclass(frozen=True)
class PredicateDecl:
    name: str
    arity: int
    category: PredicateCategory
    is_event: bool = False


Term = Union[EntitySymbol, "Expression"]


@dataclass(frozen=True)
class Expression:
    """A predicate application. Equality and hashing are structural;
    the id is a per-experience node number and never compares."""

    functor: str
    args: tuple[Term, ...]
    id: int = field(default=-1, compare=False)

    @property
    def arity(self) -> int:
        return len(self.args)

    def walk(self) -> Iterator["Expression"]:
        """Distinct subexpressions, self first, each node once."""
        seen: set[int] = set()
        stack = [self]
        while stack:
            node = stack.pop()
            if id(node) in seen:
                continue
            seen.add(id(node))
            yield node
            for a in reversed(node.args):
                if isinstance(a, Expression):
                    stack.append(a)

    def entities(self) -> Iterator[EntitySymbol]:
        """Distinct entities anywhere under this expression."""
        seen: set[EntitySymbol] = set()
        for node in self.walk():
            for a in node.args:
                if isinstance(a, EntitySymbol) and a not in seen:
                    seen.add(a)
                    yield a

    def contains_skolem(self) -> bool:
        return any(e.is_skolem for e in self.entities())

    def render(self) -> str:
        parts = [self.functor]
        for a in self.args:
            parts.append(a.render() if isinstance(a, Expression) else a.name)
        return "(" + " ".join(parts) + ")"

    def __repr__(self):
        return self.render()


def categorize(name: str, arity: int, decls: dict[str, PredicateDecl]) -> PredicateCategory:
    """Category of a predicate: explicit declaration wins, then the suffix
    conventions for unary predicates, then arity."""
    if name in decls:
        return decls[name].category
    if arity >= 2:
        return PredicateCategory.RELATION
    if name.endswith("Aff"):
        return PredicateCategory.AFFORDANCE
    if name.endswith("Des") or name.endswith("Desire"):
        return PredicateCategory.DESIRE
    if name.endswith("Tf"):
        return PredicateCategory.TRANSFORMATION
    if name.endswith("Fn"):
        return PredicateCategory.FUNCTION
    return PredicateCategory.ATTRIBUTE


class Experience:
    """An identified, immutable collection of root facts.

    Facts keep file order. All structurally identical (sub)expressions share
    one node; node ids are assigned in first-construction order (arguments
    before their parent, facts in order).
    """

    def __init__(
        self,
        experience_id: str,
        facts: tuple[Expression, ...],
        declarations: dict[str, PredicateDecl],
        explicit_decls: tuple[str, ...] = (),
    ):
        self.id = experience_id
        self.facts = facts
        self.declarations = dict(declarations)
        self.explicit_decls = explicit_decls
        self._nodes: dict[Expression, Expression] = {}
        order: list[Expression] = []

        def visit(e: Expression):
            for a in e.args:
                if isinstance(a, Expression):
                    visit(a)
            if e not in self._nodes:
                self._nodes[e] = e
                order.append(e)

        for f in facts:
            visit(f)
        self.nodes: tuple[Expression, ...] = tuple(order)
        self._fact_set = frozenset(facts)

    def __len__(self):
        return len(self.facts)

    def node_of(self, expr: Expression) -> Expression | None:
        """The interned node structurally equal to expr, if any."""
        return self._nodes.get(expr)

    def has_fact(self, expr: Expression) -> bool:
        return expr in self._fact_set

    def entities(self) -> tuple[EntitySymbol, ...]:
        seen: dict[EntitySymbol, None] = {}
        for node in self.nodes:
            for a in node.args:
                if isinstance(a, EntitySymbol):
                    seen.setdefault(a)
        return tuple(seen)

    def decl_for(self, functor: str) -> PredicateDecl | None:
        return self.declarations.get(functor)

    def category_of(self, functor: str) -> PredicateCategory:
        decl = self.declarations.get(functor)
        if decl is not None:
            return decl.category
        raise KeyError(functor)

    def is_event(self, functor: str) -> bool:
        decl = self.declarations.get(functor)
        return bool(decl and decl.is_event)

    def rationale_roots(self) -> tuple[Expression, ...]:
        return tuple(f for f in self.facts if f.functor == "why")

    def structurally_equal(self, other: "Experience") -> bool:
        return self.facts == other.facts and self.declarations == other.declarations

    def with_new_facts(
        self,
        new_facts: list[Expression],
        new_decls: dict[str, PredicateDecl] | None = None,
    ) -> "Experience":
        """A new Experience with the extra facts appended. Declarations are
        merged; an arity clash raises ValueError."""
        decls = dict(self.declarations)
        for name, d in (new_decls or {}).items():
            prior = decls.get(name)
            if prior is None:
                decls[name] = d
            elif prior.arity != d.arity:
                raise ValueError(
                    f"arity conflict for {name}: {prior.arity} vs {d.arity}"
                )
        return build_experience(
            self.id,
            [(f.functor, f.args) for f in self.facts]
            + [(f.functor, f.args) for f in new_facts],
            decls,
            self.explicit_decls,
        )

    def __repr__(self):
        return f"<Experience {self.id}: {len(self.facts)} facts>"


def _rebuild(term: Term, intern) -> Term:
    if isinstance(term, EntitySymbol):
        return term
    args = tuple(_rebuild(a, intern) for a in term.args)
    return intern(term.functor, args)


def build_experience(
    experience_id: str,
    raw_facts: list[tuple[str, tuple]],
    declarations: dict[str, PredicateDecl],
    explicit_decls: tuple[str, ...] = (),
) -> Experience:
    """Construct an Experience from (functor, args) fact shapes, interning
    shared structure and numbering nodes."""
    interned: dict[tuple, Expression] = {}
    counter = [0]

    def intern(functor: str, args: tuple[Term, ...]) -> Expression:
        key = (functor, args)
        node = interned.get(key)
        if node is None:
            node = Expression(functor, args, id=counter[0])
            counter[0] += 1
            interned[key] = node
        return node

    facts: list[Expression] = []
    seen_roots: set[Expression] = set()
    for functor, args in raw_facts:
        rebuilt = tuple(_rebuild(a, intern) for a in args)
        fact = intern(functor, rebuilt)
        if fact not in seen_roots:
            seen_roots.add(fact)
            facts.append(fact)
    return Experience(experience_id, tuple(facts), declarations, explicit_decls)
