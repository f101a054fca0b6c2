"""Canonical micro-theory serialization.

Deterministic text: explicitly declared predicates first (name order), then
one fact per line in fact order, single spaces throughout. Parsing the
output reproduces a structurally equal Experience.
"""

from __future__ import annotations

from .model import Experience


def canonical_serialize(experience: Experience) -> str:
    lines = []
    for name in sorted(experience.explicit_decls):
        decl = experience.declarations.get(name)
        if decl is None:
            continue
        event = " event" if decl.is_event else ""
        lines.append(f"(declare {decl.name} {decl.arity} {decl.category.value}{event})")
    for fact in experience.facts:
        lines.append(fact.render())
    if not lines:
        return ""
    return "\n".join(lines) + "\n"
