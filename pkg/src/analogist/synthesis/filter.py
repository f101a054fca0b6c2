"""Hypothesis filtering.

Events are observations; an analogy may explain behavior that was seen but
must not claim behavior that was not. A hypothesis is therefore dropped
when it applies an event predicate (at any depth) to arguments the target
never observed. Hypotheses that restate an earlier one up to skolem
renaming are dropped as duplicates.
"""

from __future__ import annotations

import dataclasses

from ..kr.model import Experience, Expression
from ..sme.model import Hypothesis

KEPT = "kept"
DISCARDED_EVENT = "discarded-unobserved-event"
DISCARDED_DUPLICATE = "discarded-duplicate"


def _unobserved_event(
    expr: Expression, target_shapes: set[str], events: frozenset[str]
) -> Expression | None:
    """The first event application under expr that is not a target fact."""
    for node in expr.walk():
        if node.functor in events and node.render() not in target_shapes:
            return node
    return None


def skolem_canonical(expr: Expression) -> str:
    """Render with skolem names replaced by their order of first occurrence,
    so renamed variants collide."""
    numbering: dict[str, str] = {}

    def go(term) -> str:
        if isinstance(term, Expression):
            return "(" + " ".join([term.functor] + [go(a) for a in term.args]) + ")"
        if term.is_skolem:
            if term.name not in numbering:
                numbering[term.name] = f"?sk{len(numbering) + 1}"
            return numbering[term.name]
        return term.name

    return go(expr)


def filter_hypotheses(
    hypotheses: tuple[Hypothesis, ...],
    target: Experience,
    events: frozenset[str],
) -> list[Hypothesis]:
    """Assign each hypothesis a final status, in order."""
    target_shapes = {f.render() for f in target.facts}
    seen_canonical: set[str] = set()
    out: list[Hypothesis] = []
    for h in hypotheses:
        bad = _unobserved_event(h.expression, target_shapes, events)
        if bad is not None:
            out.append(dataclasses.replace(h, status=DISCARDED_EVENT))
            continue
        canonical = skolem_canonical(h.expression)
        if canonical in seen_canonical:
            out.append(dataclasses.replace(h, status=DISCARDED_DUPLICATE))
            continue
        seen_canonical.add(canonical)
        out.append(dataclasses.replace(h, status=KEPT))
    return out
