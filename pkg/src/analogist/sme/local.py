"""Local match construction.

A local match pairs one base item with one target item on grounds that do
not look at context: two predicate applications may correspond when their
functors are nominally identical, or when both functors belong to the same
flexible category (affordances, desires, transformations, functions), which
is where cross-domain carryover comes from. Entity matches are induced from
aligned entity argument positions of the expression matches.
"""

from __future__ import annotations

from ..kr.model import EntitySymbol, Experience, Expression, FLEXIBLE_CATEGORIES
from .model import MatchHypothesis, MatchParams, DEFAULT_PARAMS


def local_matches(
    base: Experience,
    target: Experience,
    params: MatchParams = DEFAULT_PARAMS,
) -> list[MatchHypothesis]:
    """All local matches between base and target, expressions first (in
    (base id, target id) order) followed by the induced entity matches
    sorted by name pair."""
    out: list[MatchHypothesis] = []
    for bnode in base.nodes:
        bcat = base.category_of(bnode.functor)
        for tnode in target.nodes:
            if bnode.arity != tnode.arity:
                continue
            tcat = target.category_of(tnode.functor)
            if bcat != tcat:
                continue
            if bnode.functor == tnode.functor:
                kind = bcat.value
            elif bcat in FLEXIBLE_CATEGORIES:
                kind = "flexible-category"
            else:
                continue
            out.append(
                MatchHypothesis(bnode, tnode, kind, params.base_weight)
            )

    entity_pairs: dict[tuple[str, str], MatchHypothesis] = {}
    for m in out:
        for barg, targ in zip(m.base.args, m.target.args):
            if isinstance(barg, EntitySymbol) and isinstance(targ, EntitySymbol):
                key = (barg.name, targ.name)
                if key not in entity_pairs:
                    entity_pairs[key] = MatchHypothesis(barg, targ, "entity", 0.0)
    out.extend(entity_pairs[k] for k in sorted(entity_pairs))
    return out
