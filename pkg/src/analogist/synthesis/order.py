"""Choosing the order in which past experiences are consulted.

Bases that share more predicate vocabulary with the target, weighted by how
much structure they bring, go first. A base with an entity that no shared
predicate can anchor is pushed to the back regardless of weight: matched
early it would have to invent a skolem individual, while a later pass may
find a counterpart among facts contributed by other bases.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..kr.graph import edge_count
from ..kr.model import EntitySymbol, Experience, FLEXIBLE_CATEGORIES


def _key_of(experience: Experience, functor: str) -> str:
    cat = experience.category_of(functor)
    if cat in FLEXIBLE_CATEGORIES:
        return "category:" + cat.value
    return functor


def match_keys(experience: Experience) -> frozenset[str]:
    """Vocabulary keys that drive matching: flexible-category predicates
    count by category, everything else by name."""
    return frozenset(_key_of(experience, node.functor) for node in experience.nodes)


def predicate_similarity(base: Experience, target: Experience) -> float:
    """Jaccard similarity of the two match-key sets."""
    bkeys, tkeys = match_keys(base), match_keys(target)
    union = bkeys | tkeys
    if not union:
        return 0.0
    return len(bkeys & tkeys) / len(union)


def unanchored_entities(base: Experience, target: Experience) -> tuple[str, ...]:
    """Base entities that appear only in expressions whose match key the
    target does not share. Matching such a base forces skolems."""
    tkeys = match_keys(target)
    anchored: set[str] = set()
    for node in base.nodes:
        if _key_of(base, node.functor) not in tkeys:
            continue
        for a in node.args:
            if isinstance(a, EntitySymbol):
                anchored.add(a.name)
    return tuple(
        sorted(e.name for e in base.entities() if e.name not in anchored)
    )


@dataclass(frozen=True)
class WeightRow:
    base_id: str
    similarity: float
    edges: int
    weight: float
    skolem_risk: int
    unanchored: tuple[str, ...]
    rank: int


def order_bases(
    bases: list[Experience], target: Experience
) -> tuple[list[Experience], tuple[WeightRow, ...]]:
    """Bases sorted for synthesis: anchored before risky, heavier weight
    first, base id as the final tie break. Also returns the ranking table."""
    scored = []
    for b in bases:
        similarity = predicate_similarity(b, target)
        edges = edge_count(b)
        unanchored = unanchored_entities(b, target)
        scored.append((b, similarity, edges, similarity * edges, unanchored))
    scored.sort(key=lambda row: (bool(row[4]), -row[3], row[0].id))
    ordered = [row[0] for row in scored]
    table = tuple(
        WeightRow(
            base_id=b.id,
            similarity=similarity,
            edges=edges,
            weight=weight,
            skolem_risk=int(bool(unanchored)),
            unanchored=unanchored,
            rank=rank,
        )
        for rank, (b, similarity, edges, weight, unanchored) in enumerate(scored, 1)
    )
    return ordered, table
