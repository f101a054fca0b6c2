"""Candidate inference generation.

Whatever base structure is left unmatched but hangs together with matched
structure gets carried over: root facts whose subdag touches a matched item
seed the batch, and further roots join whenever their subdag overlaps what
the batch already covers. Every unmatched (sub)expression inside the
accepted roots becomes one hypothesis, with matched pieces rewritten to
their target counterparts and unmatched entities replaced by skolems.
"""

from __future__ import annotations

from ..kr.model import EntitySymbol, Experience, Expression, SKOLEM_PREFIX
from .model import DEFAULT_PARAMS, Hypothesis, MatchHypothesis, MatchParams, Provenance


def _subdag_items(root: Expression) -> set:
    items: set = set()
    for node in root.walk():
        items.add(("expr", node.id))
        for a in node.args:
            if isinstance(a, EntitySymbol):
                items.add(("entity", a.name))
    return items


class _SkolemNamer:
    def __init__(self, taken: set[str]):
        self.taken = set(taken)
        self.assigned: dict[str, EntitySymbol] = {}

    def skolem_for(self, base_name: str) -> EntitySymbol:
        got = self.assigned.get(base_name)
        if got is not None:
            return got
        name = SKOLEM_PREFIX + base_name
        counter = 1
        while name in self.taken:
            counter += 1
            name = f"{SKOLEM_PREFIX}{base_name}_{counter}"
        self.taken.add(name)
        ent = EntitySymbol(name, "skolem")
        self.assigned[base_name] = ent
        return ent


def candidate_inferences(
    base: Experience,
    target: Experience,
    matches: frozenset[MatchHypothesis] | set[MatchHypothesis],
    gmap_score: float,
    params: MatchParams = DEFAULT_PARAMS,
) -> tuple[tuple[Hypothesis, ...], dict[str, str]]:
    """Hypotheses this match set licenses, plus the skolem renaming it used
    (base entity name to skolem name)."""
    expr_counterpart: dict[int, Expression] = {}
    entity_counterpart: dict[str, EntitySymbol] = {}
    for m in matches:
        if m.is_expression:
            expr_counterpart[m.base.id] = m.target
        else:
            entity_counterpart[m.base.name] = m.target

    matched_items: set = {("expr", i) for i in expr_counterpart}
    matched_items |= {("entity", n) for n in entity_counterpart}

    candidates = [
        (idx, fact, _subdag_items(fact))
        for idx, fact in enumerate(base.facts)
        if fact.id not in expr_counterpart
    ]
    accepted: list[Expression] = []
    covered: set = set(matched_items)
    changed = True
    while changed and candidates:
        changed = False
        remaining = []
        for idx, fact, items in candidates:
            if items & covered:
                accepted.append(fact)
                covered |= items
                changed = True
            else:
                remaining.append((idx, fact, items))
        candidates = remaining
    accepted.sort(key=lambda f: f.id)

    namer = _SkolemNamer({e.name for e in target.entities()})

    def translate(term):
        if isinstance(term, EntitySymbol):
            known = entity_counterpart.get(term.name)
            return known if known is not None else namer.skolem_for(term.name)
        counterpart = expr_counterpart.get(term.id)
        if counterpart is not None:
            return counterpart
        return Expression(term.functor, tuple(translate(a) for a in term.args))

    target_fact_shapes = {f.render() for f in target.facts}
    emitted_shapes: set[str] = set()
    processed_ids: set[int] = set()
    hypotheses: list[Hypothesis] = []
    for root in accepted:
        for node in root.walk():
            if node.id in processed_ids or node.id in expr_counterpart:
                continue
            processed_ids.add(node.id)
            translated = translate(node)
            shape = translated.render()
            if shape in target_fact_shapes or shape in emitted_shapes:
                continue
            emitted_shapes.add(shape)
            hypotheses.append(
                Hypothesis(
                    translated,
                    Provenance(base.id, node.id, gmap_score),
                )
            )

    skolem_map = {k: v.name for k, v in namer.assigned.items()}
    return tuple(hypotheses), skolem_map
