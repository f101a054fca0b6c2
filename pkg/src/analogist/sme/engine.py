"""Whole-pipeline matching: local matches, merge, scoring, inferences."""

from __future__ import annotations

from ..kr.model import Experience
from .infer import candidate_inferences
from .local import local_matches
from .merge import merge_gmaps
from .model import DEFAULT_PARAMS, EMPTY_GMAP, Gmap, MatchParams
from .score import score_gmap


def _rank_key(gmap: Gmap):
    pairs = tuple((m.base.id, m.target.id) for m in gmap.expression_matches())
    return (-gmap.score, gmap.skolem_count(), gmap.entity_bindings, pairs)


def match(
    base: Experience,
    target: Experience,
    params: MatchParams = DEFAULT_PARAMS,
) -> tuple[Gmap, ...]:
    """All maximal analogies between base and target, best first. Ties on
    score fall to fewer skolems, then entity bindings, then match pairs."""
    matches = local_matches(base, target, params)
    unions = merge_gmaps(base, target, params, matches)
    gmaps = []
    for union in unions:
        score = score_gmap(union, params)
        hypotheses, _ = candidate_inferences(base, target, union, score, params)
        bindings = tuple(
            sorted(
                (m.base.name, m.target.name)
                for m in union
                if not m.is_expression
            )
        )
        gmaps.append(Gmap(union, bindings, score, hypotheses))
    gmaps.sort(key=_rank_key)
    return tuple(gmaps)


def best_analogy(
    base: Experience,
    target: Experience,
    params: MatchParams = DEFAULT_PARAMS,
) -> Gmap:
    """The top-ranked analogy, or the empty one when nothing matches."""
    gmaps = match(base, target, params)
    return gmaps[0] if gmaps else EMPTY_GMAP
