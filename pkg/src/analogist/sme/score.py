"""Structural evaluation of a match set.

Each expression match earns a base weight plus a fraction of the best
weight among its matched parents, so matches buried under matched structure
are worth more than isolated ones. The total is accumulated in (base id,
target id) order to keep the float result identical across runs.
"""

from __future__ import annotations

from ..kr.model import Expression
from .model import DEFAULT_PARAMS, MatchHypothesis, MatchParams


def score_gmap(
    matches: frozenset[MatchHypothesis] | set[MatchHypothesis],
    params: MatchParams = DEFAULT_PARAMS,
) -> float:
    expr_matches = sorted(
        (m for m in matches if m.is_expression),
        key=lambda m: (m.base.id, m.target.id),
    )
    parents: dict[MatchHypothesis, list[MatchHypothesis]] = {m: [] for m in expr_matches}
    for child in expr_matches:
        for cand in expr_matches:
            if cand is child:
                continue
            for barg, targ in zip(cand.base.args, cand.target.args):
                if isinstance(barg, Expression) and isinstance(targ, Expression):
                    if barg.id == child.base.id and targ.id == child.target.id:
                        parents[child].append(cand)
                        break

    weights: dict[MatchHypothesis, float] = {}

    def weight(m: MatchHypothesis) -> float:
        cached = weights.get(m)
        if cached is not None:
            return cached
        best_parent = 0.0
        for p in parents[m]:
            w = weight(p)
            if w > best_parent:
                best_parent = w
        w = params.base_weight + params.trickle_down * best_parent
        weights[m] = w
        return w

    total = 0.0
    for m in expr_matches:
        total += weight(m)
    return total
