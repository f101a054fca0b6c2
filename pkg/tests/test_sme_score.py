"""Structural scoring: base weight, trickle-down, and the preference for
depth over breadth."""

import pytest

from analogist.kr import parse_experience
from analogist.sme.local import local_matches
from analogist.sme.merge import merge_gmaps
from analogist.sme.model import MatchParams
from analogist.sme.score import score_gmap

CHAIN_TEXT = "(causes (causes (warmAff a) (restDes a)) (doneTf a))"


def _chain_matches():
    base = parse_experience(CHAIN_TEXT, experience_id="b")
    target = parse_experience(CHAIN_TEXT, experience_id="t")
    aligned = {}
    for m in local_matches(base, target):
        if m.is_expression and m.base.id == m.target.id:
            aligned[m.base.functor, m.base.id] = m
    outer = max(
        (m for (f, _), m in aligned.items() if f == "causes"),
        key=lambda m: m.base.id,
    )
    inner = min(
        (m for (f, _), m in aligned.items() if f == "causes"),
        key=lambda m: m.base.id,
    )
    leaf = next(m for (f, _), m in aligned.items() if f == "warmAff")
    return outer, inner, leaf


def test_isolated_match_earns_base_weight():
    outer, inner, leaf = _chain_matches()
    assert score_gmap({outer}) == pytest.approx(0.1)
    # without its parent in the set, the inner node is just as isolated
    assert score_gmap({inner}) == pytest.approx(0.1)


def test_trickle_down_chain():
    outer, inner, leaf = _chain_matches()
    assert score_gmap({outer, inner}) == pytest.approx(0.1 + 0.18)
    assert score_gmap({outer, inner, leaf}) == pytest.approx(0.1 + 0.18 + 0.244)


def test_depth_beats_breadth():
    outer, inner, leaf = _chain_matches()
    chained = score_gmap({outer, inner, leaf})

    flat_base = parse_experience(
        "(warmAff x)\n(restDes y)\n(doneTf z)", experience_id="fb"
    )
    flat_target = parse_experience(
        "(warmAff p)\n(restDes q)\n(doneTf r)", experience_id="ft"
    )
    (group,) = merge_gmaps(flat_base, flat_target)
    assert sum(1 for m in group if m.is_expression) == 3
    flat = score_gmap(group)
    assert flat == pytest.approx(0.3)
    assert chained > flat


def test_entity_matches_contribute_nothing():
    base = parse_experience("(near a b)", experience_id="b")
    target = parse_experience("(near p q)", experience_id="t")
    (group,) = merge_gmaps(base, target)
    entity_only = {m for m in group if not m.is_expression}
    assert len(entity_only) == 2
    assert score_gmap(entity_only) == 0.0
    assert score_gmap(group) == pytest.approx(0.1)


def test_custom_params_change_the_arithmetic():
    outer, inner, leaf = _chain_matches()
    params = MatchParams(base_weight=1.0, trickle_down=0.5)
    got = score_gmap({outer, inner, leaf}, params)
    assert got == pytest.approx(1.0 + 1.5 + 1.75)


def test_score_is_reproducible():
    outer, inner, leaf = _chain_matches()
    assert score_gmap({outer, inner, leaf}) == score_gmap({leaf, outer, inner})


def test_corpus_pair_scores(corpus):
    # engine-level frozen scores live in the engine tests; here just check
    # the best merge over a real pair scores a plain sum of base weights
    # when nothing nests
    groups = merge_gmaps(corpus["cold_fire"], corpus["slumber"])
    best = max(score_gmap(g) for g in groups)
    assert best == pytest.approx(0.5)
    # and that nesting shows up for the pair that has deep shared structure
    groups = merge_gmaps(corpus["nail_pounding"], corpus["chopping"])
    best = max(score_gmap(g) for g in groups)
    assert best == pytest.approx(0.56)
