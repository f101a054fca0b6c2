"""Hypothesis filtering: unobserved events and skolem-renamed duplicates."""

from analogist.kr import parse_experience
from analogist.kr.model import EntitySymbol, Expression
from analogist.sme.model import Hypothesis, Provenance
from analogist.synthesis.filter import (
    DISCARDED_DUPLICATE,
    DISCARDED_EVENT,
    KEPT,
    filter_hypotheses,
    skolem_canonical,
)

PROV = Provenance("some_base", 0, 0.1)


def _hyp(text: str) -> Hypothesis:
    exp = parse_experience(text, experience_id="tmp")
    return Hypothesis(exp.facts[0], PROV)


def _skolem(name: str) -> EntitySymbol:
    return EntitySymbol(name, "skolem")


def test_unobserved_event_discarded():
    target = parse_experience("(travelTo store sue)", experience_id="t")
    events = frozenset({"pay", "travelTo"})
    got = filter_hypotheses((_hyp("(pay cash sue)"),), target, events)
    assert [h.status for h in got] == [DISCARDED_EVENT]


def test_event_discard_looks_at_any_depth():
    target = parse_experience("(travelTo store sue)", experience_id="t")
    events = frozenset({"pay", "travelTo"})
    buried = _hyp("(why (rough sue) (and (shiny sue) (pay cash sue)))")
    got = filter_hypotheses((buried,), target, events)
    assert [h.status for h in got] == [DISCARDED_EVENT]


def test_observed_event_kept():
    target = parse_experience("(travelTo store sue)", experience_id="t")
    events = frozenset({"pay", "travelTo"})
    seen = _hyp("(why (travelTo store sue) (restDes sue))")
    got = filter_hypotheses((seen,), target, events)
    assert [h.status for h in got] == [KEPT]


def test_non_event_predicates_pass():
    target = parse_experience("(rough floor)", experience_id="t")
    got = filter_hypotheses(
        (_hyp("(shiny floor)"),), target, frozenset({"pay"})
    )
    assert [h.status for h in got] == [KEPT]


def test_skolem_canonical_numbers_by_first_occurrence():
    a, b = _skolem("skolem_car"), _skolem("skolem_dog")
    expr = Expression("near", (a, b))
    assert skolem_canonical(expr) == "(near ?sk1 ?sk2)"
    expr = Expression("near", (b, a))
    assert skolem_canonical(expr) == "(near ?sk1 ?sk2)"
    expr = Expression("near", (a, a))
    assert skolem_canonical(expr) == "(near ?sk1 ?sk1)"


def test_skolem_canonical_leaves_plain_names_alone():
    exp = parse_experience("(why (near a b) (rough a))", experience_id="x")
    assert skolem_canonical(exp.facts[0]) == "(why (near a b) (rough a))"


def test_duplicates_modulo_skolem_renaming():
    target = parse_experience("(rough floor)", experience_id="t")
    first = Hypothesis(Expression("shiny", (_skolem("skolem_one"),)), PROV)
    renamed = Hypothesis(Expression("shiny", (_skolem("skolem_two"),)), PROV)
    fresh = Hypothesis(
        Expression("near", (_skolem("skolem_one"), _skolem("skolem_two"))),
        PROV,
    )
    got = filter_hypotheses((first, renamed, fresh), target, frozenset())
    assert [h.status for h in got] == [KEPT, DISCARDED_DUPLICATE, KEPT]


def test_exact_duplicate_without_skolems_discarded():
    target = parse_experience("(rough floor)", experience_id="t")
    one = _hyp("(shiny floor)")
    two = _hyp("(shiny floor)")
    got = filter_hypotheses((one, two), target, frozenset())
    assert [h.status for h in got] == [KEPT, DISCARDED_DUPLICATE]


def test_order_and_payload_preserved():
    target = parse_experience("(travelTo store sue)", experience_id="t")
    events = frozenset({"pay"})
    hyps = (
        _hyp("(shiny sue)"),
        _hyp("(pay cash sue)"),
        _hyp("(shiny sue)"),
        _hyp("(rough sue)"),
    )
    got = filter_hypotheses(hyps, target, events)
    assert [h.status for h in got] == [
        KEPT, DISCARDED_EVENT, DISCARDED_DUPLICATE, KEPT,
    ]
    assert [h.render() for h in got] == [h.render() for h in hyps]
    assert all(h.provenance == PROV for h in got)
    # the inputs themselves are untouched
    assert all(h.status == KEPT for h in hyps)


def test_discarded_event_not_remembered_as_duplicate():
    # an event discard must not shadow a later legitimate keep of the
    # same shape under a different non-event reading... the shape here
    # differs, so both decisions are independent
    target = parse_experience("(travelTo store sue)", experience_id="t")
    events = frozenset({"pay"})
    bad = _hyp("(pay cash sue)")
    got = filter_hypotheses((bad, bad), target, events)
    assert [h.status for h in got] == [DISCARDED_EVENT, DISCARDED_EVENT]
