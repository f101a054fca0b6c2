"""Release gates. Each test checks one shipped claim end to end and prints
a single PASS/FAIL line, so running this module reads as a checklist.

Run with -s to see every line; without it the lines surface on failure.
"""

import contextlib
import io
import itertools
import json
import random
import time

import pytest

import test_properties as props
from analogist import corpus_path
from analogist.aie import (
    BEHAVIORS,
    confusion_matrix,
    evaluate_policy,
    extract_chronology,
    get_scenario,
    representatives,
    rollout,
    rollouts,
    train_policy,
)
from analogist.cli.main import main
from analogist.kr import DEFAULT_CONVENTIONS, parse_file
from analogist.sme import best_analogy
from analogist.synthesis import load_manifest, order_bases, synthesize
from gen import random_pair
from oracle_sme import assert_merge_agrees

MANIFEST = corpus_path("gas_station_manifest.json")

EXPECTED_ORDER = ["gas_station", "dark_alley", "dog_chase", "car_fire"]

RATIONALE_GAS = (
    "(why (and (travelTo gas_station customer) (pump gas customer))"
    " (and (want gas customer) (sells gas gas_station)))"
)
DANGER_FACT = "(dangerAff person)"
DANGER_RULE = (
    "(implies (and (stranger person) (not_social_area gas_station))"
    " (dangerAff person))"
)
RATIONALE_FLEE = (
    "(why (flee customer) (and (dangerAff person) (safeDesire customer)))"
)
SKOLEM_RATIONALE = (
    "(why (flee customer) (and (dangerAff skolem_car_cfMt)"
    " (safeDesire customer)))"
)


def verdict(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line)
    assert ok, line


def _library():
    manifest = load_manifest(MANIFEST)
    library, target = manifest.load()
    return manifest, library, target


@pytest.fixture(scope="module")
def gas_cli_run(tmp_path_factory):
    """One timed run of the synthesize command over the shipped manifest."""
    out = tmp_path_factory.mktemp("acceptance_synth")
    started = time.perf_counter()
    with contextlib.redirect_stdout(io.StringIO()):
        code = main(["synthesize", str(MANIFEST), "--out", str(out)])
    elapsed = time.perf_counter() - started
    assert code == 0
    payload = json.loads((out / "synthesis_result.json").read_text())
    final = parse_file(out / "final_target.mt", DEFAULT_CONVENTIONS)
    return payload, final, elapsed


def test_criterion_1_base_ordering():
    _, library, target = _library()
    started = time.perf_counter()
    ordered, _ = order_bases(list(library), target)
    elapsed = time.perf_counter() - started
    ids = [b.id for b in ordered]
    verdict(
        1,
        ids == EXPECTED_ORDER and elapsed < 1.0,
        f"ordering {ids}, {elapsed:.3f}s",
    )


def test_criterion_2_final_rationales(gas_cli_run):
    payload, final, elapsed = gas_cli_run
    renders = {f.render() for f in final.facts}
    wanted = (RATIONALE_GAS, DANGER_FACT, DANGER_RULE, RATIONALE_FLEE)
    missing = [r for r in wanted if r not in renders]
    skolem_free = not any(f.contains_skolem() for f in final.facts)
    verdict(
        2,
        not missing and skolem_free and payload["passes"] <= 2 and elapsed < 5.0,
        f"missing {missing or 'none'}, skolem-free {skolem_free},"
        f" passes {payload['passes']}, {elapsed:.2f}s",
    )


def test_criterion_3_hypothesis_counts(gas_cli_run):
    payload, _, _ = gas_cli_run
    first_pass = {
        r["base"]: r for r in payload["iterations"] if r["pass"] == 1
    }
    gas_kept = first_pass["gas_station"]["kept"]
    alley = first_pass["dark_alley"]
    alley_discarded = alley["discarded_event"] + alley["discarded_duplicate"]
    chase_kept = first_pass["dog_chase"]["kept"]
    fire_kept = first_pass["car_fire"]["kept"]
    checks = (
        abs(gas_kept - 4) <= 2,
        abs(alley["generated"] - 7) <= 2,
        abs(alley_discarded - 3) <= 2,
        abs(chase_kept - 5) <= 2,
        abs(fire_kept - 0) <= 2,
        payload["ordering"][-1] == "car_fire",
    )
    verdict(
        3,
        all(checks),
        f"gas kept {gas_kept}, alley generated {alley['generated']}"
        f" discarded {alley_discarded}, chase kept {chase_kept},"
        f" fire kept {fire_kept} (last)",
    )


def test_criterion_4_skolem_path():
    _, library, target = _library()
    gmap = best_analogy(library.by_id("car_fire"), target)
    renders = {h.expression.render() for h in gmap.inferences}
    skolems = {
        e.name
        for h in gmap.inferences
        for e in h.expression.entities()
        if e.is_skolem
    }
    verdict(
        4,
        SKOLEM_RATIONALE in renders and "skolem_car_cfMt" in skolems,
        f"skolems {sorted(skolems)}",
    )


def test_criterion_5_order_invariance():
    manifest, library, target = _library()
    events = manifest.event_names()
    started = time.perf_counter()
    outcomes = []
    for perm in itertools.permutations(library.experiences):
        result = synthesize(
            list(perm),
            target,
            heuristic=False,
            max_passes=manifest.max_passes,
            params=manifest.params,
            events=events,
        )
        renders = frozenset(f.render() for f in result.final_target.facts)
        outcomes.append((result.skolem_introduced, renders))
    elapsed = time.perf_counter() - started
    clean = [r for skolem, r in outcomes if not skolem]
    verdict(
        5,
        bool(clean) and len(set(clean)) == 1 and elapsed < 120.0,
        f"{len(outcomes)} orderings, {len(clean)} skolem-free,"
        f" {len(set(clean))} distinct outcome(s), {elapsed:.1f}s",
    )


def test_criterion_6_classic_analogies(conventions):
    cold = parse_file(corpus_path("cold_fire.mt"), conventions)
    slumber = parse_file(corpus_path("slumber.mt"), conventions)
    nail = parse_file(corpus_path("nail_pounding.mt"), conventions)
    chopping = parse_file(corpus_path("chopping.mt"), conventions)

    g1 = best_analogy(cold, slumber)
    pairs1 = {
        (m.base.functor, m.target.functor) for m in g1.expression_matches()
    }
    slumber_ok = (
        g1.bindings.get("fire_bfMt") == "bed_slMt"
        and ("coldDes", "tiredDes") in pairs1
        and ("comfortableTf", "asleepTf") in pairs1
    )

    g2 = best_analogy(nail, chopping)
    pairs2 = {
        (m.base.functor, m.target.functor) for m in g2.expression_matches()
    }
    chopping_ok = (
        g2.bindings.get("hammer_npMt") == "axe_chMt"
        and g2.bindings.get("rock_npMt") == "knife_chMt"
        and ("advantage", "advantage") in pairs2
    )
    verdict(
        6,
        slumber_ok and chopping_ok,
        f"slumber bindings ok {slumber_ok}, chopping bindings ok {chopping_ok}",
    )


def test_criterion_7_merge_oracle():
    agreements = 0
    for seed in range(50):
        rng = random.Random(31_000 + seed)
        base, target = random_pair(rng, max_roots=rng.randint(2, 12))
        assert_merge_agrees(base, target)
        agreements += 1
    verdict(7, agreements == 50, f"{agreements}/50 pairs agree")


def test_criterion_8_simulator_and_chronologies():
    started = time.perf_counter()
    policies = {}
    rates = {}
    for name in BEHAVIORS:
        config = get_scenario(name)
        policies[name] = train_policy(config, 7)
        rates[name] = evaluate_policy(config, policies[name], 100, 8)

    slumber_rolls = rollouts(get_scenario("slumber"), policies["slumber"], 10, 7)
    slumber_reps = representatives(
        [extract_chronology(t) for t in slumber_rolls], 0.3
    )

    reps = {}
    evals = {}
    for name in BEHAVIORS:
        config = get_scenario(name)
        rolls = rollouts(config, policies[name], 10, 7)
        reps[name] = representatives([extract_chronology(t) for t in rolls], 0.3)
        evals[name] = [
            rollout(config, policies[name], 5000 + i, epsilon=0.0)
            for i in range(2)
        ]
    matrix = confusion_matrix(reps, evals, BEHAVIORS)
    diagonal_rows = sum(
        1 for i, row in enumerate(matrix) if row[i] == min(row)
    )
    elapsed = time.perf_counter() - started

    verdict(
        8,
        all(rate >= 0.9 for rate in rates.values())
        and len(slumber_reps) == 3
        and diagonal_rows >= 4
        and elapsed < 300.0,
        f"goal rates {sorted(rates.values())}, {len(slumber_reps)} slumber"
        f" representatives, diagonal minimum in {diagonal_rows}/5 rows,"
        f" {elapsed:.1f}s",
    )


def test_criterion_9_property_suite_volume():
    suites = (
        props.test_parser_round_trip,
        props.test_gmaps_are_one_to_one_and_support_closed,
        props.test_single_base_synthesis_only_grows,
        props.test_distance_axioms,
    )
    sizes = []
    for fn in suites:
        settings = getattr(fn, "_hypothesis_internal_use_settings", None)
        sizes.append(settings.max_examples if settings else 0)
    verdict(
        9,
        props.CASES >= 1000 and all(size >= 1000 for size in sizes),
        f"case counts {sizes}",
    )
