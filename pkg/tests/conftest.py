import dataclasses

import pytest

from analogist import corpus_path
from analogist.aie import get_scenario, train_policy
from analogist.kr import DEFAULT_CONVENTIONS, load_event_names, parse_file

CORPUS_STEMS = (
    "gas_station",
    "dark_alley",
    "dog_chase",
    "car_fire",
    "novel_target",
    "cold_fire",
    "slumber",
    "nail_pounding",
    "chopping",
    "solar_system",
    "atom",
    "approach_prior",
    "fire_prior",
    "approach_novel",
)


@pytest.fixture(scope="session")
def conventions():
    return dataclasses.replace(
        DEFAULT_CONVENTIONS,
        event_names=load_event_names(corpus_path("events.txt")),
    )


@pytest.fixture(scope="session")
def corpus(conventions):
    return {
        stem: parse_file(corpus_path(stem + ".mt"), conventions)
        for stem in CORPUS_STEMS
    }


@pytest.fixture(scope="session")
def policies():
    """Each scenario trains once per test session."""
    cache = {}

    def get(name, seed=7):
        key = (name, seed)
        if key not in cache:
            cache[key] = train_policy(get_scenario(name), seed)
        return cache[key]

    return get
