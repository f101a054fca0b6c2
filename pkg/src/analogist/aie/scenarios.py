"""The five built-in behaviors.

Each is a plain ScenarioConfig; nothing here has code of its own. The
statics are the background facts a micro-theory export carries along, so
their predicate spellings follow the corpus suffix conventions (Des, Aff,
Tf endings for desires, affordances, transformations).
"""

from __future__ import annotations

from .world import (
    InjuryHazard,
    ObjectSpec,
    PlacementRule,
    ScenarioConfig,
    TransformRule,
    WatcherHazard,
)

SLUMBER = ScenarioConfig(
    name="slumber",
    objects=(
        ObjectSpec("bed"),
        ObjectSpec("chair"),
        ObjectSpec("table"),
    ),
    properties=("asleepTf",),
    statics=(
        ("tiredDes", "agent"),
        ("flatAff", "bed"),
        ("softAff", "bed"),
    ),
    transforms=(
        TransformRule(obj="agent", tool="bed", adds=(("asleepTf", "agent"),)),
    ),
    goals=(("asleepTf", "agent"),),
)

DINNER = ScenarioConfig(
    name="dinner",
    objects=(
        ObjectSpec("knife", portable=True),
        ObjectSpec("chicken"),
    ),
    properties=("dispatched", "consumed", "satiatedTf"),
    statics=(
        ("hungryDes", "agent"),
        ("edibleAff", "chicken"),
    ),
    transforms=(
        TransformRule(
            obj="chicken",
            tool="knife",
            adds=(("dispatched", "chicken"),),
            reward=2.0,
        ),
        TransformRule(
            obj="chicken",
            tool="",
            requires=(("dispatched", "chicken"),),
            adds=(("consumed", "chicken"), ("satiatedTf", "agent")),
        ),
    ),
    goals=(("satiatedTf", "agent"),),
)

CHOPPING = ScenarioConfig(
    name="chopping",
    objects=(
        ObjectSpec("axe", portable=True),
        ObjectSpec("knife", portable=True),
        ObjectSpec("tree"),
    ),
    properties=("choppedTf", "injured"),
    statics=(
        ("sharpAff", "axe"),
        ("sharpAff", "knife"),
    ),
    transforms=(
        TransformRule(obj="tree", tool="axe", adds=(("choppedTf", "tree"),)),
        TransformRule(obj="tree", tool="knife", adds=(("choppedTf", "tree"),)),
    ),
    goals=(("choppedTf", "tree"),),
    injury=InjuryHazard(
        item="knife", prob=0.2, reward=-4.0, marks=("injured", "agent")
    ),
    placements=(PlacementRule("colocate_prob", a="knife", b="tree", prob=0.3),),
)

COMPETITION = ScenarioConfig(
    name="competition",
    objects=(
        ObjectSpec("knife", portable=True),
        ObjectSpec("chicken"),
        ObjectSpec("animal"),
    ),
    properties=("dispatched", "consumed", "satiatedTf", "alerted", "devoured"),
    statics=(
        ("hungryDes", "agent"),
        ("aggressive", "animal"),
        ("edibleAff", "chicken"),
    ),
    transforms=(
        TransformRule(
            obj="animal",
            tool="knife",
            adds=(("dispatched", "animal"),),
            reward=2.0,
        ),
        TransformRule(
            obj="chicken",
            tool="knife",
            adds=(("dispatched", "chicken"),),
            reward=2.0,
        ),
        TransformRule(
            obj="chicken",
            tool="",
            requires=(("dispatched", "animal"), ("dispatched", "chicken")),
            adds=(("consumed", "chicken"), ("satiatedTf", "agent")),
        ),
    ),
    goals=(("satiatedTf", "agent"),),
    watcher=WatcherHazard(
        watcher="animal", victim="chicken", item="knife", radius=3, reward=-10.0
    ),
    placements=(PlacementRule("min_distance", a="knife", b="animal", distance=4),),
)

WEATHER = ScenarioConfig(
    name="weather",
    objects=(
        ObjectSpec("park"),
        ObjectSpec("shelter"),
    ),
    properties=("relaxedTf", "shelteredTf"),
    statics=(
        ("comfortDes", "agent"),
        ("openAff", "park"),
        ("coveredAff", "shelter"),
    ),
    transforms=(
        TransformRule(
            obj="agent",
            tool="park",
            requires=(("goodWeather", "sky"),),
            adds=(("relaxedTf", "agent"),),
        ),
        TransformRule(
            obj="agent",
            tool="shelter",
            requires=(("badWeather", "sky"),),
            adds=(("shelteredTf", "agent"),),
        ),
    ),
    goals=(("relaxedTf", "agent"), ("shelteredTf", "agent")),
    weather=True,
)

BEHAVIORS = ("slumber", "dinner", "chopping", "competition", "weather")

SCENARIOS = {
    cfg.name: cfg for cfg in (SLUMBER, DINNER, CHOPPING, COMPETITION, WEATHER)
}


def get_scenario(name: str) -> ScenarioConfig:
    try:
        return SCENARIOS[name]
    except KeyError:
        raise KeyError(
            f"unknown scenario {name!r}; expected one of {', '.join(BEHAVIORS)}"
        ) from None
