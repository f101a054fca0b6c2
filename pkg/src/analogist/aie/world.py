"""Grid world mechanics.

A scenario is declarative data: objects on a small grid, background facts,
transform rules, hazards, and goal conditions. The agent addresses actions
at objects (travel to one, pick one up, drop one, transform one with a
tool); geometry only matters through colocation and hazard radii. Transform
legality is structural (the object and tool must be at hand); whether a
rule actually fires depends on the state, so a legal transform can be a
no-op the agent learns to avoid.
"""

from __future__ import annotations

import dataclasses
import json
import random
from dataclasses import dataclass, field
from pathlib import Path

Atom = tuple[str, ...]
Cell = tuple[int, int]

NO_TOOL = ""


class IllegalActionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ObjectSpec:
    name: str
    portable: bool = False


@dataclass(frozen=True)
class TransformRule:
    """transform(obj, tool) adds `adds` and pays `reward`, provided all of
    `requires` hold and at least one added atom is still missing."""

    obj: str
    tool: str
    adds: tuple[Atom, ...]
    requires: tuple[Atom, ...] = ()
    reward: float = 0.0


@dataclass(frozen=True)
class InjuryHazard:
    """Carrying `item` hurts with probability `prob` at each step's end."""

    item: str
    prob: float
    reward: float
    marks: Atom


@dataclass(frozen=True)
class WatcherHazard:
    """`watcher` consumes `victim` one step after it sees the agent pick up
    `item` within `radius` (Manhattan), unless already dispatched."""

    watcher: str
    victim: str
    item: str
    radius: int
    reward: float


@dataclass(frozen=True)
class PlacementRule:
    """Layout shaping: colocate_prob puts a at b's cell with probability
    prob; min_distance re-rolls a until it is at least `distance` from b."""

    kind: str  # "colocate_prob" | "min_distance"
    a: str
    b: str
    prob: float = 0.0
    distance: int = 0


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    objects: tuple[ObjectSpec, ...]
    properties: tuple[str, ...]
    statics: tuple[Atom, ...]
    transforms: tuple[TransformRule, ...]
    goals: tuple[Atom, ...]
    grid: int = 6
    goal_reward: float = 10.0
    weather: bool = False
    injury: InjuryHazard | None = None
    watcher: WatcherHazard | None = None
    placements: tuple[PlacementRule, ...] = ()

    def object_names(self) -> tuple[str, ...]:
        return tuple(o.name for o in self.objects)

    def spec_of(self, name: str) -> ObjectSpec:
        for o in self.objects:
            if o.name == name:
                return o
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        out = dataclasses.asdict(self)
        out["objects"] = [dataclasses.asdict(o) for o in self.objects]
        return out


def scenario_from_json_dict(data: dict) -> ScenarioConfig:
    def atoms(rows):
        return tuple(tuple(r) for r in rows)

    injury = data.get("injury")
    watcher = data.get("watcher")
    return ScenarioConfig(
        name=data["name"],
        objects=tuple(ObjectSpec(**o) for o in data["objects"]),
        properties=tuple(data["properties"]),
        statics=atoms(data["statics"]),
        transforms=tuple(
            TransformRule(
                obj=t["obj"],
                tool=t["tool"],
                adds=atoms(t["adds"]),
                requires=atoms(t.get("requires", ())),
                reward=t.get("reward", 0.0),
            )
            for t in data["transforms"]
        ),
        goals=atoms(data["goals"]),
        grid=data.get("grid", 6),
        goal_reward=data.get("goal_reward", 10.0),
        weather=data.get("weather", False),
        injury=InjuryHazard(
            item=injury["item"],
            prob=injury["prob"],
            reward=injury["reward"],
            marks=tuple(injury["marks"]),
        )
        if injury
        else None,
        watcher=WatcherHazard(**watcher) if watcher else None,
        placements=tuple(PlacementRule(**p) for p in data.get("placements", ())),
    )


def load_scenario(path: str | Path) -> ScenarioConfig:
    return scenario_from_json_dict(json.loads(Path(path).read_text(encoding="utf-8")))


@dataclass(frozen=True, order=True)
class Action:
    kind: str  # travel | pickup | drop | transform
    obj: str
    tool: str = NO_TOOL

    def key(self) -> tuple[str, str, str]:
        return (self.kind, self.obj, self.tool)

    def render(self) -> str:
        if self.kind == "transform" and self.tool:
            return f"transform({self.obj}, {self.tool})"
        return f"{self.kind}({self.obj})"


@dataclass
class WorldState:
    """Mutable only inside step(); treat instances as snapshots."""

    agent: Cell
    locations: dict[str, Cell]
    held: set[str]
    props: set[Atom]
    weather: str | None = None  # "good" | "bad" | None

    def copy(self) -> "WorldState":
        return WorldState(
            self.agent,
            dict(self.locations),
            set(self.held),
            set(self.props),
            self.weather,
        )


def manhattan(a: Cell, b: Cell) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def weather_atom(state: WorldState) -> Atom | None:
    if state.weather is None:
        return None
    return ("goodWeather" if state.weather == "good" else "badWeather", "sky")


def _tool_at_hand(state: WorldState, tool: str) -> bool:
    if tool == NO_TOOL:
        return True
    return tool in state.held or state.locations.get(tool) == state.agent


def _obj_at_hand(state: WorldState, obj: str) -> bool:
    if obj == "agent":
        return True
    return state.locations.get(obj) == state.agent


def legal_actions(config: ScenarioConfig, state: WorldState) -> list[Action]:
    acts: list[Action] = []
    for spec in config.objects:
        loc = state.locations[spec.name]
        if loc != state.agent:
            acts.append(Action("travel", spec.name))
        elif spec.portable and spec.name not in state.held:
            acts.append(Action("pickup", spec.name))
        if spec.name in state.held:
            acts.append(Action("drop", spec.name))
    seen_pairs = set()
    for rule in config.transforms:
        pair = (rule.obj, rule.tool)
        if pair in seen_pairs:
            continue
        seen_pairs.add(pair)
        if _obj_at_hand(state, rule.obj) and _tool_at_hand(state, rule.tool):
            acts.append(Action("transform", rule.obj, rule.tool))
    acts.sort()
    return acts


def _check_legal(config: ScenarioConfig, state: WorldState, action: Action) -> None:
    if action.kind == "travel":
        if action.obj not in state.locations:
            raise IllegalActionError(f"travel: unknown object {action.obj!r}")
        if state.locations[action.obj] == state.agent:
            raise IllegalActionError(f"travel: already at {action.obj!r}")
    elif action.kind == "pickup":
        if action.obj not in state.locations:
            raise IllegalActionError(f"pickup: unknown object {action.obj!r}")
        if not config.spec_of(action.obj).portable:
            raise IllegalActionError(f"pickup: {action.obj!r} is not portable")
        if state.locations[action.obj] != state.agent:
            raise IllegalActionError(f"pickup: {action.obj!r} is not colocated")
        if action.obj in state.held:
            raise IllegalActionError(f"pickup: already holding {action.obj!r}")
    elif action.kind == "drop":
        if action.obj not in state.held:
            raise IllegalActionError(f"drop: not holding {action.obj!r}")
    elif action.kind == "transform":
        if not _obj_at_hand(state, action.obj):
            raise IllegalActionError(f"transform: {action.obj!r} is not colocated")
        if not _tool_at_hand(state, action.tool):
            raise IllegalActionError(
                f"transform: tool {action.tool!r} is neither colocated nor held"
            )
    else:
        raise IllegalActionError(f"unknown action kind {action.kind!r}")


def step(
    config: ScenarioConfig,
    state: WorldState,
    action: Action,
    rng: random.Random,
) -> tuple[WorldState, float, bool]:
    """Apply one action. Returns (successor, reward, done)."""
    _check_legal(config, state, action)
    prev_props = set(state.props)
    ns = state.copy()
    reward = 0.0
    done = False

    if action.kind == "travel":
        ns.agent = ns.locations[action.obj]
        for name in ns.held:
            ns.locations[name] = ns.agent
    elif action.kind == "pickup":
        ns.held.add(action.obj)
    elif action.kind == "drop":
        ns.held.discard(action.obj)
    elif action.kind == "transform":
        effective = ns.props | ({weather_atom(ns)} if ns.weather else set())
        for rule in config.transforms:
            if rule.obj != action.obj or rule.tool != action.tool:
                continue
            if not all(req in effective for req in rule.requires):
                continue
            if all(a in ns.props for a in rule.adds):
                continue
            ns.props.update(rule.adds)
            reward += rule.reward
            break

    watcher = config.watcher
    if (
        watcher is not None
        and action.kind == "pickup"
        and action.obj == watcher.item
        and ("dispatched", watcher.watcher) not in ns.props
        and manhattan(ns.agent, ns.locations[watcher.watcher]) <= watcher.radius
    ):
        ns.props.add(("alerted", watcher.watcher))

    injury = config.injury
    if injury is not None and injury.item in ns.held and rng.random() < injury.prob:
        ns.props.add(injury.marks)
        reward += injury.reward

    if watcher is not None and ("alerted", watcher.watcher) in prev_props:
        if ("devoured", watcher.victim) not in ns.props:
            ns.props.add(("devoured", watcher.victim))
            reward += watcher.reward
            done = True

    if not done and any(goal in ns.props for goal in config.goals):
        reward += config.goal_reward
        done = True

    return ns, reward, done


def goal_reached(config: ScenarioConfig, state: WorldState) -> bool:
    return any(goal in state.props for goal in config.goals)


def snapshot(
    config: ScenarioConfig, state: WorldState, include_pairs: bool = True
) -> frozenset[Atom]:
    """The observable ground atoms of a state: agent colocations, held
    objects, dynamic properties, and the weather. With include_pairs,
    object-object colocations too."""
    atoms: set[Atom] = set(state.props)
    names = config.object_names()
    for name in names:
        if state.locations[name] == state.agent:
            atoms.add(("colocated", name, "agent"))
        if name in state.held:
            atoms.add(("holds", name, "agent"))
    if include_pairs:
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                if state.locations[a] == state.locations[b]:
                    atoms.add(("colocated",) + tuple(sorted((a, b))))
    wa = weather_atom(state)
    if wa is not None:
        atoms.add(wa)
    return frozenset(atoms)


def abstract_state(config: ScenarioConfig, state: WorldState) -> tuple[Atom, ...]:
    """Canonical hashable key for learning: the pairless snapshot, sorted."""
    return tuple(sorted(snapshot(config, state, include_pairs=False)))


def sample_layout(config: ScenarioConfig, rng: random.Random) -> WorldState:
    """A fresh episode start: agent and objects on distinct cells, then
    placement rules, then weather."""
    n = config.grid * config.grid

    def cell(i: int) -> Cell:
        return (i % config.grid, i // config.grid)

    picks = rng.sample(range(n), 1 + len(config.objects))
    agent = cell(picks[0])
    locations = {
        spec.name: cell(i) for spec, i in zip(config.objects, picks[1:])
    }
    for rule in config.placements:
        if rule.kind == "colocate_prob":
            if rng.random() < rule.prob:
                locations[rule.a] = locations[rule.b]
        elif rule.kind == "min_distance":
            taken = {agent} | {
                loc for name, loc in locations.items() if name != rule.a
            }
            while (
                manhattan(locations[rule.a], locations[rule.b]) < rule.distance
                or locations[rule.a] in taken
            ):
                locations[rule.a] = cell(rng.randrange(n))
        else:
            raise ValueError(f"unknown placement rule kind {rule.kind!r}")
    weather = None
    if config.weather:
        weather = "good" if rng.random() < 0.5 else "bad"
    return WorldState(agent, locations, set(), set(), weather)
