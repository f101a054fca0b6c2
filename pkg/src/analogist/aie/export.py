"""Turning observed behavior into micro-theories and JSON.

The micro-theory export writes the scenario's background facts, anything
already true in the first snapshot, and then one fact per chronology event.
Colocation with the agent reads as the travel event that produced it, a
fresh hold as the pickup, and object-object colocation as the stative
`near`; property atoms keep their names, which were chosen to parse into
the right categories.
"""

from __future__ import annotations

import json
from pathlib import Path

from .chronology import Chronology, extract_chronology
from .rollout import ObservationTrace
from .world import Action, Atom, ScenarioConfig


def _fact(atom: Atom, suffix: str) -> str:
    pred, args = atom[0], list(atom[1:])
    if pred == "colocated" and args[-1] == "agent":
        pred = "travelTo"
    elif pred == "holds" and args[-1] == "agent":
        pred = "pickup"
    elif pred == "colocated":
        pred = "near"
    rendered = " ".join(arg + suffix for arg in args)
    return f"({pred} {rendered})"


def chronology_to_micro_theory(
    chron: Chronology,
    config: ScenarioConfig,
    background: frozenset[Atom] = frozenset(),
    suffix: str = "",
) -> str:
    """Micro-theory text for one chronology: statics, background, events."""
    lines = [f"; observed {config.name} behavior"]
    emitted: set[str] = set()

    def emit(atom: Atom) -> None:
        fact = _fact(atom, suffix)
        if fact not in emitted:
            emitted.add(fact)
            lines.append(fact)

    for atom in config.statics:
        emit(atom)
    for atom in sorted(background):
        emit(atom)
    for atom in chron.events:
        emit(atom)
    return "\n".join(lines) + "\n"


def trace_to_micro_theory(
    trace: ObservationTrace, config: ScenarioConfig, suffix: str = ""
) -> str:
    return chronology_to_micro_theory(
        extract_chronology(trace), config, trace.snapshots[0], suffix
    )


def trace_to_json_dict(trace: ObservationTrace) -> dict:
    return {
        "scenario": trace.scenario,
        "seed": trace.seed,
        "goal_reached": trace.goal_reached,
        "truncated": trace.truncated,
        "actions": [list(a.key()) for a in trace.actions],
        "rewards": list(trace.rewards),
        "snapshots": [
            [list(atom) for atom in sorted(snap)] for snap in trace.snapshots
        ],
    }


def trace_from_json_dict(data: dict) -> ObservationTrace:
    return ObservationTrace(
        scenario=data["scenario"],
        snapshots=tuple(
            frozenset(tuple(atom) for atom in snap) for snap in data["snapshots"]
        ),
        actions=tuple(Action(*a) for a in data["actions"]),
        rewards=tuple(data["rewards"]),
        goal_reached=data["goal_reached"],
        truncated=data["truncated"],
        seed=data.get("seed"),
    )


def load_trace(path: str | Path) -> ObservationTrace:
    return trace_from_json_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def chronology_to_json_dict(chron: Chronology) -> dict:
    return {
        "scenario": chron.scenario,
        "support": chron.support,
        "events": [list(atom) for atom in chron.events],
    }


def chronology_from_json_dict(data: dict) -> Chronology:
    return Chronology(
        scenario=data["scenario"],
        events=tuple(tuple(atom) for atom in data["events"]),
        support=data["support"],
    )
