"""Chronologies: what became true, in what order.

A chronology is the ordered list of atoms that flipped from false to true
across a trace's snapshots (sorted within a step for determinism). The
distance from a chronology to an observed behavior is one minus the
fraction of its events realizable as an ordered subsequence of the
behavior's own transitions, so 0 means fully consistent and 1 means
nothing lines up.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .rollout import ObservationTrace
from .world import Atom


@dataclass(frozen=True)
class Chronology:
    scenario: str
    events: tuple[Atom, ...]
    support: int = 1

    def __len__(self) -> int:
        return len(self.events)


def extract_chronology(trace: ObservationTrace) -> Chronology:
    events: list[Atom] = []
    for prev, cur in zip(trace.snapshots, trace.snapshots[1:]):
        events.extend(sorted(cur - prev))
    return Chronology(trace.scenario, tuple(events))


def _lcs(a: tuple[Atom, ...], b: tuple[Atom, ...]) -> int:
    if not a or not b:
        return 0
    row = [0] * (len(b) + 1)
    for x in a:
        prev_diag = 0
        for j, y in enumerate(b, 1):
            prev_row = row[j]
            if x == y:
                row[j] = prev_diag + 1
            elif row[j - 1] > row[j]:
                row[j] = row[j - 1]
            prev_diag = prev_row
    return row[len(b)]


def distance(c: Chronology, observed: ObservationTrace | Chronology) -> float:
    """1 - (longest ordered subsequence of c realized in the observation's
    transitions) / |c|. An empty chronology is consistent with anything."""
    if not c.events:
        return 0.0
    other = (
        observed
        if isinstance(observed, Chronology)
        else extract_chronology(observed)
    )
    return 1.0 - _lcs(c.events, other.events) / len(c.events)


def symmetric_distance(c1: Chronology, c2: Chronology) -> float:
    return max(distance(c1, c2), distance(c2, c1))


def representatives(
    chronologies: list[Chronology], threshold: float = 0.3
) -> list[Chronology]:
    """Greedy clustering: walk chronologies by descending support (event
    order breaks ties), absorbing each into the first representative within
    the threshold, else opening a new cluster. Representatives carry the
    support of everything they absorbed."""
    if not chronologies:
        raise ValueError("no chronologies to cluster")
    groups: dict[tuple[Atom, ...], Chronology] = {}
    for c in chronologies:
        prior = groups.get(c.events)
        if prior is None:
            groups[c.events] = c
        else:
            groups[c.events] = dataclasses.replace(
                prior, support=prior.support + c.support
            )
    ordered = sorted(groups.values(), key=lambda c: (-c.support, c.events))
    reps: list[Chronology] = []
    for c in ordered:
        for i, rep in enumerate(reps):
            if symmetric_distance(rep, c) <= threshold:
                reps[i] = dataclasses.replace(
                    rep, support=rep.support + c.support
                )
                break
        else:
            reps.append(c)
    return reps


def confusion_matrix(
    reps: dict[str, list[Chronology]],
    evals: dict[str, list[ObservationTrace]],
    behaviors: tuple[str, ...],
) -> list[list[float]]:
    """entry[i][j]: mean over behavior j's eval traces of the min distance
    over behavior i's representatives."""
    for name in behaviors:
        if not reps.get(name):
            raise ValueError(f"no representatives for behavior {name!r}")
        if not evals.get(name):
            raise ValueError(f"no evaluation traces for behavior {name!r}")
    matrix: list[list[float]] = []
    for row_name in behaviors:
        row = []
        for col_name in behaviors:
            dists = [
                min(distance(rep, trace) for rep in reps[row_name])
                for trace in evals[col_name]
            ]
            row.append(sum(dists) / len(dists))
        matrix.append(row)
    return matrix
