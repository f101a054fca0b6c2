"""Observed behavior: policy rollouts with per-step state snapshots.

Rollouts keep a little exploration noise by default. That is deliberate:
the spurious detours it produces are what make chronology clustering
meaningful on observed behavior.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .learn import Policy
from .world import (
    Action,
    Atom,
    ScenarioConfig,
    goal_reached,
    sample_layout,
    snapshot,
    step,
)

DEFAULT_ROLLOUT_EPSILON = 0.12


@dataclass(frozen=True)
class ObservationTrace:
    scenario: str
    snapshots: tuple[frozenset[Atom], ...]  # initial state first
    actions: tuple[Action, ...]
    rewards: tuple[float, ...]
    goal_reached: bool
    truncated: bool
    seed: int | None = None

    def __len__(self) -> int:
        return len(self.actions)


def rollout(
    config: ScenarioConfig,
    policy: Policy,
    seed: int,
    epsilon: float = DEFAULT_ROLLOUT_EPSILON,
    step_cap: int = 40,
) -> ObservationTrace:
    """One episode under the policy. A cap of 0 yields a single-snapshot
    trace flagged as truncated."""
    rng = random.Random(seed)
    state = sample_layout(config, rng)
    snaps = [snapshot(config, state)]
    actions: list[Action] = []
    rewards: list[float] = []
    done = False
    for _ in range(step_cap):
        action = policy.choose(config, state, rng, epsilon)
        state, reward, done = step(config, state, action, rng)
        actions.append(action)
        rewards.append(reward)
        snaps.append(snapshot(config, state))
        if done:
            break
    reached = goal_reached(config, state)
    return ObservationTrace(
        scenario=config.name,
        snapshots=tuple(snaps),
        actions=tuple(actions),
        rewards=tuple(rewards),
        goal_reached=reached,
        truncated=not done,
        seed=seed,
    )


def rollouts(
    config: ScenarioConfig,
    policy: Policy,
    count: int,
    base_seed: int,
    epsilon: float = DEFAULT_ROLLOUT_EPSILON,
    step_cap: int = 40,
) -> list[ObservationTrace]:
    """count independent rollouts seeded base_seed, base_seed+1, ..."""
    return [
        rollout(config, policy, base_seed + i, epsilon, step_cap)
        for i in range(count)
    ]
