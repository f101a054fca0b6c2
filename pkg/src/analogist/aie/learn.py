"""Tabular temporal-difference control over the relational state key.

States are abstracted to the set of observable atoms (colocations with the
agent, held objects, dynamic properties, weather), so a learned table
generalizes over layouts. Exploration and layout sampling draw from one
seeded stream, which makes training bit-for-bit reproducible.
"""

from __future__ import annotations

import json
import random
import warnings
from dataclasses import dataclass
from pathlib import Path

from .world import (
    Action,
    ScenarioConfig,
    abstract_state,
    legal_actions,
    sample_layout,
    step,
)

StateKey = tuple


@dataclass(frozen=True)
class LearnParams:
    episodes: int = 5000
    alpha: float = 0.1
    gamma: float = 0.95
    epsilon: float = 0.1
    step_cap: int = 40
    eval_episodes: int = 100
    warn_goal_rate: float = 0.9

    def to_json_dict(self) -> dict:
        return {
            "episodes": self.episodes,
            "alpha": self.alpha,
            "gamma": self.gamma,
            "epsilon": self.epsilon,
            "step_cap": self.step_cap,
            "eval_episodes": self.eval_episodes,
            "warn_goal_rate": self.warn_goal_rate,
        }


class Policy:
    """A Q table plus the greedy action rule (lexicographic tie break)."""

    def __init__(
        self,
        scenario_name: str,
        q: dict[tuple[StateKey, tuple], float] | None = None,
        params: LearnParams = LearnParams(),
        train_seed: int | None = None,
    ):
        self.scenario_name = scenario_name
        self.q = q if q is not None else {}
        self.params = params
        self.train_seed = train_seed

    def value(self, skey: StateKey, action: Action) -> float:
        return self.q.get((skey, action.key()), 0.0)

    def best_action(self, config: ScenarioConfig, state) -> Action:
        skey = abstract_state(config, state)
        acts = legal_actions(config, state)
        if not acts:
            raise RuntimeError("no legal actions available")
        best = acts[0]
        best_value = self.value(skey, best)
        for a in acts[1:]:
            v = self.value(skey, a)
            if v > best_value:
                best, best_value = a, v
        return best

    def choose(self, config: ScenarioConfig, state, rng: random.Random, epsilon: float) -> Action:
        if epsilon > 0.0 and rng.random() < epsilon:
            acts = legal_actions(config, state)
            return acts[rng.randrange(len(acts))]
        return self.best_action(config, state)

    def to_json_dict(self) -> dict:
        rows = [
            [[list(atom) for atom in skey], list(akey), value]
            for (skey, akey), value in self.q.items()
        ]
        rows.sort(key=lambda r: (r[0], r[1]))
        return {
            "scenario": self.scenario_name,
            "train_seed": self.train_seed,
            "params": self.params.to_json_dict(),
            "q": rows,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Policy":
        q = {}
        for skey_raw, akey_raw, value in data["q"]:
            skey = tuple(tuple(atom) for atom in skey_raw)
            q[(skey, tuple(akey_raw))] = value
        return cls(
            data["scenario"],
            q,
            LearnParams(**data["params"]),
            data.get("train_seed"),
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(
            json.dumps(self.to_json_dict(), indent=2) + "\n", encoding="utf-8"
        )

    @classmethod
    def load(cls, path: str | Path) -> "Policy":
        return cls.from_json_dict(
            json.loads(Path(path).read_text(encoding="utf-8"))
        )


def _greedy_by_key(policy: Policy, skey: StateKey, acts: list[Action]) -> Action:
    best = acts[0]
    best_value = policy.q.get((skey, best.key()), 0.0)
    for a in acts[1:]:
        v = policy.q.get((skey, a.key()), 0.0)
        if v > best_value:
            best, best_value = a, v
    return best


def train_policy(
    config: ScenarioConfig,
    seed: int,
    params: LearnParams = LearnParams(),
) -> Policy:
    """Q-learning under one seeded stream. Emits a warning (not an error)
    when the greedy goal rate after training is below params.warn_goal_rate."""
    rng = random.Random(seed)
    policy = Policy(config.name, {}, params, train_seed=seed)
    q = policy.q
    for _ in range(params.episodes):
        state = sample_layout(config, rng)
        for _ in range(params.step_cap):
            skey = abstract_state(config, state)
            acts = legal_actions(config, state)
            if rng.random() < params.epsilon:
                action = acts[rng.randrange(len(acts))]
            else:
                action = _greedy_by_key(policy, skey, acts)
            nstate, reward, done = step(config, state, action, rng)
            if done:
                target = reward
            else:
                nkey = abstract_state(config, nstate)
                nacts = legal_actions(config, nstate)
                target = reward + params.gamma * max(
                    q.get((nkey, a.key()), 0.0) for a in nacts
                )
            old = q.get((skey, action.key()), 0.0)
            q[(skey, action.key())] = old + params.alpha * (target - old)
            state = nstate
            if done:
                break
    if params.eval_episodes > 0:
        rate = evaluate_policy(config, policy, params.eval_episodes, seed + 1)
        if rate < params.warn_goal_rate:
            warnings.warn(
                f"{config.name}: greedy goal rate {rate:.2f} below "
                f"{params.warn_goal_rate:.2f} after {params.episodes} episodes",
                stacklevel=2,
            )
    return policy


def evaluate_policy(
    config: ScenarioConfig,
    policy: Policy,
    episodes: int,
    seed: int,
    step_cap: int | None = None,
) -> float:
    """Greedy goal rate over fresh sampled layouts."""
    rng = random.Random(seed)
    cap = step_cap if step_cap is not None else policy.params.step_cap
    succeeded = 0
    for _ in range(episodes):
        state = sample_layout(config, rng)
        for _ in range(cap):
            action = policy.best_action(config, state)
            state, _, done = step(config, state, action, rng)
            if done:
                break
        if any(goal in state.props for goal in config.goals):
            succeeded += 1
    return succeeded / episodes if episodes else 0.0
