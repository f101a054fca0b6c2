"""Option plumbing shared by every subcommand.

Options resolve in three layers: built-in defaults, then a --config JSON
file, then flags the user actually typed. The argument parser suppresses
its own defaults so that only explicit flags reach the top layer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..aie.rollout import DEFAULT_ROLLOUT_EPSILON


class UsageError(Exception):
    """Bad invocation: unknown names, missing inputs, rejected config keys."""


GLOBAL_DEFAULTS: dict[str, object] = {
    "out": ".",
    "format": "text",
    "seed": 7,
}

# Known option names and their defaults, per command. A --config file may
# set any of these (or a global); anything else is rejected.
COMMAND_DEFAULTS: dict[str, dict[str, object]] = {
    "validate": {"events": None},
    "match": {
        "events": None,
        "merge_cap": 1_000_000,
        "base_weight": 0.1,
        "trickle_down": 0.8,
    },
    "order": {},
    "synthesize": {"dot": False},
    "train": {"episodes": 5000, "eval_episodes": 100, "min_goal_rate": 0.9},
    "simulate": {
        "policy": None,
        "count": 1,
        "epsilon": DEFAULT_ROLLOUT_EPSILON,
        "step_cap": 40,
        "suffix": "",
    },
    "chronicle": {"threshold": 0.3},
    "evaluate": {
        "episodes": 5000,
        "rollout_count": 10,
        "threshold": 0.3,
        "epsilon": DEFAULT_ROLLOUT_EPSILON,
        "eval_seed": 5000,
        "eval_count": 2,
        "min_goal_rate": 0.9,
    },
    "export-dot": {"base": None, "events": None},
}

FORMATS = ("text", "json", "dot")


def _check_type(source: str, key: str, value: object, default: object) -> None:
    if default is None or isinstance(default, str):
        ok = isinstance(value, str)
        wanted = "a string"
    elif isinstance(default, bool):
        ok = isinstance(value, bool)
        wanted = "a boolean"
    elif isinstance(default, int):
        ok = isinstance(value, int) and not isinstance(value, bool)
        wanted = "an integer"
    else:
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
        wanted = "a number"
    if not ok:
        raise UsageError(f"{source}: key {key!r} must be {wanted}")


def load_config_values(path: str, allowed: dict[str, object]) -> dict[str, object]:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"config file not found: {path}")
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config file {path} must hold a JSON object")
    values: dict[str, object] = {}
    for key, value in data.items():
        if key not in allowed:
            raise UsageError(f"config file {path}: unknown key {key!r}")
        _check_type(f"config file {path}", key, value, allowed[key])
        values[key] = value
    return values


@dataclass
class RunConfig:
    command: str
    values: dict[str, object]

    def __getattr__(self, name: str):
        try:
            return self.values[name]
        except KeyError:
            raise AttributeError(name) from None

    @property
    def out_dir(self) -> Path:
        return Path(str(self.values["out"]))

    @property
    def fmt(self) -> str:
        return str(self.values["format"])


def build_run_config(command: str, explicit: dict[str, object]) -> RunConfig:
    """Merge the three layers. `explicit` holds the parsed namespace with
    suppressed defaults, so absent flags are simply absent."""
    defaults = {**GLOBAL_DEFAULTS, **COMMAND_DEFAULTS[command]}
    config_path = explicit.pop("config", None)
    merged = dict(defaults)
    if config_path is not None:
        merged.update(load_config_values(str(config_path), defaults))
    merged.update(explicit)
    if merged["format"] not in FORMATS:
        raise UsageError(f"unknown format {merged['format']!r}")
    return RunConfig(command, merged)
