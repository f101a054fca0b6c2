"""Synthesis run manifests.

A manifest is a small JSON file naming the base experiences, the target,
the event vocabulary, and the run parameters. Paths are resolved relative
to the manifest's own directory. Unknown keys are an error so that typos
fail loudly instead of silently using defaults.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path

from ..kr.model import Experience
from ..kr.parser import Conventions, DEFAULT_CONVENTIONS, load_event_names, parse_file
from ..sme.model import MatchParams
from .run import BaseLibrary

_TOP_KEYS = {
    "version",
    "bases",
    "target",
    "events",
    "heuristic",
    "max_passes",
    "merge_cap",
    "match_weights",
}
_WEIGHT_KEYS = {"base", "trickle_down"}


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class Manifest:
    path: Path
    bases: tuple[Path, ...]
    target: Path
    events: Path | None
    heuristic: bool
    max_passes: int
    params: MatchParams

    def conventions(self) -> Conventions:
        if self.events is None:
            return DEFAULT_CONVENTIONS
        return dataclasses.replace(
            DEFAULT_CONVENTIONS, event_names=load_event_names(self.events)
        )

    def event_names(self) -> frozenset[str]:
        return self.conventions().event_names

    def load(self) -> tuple[BaseLibrary, Experience]:
        conv = self.conventions()
        bases = tuple(parse_file(p, conv) for p in self.bases)
        target = parse_file(self.target, conv)
        return BaseLibrary(bases), target


def _require(data: dict, key: str, kind, where: str):
    if key not in data:
        raise ManifestError(f"{where}: missing required key {key!r}")
    value = data[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ManifestError(f"{where}: {key!r} must be a number")
        return float(value)
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ManifestError(f"{where}: {key!r} must be {kind.__name__}")
    return value


def load_manifest(path: str | Path) -> Manifest:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ManifestError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ManifestError(f"{path}: manifest must be a JSON object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise ManifestError(f"{path}: unknown keys {sorted(unknown)}")

    version = _require(data, "version", int, str(path))
    if version != 1:
        raise ManifestError(f"{path}: unsupported manifest version {version}")

    bases_raw = _require(data, "bases", list, str(path))
    if not bases_raw or not all(isinstance(b, str) for b in bases_raw):
        raise ManifestError(f"{path}: 'bases' must be a non-empty list of paths")
    target_raw = _require(data, "target", str, str(path))

    root = path.parent
    events = None
    if "events" in data:
        if not isinstance(data["events"], str):
            raise ManifestError(f"{path}: 'events' must be a path string")
        events = root / data["events"]

    heuristic = data.get("heuristic", True)
    if not isinstance(heuristic, bool):
        raise ManifestError(f"{path}: 'heuristic' must be a boolean")
    max_passes = data.get("max_passes", 10)
    if not isinstance(max_passes, int) or isinstance(max_passes, bool) or max_passes < 1:
        raise ManifestError(f"{path}: 'max_passes' must be a positive integer")
    merge_cap = data.get("merge_cap", 1_000_000)
    if not isinstance(merge_cap, int) or isinstance(merge_cap, bool) or merge_cap < 1:
        raise ManifestError(f"{path}: 'merge_cap' must be a positive integer")

    base_weight, trickle = 0.1, 0.8
    if "match_weights" in data:
        weights = data["match_weights"]
        if not isinstance(weights, dict):
            raise ManifestError(f"{path}: 'match_weights' must be an object")
        unknown = set(weights) - _WEIGHT_KEYS
        if unknown:
            raise ManifestError(
                f"{path}: unknown match_weights keys {sorted(unknown)}"
            )
        base_weight = _require(weights, "base", float, f"{path} match_weights")
        trickle = _require(weights, "trickle_down", float, f"{path} match_weights")

    missing = [str(root / b) for b in bases_raw if not (root / b).is_file()]
    if not (root / target_raw).is_file():
        missing.append(str(root / target_raw))
    if events is not None and not events.is_file():
        missing.append(str(events))
    if missing:
        raise ManifestError(f"{path}: missing referenced files: {missing}")

    return Manifest(
        path=path,
        bases=tuple(root / b for b in bases_raw),
        target=root / target_raw,
        events=events,
        heuristic=heuristic,
        max_passes=max_passes,
        params=MatchParams(base_weight, trickle, merge_cap),
    )
