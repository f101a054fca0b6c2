"""Match-level types shared across the structure mapping engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..kr.model import EntitySymbol, Expression


@dataclass(frozen=True)
class MatchParams:
    """Knobs for matching and scoring."""

    base_weight: float = 0.1
    trickle_down: float = 0.8
    merge_cap: int = 1_000_000


DEFAULT_PARAMS = MatchParams()

Item = Union[EntitySymbol, Expression]


@dataclass(frozen=True)
class MatchHypothesis:
    """A single local correspondence between one base item and one target
    item. local_weight is the context-free score increment; the full weight
    of an expression match depends on its parents inside a Gmap."""

    base: Item
    target: Item
    kind: str  # entity | relation | attribute | function | flexible-category
    local_weight: float = 0.0

    @property
    def is_expression(self) -> bool:
        return isinstance(self.base, Expression)

    def __repr__(self):
        return f"{self.base!r}<->{self.target!r}"


@dataclass(frozen=True)
class Provenance:
    base_id: str
    source_expression: int
    gmap_score: float


@dataclass(frozen=True)
class Hypothesis:
    """A candidate inference: a base expression carried into the target's
    vocabulary under a Gmap's bindings."""

    expression: Expression
    provenance: Provenance
    status: str = "kept"  # kept | discarded-unobserved-event | discarded-duplicate

    def render(self) -> str:
        return self.expression.render()


@dataclass(frozen=True)
class Gmap:
    """A maximal structurally consistent collection of match hypotheses."""

    matches: frozenset[MatchHypothesis]
    entity_bindings: tuple[tuple[str, str], ...]  # sorted (base, target) names
    score: float
    inferences: tuple[Hypothesis, ...] = ()

    @property
    def bindings(self) -> dict[str, str]:
        return dict(self.entity_bindings)

    def expression_matches(self) -> list[MatchHypothesis]:
        out = [m for m in self.matches if m.is_expression]
        out.sort(key=lambda m: (m.base.id, m.target.id))
        return out

    def entity_matches(self) -> list[MatchHypothesis]:
        out = [m for m in self.matches if not m.is_expression]
        out.sort(key=lambda m: (m.base.name, m.target.name))
        return out

    def matched_base_items(self) -> set:
        return {m.base for m in self.matches}

    def counterpart(self) -> dict:
        return {m.base: m.target for m in self.matches}

    def skolem_count(self) -> int:
        seen = set()
        for hyp in self.inferences:
            for ent in hyp.expression.entities():
                if ent.is_skolem:
                    seen.add(ent.name)
        return len(seen)


EMPTY_GMAP = Gmap(frozenset(), (), 0.0, ())


class MergeLimitError(RuntimeError):
    """The merge frontier outsized the configured cap."""

    def __init__(self, states: int, cap: int):
        super().__init__(
            f"gmap merge explored {states} partial states, over the cap of {cap}"
        )
        self.states = states
        self.cap = cap
