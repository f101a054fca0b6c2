"""The synthesis loop.

Each pass walks the ordered experience library, matches every base against
the current target, filters the licensed hypotheses, and folds the kept
ones into the target as new facts. Passes repeat until one of them keeps
nothing, at which point the target has absorbed all the structure the
library supports.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..kr.model import Experience, PredicateDecl
from ..sme.engine import best_analogy
from ..sme.model import DEFAULT_PARAMS, Hypothesis, MatchParams
from .filter import DISCARDED_DUPLICATE, DISCARDED_EVENT, KEPT, filter_hypotheses
from .order import WeightRow, order_bases


class ConvergenceError(RuntimeError):
    """Synthesis was still adding facts when the pass budget ran out."""

    def __init__(self, max_passes: int):
        super().__init__(
            f"synthesis did not reach a fixpoint within {max_passes} passes"
        )
        self.max_passes = max_passes


@dataclass(frozen=True)
class BaseLibrary:
    """Past experiences, in library order."""

    experiences: tuple[Experience, ...]

    def __iter__(self):
        return iter(self.experiences)

    def __len__(self):
        return len(self.experiences)

    def by_id(self, experience_id: str) -> Experience:
        for e in self.experiences:
            if e.id == experience_id:
                return e
        raise KeyError(experience_id)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.experiences)


@dataclass(frozen=True)
class IterationRecord:
    pass_number: int
    base_id: str
    gmap_score: float
    generated: int
    kept: int
    discarded_event: int
    discarded_duplicate: int
    kept_facts: tuple[str, ...]
    discarded_facts: tuple[tuple[str, str], ...]  # (fact, reason)
    skolems: tuple[str, ...]
    target_size_after: int


@dataclass(frozen=True)
class SynthesisResult:
    final_target: Experience
    log: tuple[IterationRecord, ...]
    passes: int
    ordering_used: tuple[str, ...]
    weights: tuple[WeightRow, ...]
    skolem_introduced: bool

    def kept_total(self) -> int:
        return sum(r.kept for r in self.log)


def _event_names(
    base: Experience, target: Experience, extra: frozenset[str]
) -> frozenset[str]:
    names = set(extra)
    for exp in (base, target):
        names.update(n for n, d in exp.declarations.items() if d.is_event)
    return frozenset(names)


def _decls_for(kept: list[Hypothesis], base: Experience, target: Experience):
    decls: dict[str, PredicateDecl] = {}
    for h in kept:
        for node in h.expression.walk():
            if target.decl_for(node.functor) is None and node.functor not in decls:
                decl = base.decl_for(node.functor)
                if decl is None:
                    raise ValueError(
                        f"no declaration for {node.functor!r} in base {base.id!r}"
                    )
                decls[node.functor] = decl
    return decls


def synthesize(
    library: BaseLibrary | list[Experience],
    target: Experience,
    *,
    heuristic: bool = True,
    max_passes: int = 10,
    params: MatchParams = DEFAULT_PARAMS,
    events: frozenset[str] = frozenset(),
) -> SynthesisResult:
    """Grow the target by analogy to the library until nothing new is kept.

    With heuristic=True the library is consulted in ranked order; otherwise
    in the order given. Raises ConvergenceError when max_passes full passes
    still keep new facts.
    """
    bases = list(library)
    if max_passes < 1:
        raise ValueError("max_passes must be at least 1")
    ordered, weights = order_bases(bases, target)
    if not heuristic:
        ordered = bases

    current = target
    log: list[IterationRecord] = []
    skolem_seen = False
    passes = 0
    for pass_number in range(1, max_passes + 1):
        passes = pass_number
        kept_this_pass = 0
        for base in ordered:
            gmap = best_analogy(base, current, params)
            filtered = filter_hypotheses(
                gmap.inferences, current, _event_names(base, current, events)
            )
            kept = [h for h in filtered if h.status == KEPT]
            if kept:
                decls = _decls_for(kept, base, current)
                current = current.with_new_facts(
                    [h.expression for h in kept], decls
                )
                kept_this_pass += len(kept)
            skolems = sorted(
                {
                    e.name
                    for h in kept
                    for e in h.expression.entities()
                    if e.is_skolem
                }
            )
            if skolems:
                skolem_seen = True
            log.append(
                IterationRecord(
                    pass_number=pass_number,
                    base_id=base.id,
                    gmap_score=gmap.score,
                    generated=len(filtered),
                    kept=len(kept),
                    discarded_event=sum(
                        1 for h in filtered if h.status == DISCARDED_EVENT
                    ),
                    discarded_duplicate=sum(
                        1 for h in filtered if h.status == DISCARDED_DUPLICATE
                    ),
                    kept_facts=tuple(h.render() for h in kept),
                    discarded_facts=tuple(
                        (h.render(), h.status)
                        for h in filtered
                        if h.status != KEPT
                    ),
                    skolems=tuple(skolems),
                    target_size_after=len(current),
                )
            )
        if kept_this_pass == 0:
            return SynthesisResult(
                final_target=current,
                log=tuple(log),
                passes=passes,
                ordering_used=tuple(b.id for b in ordered),
                weights=weights,
                skolem_introduced=skolem_seen,
            )
    raise ConvergenceError(max_passes)
