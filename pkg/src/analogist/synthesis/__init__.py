"""Behavior rationale synthesis: ordering, filtering, and the fixpoint loop."""

from .filter import (
    DISCARDED_DUPLICATE,
    DISCARDED_EVENT,
    KEPT,
    filter_hypotheses,
    skolem_canonical,
)
from .manifest import Manifest, ManifestError, load_manifest
from .order import (
    WeightRow,
    match_keys,
    order_bases,
    predicate_similarity,
    unanchored_entities,
)
from .run import (
    BaseLibrary,
    ConvergenceError,
    IterationRecord,
    SynthesisResult,
    synthesize,
)

__all__ = [
    "BaseLibrary",
    "ConvergenceError",
    "DISCARDED_DUPLICATE",
    "DISCARDED_EVENT",
    "IterationRecord",
    "KEPT",
    "Manifest",
    "ManifestError",
    "SynthesisResult",
    "WeightRow",
    "filter_hypotheses",
    "load_manifest",
    "match_keys",
    "order_bases",
    "predicate_similarity",
    "skolem_canonical",
    "synthesize",
    "unanchored_entities",
]
