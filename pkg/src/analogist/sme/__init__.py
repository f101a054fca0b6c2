"""Structure mapping: local matches, merged analogies, candidate inferences."""

from .engine import best_analogy, match
from .infer import candidate_inferences
from .local import local_matches
from .merge import closure_of, merge_gmaps
from .model import (
    DEFAULT_PARAMS,
    EMPTY_GMAP,
    Gmap,
    Hypothesis,
    MatchHypothesis,
    MatchParams,
    MergeLimitError,
    Provenance,
)
from .score import score_gmap

__all__ = [
    "DEFAULT_PARAMS",
    "EMPTY_GMAP",
    "Gmap",
    "Hypothesis",
    "MatchHypothesis",
    "MatchParams",
    "MergeLimitError",
    "Provenance",
    "best_analogy",
    "candidate_inferences",
    "closure_of",
    "local_matches",
    "match",
    "merge_gmaps",
    "score_gmap",
]
