"""A small simulator of goal-directed behavior plus the observation side:
traces, chronologies, behavior distance, and confusion matrices."""

from .chronology import (
    Chronology,
    confusion_matrix,
    distance,
    extract_chronology,
    representatives,
    symmetric_distance,
)
from .export import (
    chronology_from_json_dict,
    chronology_to_json_dict,
    chronology_to_micro_theory,
    load_trace,
    trace_from_json_dict,
    trace_to_json_dict,
    trace_to_micro_theory,
)
from .learn import LearnParams, Policy, evaluate_policy, train_policy
from .rollout import DEFAULT_ROLLOUT_EPSILON, ObservationTrace, rollout, rollouts
from .scenarios import BEHAVIORS, SCENARIOS, get_scenario
from .world import (
    Action,
    IllegalActionError,
    InjuryHazard,
    ObjectSpec,
    PlacementRule,
    ScenarioConfig,
    TransformRule,
    WatcherHazard,
    WorldState,
    abstract_state,
    goal_reached,
    legal_actions,
    load_scenario,
    manhattan,
    sample_layout,
    scenario_from_json_dict,
    snapshot,
    step,
)

__all__ = [
    "Action",
    "BEHAVIORS",
    "Chronology",
    "DEFAULT_ROLLOUT_EPSILON",
    "IllegalActionError",
    "InjuryHazard",
    "LearnParams",
    "ObjectSpec",
    "ObservationTrace",
    "PlacementRule",
    "Policy",
    "SCENARIOS",
    "ScenarioConfig",
    "TransformRule",
    "WatcherHazard",
    "WorldState",
    "abstract_state",
    "chronology_from_json_dict",
    "chronology_to_json_dict",
    "chronology_to_micro_theory",
    "confusion_matrix",
    "distance",
    "evaluate_policy",
    "extract_chronology",
    "get_scenario",
    "goal_reached",
    "legal_actions",
    "load_scenario",
    "load_trace",
    "manhattan",
    "representatives",
    "rollout",
    "rollouts",
    "sample_layout",
    "scenario_from_json_dict",
    "snapshot",
    "step",
    "symmetric_distance",
    "trace_from_json_dict",
    "trace_to_json_dict",
    "trace_to_micro_theory",
    "train_policy",
]
