"""Command-line entry point.

Subcommands: validate, match, order, synthesize, simulate, train,
chronicle, evaluate, export-dot. Exit codes are a stable contract:
0 success, 1 usage or configuration, 2 parse failure, 3 computation
limit, 4 non-convergence.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import warnings
from pathlib import Path

from ..aie import (
    BEHAVIORS,
    LearnParams,
    Policy,
    chronology_to_json_dict,
    chronology_to_micro_theory,
    confusion_matrix,
    evaluate_policy,
    extract_chronology,
    get_scenario,
    load_trace,
    representatives,
    rollout,
    rollouts,
    trace_to_json_dict,
    trace_to_micro_theory,
    train_policy,
)
from ..kr import (
    DEFAULT_CONVENTIONS,
    Conventions,
    ParseError,
    canonical_serialize,
    edge_count,
    load_event_names,
    parse_file,
)
from ..sme import MatchParams, MergeLimitError, best_analogy, match
from ..synthesis import (
    ConvergenceError,
    ManifestError,
    filter_hypotheses,
    load_manifest,
    order_bases,
    synthesize,
)
from .dot import analogy_dot, experience_dot
from .io_utils import atomic_write_text, write_json
from .runconfig import RunConfig, UsageError, build_run_config

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_NONCONVERGENT = 4

SUPPRESS = argparse.SUPPRESS


def _conventions(events_path) -> Conventions:
    if events_path is None:
        return DEFAULT_CONVENTIONS
    path = Path(str(events_path))
    if not path.is_file():
        raise UsageError(f"events file not found: {path}")
    return dataclasses.replace(
        DEFAULT_CONVENTIONS, event_names=load_event_names(path)
    )


def _require_file(raw) -> Path:
    path = Path(str(raw))
    if not path.is_file():
        raise UsageError(f"no such file: {path}")
    return path


def _scenario(name: str):
    try:
        return get_scenario(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc


def _emit(cfg: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


# ---------------------------------------------------------------- validate


def cmd_validate(cfg: RunConfig) -> int:
    conventions = _conventions(cfg.events)
    paths = [_require_file(p) for p in cfg.paths]
    entries = []
    all_valid = True
    for path in paths:
        try:
            exp = parse_file(path, conventions)
        except ParseError as exc:
            all_valid = False
            entries.append({
                "path": str(path),
                "status": "error",
                "error": exc.message,
                "line": exc.line,
                "column": exc.column,
            })
            continue
        decls = [
            {
                "name": d.name,
                "arity": d.arity,
                "category": d.category.value,
                "event": d.is_event,
            }
            for d in sorted(exp.declarations.values(), key=lambda d: d.name)
        ]
        warnings_ = ["file holds no facts"] if not exp.facts else []
        entries.append({
            "path": str(path),
            "status": "valid",
            "facts": len(exp.facts),
            "edges": edge_count(exp),
            "rationale_roots": len(exp.rationale_roots()),
            "entities": sorted({e.name for f in exp.facts for e in f.entities()}),
            "declarations": decls,
            "warnings": warnings_,
        })

    lines = []
    for entry in entries:
        if entry["status"] == "error":
            lines.append(
                f"{entry['path']}: error at line {entry['line']}, "
                f"column {entry['column']}: {entry['error']}"
            )
            continue
        lines.append(f"{entry['path']}: valid")
        lines.append(
            f"  facts: {entry['facts']}  edges: {entry['edges']}"
            f"  rationale roots: {entry['rationale_roots']}"
        )
        if entry["entities"]:
            lines.append("  entities: " + ", ".join(entry["entities"]))
        if entry["declarations"]:
            lines.append("  declarations:")
            width = max(len(d["name"]) for d in entry["declarations"])
            for d in entry["declarations"]:
                event = "  event" if d["event"] else ""
                lines.append(
                    f"    {d['name']:<{width}}  {d['arity']}  {d['category']}{event}"
                )
        for w in entry["warnings"]:
            lines.append(f"  warning: {w}")

    _emit(cfg, {"version": 1, "files": entries, "valid": all_valid}, lines)
    return EXIT_OK if all_valid else EXIT_PARSE


# ------------------------------------------------------------------- match


def _gmap_dict(gmap) -> dict:
    return {
        "score": gmap.score,
        "expression_matches": [
            {"base": m.base.id, "target": m.target.id, "kind": m.kind}
            for m in gmap.expression_matches()
        ],
        "entity_bindings": [[b, t] for b, t in gmap.entity_bindings],
        "skolem_count": gmap.skolem_count(),
        "inferences": [h.expression.render() for h in gmap.inferences],
    }


def cmd_match(cfg: RunConfig) -> int:
    conventions = _conventions(cfg.events)
    base = parse_file(_require_file(cfg.base), conventions)
    target = parse_file(_require_file(cfg.target), conventions)
    params = MatchParams(
        base_weight=float(cfg.base_weight),
        trickle_down=float(cfg.trickle_down),
        merge_cap=int(cfg.merge_cap),
    )
    gmaps = match(base, target, params)

    hypotheses = []
    if gmaps:
        best = gmaps[0]
        if cfg.events is not None:
            names = set(load_event_names(Path(str(cfg.events))))
            for exp in (base, target):
                names.update(n for n, d in exp.declarations.items() if d.is_event)
            judged = filter_hypotheses(best.inferences, target, frozenset(names))
            hypotheses = [
                {"expression": h.expression.render(), "status": h.status}
                for h in judged
            ]
        else:
            hypotheses = [
                {"expression": h.expression.render(), "status": "candidate"}
                for h in best.inferences
            ]

    payload = {
        "version": 1,
        "base": base.id,
        "target": target.id,
        "gmap_count": len(gmaps),
        "gmaps": [_gmap_dict(g) for g in gmaps],
        "hypotheses": hypotheses,
    }

    lines = [f"base {base.id} vs target {target.id}: {len(gmaps)} gmaps"]
    for i, g in enumerate(gmaps, 1):
        lines.append(
            f"  gmap {i}: score {g.score:.4f}, expression matches "
            f"{len(g.expression_matches())}, entity pairs "
            f"{len(g.entity_bindings)}, skolems {g.skolem_count()}"
        )
    if gmaps:
        lines.append("best gmap bindings:")
        for b, t in gmaps[0].entity_bindings:
            lines.append(f"  {b} -> {t}")
        if hypotheses:
            lines.append("hypotheses:")
            for h in hypotheses:
                lines.append(f"  [{h['status']}] {h['expression']}")
    _emit(cfg, payload, lines)
    return EXIT_OK


# ------------------------------------------------------------------- order


def _weight_dict(w) -> dict:
    return {
        "rank": w.rank,
        "base": w.base_id,
        "similarity": w.similarity,
        "edges": w.edges,
        "weight": w.weight,
        "skolem_risk": w.skolem_risk,
        "unanchored": list(w.unanchored),
    }


def _weights_lines(weights) -> list[str]:
    width = max([len("base")] + [len(w.base_id) for w in weights])
    lines = [
        f"  rank  {'base':<{width}}  similarity  edges  weight    risk  unanchored"
    ]
    for w in weights:
        lines.append(
            f"  {w.rank:<4}  {w.base_id:<{width}}  {w.similarity:<10.4f}"
            f"  {w.edges:<5}  {w.weight:<8.4f}  {w.skolem_risk:<4}"
            f"  {' '.join(w.unanchored)}".rstrip()
        )
    return lines


def cmd_order(cfg: RunConfig) -> int:
    manifest = load_manifest(_require_file(cfg.manifest))
    library, target = manifest.load()
    ordered, table = order_bases(list(library), target)
    payload = {
        "version": 1,
        "target": target.id,
        "ordering": [b.id for b in ordered],
        "weights": [_weight_dict(w) for w in table],
    }
    lines = ["ordering: " + ", ".join(b.id for b in ordered)]
    lines += _weights_lines(table)
    _emit(cfg, payload, lines)
    return EXIT_OK


# -------------------------------------------------------------- synthesize


def cmd_synthesize(cfg: RunConfig) -> int:
    manifest = load_manifest(_require_file(cfg.manifest))
    library, target = manifest.load()
    result = synthesize(
        library,
        target,
        heuristic=manifest.heuristic,
        max_passes=manifest.max_passes,
        params=manifest.params,
        events=manifest.event_names(),
    )

    payload = {
        "version": 1,
        "target": target.id,
        "heuristic": manifest.heuristic,
        "passes": result.passes,
        "skolem_introduced": result.skolem_introduced,
        "ordering": list(result.ordering_used),
        "weights": [_weight_dict(w) for w in result.weights],
        "iterations": [
            {
                "pass": r.pass_number,
                "base": r.base_id,
                "gmap_score": r.gmap_score,
                "generated": r.generated,
                "kept": r.kept,
                "discarded_event": r.discarded_event,
                "discarded_duplicate": r.discarded_duplicate,
                "kept_facts": list(r.kept_facts),
                "discarded_facts": [[f, why] for f, why in r.discarded_facts],
                "skolems": list(r.skolems),
                "target_size_after": r.target_size_after,
            }
            for r in result.log
        ],
        "final_facts": [f.render() for f in result.final_target.facts],
    }

    from .report import (
        render_hypotheses_png,
        write_iterations_csv,
        write_weights_csv,
    )

    out = cfg.out_dir
    written = [
        write_json(out / "synthesis_result.json", payload),
        atomic_write_text(
            out / "final_target.mt", canonical_serialize(result.final_target)
        ),
        write_iterations_csv(out / "iterations.csv", result.log),
        write_weights_csv(out / "weights.csv", result.weights),
        render_hypotheses_png(out / "hypotheses.png", result.log),
    ]
    if cfg.dot:
        written.append(
            atomic_write_text(
                out / "final_target.dot", experience_dot(result.final_target)
            )
        )

    lines = ["ordering: " + ", ".join(result.ordering_used)]
    lines += _weights_lines(result.weights)
    for r in result.log:
        lines.append(
            f"pass {r.pass_number}  {r.base_id}: score {r.gmap_score:.3f},"
            f" generated {r.generated}, kept {r.kept}"
            f" (events {r.discarded_event}, duplicates {r.discarded_duplicate})"
        )
    skolems = "yes" if result.skolem_introduced else "no"
    lines.append(
        f"converged after {result.passes} passes;"
        f" final facts: {len(result.final_target.facts)};"
        f" skolems introduced: {skolems}"
    )
    lines.append("wrote: " + ", ".join(str(p) for p in written))
    _emit(cfg, payload, lines)
    return EXIT_OK


# ------------------------------------------------------------------- train


def cmd_train(cfg: RunConfig) -> int:
    config = _scenario(cfg.scenario)
    params = LearnParams(
        episodes=int(cfg.episodes),
        eval_episodes=int(cfg.eval_episodes),
        warn_goal_rate=float(cfg.min_goal_rate),
    )
    with warnings.catch_warnings(record=True):
        warnings.simplefilter("always")
        policy = train_policy(config, int(cfg.seed), params)
    rate = evaluate_policy(config, policy, params.eval_episodes, int(cfg.seed) + 1)
    path = write_json(
        cfg.out_dir / f"policy_{cfg.scenario}.json", policy.to_json_dict()
    )
    flagged = rate < float(cfg.min_goal_rate)
    payload = {
        "version": 1,
        "scenario": cfg.scenario,
        "seed": int(cfg.seed),
        "episodes": params.episodes,
        "q_size": len(policy.q),
        "eval_goal_rate": rate,
        "flagged": flagged,
        "policy_path": str(path),
    }
    lines = [
        f"trained {cfg.scenario}: seed {cfg.seed}, episodes {params.episodes},"
        f" |Q| {len(policy.q)}",
        f"eval goal rate: {rate:.2f} over {params.eval_episodes} episodes",
        f"wrote {path}",
    ]
    if flagged:
        lines.append(
            f"flagged: goal rate {rate:.2f} is below {float(cfg.min_goal_rate):.2f}"
        )
    _emit(cfg, payload, lines)
    return EXIT_NONCONVERGENT if flagged else EXIT_OK


# ---------------------------------------------------------------- simulate


def cmd_simulate(cfg: RunConfig) -> int:
    config = _scenario(cfg.scenario)
    if cfg.policy is None:
        raise UsageError("simulate needs --policy FILE (from a train run)")
    policy_path = _require_file(cfg.policy)
    try:
        policy = Policy.load(policy_path)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad policy file {policy_path}: {exc}") from exc
    if policy.scenario_name != cfg.scenario:
        raise UsageError(
            f"policy {policy_path} was trained for {policy.scenario_name!r},"
            f" not {cfg.scenario!r}"
        )
    traces = rollouts(
        config,
        policy,
        int(cfg.count),
        int(cfg.seed),
        epsilon=float(cfg.epsilon),
        step_cap=int(cfg.step_cap),
    )
    entries = []
    lines = []
    for trace in traces:
        stem = f"trace_{cfg.scenario}_{trace.seed}"
        json_path = write_json(cfg.out_dir / f"{stem}.json", trace_to_json_dict(trace))
        mt_path = atomic_write_text(
            cfg.out_dir / f"{stem}.mt",
            trace_to_micro_theory(trace, config, str(cfg.suffix)),
        )
        entries.append({
            "seed": trace.seed,
            "steps": len(trace.actions),
            "reward": sum(trace.rewards),
            "goal_reached": trace.goal_reached,
            "trace_path": str(json_path),
            "micro_theory_path": str(mt_path),
        })
        goal = "goal reached" if trace.goal_reached else "goal not reached"
        lines.append(
            f"trace seed {trace.seed}: {len(trace.actions)} steps,"
            f" reward {sum(trace.rewards):.1f}, {goal}"
        )
        lines.append(f"  wrote {json_path}, {mt_path}")
    payload = {"version": 1, "scenario": cfg.scenario, "traces": entries}
    _emit(cfg, payload, lines)
    return EXIT_OK


# --------------------------------------------------------------- chronicle


def cmd_chronicle(cfg: RunConfig) -> int:
    traces = []
    for raw in cfg.traces:
        path = _require_file(raw)
        try:
            traces.append(load_trace(path))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"bad trace file {path}: {exc}") from exc
    scenarios = {t.scenario for t in traces}
    if len(scenarios) > 1:
        raise UsageError(
            "traces span multiple scenarios: " + ", ".join(sorted(scenarios))
        )
    scenario = traces[0].scenario
    config = _scenario(scenario)
    chronologies = [extract_chronology(t) for t in traces]
    reps = representatives(chronologies, float(cfg.threshold))

    out = cfg.out_dir
    rep_paths = []
    for i, rep in enumerate(reps, 1):
        rep_paths.append(
            atomic_write_text(
                out / f"representative_{i}.mt",
                chronology_to_micro_theory(rep, config),
            )
        )
    payload = {
        "version": 1,
        "scenario": scenario,
        "threshold": float(cfg.threshold),
        "trace_count": len(traces),
        "representatives": [chronology_to_json_dict(r) for r in reps],
    }
    json_path = write_json(out / "representatives.json", payload)

    lines = [
        f"{len(reps)} representatives from {len(traces)} traces"
        f" (threshold {float(cfg.threshold):.2f}):"
    ]
    for i, rep in enumerate(reps, 1):
        shown = "; ".join("(" + " ".join(atom) + ")" for atom in rep.events)
        lines.append(f"  #{i} support {rep.support}: {shown}")
    lines.append(
        "wrote " + ", ".join([str(json_path)] + [str(p) for p in rep_paths])
    )
    _emit(cfg, payload, lines)
    return EXIT_OK


# ---------------------------------------------------------------- evaluate


def cmd_evaluate(cfg: RunConfig) -> int:
    params = LearnParams(episodes=int(cfg.episodes))
    seed = int(cfg.seed)
    reps: dict[str, list] = {}
    evals: dict[str, list] = {}
    rates: dict[str, float] = {}
    flagged: list[str] = []
    for name in BEHAVIORS:
        config = get_scenario(name)
        with warnings.catch_warnings(record=True):
            warnings.simplefilter("always")
            policy = train_policy(config, seed, params)
        rate = evaluate_policy(config, policy, params.eval_episodes, seed + 1)
        rates[name] = rate
        if rate < float(cfg.min_goal_rate):
            flagged.append(name)
        rolls = rollouts(
            config, policy, int(cfg.rollout_count), seed, epsilon=float(cfg.epsilon)
        )
        reps[name] = representatives(
            [extract_chronology(t) for t in rolls], float(cfg.threshold)
        )
        evals[name] = [
            rollout(config, policy, int(cfg.eval_seed) + i, epsilon=0.0)
            for i in range(int(cfg.eval_count))
        ]
    matrix = confusion_matrix(reps, evals, BEHAVIORS)
    diagonal_min = sum(
        1 for i, row in enumerate(matrix) if row[i] == min(row)
    )

    payload = {
        "version": 1,
        "behaviors": list(BEHAVIORS),
        "matrix": matrix,
        "diagonal_min_rows": diagonal_min,
        "goal_rates": rates,
        "flagged": flagged,
        "parameters": {
            "seed": seed,
            "episodes": int(cfg.episodes),
            "rollout_count": int(cfg.rollout_count),
            "threshold": float(cfg.threshold),
            "epsilon": float(cfg.epsilon),
            "eval_seed": int(cfg.eval_seed),
            "eval_count": int(cfg.eval_count),
        },
        "representatives": {
            name: [chronology_to_json_dict(c) for c in reps[name]]
            for name in BEHAVIORS
        },
    }

    from .report import render_confusion_png, write_confusion_csv

    out = cfg.out_dir
    written = [
        write_json(out / "confusion.json", payload),
        write_confusion_csv(out / "confusion_matrix.csv", BEHAVIORS, matrix),
        render_confusion_png(out / "confusion_matrix.png", BEHAVIORS, matrix),
    ]

    width = max(len(n) for n in BEHAVIORS)
    header = " " * (width + 2) + "  ".join(f"{n:>{width}}" for n in BEHAVIORS)
    lines = ["goal rates: " + ", ".join(f"{n} {rates[n]:.2f}" for n in BEHAVIORS)]
    lines.append(header)
    for i, row in enumerate(matrix):
        lines.append(
            f"{BEHAVIORS[i]:>{width}}  "
            + "  ".join(f"{value:>{width}.3f}" for value in row)
        )
    lines.append(f"diagonal is the row minimum in {diagonal_min} of {len(matrix)} rows")
    if flagged:
        lines.append("flagged below goal rate: " + ", ".join(flagged))
    lines.append("wrote: " + ", ".join(str(p) for p in written))
    _emit(cfg, payload, lines)
    return EXIT_NONCONVERGENT if flagged else EXIT_OK


# -------------------------------------------------------------- export-dot


def cmd_export_dot(cfg: RunConfig) -> int:
    conventions = _conventions(cfg.events)
    target_path = _require_file(cfg.path)
    target = parse_file(target_path, conventions)
    if cfg.base is not None:
        base = parse_file(_require_file(cfg.base), conventions)
        text = analogy_dot(target, best_analogy(base, target))
    else:
        text = experience_dot(target)
    dest = atomic_write_text(cfg.out_dir / (target_path.stem + ".dot"), text)
    if cfg.fmt == "dot":
        print(text, end="")
    else:
        print(f"wrote {dest}")
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--out", default=SUPPRESS, metavar="DIR",
        help="directory for written artifacts (default: current directory)",
    )
    shared.add_argument(
        "--format", default=SUPPRESS, choices=("text", "json", "dot"),
        help="console report format (default: text)",
    )
    shared.add_argument(
        "--seed", type=int, default=SUPPRESS,
        help="random seed (default: 7)",
    )
    shared.add_argument(
        "--config", default=SUPPRESS, metavar="FILE",
        help="JSON file of option defaults; unknown keys are rejected",
    )

    parser = argparse.ArgumentParser(
        prog="analogist",
        description="Analogical rationale synthesis over micro-theories,"
        " plus a small behavior simulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser(
        "validate", parents=[shared],
        help="parse micro-theory files and report their contents",
    )
    p.add_argument("paths", nargs="+", metavar="FILE")
    p.add_argument("--events", default=SUPPRESS, metavar="FILE",
                   help="event vocabulary, one name per line")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser(
        "match", parents=[shared],
        help="map one experience onto another and list the gmaps",
    )
    p.add_argument("base", metavar="BASE_FILE")
    p.add_argument("target", metavar="TARGET_FILE")
    p.add_argument("--events", default=SUPPRESS, metavar="FILE",
                   help="event vocabulary; enables kept/discarded statuses")
    p.add_argument("--merge-cap", type=int, default=SUPPRESS, metavar="N",
                   help="abort merging beyond this many partial states")
    p.add_argument("--base-weight", type=float, default=SUPPRESS, metavar="W",
                   help="score added for every expression match")
    p.add_argument("--trickle-down", type=float, default=SUPPRESS, metavar="W",
                   help="fraction of a parent's weight passed to its children")
    p.set_defaults(handler=cmd_match)

    p = sub.add_parser(
        "order", parents=[shared],
        help="rank a manifest's bases by the ordering heuristic",
    )
    p.add_argument("manifest", metavar="MANIFEST")
    p.set_defaults(handler=cmd_order)

    p = sub.add_parser(
        "synthesize", parents=[shared],
        help="run rationale synthesis over a manifest",
    )
    p.add_argument("manifest", metavar="MANIFEST")
    p.add_argument("--dot", action="store_true", default=SUPPRESS,
                   help="also write the final target as a DOT graph")
    p.set_defaults(handler=cmd_synthesize)

    p = sub.add_parser(
        "train", parents=[shared],
        help="train a tabular policy for one scenario",
    )
    p.add_argument("scenario", metavar="SCENARIO")
    p.add_argument("--episodes", type=int, default=SUPPRESS, metavar="N")
    p.add_argument("--eval-episodes", type=int, default=SUPPRESS, metavar="N")
    p.add_argument("--min-goal-rate", type=float, default=SUPPRESS, metavar="R",
                   help="flag the run (exit 4) when the eval rate is lower")
    p.set_defaults(handler=cmd_train)

    p = sub.add_parser(
        "simulate", parents=[shared],
        help="roll a trained policy and write observation traces",
    )
    p.add_argument("scenario", metavar="SCENARIO")
    p.add_argument("--policy", default=SUPPRESS, metavar="FILE",
                   help="policy JSON written by train")
    p.add_argument("--count", type=int, default=SUPPRESS, metavar="N",
                   help="number of rollouts, seeded seed, seed+1, ...")
    p.add_argument("--epsilon", type=float, default=SUPPRESS, metavar="E",
                   help="exploration rate during the rollout")
    p.add_argument("--step-cap", type=int, default=SUPPRESS, metavar="N")
    p.add_argument("--suffix", default=SUPPRESS, metavar="S",
                   help="entity-name suffix in the micro-theory export")
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser(
        "chronicle", parents=[shared],
        help="cluster trace files into representative chronologies",
    )
    p.add_argument("traces", nargs="+", metavar="TRACE_JSON")
    p.add_argument("--threshold", type=float, default=SUPPRESS, metavar="T",
                   help="absorption distance for clustering")
    p.set_defaults(handler=cmd_chronicle)

    p = sub.add_parser(
        "evaluate", parents=[shared],
        help="train every scenario and build the confusion matrix",
    )
    p.add_argument("--episodes", type=int, default=SUPPRESS, metavar="N")
    p.add_argument("--rollout-count", type=int, default=SUPPRESS, metavar="N",
                   help="rollouts per behavior used for clustering")
    p.add_argument("--threshold", type=float, default=SUPPRESS, metavar="T")
    p.add_argument("--epsilon", type=float, default=SUPPRESS, metavar="E")
    p.add_argument("--eval-seed", type=int, default=SUPPRESS, metavar="N",
                   help="first seed of the held-out greedy eval rollouts")
    p.add_argument("--eval-count", type=int, default=SUPPRESS, metavar="N")
    p.add_argument("--min-goal-rate", type=float, default=SUPPRESS, metavar="R")
    p.set_defaults(handler=cmd_evaluate)

    p = sub.add_parser(
        "export-dot", parents=[shared],
        help="write an experience (optionally with analogy overlay) as DOT",
    )
    p.add_argument("path", metavar="FILE")
    p.add_argument("--base", default=SUPPRESS, metavar="FILE",
                   help="overlay the best analogy from this base, dashed")
    p.add_argument("--events", default=SUPPRESS, metavar="FILE")
    p.set_defaults(handler=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return EXIT_USAGE if code == 2 else code

    values = dict(vars(namespace))
    handler = values.pop("handler")
    command = values.pop("command")
    try:
        cfg = build_run_config(command, values)
        if cfg.fmt == "dot" and command != "export-dot":
            raise UsageError("--format dot is only available for export-dot")
        return handler(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ManifestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MergeLimitError as exc:
        print(
            f"computation limit: explored {exc.states} partial states,"
            f" cap {exc.cap}",
            file=sys.stderr,
        )
        return EXIT_LIMIT
    except ConvergenceError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
