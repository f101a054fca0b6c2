"""End-to-end checks of the command line, driven in process through main().

One subprocess smoke test makes sure the installed entry point actually
starts; everything else calls main(argv) directly so coverage and debugging
stay simple.
"""

import csv
import json
import subprocess
import sys
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator

from analogist import corpus_path
from analogist.cli.main import main

DOCS = Path(__file__).resolve().parent.parent / "docs"
MANIFEST = corpus_path("gas_station_manifest.json")
EVENTS = corpus_path("events.txt")

GAS_ORDER = ["gas_station", "dark_alley", "dog_chase", "car_fire"]

SYNTH_FILES = (
    "synthesis_result.json",
    "final_target.mt",
    "iterations.csv",
    "weights.csv",
    "hypotheses.png",
)


def validator(name):
    data = json.loads((DOCS / f"{name}.schema.json").read_text(encoding="utf-8"))
    Draft202012Validator.check_schema(data)
    return Draft202012Validator(data)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


@pytest.fixture(scope="module")
def slumber_policy(tmp_path_factory):
    out = tmp_path_factory.mktemp("train_slumber")
    assert main(["train", "slumber", "--out", str(out)]) == 0
    return out / "policy_slumber.json"


@pytest.fixture(scope="module")
def slumber_traces(tmp_path_factory, slumber_policy):
    out = tmp_path_factory.mktemp("traces_slumber")
    code = main([
        "simulate", "slumber", "--policy", str(slumber_policy),
        "--count", "10", "--seed", "7", "--out", str(out),
    ])
    assert code == 0
    return sorted(out.glob("trace_slumber_*.json"))


@pytest.fixture(scope="module")
def synth_out(tmp_path_factory):
    out = tmp_path_factory.mktemp("synth")
    assert main(["synthesize", str(MANIFEST), "--out", str(out), "--dot"]) == 0
    return out


@pytest.fixture(scope="module")
def eval_out(tmp_path_factory):
    out = tmp_path_factory.mktemp("confusion")
    assert main(["evaluate", "--out", str(out)]) == 0
    return out


# ---------------------------------------------------------------- validate


def test_validate_text_report(capsys):
    code, out, err = run(capsys, "validate", corpus_path("slumber.mt"))
    assert code == 0
    assert err == ""
    assert "slumber.mt: valid" in out
    assert "facts:" in out and "declarations:" in out


def test_validate_json_payload(capsys):
    code, payload, _ = run_json(capsys, "validate", corpus_path("gas_station.mt"))
    assert code == 0
    assert payload["valid"] is True
    (entry,) = payload["files"]
    assert entry["status"] == "valid"
    assert entry["facts"] > 0 and entry["edges"] > 0
    names = [d["name"] for d in entry["declarations"]]
    assert names == sorted(names)
    assert "customer_gsMt" in entry["entities"]


def test_validate_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "broken.mt"
    bad.write_text("(want gas customer\n", encoding="utf-8")
    code, payload, _ = run_json(capsys, "validate", bad)
    assert code == 2
    assert payload["valid"] is False
    (entry,) = payload["files"]
    assert entry["status"] == "error"
    assert isinstance(entry["line"], int) and isinstance(entry["column"], int)


def test_validate_missing_file_exit_1(capsys, tmp_path):
    code, out, err = run(capsys, "validate", tmp_path / "absent.mt")
    assert code == 1
    assert "no such file" in err


def test_validate_factless_file_warns(capsys, tmp_path):
    quiet = tmp_path / "quiet.mt"
    quiet.write_text("; declarations only\n(declare warmAff 1 attribute)\n",
                     encoding="utf-8")
    code, out, _ = run(capsys, "validate", quiet)
    assert code == 0
    assert "warning: file holds no facts" in out


def test_validate_many_files_one_bad(capsys, tmp_path):
    bad = tmp_path / "broken.mt"
    bad.write_text(")", encoding="utf-8")
    code, payload, _ = run_json(
        capsys, "validate", corpus_path("slumber.mt"), bad
    )
    assert code == 2
    statuses = [e["status"] for e in payload["files"]]
    assert statuses == ["valid", "error"]


# ------------------------------------------------------------------- match


def test_match_json_matches_schema(capsys):
    code, payload, _ = run_json(
        capsys, "match", corpus_path("cold_fire.mt"), corpus_path("slumber.mt")
    )
    assert code == 0
    validator("gmap").validate(payload)
    assert payload["gmap_count"] == 2
    assert [g["score"] for g in payload["gmaps"]] == [0.5, 0.5]
    best = payload["gmaps"][0]
    assert best["entity_bindings"] == [
        ["agent_bfMt", "agent_slMt"],
        ["fire_bfMt", "bed_slMt"],
    ]
    assert {h["status"] for h in payload["hypotheses"]} == {"candidate"}


def test_match_events_enable_statuses(capsys):
    code, payload, _ = run_json(
        capsys, "match", corpus_path("car_fire.mt"),
        corpus_path("novel_target.mt"), "--events", EVENTS,
    )
    assert code == 0
    statuses = {h["status"] for h in payload["hypotheses"]}
    assert "kept" in statuses
    assert "discarded-unobserved-event" in statuses


def test_match_disjoint_vocabulary(capsys, tmp_path):
    a = tmp_path / "a.mt"
    b = tmp_path / "b.mt"
    a.write_text("(rough stove)\n", encoding="utf-8")
    b.write_text("(shiny wheel)\n", encoding="utf-8")
    code, payload, _ = run_json(capsys, "match", a, b)
    assert code == 0
    assert payload["gmap_count"] == 0
    assert payload["gmaps"] == [] and payload["hypotheses"] == []


def test_match_merge_cap_exit_3(capsys):
    code, out, err = run(
        capsys, "match", corpus_path("cold_fire.mt"), corpus_path("slumber.mt"),
        "--merge-cap", "1",
    )
    assert code == 3
    assert "computation limit" in err and "cap 1" in err


def test_match_merge_cap_via_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"merge_cap": 1}', encoding="utf-8")
    code, out, err = run(
        capsys, "match", corpus_path("cold_fire.mt"), corpus_path("slumber.mt"),
        "--config", cfg,
    )
    assert code == 3


def test_match_flag_beats_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"merge_cap": 1}', encoding="utf-8")
    code, _, _ = run(
        capsys, "match", corpus_path("cold_fire.mt"), corpus_path("slumber.mt"),
        "--config", cfg, "--merge-cap", "1000000",
    )
    assert code == 0


# ------------------------------------------------------------------- order


def test_order_json(capsys):
    code, payload, _ = run_json(capsys, "order", MANIFEST)
    assert code == 0
    assert payload["ordering"] == GAS_ORDER
    assert [w["rank"] for w in payload["weights"]] == [1, 2, 3, 4]
    last = payload["weights"][-1]
    assert last["base"] == "car_fire"
    assert last["skolem_risk"] == 1
    assert last["unanchored"] == ["car_cfMt"]


def test_order_text(capsys):
    code, out, _ = run(capsys, "order", MANIFEST)
    assert code == 0
    assert "ordering: gas_station, dark_alley, dog_chase, car_fire" in out


# -------------------------------------------------------------- synthesize


def test_synthesize_artifacts(synth_out):
    for name in SYNTH_FILES + ("final_target.dot",):
        assert (synth_out / name).is_file(), name
    assert (synth_out / "hypotheses.png").read_bytes()[:4] == b"\x89PNG"
    assert (synth_out / "final_target.dot").read_text().startswith("digraph")


def test_synthesize_payload(synth_out):
    payload = json.loads((synth_out / "synthesis_result.json").read_text())
    validator("synthesis_result").validate(payload)
    assert payload["passes"] == 2
    assert payload["skolem_introduced"] is False
    assert payload["ordering"] == GAS_ORDER
    assert len(payload["final_facts"]) == 20
    assert len(payload["iterations"]) == 8


def test_synthesize_final_target_revalidates(capsys, synth_out):
    code, out, _ = run(capsys, "validate", synth_out / "final_target.mt")
    assert code == 0
    assert "valid" in out


def test_synthesize_csv_contents(synth_out):
    with open(synth_out / "iterations.csv", newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == [
        "pass", "base", "gmap_score", "generated", "kept",
        "discarded_event", "discarded_duplicate", "target_size_after",
    ]
    assert len(rows) == 9
    assert [r[1] for r in rows[1:5]] == GAS_ORDER

    with open(synth_out / "weights.csv", newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0][:2] == ["rank", "base"]
    assert [r[1] for r in rows[1:]] == GAS_ORDER


def test_synthesize_reruns_are_byte_identical(synth_out, tmp_path):
    again = tmp_path / "again"
    assert main(["synthesize", str(MANIFEST), "--out", str(again), "--dot"]) == 0
    for name in SYNTH_FILES + ("final_target.dot",):
        assert (again / name).read_bytes() == (synth_out / name).read_bytes(), name


def test_synthesize_pass_budget_exit_4(capsys, tmp_path):
    data = json.loads(MANIFEST.read_text(encoding="utf-8"))
    data["max_passes"] = 1
    data["bases"] = [str(corpus_path(b)) for b in data["bases"]]
    data["target"] = str(corpus_path(data["target"]))
    data["events"] = str(EVENTS)
    path = tmp_path / "one_pass.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    code, out, err = run(capsys, "synthesize", path, "--out", tmp_path)
    assert code == 4
    assert "non-convergence" in err


def test_synthesize_bad_manifest_exit_1(capsys, tmp_path):
    path = tmp_path / "empty_bases.json"
    path.write_text(
        json.dumps({
            "version": 1,
            "bases": [],
            "target": str(corpus_path("novel_target.mt")),
        }),
        encoding="utf-8",
    )
    code, out, err = run(capsys, "synthesize", path, "--out", tmp_path)
    assert code == 1
    assert "error:" in err


# ------------------------------------------------------------------- train


def test_train_writes_policy(slumber_policy):
    data = json.loads(slumber_policy.read_text(encoding="utf-8"))
    validator("policy").validate(data)
    assert data["scenario"] == "slumber"
    assert len(data["q"]) == 10


def test_train_json_payload(capsys, tmp_path):
    code, payload, _ = run_json(
        capsys, "train", "slumber", "--episodes", "300",
        "--eval-episodes", "40", "--out", tmp_path,
    )
    assert code == 0
    assert payload["eval_goal_rate"] == 1.0
    assert payload["flagged"] is False
    assert payload["q_size"] > 0
    assert (tmp_path / "policy_slumber.json").is_file()


def test_train_below_goal_rate_exit_4(capsys, tmp_path):
    code, payload, _ = run_json(
        capsys, "train", "dinner", "--episodes", "0",
        "--eval-episodes", "20", "--out", tmp_path,
    )
    assert code == 4
    assert payload["flagged"] is True
    assert (tmp_path / "policy_dinner.json").is_file()


def test_train_unknown_scenario_exit_1(capsys, tmp_path):
    code, out, err = run(capsys, "train", "juggling", "--out", tmp_path)
    assert code == 1
    assert "unknown scenario" in err


# ---------------------------------------------------------------- simulate


def test_simulate_writes_traces(capsys, slumber_traces):
    assert len(slumber_traces) == 10
    seeds = sorted(int(p.stem.rsplit("_", 1)[1]) for p in slumber_traces)
    assert seeds == list(range(7, 17))
    first = json.loads(slumber_traces[0].read_text(encoding="utf-8"))
    validator("trace").validate(first)
    mt = slumber_traces[0].with_suffix(".mt")
    code, out, _ = run(capsys, "validate", mt, "--events", EVENTS)
    assert code == 0


def test_simulate_policy_mismatch_exit_1(capsys, slumber_policy, tmp_path):
    code, out, err = run(
        capsys, "simulate", "dinner", "--policy", slumber_policy,
        "--out", tmp_path,
    )
    assert code == 1
    assert "was trained for 'slumber'" in err


def test_simulate_needs_policy(capsys, tmp_path):
    code, out, err = run(capsys, "simulate", "slumber", "--out", tmp_path)
    assert code == 1
    assert "--policy" in err


def test_simulate_rejects_junk_policy(capsys, tmp_path):
    junk = tmp_path / "junk.json"
    junk.write_text("{}", encoding="utf-8")
    code, out, err = run(
        capsys, "simulate", "slumber", "--policy", junk, "--out", tmp_path
    )
    assert code == 1
    assert "bad policy file" in err


# --------------------------------------------------------------- chronicle


def test_chronicle_representatives(capsys, slumber_traces, tmp_path):
    code, payload, _ = run_json(
        capsys, "chronicle", *slumber_traces, "--out", tmp_path
    )
    assert code == 0
    validator("chronology").validate(payload)
    assert payload["scenario"] == "slumber"
    assert payload["trace_count"] == 10
    supports = [r["support"] for r in payload["representatives"]]
    assert supports == [7, 2, 1]
    for i in range(1, 4):
        mt = tmp_path / f"representative_{i}.mt"
        assert mt.is_file()
        assert main(["validate", str(mt), "--events", str(EVENTS)]) == 0
    capsys.readouterr()


def test_chronicle_mixed_scenarios_exit_1(capsys, slumber_traces, tmp_path):
    impostor = tmp_path / "impostor.json"
    data = json.loads(slumber_traces[0].read_text(encoding="utf-8"))
    data["scenario"] = "dinner"
    impostor.write_text(json.dumps(data), encoding="utf-8")
    code, out, err = run(
        capsys, "chronicle", slumber_traces[0], impostor, "--out", tmp_path
    )
    assert code == 1
    assert "multiple scenarios" in err


def test_chronicle_threshold_from_config(capsys, slumber_traces, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"threshold": 1.0}', encoding="utf-8")
    code, payload, _ = run_json(
        capsys, "chronicle", *slumber_traces, "--config", cfg, "--out", tmp_path
    )
    assert code == 0
    assert payload["threshold"] == 1.0
    assert len(payload["representatives"]) == 1
    assert payload["representatives"][0]["support"] == 10


# ---------------------------------------------------------------- evaluate


def test_evaluate_artifacts(eval_out):
    for name in ("confusion.json", "confusion_matrix.csv", "confusion_matrix.png"):
        assert (eval_out / name).is_file(), name
    assert (eval_out / "confusion_matrix.png").read_bytes()[:4] == b"\x89PNG"


def test_evaluate_payload(eval_out):
    payload = json.loads((eval_out / "confusion.json").read_text(encoding="utf-8"))
    validator("confusion").validate(payload)
    assert payload["behaviors"] == [
        "slumber", "dinner", "chopping", "competition", "weather"
    ]
    assert payload["diagonal_min_rows"] == 5
    assert payload["flagged"] == []
    for i, row in enumerate(payload["matrix"]):
        assert row[i] == 0.0
    assert all(rate == 1.0 for rate in payload["goal_rates"].values())


def test_evaluate_csv(eval_out):
    with open(eval_out / "confusion_matrix.csv", newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == [
        "behavior", "slumber", "dinner", "chopping", "competition", "weather"
    ]
    assert [r[0] for r in rows[1:]] == rows[0][1:]
    assert rows[1][1] == "0.0000"


# -------------------------------------------------------------- export-dot


def test_export_dot_writes_file(capsys, tmp_path):
    code, out, _ = run(
        capsys, "export-dot", corpus_path("slumber.mt"), "--out", tmp_path
    )
    assert code == 0
    assert "wrote" in out
    text = (tmp_path / "slumber.dot").read_text(encoding="utf-8")
    assert text.startswith("digraph slumber {")
    assert "shape=box" in text and "shape=ellipse" in text


def test_export_dot_analogy_overlay(capsys, tmp_path):
    code, _, _ = run(
        capsys, "export-dot", corpus_path("novel_target.mt"),
        "--base", corpus_path("car_fire.mt"), "--out", tmp_path,
    )
    assert code == 0
    text = (tmp_path / "novel_target.dot").read_text(encoding="utf-8")
    assert 'label="deduced"' in text
    assert "style=dashed" in text
    assert "skolem_car_cfMt" in text


def test_export_dot_stdout_format(capsys, tmp_path):
    code, out, _ = run(
        capsys, "export-dot", corpus_path("slumber.mt"),
        "--out", tmp_path, "--format", "dot",
    )
    assert code == 0
    assert out.startswith("digraph slumber {")


# ---------------------------------------------------------------- plumbing


def test_config_unknown_key_exit_1(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"bogus": 1}', encoding="utf-8")
    code, out, err = run(
        capsys, "validate", corpus_path("slumber.mt"), "--config", cfg
    )
    assert code == 1
    assert "unknown key 'bogus'" in err


def test_config_missing_file_exit_1(capsys, tmp_path):
    code, out, err = run(
        capsys, "validate", corpus_path("slumber.mt"),
        "--config", tmp_path / "absent.json",
    )
    assert code == 1
    assert "config file not found" in err


def test_config_type_check(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"merge_cap": "lots"}', encoding="utf-8")
    code, out, err = run(
        capsys, "match", corpus_path("cold_fire.mt"), corpus_path("slumber.mt"),
        "--config", cfg,
    )
    assert code == 1
    assert "must be an integer" in err


def test_dot_format_rejected_elsewhere(capsys):
    code, out, err = run(
        capsys, "validate", corpus_path("slumber.mt"), "--format", "dot"
    )
    assert code == 1
    assert "only available for export-dot" in err


def test_no_arguments_is_usage_error(capsys):
    assert main([]) == 1
    capsys.readouterr()


def test_help_smoke_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "analogist.cli.main", "--help"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert "usage: analogist" in proc.stdout
    for name in ("validate", "match", "synthesize", "train", "evaluate"):
        assert name in proc.stdout
