"""Command-line surface: output contracts and exit codes."""

from __future__ import annotations

import json

import cli
from cli import EXIT_FAILED, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main
from pipelines.verification_pipeline import CHECKS, VerificationCheck
from tests.fixtures import write_scenario


def test_enumerate_table(capsys) -> None:
    assert main(["enumerate", "--n", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# qubit n=2 D=15"
    assert len(lines) == 16
    assert lines[1] == "01"


def test_enumerate_json(capsys) -> None:
    assert main(["enumerate", "--kind", "rebit", "--n", "3", "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "rebit"
    assert payload["count"] == 35 == len(payload["indices"])


def test_enumerate_rejects_bad_n(capsys) -> None:
    assert main(["enumerate", "--n", "0"]) == EXIT_USAGE
    assert "[error]" in capsys.readouterr().err


def test_usage_errors() -> None:
    assert main(["enumerate", "--format", "dot"]) == EXIT_USAGE
    assert main(["lattice", "--n", "9"]) == EXIT_USAGE
    assert main(["verify", "--n", "0"]) == EXIT_USAGE
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["enumerate", "--kind", "qutrit"]) == EXIT_USAGE


def test_lattice_dot_to_file(tmp_path) -> None:
    out = tmp_path / "lattice" / "qubit.dot"
    assert main(["lattice", "--n", "2", "--out", str(out)]) == EXIT_OK
    dot = out.read_text(encoding="utf-8")
    assert dot.count("subgraph") == 15
    assert "color=red" in dot


def test_lattice_table_for_rebits(capsys) -> None:
    assert main(["lattice", "--kind", "rebit", "--n", "2", "--format", "table"]) == EXIT_OK
    header = capsys.readouterr().out.splitlines()[0]
    assert header == "# rebit n=2: 9 vertices, 18 edges, 6 triangles"


def test_lattice_json(capsys) -> None:
    assert main(["lattice", "--n", "2", "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["triangles"]) == 15
    assert len(payload["edges"]) == 45


def test_verify_single_qubit(capsys) -> None:
    assert main(["verify", "--kind", "qubit", "--n", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "qubit n=1:" in out


def test_verify_json_report(tmp_path) -> None:
    out = tmp_path / "verify.json"
    assert main(["verify", "--kind", "rebit", "--n", "2", "--format", "json", "--out", str(out)]) == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["kind"] == "rebit"
    assert report["summary"]["failed"] == 0
    names = {c["name"] for c in report["checks"]}
    assert {"lattice", "bell_relation", "rebit_parity", "entanglement"} <= names
    assert "mirror_structure" not in names


def test_verify_output_is_deterministic(tmp_path) -> None:
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for out in (first, second):
        assert main(["verify", "--n", "1", "--seed", "5", "--format", "json", "--out", str(out)]) == EXIT_OK
    assert first.read_text(encoding="utf-8") == second.read_text(encoding="utf-8")


def test_verify_failure_exit_code(monkeypatch) -> None:
    broken = VerificationCheck("broken", "always fails", lambda sys, rng: (False, 1, "forced"))
    monkeypatch.setattr("pipelines.verification_pipeline.CHECKS", CHECKS + (broken,))
    assert main(["verify", "--n", "1"]) == EXIT_FAILED


def test_unexpected_error_has_its_own_exit_code(monkeypatch, capsys) -> None:
    def boom(config):
        raise RuntimeError("disk on fire")

    monkeypatch.setitem(cli.COMMANDS, "enumerate", boom)
    assert main(["enumerate", "--n", "1"]) == EXIT_INTERNAL
    assert EXIT_INTERNAL not in (EXIT_OK, EXIT_FAILED, EXIT_USAGE)
    assert "internal error" in capsys.readouterr().err


def test_simulate_bell_scenario(tmp_path, capsys) -> None:
    scenario = write_scenario(
        tmp_path,
        {"kind": "qubit", "n": 2, "preparation": {"name": "bell"}, "script": ["33"], "runs": 5},
    )
    out = tmp_path / "transcript.jsonl"
    assert main(["simulate", "--scenario", str(scenario), "--out", str(out)]) == EXIT_OK
    entries = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    assert len(entries) == 5
    assert {e["answer"] for e in entries} == {"no"}
    assert [e["run"] for e in entries] == list(range(5))
    assert "33" in capsys.readouterr().out


def test_simulate_tomography_json(tmp_path, capsys) -> None:
    scenario = write_scenario(
        tmp_path,
        {
            "n": 1,
            "mode": "tomography",
            "preparation": {"name": "pure-assignment", "answers": {"3": "yes"}},
            "shots": 50,
        },
    )
    assert main(["simulate", "--scenario", str(scenario), "--format", "json", "--shots", "200"]) == EXIT_OK
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [r["question"] for r in rows] == ["1", "2", "3"]
    assert all(r["shots"] == 200 for r in rows)
    assert rows[2]["y_hat"] == 1.0


def test_simulate_reports_malformed_scenarios(tmp_path, capsys) -> None:
    broken = tmp_path / "broken.json"
    broken.write_text('{"n": 2,\n  "preparation": }', encoding="utf-8")
    assert main(["simulate", "--scenario", str(broken)]) == EXIT_USAGE
    assert "line 2" in capsys.readouterr().err

    wrong = write_scenario(tmp_path, {"n": 2, "preparation": {"name": "bell"}, "script": ["3"]}, "wrong.json")
    assert main(["simulate", "--scenario", str(wrong)]) == EXIT_USAGE
    assert "script" in capsys.readouterr().err

    assert main(["simulate", "--scenario", str(tmp_path / "missing.json")]) == EXIT_USAGE


def test_simulate_rejects_incompatible_answers(tmp_path, capsys) -> None:
    scenario = write_scenario(
        tmp_path,
        {"n": 1, "preparation": {"name": "pure-assignment", "answers": {"1": "yes", "3": "yes"}}, "script": ["1"]},
    )
    assert main(["simulate", "--scenario", str(scenario)]) == EXIT_USAGE
    assert "SCENARIO_ERROR" in capsys.readouterr().err
