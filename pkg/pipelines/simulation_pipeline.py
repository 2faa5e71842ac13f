"""Scenario loading, preparation presets and interrogation runs."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd
from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from config.settings import settings
from schemas.request_schemas import Scenario
from tools.bloch_state import BlochState
from tools.error_handler import GbitError, ScenarioError
from tools.interrogation import Interrogation, answer_frequencies, run_many
from tools.pauli_oracle import DensityMatrix, bloch_to_density, prepare_from_answers, totally_mixed
from tools.question_algebra import GbitKind, QuestionIndex, SystemKind
from tools.tomography import run_tomography

logger = logging.getLogger(__name__)

# generator answers pinning the preset states (all yes)
PRESET_ANSWERS: Dict[str, Dict[str, bool]] = {
    "bell": {"11": True, "22": True},
    "ghz": {"211": True, "121": True, "112": True},
}


@dataclass
class SimulationResult:
    scenario: Scenario
    seed: int
    records: List[BaseModel] = field(default_factory=list)
    summary: str = ""

    def to_json_lines(self) -> str:
        return "".join(record.model_dump_json() + "\n" for record in self.records)


def _format_pydantic_errors(exc: PydanticValidationError) -> str:
    parts = []
    for err in exc.errors():
        location = ".".join(str(p) for p in err.get("loc", ()))
        message = err.get("msg", "invalid value")
        parts.append(f"{location}: {message}" if location else message)
    return "; ".join(parts)


def parse_scenario(text: str, source: str = "<scenario>") -> Scenario:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise ScenarioError(f"{source}: top level must be a JSON object")
    try:
        return Scenario.model_validate(raw)
    except PydanticValidationError as exc:
        raise ScenarioError(f"{source}: {_format_pydantic_errors(exc)}") from None


def load_scenario(path: Path) -> Scenario:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"Cannot read scenario {Path(path).name}: {exc.strerror}") from None
    return parse_scenario(text, source=Path(path).name)


def _answers(scenario: Scenario, kind: GbitKind) -> Dict[QuestionIndex, bool]:
    spec = scenario.preparation
    labels: Dict[str, bool] = dict(PRESET_ANSWERS.get(spec.name, {}))
    labels.update({label: answer == "yes" for label, answer in (spec.answers or {}).items()})
    return {QuestionIndex.parse(label, kind): answer for label, answer in labels.items()}


def build_preparation(scenario: Scenario) -> DensityMatrix:
    """Density matrix for the scenario's preparation spec."""
    sys = SystemKind(GbitKind.parse(scenario.kind), scenario.n)
    spec = scenario.preparation
    try:
        if spec.name == "totally-mixed":
            return totally_mixed(sys, spec.p)
        if spec.name == "explicit":
            rho = bloch_to_density(BlochState(kind=sys.kind, n=sys.n, p=spec.p, y=tuple(spec.y)))
            if not rho.is_physical:
                raise ScenarioError("preparation.y: Bloch vector is not a valid density matrix")
            return rho
        rho = prepare_from_answers(sys, _answers(scenario, sys.kind))
        return DensityMatrix(rho.matrix * spec.p, sys)
    except ScenarioError:
        raise
    except GbitError as exc:
        raise ScenarioError(f"preparation: {exc.message}") from None


def _questions(labels: Optional[List[str]], kind: GbitKind) -> Optional[List[QuestionIndex]]:
    if labels is None:
        return None
    try:
        return [QuestionIndex.parse(label, kind) for label in labels]
    except GbitError as exc:
        raise ScenarioError(f"questions: {exc.message}") from None


def run_scenario(scenario: Scenario, seed: Optional[int] = None, shots: Optional[int] = None) -> SimulationResult:
    """Single-shot runs or tomography as the scenario's mode asks."""
    kind = GbitKind.parse(scenario.kind)
    sys = SystemKind(kind, scenario.n)
    seed = seed if seed is not None else (scenario.seed if scenario.seed is not None else settings.default_seed)
    rho = build_preparation(scenario)
    logger.info("Scenario %s/%s on %s with seed %d", scenario.mode, scenario.preparation.name, sys, seed)

    if scenario.mode == "single-shot":
        script = _questions(scenario.script, kind)
        records = run_many(Interrogation(sys, rho, tuple(script), seed), scenario.runs)
        entries = [entry for record in records for entry in record.entries]
        frame = pd.DataFrame(answer_frequencies(records), columns=["step", "question", "yes", "runs", "frequency"])
        return SimulationResult(scenario, seed, entries, frame.to_string(index=False) + "\n")

    report = run_tomography(
        rho,
        shots or scenario.shots,
        _questions(scenario.questions, kind),
        seed=seed,
        mode=scenario.tomography_mode,
    )
    frame = pd.DataFrame(
        [e.model_dump() for e in report.estimates],
        columns=["question", "yes_count", "shots", "y_hat", "std_error", "y_true", "within_band"],
    )
    summary = frame.to_string(index=False) + "\n"
    if report.flagged:
        summary += f"outside {report.band:.4f} band: {', '.join(report.flagged)}\n"
    return SimulationResult(scenario, seed, list(report.estimates), summary)


__all__ = ["PRESET_ANSWERS", "SimulationResult", "build_preparation", "load_scenario", "parse_scenario", "run_scenario"]
