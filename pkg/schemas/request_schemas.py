"""Input schemas: command-line configuration and simulation scenarios."""

from pathlib import Path
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.settings import settings

SUPPORTED_KINDS = ("qubit", "rebit")


def _normalize_kind(value: str) -> str:
    kind = str(value).strip().lower()
    if kind not in SUPPORTED_KINDS:
        raise ValueError(f"Unsupported kind '{value}'. Supported: {', '.join(SUPPORTED_KINDS)}")
    return kind


def _normalize_answer(value: Union[str, bool]) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    answer = str(value).strip().lower()
    if answer not in ("yes", "no"):
        raise ValueError(f"Answers must be 'yes' or 'no', got '{value}'")
    return answer


def _check_label(label: str, n: int) -> str:
    text = str(label).strip()
    if text.startswith("!"):
        raise ValueError(f"Question '{label}': negated labels are not accepted here")
    if not text.isdigit() or len(text) != n or any(c not in "0123" for c in text):
        raise ValueError(f"Question '{label}' must be {n} digits from 0-3")
    if not any(c != "0" for c in text):
        raise ValueError(f"Question '{label}' is the all-zero index")
    return text


def _check_labels(field: str, labels: List[str], n: int) -> List[str]:
    try:
        return [_check_label(label, n) for label in labels]
    except ValueError as exc:
        raise ValueError(f"{field}: {exc}") from None


class CliConfig(BaseModel):
    """Validated command-line configuration."""

    subcommand: Literal["enumerate", "lattice", "verify", "simulate"]
    kind: Optional[str] = Field(default=None, description="qubit or rebit; verify defaults to VERIFY_KINDS")
    n: int = Field(default=1, ge=1, description="Number of gbits")
    seed: Optional[int] = Field(default=None, ge=0, lt=2**64)
    out: Optional[Path] = None
    format: Literal["json", "dot", "table"] = Field(default=settings.default_format)
    shots: Optional[int] = Field(default=None, ge=1)
    scenario: Optional[Path] = None

    @field_validator("kind")
    @classmethod
    def validate_kind(cls, value: Optional[str]) -> Optional[str]:
        return None if value is None else _normalize_kind(value)

    @model_validator(mode="after")
    def validate_subcommand_limits(self) -> "CliConfig":
        if self.subcommand == "lattice" and self.n > settings.lattice_max_n:
            raise ValueError(f"lattice rendering supports n <= {settings.lattice_max_n}, got n={self.n}")
        if self.subcommand == "verify" and self.n > settings.oracle_max_n:
            raise ValueError(f"verify is oracle-backed and supports n <= {settings.oracle_max_n}, got n={self.n}")
        if self.format == "dot" and self.subcommand != "lattice":
            raise ValueError("DOT output is only available for the lattice subcommand")
        if self.subcommand == "simulate" and self.scenario is None:
            raise ValueError("simulate requires --scenario")
        return self

    @property
    def effective_seed(self) -> int:
        return settings.default_seed if self.seed is None else self.seed

    @property
    def kinds(self) -> List[str]:
        if self.kind is not None:
            return [self.kind]
        if self.subcommand == "verify":
            return [_normalize_kind(k) for k in settings.verify_kinds]
        return ["qubit"]


class PreparationSpec(BaseModel):
    """How the interrogated systems are prepared."""

    model_config = ConfigDict(extra="forbid")

    name: Literal["totally-mixed", "pure-assignment", "bell", "ghz", "explicit"]
    answers: Optional[Dict[str, str]] = Field(
        default=None,
        description="Question label -> yes/no, for pure-assignment (and optional overrides of preset answers).",
    )
    y: Optional[List[float]] = Field(default=None, description="Explicit probability vector over the complete set.")
    p: float = Field(default=1.0, ge=0.0, le=1.0)

    @field_validator("answers", mode="before")
    @classmethod
    def normalize_answers(cls, value):
        if value is None:
            return None
        if not isinstance(value, dict):
            raise ValueError("answers must be an object mapping question labels to yes/no")
        return {str(k).strip(): _normalize_answer(v) for k, v in value.items()}

    @model_validator(mode="after")
    def validate_required_fields(self) -> "PreparationSpec":
        if self.name == "pure-assignment" and not self.answers:
            raise ValueError("pure-assignment needs at least one answer")
        if self.name == "explicit" and not self.y:
            raise ValueError("explicit preparation needs the probability vector y")
        if self.name != "explicit" and self.y is not None:
            raise ValueError(f"y is only used by the explicit preparation, not '{self.name}'")
        return self


class Scenario(BaseModel):
    """A simulation scenario file."""

    model_config = ConfigDict(extra="forbid")

    kind: str = "qubit"
    n: int = Field(..., ge=1)
    mode: Literal["single-shot", "tomography"] = "single-shot"
    preparation: PreparationSpec
    script: List[str] = Field(default_factory=list)
    runs: int = Field(default=1, ge=1)
    shots: int = Field(default=settings.default_shots, ge=1)
    questions: Optional[List[str]] = None
    tomography_mode: Literal["per-question", "round-robin"] = "per-question"
    seed: Optional[int] = Field(default=None, ge=0, lt=2**64)

    @field_validator("kind")
    @classmethod
    def validate_kind(cls, value: str) -> str:
        return _normalize_kind(value)

    @model_validator(mode="after")
    def validate_questions(self) -> "Scenario":
        if self.n > settings.oracle_max_n:
            raise ValueError(f"Scenarios are oracle-backed and support n <= {settings.oracle_max_n}")
        self.script = _check_labels("script", self.script, self.n)
        if self.questions is not None:
            if not self.questions:
                raise ValueError("questions must not be empty when given")
            self.questions = _check_labels("questions", self.questions, self.n)
        if self.preparation.answers:
            labels = _check_labels("preparation.answers", list(self.preparation.answers), self.n)
            self.preparation.answers = dict(zip(labels, self.preparation.answers.values()))
        if self.mode == "single-shot" and not self.script:
            raise ValueError("single-shot scenarios need a non-empty script")
        if self.preparation.name == "bell" and self.n != 2:
            raise ValueError("the bell preparation needs n = 2")
        if self.preparation.name == "ghz" and self.n != 3:
            raise ValueError("the ghz preparation needs n = 3")
        return self
