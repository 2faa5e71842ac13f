"""Report and payload schemas for the gbit inference toolbox."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class ErrorReport(BaseModel):
    """Structured error payload."""

    error_category: str
    failed_step: Optional[str] = None
    error_message: str


class QuestionSetPayload(BaseModel):
    kind: str
    n: int
    count: int
    indices: List[str] = Field(default_factory=list)


class TrianglePayload(BaseModel):
    members: List[str]
    parity: str


class LatticePayload(BaseModel):
    kind: str
    n: int
    vertices: List[str] = Field(default_factory=list)
    edges: List[List[str]] = Field(default_factory=list)
    triangles: List[TrianglePayload] = Field(default_factory=list)


class BlochSnapshot(BaseModel):
    """Bloch state as recorded in reports: {kind, n, p, y} plus its information content."""

    kind: str
    n: int
    p: float
    y: List[float]
    information: float


class TranscriptEntry(BaseModel):
    """One answered question of a single-shot interrogation."""

    run: int
    step: int
    question: str
    answer: str
    pre_probability: float
    post_state: BlochSnapshot


class TranscriptRecord(BaseModel):
    kind: str
    n: int
    seed: int
    run: int = 0
    entries: List[TranscriptEntry] = Field(default_factory=list)

    @property
    def answers(self) -> List[str]:
        return [e.answer for e in self.entries]


class TomographyEstimate(BaseModel):
    question: str
    yes_count: int
    shots: int
    y_hat: float
    std_error: float
    y_true: float
    deviation: float
    within_band: bool


class TomographyReport(BaseModel):
    kind: str
    n: int
    mode: str
    seed: int
    shots_per_question: int
    band: float
    estimates: List[TomographyEstimate] = Field(default_factory=list)
    estimated_state: Optional[BlochSnapshot] = None

    @property
    def flagged(self) -> List[str]:
        return [e.question for e in self.estimates if not e.within_band]


class AxiomCheck(BaseModel):
    name: str
    statistic: float
    bound: float
    passed: bool
    trials: int
    detail: str = ""


class AxiomReport(BaseModel):
    kind: str
    n: int
    trials: int
    seed: int
    checks: List[AxiomCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class CheckResult(BaseModel):
    name: str
    claim: str
    passed: bool
    checked: int = 0
    detail: str = ""


class VerificationReport(BaseModel):
    kind: str
    n: int
    seed: int
    checks: List[CheckResult] = Field(default_factory=list)
    summary: Dict[str, int] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)
