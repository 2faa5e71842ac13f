"""Bloch-vector states and the quadratic information measure."""

from __future__ import annotations

import logging
from enum import Enum
from typing import Iterable, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from config.settings import settings
from tools.error_handler import InvalidStateError, ValidationError
from tools.question_algebra import (
    GbitKind,
    QuestionIndex,
    SystemKind,
    enumerate_complete_set,
)

logger = logging.getLogger(__name__)


class InfoClassification(str, Enum):
    PURE = "pure"
    MIXED = "mixed"
    TOTALLY_MIXED = "totally-mixed"


def clamp_presence(p: float) -> float:
    """Presence probability clipped to [0, 1]; round-off beyond classify_tol is an error."""
    p = float(p)
    tol = settings.classify_tol
    if not -tol <= p <= 1.0 + tol:
        raise ValidationError(f"Presence probability must lie in [0, 1], got {p}")
    return min(max(p, 0.0), 1.0)


class BlochState(BaseModel):
    """Probabilities y_i of 'yes' over the ordered complete set, with presence probability p.

    The Bloch vector is r = 2y - p; with p = 1 this is the usual 2y - 1.
    """

    model_config = ConfigDict(frozen=True)

    kind: GbitKind
    n: int
    p: float = 1.0
    y: Tuple[float, ...]

    @field_validator("kind", mode="before")
    @classmethod
    def parse_kind(cls, value):
        return GbitKind.parse(value)

    @field_validator("p", mode="after")
    @classmethod
    def clamp_presence(cls, value: float) -> float:
        return clamp_presence(value)

    @model_validator(mode="after")
    def check_probabilities(self) -> "BlochState":
        if self.n < 1:
            raise ValidationError(f"Number of gbits must be positive, got {self.n}")
        expected = self.system.dimension
        if len(self.y) != expected:
            raise ValidationError(f"{self.system} needs {expected} probabilities, got {len(self.y)}")
        y = np.asarray(self.y, dtype=float)
        tol = settings.classify_tol
        if np.any(y < -tol) or np.any(y > self.p + tol):
            raise InvalidStateError(f"Probabilities must lie in [0, p={self.p}]", failed_step="BLOCH_STATE")
        return self

    @property
    def system(self) -> SystemKind:
        return SystemKind(self.kind, self.n)

    @property
    def y_array(self) -> np.ndarray:
        return np.asarray(self.y, dtype=float)

    @property
    def bloch_vector(self) -> np.ndarray:
        return 2 * self.y_array - self.p

    def probability(self, q: QuestionIndex) -> float:
        return self.y[enumerate_complete_set(self.system).position(q)]

    @classmethod
    def from_bloch_vector(cls, sys: SystemKind, r: Sequence[float], p: float = 1.0) -> "BlochState":
        """Inverse of bloch_vector; round-off just outside [0, p] is clipped."""
        r = np.asarray(r, dtype=float)
        p = clamp_presence(p)
        y = (r + p) / 2
        tol = settings.classify_tol
        if np.any(y < -tol) or np.any(y > p + tol):
            raise InvalidStateError("Bloch vector leaves the probability box [0, p]", failed_step="BLOCH_STATE")
        y = np.clip(y, 0.0, p)
        return cls(kind=sys.kind, n=sys.n, p=float(p), y=tuple(float(v) for v in y))

    @classmethod
    def no_information(cls, sys: SystemKind, p: float = 1.0) -> "BlochState":
        """Every question answered yes with probability one half (scaled by p)."""
        return cls(kind=sys.kind, n=sys.n, p=p, y=(p / 2,) * sys.dimension)

    def to_payload(self) -> dict:
        return self.model_dump(mode="json")


def information_single(y_i: float) -> float:
    """Information (2y - 1)^2 in bits carried by one question's probability."""
    if not 0.0 <= y_i <= 1.0:
        raise ValidationError(f"Probability must lie in [0, 1], got {y_i}")
    return (2 * y_i - 1) ** 2


def question_information(state: BlochState, q: QuestionIndex) -> float:
    """alpha for one question, using the p-scaled Bloch component."""
    r = 2 * state.probability(q) - state.p
    return float(r * r)


def information_vector(state: BlochState) -> np.ndarray:
    return state.bloch_vector ** 2


def information_total(state: BlochState) -> float:
    """Squared length of the (p-scaled) Bloch vector."""
    return float(np.sum(information_vector(state)))


def max_information(sys: SystemKind, p: float = 1.0) -> float:
    return p * p * (2 ** sys.n - 1)


def classify(state: BlochState) -> InfoClassification:
    info = information_total(state)
    ceiling = max_information(state.system, state.p)
    if info > ceiling + settings.max_info_slack:
        raise InvalidStateError(
            f"Information {info:.6f} exceeds the maximum {ceiling:.6f} bits for {state.system}",
            failed_step="CLASSIFY",
        )
    if abs(info - ceiling) <= settings.classify_tol:
        return InfoClassification.PURE
    if info <= settings.classify_tol:
        return InfoClassification.TOTALLY_MIXED
    return InfoClassification.MIXED


def _check_same_system(s1: BlochState, s2: BlochState) -> None:
    if s1.system != s2.system:
        raise ValidationError(f"States belong to different systems: {s1.system} vs {s2.system}")


def convex_mix(lam: float, s1: BlochState, s2: BlochState) -> BlochState:
    """Componentwise lam * s1 + (1 - lam) * s2 over y and p."""
    if not 0.0 <= lam <= 1.0:
        raise ValidationError(f"Mixing weight must lie in [0, 1], got {lam}")
    _check_same_system(s1, s2)
    y = lam * s1.y_array + (1 - lam) * s2.y_array
    p = lam * s1.p + (1 - lam) * s2.p
    return BlochState(kind=s1.kind, n=s1.n, p=p, y=tuple(float(v) for v in y))


def scaled(state: BlochState, lam: float) -> BlochState:
    """Shrink (or stretch) the Bloch vector by lam at fixed p."""
    return BlochState.from_bloch_vector(state.system, lam * state.bloch_vector, state.p)


def _embed(q: QuestionIndex, keep: Sequence[int], n: int) -> QuestionIndex:
    indices = [0] * n
    for a, mu in zip(keep, q.indices):
        indices[a] = mu
    return QuestionIndex(tuple(indices), q.kind)


def marginal_bloch(state: BlochState, keep: Iterable[int]) -> BlochState:
    """Restriction to the gbits in `keep`: the questions supported inside them."""
    keep = sorted(set(keep))
    if not keep or keep[0] < 0 or keep[-1] >= state.n:
        raise ValidationError(f"Cannot keep gbits {keep} of {state.system}")
    sub = SystemKind(state.kind, len(keep))
    y = [state.probability(_embed(q, keep, state.n)) for q in enumerate_complete_set(sub)]
    return BlochState(kind=state.kind, n=sub.n, p=state.p, y=tuple(y))


def rebit_litmus(state: BlochState) -> float:
    """alpha of Q_33 for two rebits; with only Q_33 known every individual y equals p/2."""
    if state.kind is not GbitKind.REBIT or state.n != 2:
        raise ValidationError("The rebit litmus applies to two-rebit states")
    return question_information(state, QuestionIndex((3, 3), GbitKind.REBIT))


def random_ball_state(sys: SystemKind, rng: np.random.Generator, p: float = 1.0) -> BlochState:
    """Uniform direction with |r| <= p, so every rotation of r stays inside the probability box."""
    r = rng.normal(size=sys.dimension)
    r *= p * rng.uniform() / np.linalg.norm(r)
    return BlochState.from_bloch_vector(sys, r, p)


__all__ = [
    "BlochState",
    "InfoClassification",
    "classify",
    "convex_mix",
    "information_single",
    "information_total",
    "marginal_bloch",
    "max_information",
    "question_information",
    "random_ball_state",
    "rebit_litmus",
    "scaled",
]
