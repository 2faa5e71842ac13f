"""Multiple-shot tomography: yes-frequencies over fresh copies of one preparation."""

from __future__ import annotations

import logging
import math
from typing import List, Literal, Optional, Sequence

import numpy as np

from config.settings import settings
from schemas.response_schemas import TomographyEstimate, TomographyReport
from tools.bloch_state import BlochState
from tools.error_handler import ValidationError
from tools.interrogation import answer_probability, shot_rng, snapshot
from tools.pauli_oracle import DensityMatrix
from tools.performance_monitor import performance_monitor
from tools.question_algebra import QuestionIndex, enumerate_complete_set

logger = logging.getLogger(__name__)

TomographyMode = Literal["per-question", "round-robin"]


def _yes_counts_per_question(probabilities: np.ndarray, n_shots: int, seed: int) -> np.ndarray:
    # question k draws its whole batch from stream k
    return np.array([shot_rng(seed, k).binomial(n_shots, y) for k, y in enumerate(probabilities)])


def _yes_counts_round_robin(probabilities: np.ndarray, n_shots: int, seed: int) -> np.ndarray:
    # shot s asks question s mod m on a fresh copy, drawing from stream s
    m = len(probabilities)
    counts = np.zeros(m, dtype=int)
    for s in range(n_shots * m):
        k = s % m
        counts[k] += shot_rng(seed, s).random() < probabilities[k]
    return counts


@performance_monitor("tomography.run_tomography")
def run_tomography(
    preparation: DensityMatrix,
    n_shots: int,
    question_set: Optional[Sequence[QuestionIndex]] = None,
    seed: int = 0,
    mode: TomographyMode = "per-question",
) -> TomographyReport:
    """Estimate y_i as empirical yes-frequencies with standard errors sqrt(y(1-y)/n)."""
    if n_shots < 1:
        raise ValidationError(f"n_shots must be at least 1, got {n_shots}")
    complete = enumerate_complete_set(preparation.system)
    questions: List[QuestionIndex] = list(complete) if question_set is None else list(question_set)
    if not questions:
        raise ValidationError("Tomography needs at least one question")
    for q in questions:
        if q not in complete:
            raise ValidationError(f"{q} does not belong to {preparation.system}")

    probabilities = np.array([answer_probability(preparation, q) for q in questions])
    if mode == "per-question":
        counts = _yes_counts_per_question(probabilities, n_shots, seed)
    elif mode == "round-robin":
        counts = _yes_counts_round_robin(probabilities, n_shots, seed)
    else:
        raise ValidationError(f"Unknown tomography mode '{mode}'")

    band = settings.frequency_band / math.sqrt(n_shots)
    estimates = []
    for q, count, y_true in zip(questions, counts, probabilities):
        y_hat = int(count) / n_shots
        deviation = abs(y_hat - y_true)
        estimates.append(
            TomographyEstimate(
                question=q.label,
                yes_count=int(count),
                shots=n_shots,
                y_hat=y_hat,
                std_error=math.sqrt(y_hat * (1 - y_hat) / n_shots),
                y_true=float(y_true),
                deviation=float(deviation),
                within_band=bool(deviation <= band),
            )
        )

    estimated_state = None
    if sorted(questions) == list(complete):
        by_label = {e.question: e.y_hat for e in estimates}
        p = preparation.trace
        y = tuple(p * by_label[q.label] for q in complete)
        estimated_state = snapshot(BlochState(kind=preparation.system.kind, n=preparation.system.n, p=p, y=y))

    report = TomographyReport(
        kind=preparation.system.kind.value,
        n=preparation.system.n,
        mode=mode,
        seed=seed,
        shots_per_question=n_shots,
        band=band,
        estimates=estimates,
        estimated_state=estimated_state,
    )
    if report.flagged:
        logger.warning("Tomography estimates outside the %.1f/sqrt(n) band: %s", settings.frequency_band, report.flagged)
    return report


__all__ = ["TomographyMode", "run_tomography"]
