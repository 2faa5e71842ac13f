"""Single-shot interrogation of prepared systems.

Randomness comes from numpy's PCG64 generator. Stream k of a seed is seeded
with seed XOR blake2b_64(k), so every run, shot or question batch draws from
its own reproducible stream regardless of execution order.
"""

from __future__ import annotations

import hashlib
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.settings import settings
from schemas.response_schemas import BlochSnapshot, TranscriptEntry, TranscriptRecord
from tools.bloch_state import BlochState, information_total
from tools.error_handler import ValidationError
from tools.pauli_oracle import DensityMatrix, born_probability, density_to_bloch, lueders_update
from tools.performance_monitor import performance_monitor
from tools.question_algebra import QuestionIndex, SystemKind

logger = logging.getLogger(__name__)

SEED_MASK = (1 << 64) - 1


def stream_seed(seed: int, k: int) -> int:
    digest = hashlib.blake2b(int(k).to_bytes(8, "little", signed=False), digest_size=8).digest()
    return (int(seed) & SEED_MASK) ^ int.from_bytes(digest, "little")


def shot_rng(seed: int, k: int) -> np.random.Generator:
    """Independent generator for stream k of the given seed."""
    return np.random.Generator(np.random.PCG64(stream_seed(seed, k)))


def snapshot(state: BlochState) -> BlochSnapshot:
    return BlochSnapshot(
        kind=state.kind.value,
        n=state.n,
        p=state.p,
        y=list(state.y),
        information=information_total(state),
    )


def answer_probability(rho: DensityMatrix, q: QuestionIndex) -> float:
    """Probability of 'yes' given that the system is present."""
    presence = rho.trace
    if presence <= settings.born_tol:
        return 0.0
    y = born_probability(rho, q) / presence
    # snap round-off so definite answers are never sampled the wrong way
    if y <= settings.born_tol:
        return 0.0
    if y >= 1.0 - settings.born_tol:
        return 1.0
    return y


@dataclass(frozen=True)
class Interrogation:
    """An observer asking a fixed script of questions of one prepared system."""

    system: SystemKind
    preparation: DensityMatrix = field(repr=False)
    script: Tuple[QuestionIndex, ...]
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "script", tuple(self.script))
        if self.preparation.system != self.system:
            raise ValidationError(f"Preparation belongs to {self.preparation.system}, not {self.system}")
        for q in self.script:
            if q.kind is not self.system.kind or q.n != self.system.n:
                raise ValidationError(f"Scripted question {q} does not belong to {self.system}")
        if not 0 <= int(self.seed) <= SEED_MASK:
            raise ValidationError(f"Seed must be a 64-bit unsigned integer, got {self.seed}")


def run_single_shot(interrogation: Interrogation, run: int = 0) -> TranscriptRecord:
    """Ask each scripted question once, sampling Born answers and applying the Lueders update."""
    rng = shot_rng(interrogation.seed, run)
    rho = interrogation.preparation
    entries: List[TranscriptEntry] = []
    for step, q in enumerate(interrogation.script):
        y = answer_probability(rho, q)
        answer = bool(rng.random() < y)
        rho = lueders_update(rho, q, answer)
        entries.append(
            TranscriptEntry(
                run=run,
                step=step,
                question=q.label,
                answer="yes" if answer else "no",
                pre_probability=y,
                post_state=snapshot(density_to_bloch(rho)),
            )
        )
    return TranscriptRecord(
        kind=interrogation.system.kind.value,
        n=interrogation.system.n,
        seed=interrogation.seed,
        run=run,
        entries=entries,
    )


@performance_monitor("interrogation.run_many")
def run_many(
    interrogation: Interrogation,
    runs: int,
    workers: Optional[int] = None,
) -> List[TranscriptRecord]:
    """Independent runs on fresh copies of the preparation, returned in run order."""
    if runs < 1:
        raise ValidationError(f"Number of runs must be positive, got {runs}")
    workers = workers or settings.sim_workers
    if workers <= 1:
        return [run_single_shot(interrogation, r) for r in range(runs)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda r: run_single_shot(interrogation, r), range(runs)))


def answer_frequencies(records: Sequence[TranscriptRecord]) -> List[dict]:
    """Per script step: question, yes count and yes frequency over all runs."""
    if not records:
        return []
    rows = []
    for step, entry in enumerate(records[0].entries):
        yes = sum(1 for r in records if r.entries[step].answer == "yes")
        rows.append(
            {
                "step": step,
                "question": entry.question,
                "yes": yes,
                "runs": len(records),
                "frequency": yes / len(records),
            }
        )
    return rows


__all__ = [
    "Interrogation",
    "answer_frequencies",
    "answer_probability",
    "run_many",
    "run_single_shot",
    "shot_rng",
    "snapshot",
    "stream_seed",
]
