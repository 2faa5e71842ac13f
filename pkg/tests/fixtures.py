"""Shared deterministic fixtures: systems, named states and seeded random states."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, Optional

import numpy as np

from tools.pauli_oracle import DensityMatrix, prepare_from_answers
from tools.question_algebra import GbitKind, QuestionIndex, SystemKind

QUBIT1 = SystemKind(GbitKind.QUBIT, 1)
QUBIT2 = SystemKind(GbitKind.QUBIT, 2)
QUBIT3 = SystemKind(GbitKind.QUBIT, 3)
REBIT1 = SystemKind(GbitKind.REBIT, 1)
REBIT2 = SystemKind(GbitKind.REBIT, 2)
REBIT3 = SystemKind(GbitKind.REBIT, 3)
QUBIT4 = SystemKind(GbitKind.QUBIT, 4)
QUBIT5 = SystemKind(GbitKind.QUBIT, 5)
REBIT4 = SystemKind(GbitKind.REBIT, 4)
REBIT5 = SystemKind(GbitKind.REBIT, 5)


def q(label: str, kind: GbitKind = GbitKind.QUBIT) -> QuestionIndex:
    return QuestionIndex.parse(label, kind)


def z_plus() -> DensityMatrix:
    return DensityMatrix(np.array([[1, 0], [0, 0]], dtype=complex), QUBIT1)


def bell_state(kind: GbitKind = GbitKind.QUBIT) -> DensityMatrix:
    """Both Q_11 and Q_22 answered yes."""
    return prepare_from_answers(SystemKind(kind, 2), {q("11", kind): True, q("22", kind): True})


def ghz_state(kind: GbitKind = GbitKind.QUBIT) -> DensityMatrix:
    """Q_211, Q_121 and Q_112 answered yes."""
    return prepare_from_answers(
        SystemKind(kind, 3), {q("211", kind): True, q("121", kind): True, q("112", kind): True}
    )


def make_rng(seed: int = 42) -> np.random.Generator:
    return np.random.default_rng(seed)


def write_scenario(directory: Path, payload: Dict, name: Optional[str] = None) -> Path:
    path = directory / (name or "scenario.json")
    path.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    return path
