"""Lazy exports for tools package to avoid import-time dependency cycles."""

from __future__ import annotations

from importlib import import_module
from typing import Dict, Tuple

_EXPORTS: Dict[str, Tuple[str, str]] = {
    "BlochState": ("tools.bloch_state", "BlochState"),
    "QuestionIndex": ("tools.question_algebra", "QuestionIndex"),
    "SignedQuestion": ("tools.question_algebra", "SignedQuestion"),
    "SystemKind": ("tools.question_algebra", "SystemKind"),
    "build_lattice": ("tools.question_graph", "build_lattice"),
    "enumerate_complete_set": ("tools.question_algebra", "enumerate_complete_set"),
    "evolve": ("tools.evolution", "evolve"),
    "frustration_check": ("tools.gf2_solver", "frustration_check"),
    "handedness_consistency": ("tools.correlation_structure", "handedness_consistency"),
    "matrix_of": ("tools.pauli_oracle", "matrix_of"),
    "run_single_shot": ("tools.interrogation", "run_single_shot"),
    "run_tomography": ("tools.tomography", "run_tomography"),
    "tangles": ("tools.entanglement", "tangles"),
    "validate_axioms": ("tools.axiom_validator", "validate_axioms"),
    "xnor_compose": ("tools.question_algebra", "xnor_compose"),
}

__all__ = sorted(_EXPORTS.keys())


def __getattr__(name: str):
    if name not in _EXPORTS:
        raise AttributeError(f"module '{__name__}' has no attribute '{name}'")
    module_name, attr_name = _EXPORTS[name]
    module = import_module(module_name)
    value = getattr(module, attr_name)
    globals()[name] = value
    return value
