"""Information-preserving time evolution of Bloch states.

Two generator variants are exposed. A landscape generator is any real
antisymmetric D x D matrix G and rotates the Bloch vector by exp(dt G) in
SO(D). A quantum generator is a Hermitian 2^n x 2^n matrix H and conjugates
the density matrix by U = exp(-i H dt); for rebits H must be purely imaginary
so that U is real orthogonal. Only the quantum variant is guaranteed to map
valid states to valid states for n >= 2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from config.settings import settings
from tools.bloch_state import BlochState
from tools.error_handler import InvalidStateError, ValidationError
from tools.pauli_oracle import (
    DensityMatrix,
    bloch_to_density,
    density_to_bloch,
    matrix_of,
)
from tools.question_algebra import GbitKind, SystemKind, enumerate_complete_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LandscapeGenerator:
    """Real antisymmetric generator acting directly on the Bloch vector."""

    matrix: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self) -> None:
        g = np.array(self.matrix, dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise ValidationError(f"Landscape generator must be square, got shape {g.shape}")
        if np.max(np.abs(g + g.T), initial=0.0) > settings.hermitian_tol:
            raise ValidationError("Landscape generator must be antisymmetric (G + G^T = 0)")
        g = (g - g.T) / 2
        g.setflags(write=False)
        object.__setattr__(self, "matrix", g)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class QuantumGenerator:
    """Traceless Hermitian Hamiltonian of an n-gbit system."""

    hamiltonian: np.ndarray = field(repr=False, compare=False)
    system: SystemKind = field(default_factory=lambda: SystemKind(GbitKind.QUBIT, 1))

    def __post_init__(self) -> None:
        h = np.array(self.hamiltonian, dtype=complex)
        d = self.system.hilbert_dim
        if h.shape != (d, d):
            raise ValidationError(f"Hamiltonian for {self.system} must be {d}x{d}, got {h.shape}")
        if np.max(np.abs(h - h.conj().T)) > settings.hermitian_tol:
            raise ValidationError("Hamiltonian must be Hermitian")
        if self.system.kind is GbitKind.REBIT and np.max(np.abs(h.real)) > settings.hermitian_tol:
            raise ValidationError("Rebit Hamiltonians must be purely imaginary so that U stays real")
        h = (h + h.conj().T) / 2
        h = h - np.eye(d) * (np.trace(h).real / d)
        h.setflags(write=False)
        object.__setattr__(self, "hamiltonian", h)


EvolutionGenerator = Union[LandscapeGenerator, QuantumGenerator]


def landscape_propagator(gen: LandscapeGenerator, dt: float) -> np.ndarray:
    """exp(dt G) from the eigendecomposition of the Hermitian matrix iG."""
    w, v = np.linalg.eigh(1j * gen.matrix)
    t = (v * np.exp(-1j * w * dt)) @ v.conj().T
    return t.real


def unitary(gen: QuantumGenerator, dt: float) -> np.ndarray:
    """U = V diag(exp(-i w dt)) V^H."""
    w, v = np.linalg.eigh(gen.hamiltonian)
    u = (v * np.exp(-1j * w * dt)) @ v.conj().T
    if gen.system.kind is GbitKind.REBIT:
        u = u.real.astype(complex)
    return u


def _pauli_stack(sys: SystemKind) -> np.ndarray:
    return np.stack([matrix_of(q).matrix for q in enumerate_complete_set(sys)])


def bloch_action(gen: EvolutionGenerator, dt: float, sys: SystemKind) -> np.ndarray:
    """Real D x D matrix T with r(dt) = T r(0)."""
    if isinstance(gen, LandscapeGenerator):
        if gen.dimension != sys.dimension:
            raise ValidationError(f"Generator dimension {gen.dimension} does not match D={sys.dimension}")
        return landscape_propagator(gen, dt)
    if gen.system != sys:
        raise ValidationError(f"Hamiltonian belongs to {gen.system}, not {sys}")
    u = unitary(gen, dt)
    paulis = _pauli_stack(sys)
    conjugated = u @ paulis @ u.conj().T
    # T_ij = 2^-n tr(P_i U P_j U^H)
    t = np.einsum("iab,jba->ij", paulis, conjugated)
    return t.real / sys.hilbert_dim


def evolve(state: BlochState, gen: EvolutionGenerator, dt: float) -> BlochState:
    """Advance a state by dt; preserves information_total."""
    if isinstance(gen, LandscapeGenerator):
        if gen.dimension != state.system.dimension:
            raise ValidationError(
                f"Generator dimension {gen.dimension} does not match D={state.system.dimension}"
            )
        r = landscape_propagator(gen, dt) @ state.bloch_vector
        try:
            return BlochState.from_bloch_vector(state.system, r, state.p)
        except InvalidStateError:
            raise InvalidStateError(
                "Landscape rotation carries the state outside the probability box",
                failed_step="EVOLVE",
            ) from None
    if not isinstance(gen, QuantumGenerator):
        raise ValidationError(f"Unsupported generator type {type(gen).__name__}")
    if gen.system != state.system:
        raise ValidationError(f"Hamiltonian belongs to {gen.system}, not {state.system}")
    rho = bloch_to_density(state)
    u = unitary(gen, dt)
    return density_to_bloch(DensityMatrix(u @ rho.matrix @ u.conj().T, state.system))


def random_landscape_generator(sys: SystemKind, rng: np.random.Generator, scale: float = 1.0) -> LandscapeGenerator:
    a = rng.normal(scale=scale, size=(sys.dimension, sys.dimension))
    return LandscapeGenerator((a - a.T) / 2)


def random_quantum_generator(sys: SystemKind, rng: np.random.Generator, scale: float = 1.0) -> QuantumGenerator:
    """Random Hermitian H; for rebits H = iK with K real antisymmetric."""
    d = sys.hilbert_dim
    if sys.kind is GbitKind.REBIT:
        k = rng.normal(scale=scale, size=(d, d))
        return QuantumGenerator(1j * (k - k.T) / 2, sys)
    a = rng.normal(scale=scale, size=(d, d)) + 1j * rng.normal(scale=scale, size=(d, d))
    return QuantumGenerator((a + a.conj().T) / 2, sys)


__all__ = [
    "EvolutionGenerator",
    "LandscapeGenerator",
    "QuantumGenerator",
    "bloch_action",
    "evolve",
    "landscape_propagator",
    "random_landscape_generator",
    "random_quantum_generator",
    "unitary",
]
