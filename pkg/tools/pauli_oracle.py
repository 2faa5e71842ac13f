"""Dense-matrix ground truth for the question algebra.

Questions are realized as Pauli strings: qubit indices map 1 -> sigma_x,
2 -> sigma_y, 3 -> sigma_z; rebit indices map 1 -> sigma_x, 2 -> sigma_z and
3 -> sigma_y (rebit strings always carry an even number of sigma_y factors,
so every rebit operator is real symmetric). Pauli-string entries are exact in
{0, +-1, +-i}, so products and commutators are compared exactly; floating
point tolerances only enter once density matrices are involved.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import settings
from tools.bloch_state import BlochState
from tools.cache import pauli_cache
from tools.error_handler import (
    InconsistentQuestionsError,
    InvalidStateError,
    OracleError,
    ValidationError,
)
from tools.question_algebra import (
    GbitKind,
    QuestionIndex,
    SignedQuestion,
    SystemKind,
    enumerate_complete_set,
)

logger = logging.getLogger(__name__)

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

SITE_MATRICES: Dict[GbitKind, Tuple[np.ndarray, ...]] = {
    GbitKind.QUBIT: (IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z),
    GbitKind.REBIT: (IDENTITY_2, SIGMA_X, SIGMA_Z, SIGMA_Y),
}

_PHASES = (1, 1j, -1, -1j)

Answer = Union[bool, str]


@dataclass(frozen=True)
class PauliOperatorRep:
    """Matrix realization i^phase * P(index) of a question."""

    index: QuestionIndex
    matrix: np.ndarray = field(repr=False, compare=False)
    phase: int = 0

    @property
    def is_hermitian(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.conj().T))

    @property
    def is_involutory(self) -> bool:
        return bool(np.array_equal(self.matrix @ self.matrix, np.eye(self.matrix.shape[0])))

    @property
    def is_real_symmetric(self) -> bool:
        return bool(not np.any(self.matrix.imag) and np.array_equal(self.matrix, self.matrix.T))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian 2^n x 2^n matrix with trace p (the presence probability)."""

    matrix: np.ndarray = field(repr=False, compare=False)
    system: SystemKind = field(default_factory=lambda: SystemKind(GbitKind.QUBIT, 1))

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=complex)
        d = self.system.hilbert_dim
        if m.shape != (d, d):
            raise ValidationError(f"Density matrix for {self.system} must be {d}x{d}, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > settings.hermitian_tol:
            raise ValidationError("Density matrix is not Hermitian")
        if self.system.kind is GbitKind.REBIT and np.max(np.abs(m.imag)) > settings.hermitian_tol:
            raise ValidationError("Rebit density matrices must be real symmetric")
        m = (m + m.conj().T) / 2
        if self.system.kind is GbitKind.REBIT:
            m = m.real.astype(complex)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    @property
    def is_physical(self) -> bool:
        return bool(self.eigenvalues.min() >= -settings.psd_tol)

    @property
    def purity(self) -> float:
        return float(np.real(np.sum(self.matrix * self.matrix.T)))

    def to_json(self) -> list:
        return matrix_to_json(self.matrix)


def _check_cap(n: int) -> None:
    if n > settings.oracle_max_n:
        raise OracleError(
            f"n={n} exceeds the dense oracle cap of {settings.oracle_max_n} (set ORACLE_MAX_N to raise it)",
            failed_step="MATRIX_OF",
        )


def _pauli_matrix(q: QuestionIndex) -> np.ndarray:
    _check_cap(q.n)
    sites = SITE_MATRICES[q.kind]

    def _build() -> np.ndarray:
        return reduce(np.kron, (sites[mu] for mu in q.indices))

    return pauli_cache.get_or_build((q.kind.value, q.indices), _build)


def matrix_of(q: QuestionIndex, sys: Optional[SystemKind] = None) -> PauliOperatorRep:
    """Kronecker product of single-site matrices for the question."""
    if sys is not None and (sys.kind is not q.kind or sys.n != q.n):
        q = QuestionIndex(q.indices, sys.kind)
        if sys.n != q.n:
            raise ValidationError(f"{q} does not belong to {sys}")
    return PauliOperatorRep(q, _pauli_matrix(q), 0)


def commutes(q1: QuestionIndex, q2: QuestionIndex) -> bool:
    """Exact commutator test on the dense operators."""
    if q1.n != q2.n or q1.kind is not q2.kind:
        raise ValidationError(f"{q1} and {q2} belong to different systems")
    a, b = _pauli_matrix(q1), _pauli_matrix(q2)
    return bool(np.array_equal(a @ b, b @ a))


def _site_decomposition(m: np.ndarray, kind: GbitKind) -> Tuple[int, int]:
    """Identify a 2x2 matrix as i^k times a single-site basis matrix."""
    for mu, basis in enumerate(SITE_MATRICES[kind]):
        for k, phase in enumerate(_PHASES):
            if np.array_equal(m, phase * basis):
                return mu, k
    raise OracleError("Site product is not a Pauli matrix")


def product_index(q1: QuestionIndex, q2: QuestionIndex) -> Tuple[int, ...]:
    """Index of the Pauli string proportional to P(q1) P(q2), read off the site matrices."""
    sites = SITE_MATRICES[q1.kind]
    return tuple(
        _site_decomposition(sites[a] @ sites[b], q1.kind)[0] for a, b in zip(q1.indices, q2.indices)
    )


def product_sign(q1: QuestionIndex, q2: QuestionIndex) -> int:
    """The scalar s with P(q1) P(q2) = s P(q3); requires commuting operators."""
    if not commutes(q1, q2):
        raise OracleError(f"{q1} and {q2} do not commute; their product phase is +-i", failed_step="PRODUCT_SIGN")
    product = _pauli_matrix(q1) @ _pauli_matrix(q2)
    indices = product_index(q1, q2)
    target = np.eye(product.shape[0]) if not any(indices) else _pauli_matrix(QuestionIndex(indices, q1.kind))
    if np.array_equal(product, target):
        return 1
    if np.array_equal(product, -target):
        return -1
    raise OracleError(f"Product of {q1} and {q2} is not +-P(q3)", failed_step="PRODUCT_SIGN")


def simultaneous_eigenbasis_exists(qs: Sequence[QuestionIndex]) -> bool:
    """Pairwise commutation of involutions; equivalent to joint diagonalizability."""
    return all(commutes(a, b) for a, b in itertools.combinations(qs, 2))


def _expectation(rho: DensityMatrix, q: QuestionIndex) -> float:
    p = _pauli_matrix(q)
    return float(np.real(np.sum(rho.matrix * p.T)))


def _check_question(rho: DensityMatrix, q: QuestionIndex) -> None:
    if q.kind is not rho.system.kind or q.n != rho.system.n:
        raise ValidationError(f"{q} does not belong to {rho.system}")


def born_probability(rho: DensityMatrix, q: QuestionIndex) -> float:
    """Probability y = tr(rho (I + P)/2) of the answer 'yes'."""
    _check_question(rho, q)
    y = (rho.trace + _expectation(rho, q)) / 2
    return float(np.clip(y, 0.0, 1.0))


def _answer(answer: Answer) -> bool:
    if isinstance(answer, (bool, np.bool_)):
        return bool(answer)
    text = str(answer).strip().lower()
    if text in ("yes", "1", "true"):
        return True
    if text in ("no", "0", "false"):
        return False
    raise ValidationError(f"Answer must be yes or no, got {answer!r}")


def projector(q: QuestionIndex, answer: Answer) -> np.ndarray:
    p = _pauli_matrix(q)
    eye = np.eye(p.shape[0])
    return (eye + p) / 2 if _answer(answer) else (eye - p) / 2


def lueders_update(rho: DensityMatrix, q: QuestionIndex, answer: Answer) -> DensityMatrix:
    """Post-answer state Pi rho Pi / tr(Pi rho Pi), rescaled to the prior presence probability."""
    _check_question(rho, q)
    pi = projector(q, answer)
    updated = pi @ rho.matrix @ pi
    weight = float(np.real(np.trace(updated)))
    if weight <= settings.born_tol * max(rho.trace, 1.0):
        raise InvalidStateError(
            f"Answer {'yes' if _answer(answer) else 'no'} to {q} has zero probability",
            failed_step="LUEDERS_UPDATE",
        )
    return DensityMatrix(updated * (rho.trace / weight), rho.system)


def totally_mixed(sys: SystemKind, p: float = 1.0) -> DensityMatrix:
    d = sys.hilbert_dim
    return DensityMatrix(np.eye(d, dtype=complex) * (p / d), sys)


def bloch_to_density(state: BlochState) -> DensityMatrix:
    """rho = 2^-n (p I + sum_i r_i P_i) with r_i = 2 y_i - p."""
    qset = enumerate_complete_set(state.system)
    r = state.bloch_vector
    if len(r) != len(qset):
        raise ValidationError(f"Bloch vector has {len(r)} entries, {state.system} needs {len(qset)}")
    d = state.system.hilbert_dim
    _check_cap(state.system.n)
    m = np.eye(d, dtype=complex) * state.p
    for r_i, q in zip(r, qset):
        if r_i:
            m = m + r_i * _pauli_matrix(q)
    return DensityMatrix(m / d, state.system)


def density_to_bloch(rho: DensityMatrix) -> BlochState:
    """y_i = (r_i + p) / 2 with r_i = tr(rho P_i)."""
    qset = enumerate_complete_set(rho.system)
    p = rho.trace
    r = np.array([_expectation(rho, q) for q in qset])
    return BlochState.from_bloch_vector(rho.system, r, p)


def prepare_from_answers(
    sys: SystemKind,
    answers: Mapping[Union[QuestionIndex, SignedQuestion], Answer],
) -> DensityMatrix:
    """Project the state of no information onto the given answers of compatible questions."""
    questions = [q.index if isinstance(q, SignedQuestion) else q for q in answers]
    for q in questions:
        if q.kind is not sys.kind or q.n != sys.n:
            raise ValidationError(f"{q} does not belong to {sys}")
    if not simultaneous_eigenbasis_exists(questions):
        raise InconsistentQuestionsError("Prepared answers must belong to mutually compatible questions")
    rho = totally_mixed(sys).matrix
    for q, answer in answers.items():
        value = _answer(answer)
        if isinstance(q, SignedQuestion):
            value = value if q.sign > 0 else not value
            q = q.index
        pi = projector(q, value)
        rho = pi @ rho @ pi
    weight = float(np.real(np.trace(rho)))
    if weight <= settings.born_tol:
        raise InconsistentQuestionsError("Prepared answers contradict each other")
    return DensityMatrix(rho / weight, sys)


def random_pure_density(sys: SystemKind, rng: np.random.Generator) -> DensityMatrix:
    """Haar-like pure state from a normalized Gaussian vector (real for rebits)."""
    d = sys.hilbert_dim
    psi = rng.normal(size=d)
    if sys.kind is GbitKind.QUBIT:
        psi = psi + 1j * rng.normal(size=d)
    psi = psi / np.linalg.norm(psi)
    return DensityMatrix(np.outer(psi, psi.conj()), sys)


def random_density_matrix(sys: SystemKind, rng: np.random.Generator, rank: Optional[int] = None) -> DensityMatrix:
    """Normalized G G^dagger of a Gaussian d x rank matrix (real for rebits)."""
    d = sys.hilbert_dim
    k = rank or d
    g = rng.normal(size=(d, k))
    if sys.kind is GbitKind.QUBIT:
        g = g + 1j * rng.normal(size=(d, k))
    m = g @ g.conj().T
    return DensityMatrix(m / np.real(np.trace(m)), sys)


def matrix_to_json(m: np.ndarray) -> list:
    """Each complex entry as a [re, im] pair."""
    return [[[float(np.real(cell)), float(np.imag(cell))] for cell in row] for row in np.asarray(m)]


__all__ = [
    "DensityMatrix",
    "PauliOperatorRep",
    "bloch_to_density",
    "born_probability",
    "commutes",
    "density_to_bloch",
    "lueders_update",
    "matrix_of",
    "matrix_to_json",
    "prepare_from_answers",
    "product_index",
    "product_sign",
    "random_density_matrix",
    "random_pure_density",
    "simultaneous_eigenbasis_exists",
    "totally_mixed",
]
