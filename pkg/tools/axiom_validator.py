"""Seeded statistical checks of the interrogation axioms.

Each check draws from its own RNG stream family and compares empirical
frequencies with exact oracle probabilities under a binomial sigma bound, so a
fixed seed reproduces the report bit for bit.
"""

from __future__ import annotations

import itertools
import logging
import math
from typing import Callable, Dict, List, Tuple

import numpy as np

from config.settings import settings
from schemas.response_schemas import AxiomCheck, AxiomReport
from tools.bloch_state import information_total, max_information
from tools.interrogation import answer_probability, shot_rng
from tools.pauli_oracle import (
    DensityMatrix,
    density_to_bloch,
    lueders_update,
    prepare_from_answers,
    random_density_matrix,
    random_pure_density,
    simultaneous_eigenbasis_exists,
)
from tools.performance_monitor import performance_monitor
from tools.question_algebra import (
    QuestionIndex,
    SystemKind,
    enumerate_complete_set,
    is_compatible,
    is_complementary,
)

logger = logging.getLogger(__name__)

# distinct stream families per check; trial t of check c uses stream c * STREAM_STRIDE + t
STREAM_STRIDE = 1 << 32
CONSERVATION_STEPS = 5
MAX_CONSERVATION_TRIALS = 200


def _ask(rho: DensityMatrix, q: QuestionIndex, rng: np.random.Generator) -> Tuple[bool, DensityMatrix]:
    answer = bool(rng.random() < answer_probability(rho, q))
    return answer, lueders_update(rho, q, answer)


def _binomial_bound(y: float, trials: int) -> float:
    # one count of slack keeps definite probabilities from demanding exact equality
    return settings.sigma_bound * math.sqrt(y * (1 - y) / trials) + 1.0 / trials


def _compatible_pairs(questions: List[QuestionIndex]) -> List[Tuple[QuestionIndex, QuestionIndex]]:
    return [(a, b) for a, b in itertools.permutations(questions, 2) if is_compatible(a, b)]


def check_repeatability(sys: SystemKind, trials: int, seed: int) -> AxiomCheck:
    """Asking the same question twice in a row returns the same answer."""
    setup = shot_rng(seed, 0)
    questions = list(enumerate_complete_set(sys))
    rho = random_density_matrix(sys, setup)
    mismatches = 0
    for t in range(trials):
        rng = shot_rng(seed, STREAM_STRIDE + t)
        q = questions[rng.integers(len(questions))]
        first, post = _ask(rho, q, rng)
        second, _ = _ask(post, q, rng)
        mismatches += first != second
    return AxiomCheck(
        name="repeatability",
        statistic=float(mismatches),
        bound=0.0,
        passed=mismatches == 0,
        trials=trials,
        detail="answers that changed on an immediate repeat",
    )


def check_compatible_invariance(sys: SystemKind, trials: int, seed: int) -> AxiomCheck:
    """Asking q1 first leaves the yes-frequency of a compatible q2 at its prior value."""
    pairs = _compatible_pairs(list(enumerate_complete_set(sys)))
    if not pairs:
        return AxiomCheck(
            name="compatible_invariance", statistic=0.0, bound=0.0, passed=True, trials=0,
            detail=f"no distinct compatible pairs for {sys}",
        )
    setup = shot_rng(seed, 2 * STREAM_STRIDE)
    rho = random_density_matrix(sys, setup)
    q1, q2 = pairs[setup.integers(len(pairs))]
    y_prior = answer_probability(rho, q2)
    yes = 0
    for t in range(trials):
        rng = shot_rng(seed, 3 * STREAM_STRIDE + t)
        _, post = _ask(rho, q1, rng)
        answer, _ = _ask(post, q2, rng)
        yes += answer
    deviation = abs(yes / trials - y_prior)
    bound = _binomial_bound(y_prior, trials)
    return AxiomCheck(
        name="compatible_invariance",
        statistic=deviation,
        bound=bound,
        passed=deviation <= bound,
        trials=trials,
        detail=f"Q_{q2.label} after Q_{q1.label}: prior y={y_prior:.6f}",
    )


def check_specker_triples(sys: SystemKind, trials: int, seed: int) -> AxiomCheck:
    """Pairwise compatible triples of distinct questions have simultaneously definite answers."""
    questions = list(enumerate_complete_set(sys))
    pairs = [(a, b) for a, b in itertools.combinations(questions, 2) if is_compatible(a, b)]
    if not pairs:
        return AxiomCheck(
            name="specker_triples", statistic=0.0, bound=0.0, passed=True, trials=0,
            detail=f"no compatible triples for {sys}",
        )
    violations = 0
    checked = 0
    for t in range(trials):
        rng = shot_rng(seed, 4 * STREAM_STRIDE + t)
        a, b = pairs[rng.integers(len(pairs))]
        thirds = [c for c in questions if c not in (a, b) and is_compatible(a, c) and is_compatible(b, c)]
        if not thirds:
            continue
        triple = (a, b, thirds[rng.integers(len(thirds))])
        checked += 1
        if not simultaneous_eigenbasis_exists(triple):
            violations += 1
            continue
        rho = random_pure_density(sys, rng)
        first = []
        for q in triple:
            answer, rho = _ask(rho, q, rng)
            first.append(answer)
        for q, expected in zip(triple, first):
            answer, rho = _ask(rho, q, rng)
            violations += answer != expected
    return AxiomCheck(
        name="specker_triples",
        statistic=float(violations),
        bound=0.0,
        passed=violations == 0,
        trials=checked,
        detail="re-asked triple members whose answers changed",
    )


def check_complementarity_erasure(sys: SystemKind, trials: int, seed: int) -> AxiomCheck:
    """After Q1 is known, asking a complementary Q2 makes a repeated Q1 a fair coin."""
    questions = list(enumerate_complete_set(sys))
    setup = shot_rng(seed, 5 * STREAM_STRIDE)
    pairs = [(a, b) for a, b in itertools.combinations(questions, 2) if is_complementary(a, b)]
    q1, q2 = pairs[setup.integers(len(pairs))]
    rho = prepare_from_answers(sys, {q1: True})
    yes = 0
    for t in range(trials):
        rng = shot_rng(seed, 6 * STREAM_STRIDE + t)
        _, post = _ask(rho, q2, rng)
        answer, _ = _ask(post, q1, rng)
        yes += answer
    deviation = abs(yes / trials - 0.5)
    bound = _binomial_bound(0.5, trials)
    return AxiomCheck(
        name="complementarity_erasure",
        statistic=deviation,
        bound=bound,
        passed=deviation <= bound,
        trials=trials,
        detail=f"Q_{q1.label} re-asked after Q_{q2.label}",
    )


def check_information_conservation(sys: SystemKind, trials: int, seed: int) -> AxiomCheck:
    """Answers on a pure state reshuffle but never destroy the total information."""
    questions = list(enumerate_complete_set(sys))
    target = max_information(sys)
    worst = 0.0
    runs = min(trials, MAX_CONSERVATION_TRIALS)
    for t in range(runs):
        rng = shot_rng(seed, 7 * STREAM_STRIDE + t)
        rho = random_pure_density(sys, rng)
        for _ in range(CONSERVATION_STEPS):
            _, rho = _ask(rho, questions[rng.integers(len(questions))], rng)
            worst = max(worst, abs(information_total(density_to_bloch(rho)) - target))
    return AxiomCheck(
        name="information_conservation",
        statistic=worst,
        bound=settings.conservation_tol,
        passed=worst <= settings.conservation_tol,
        trials=runs,
        detail=f"max |I - {target:g}| over {CONSERVATION_STEPS} answers per run",
    )


AXIOM_CHECKS: Dict[str, Callable[[SystemKind, int, int], AxiomCheck]] = {
    "repeatability": check_repeatability,
    "compatible_invariance": check_compatible_invariance,
    "specker_triples": check_specker_triples,
    "complementarity_erasure": check_complementarity_erasure,
    "information_conservation": check_information_conservation,
}


@performance_monitor("axioms.validate_axioms")
def validate_axioms(sys: SystemKind, n_trials: int, seed: int) -> AxiomReport:
    """Run every axiom check; the report depends only on (sys, n_trials, seed)."""
    checks = []
    for name, check in AXIOM_CHECKS.items():
        result = check(sys, n_trials, seed)
        logger.info("Axiom check %s: %s (statistic=%.3g, bound=%.3g)", name,
                    "pass" if result.passed else "FAIL", result.statistic, result.bound)
        checks.append(result)
    return AxiomReport(kind=sys.kind.value, n=sys.n, trials=n_trials, seed=seed, checks=checks)


__all__ = ["AXIOM_CHECKS", "validate_axioms"]
