"""Entanglement classification and informational tangles.

All measures are sums of per-question information alpha_i = r_i^2 over index
classes picked out by the question support.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Tuple

from config.settings import settings
from tools.bloch_state import BlochState, information_vector
from tools.error_handler import ValidationError
from tools.question_algebra import QuestionIndex, enumerate_complete_set

logger = logging.getLogger(__name__)


class EntanglementClass(str, Enum):
    ENTANGLED = "entangled"
    CLASSICALLY_COMPOSED = "classically-composed"


@dataclass(frozen=True)
class Tangles:
    tau_a_bc: float
    tau_ab: float
    tau_ac: float
    three_tangle: float

    @property
    def monogamy_slack(self) -> float:
        return self.tau_a_bc - self.tau_ab - self.tau_ac


def _class_sum(state: BlochState, predicate: Callable[[QuestionIndex], bool]) -> float:
    alphas = information_vector(state)
    qset = enumerate_complete_set(state.system)
    return float(sum(alpha for alpha, q in zip(alphas, qset) if predicate(q)))


def _check_gbit(state: BlochState, a: int) -> None:
    if not 0 <= a < state.n:
        raise ValidationError(f"Gbit {a} does not exist in {state.system}")


def composite_information(state: BlochState, party: Iterable[int]) -> float:
    """Information in questions that involve gbits on both sides of the cut."""
    side = set(party)
    for a in side:
        _check_gbit(state, a)
    if not side or len(side) >= state.n:
        raise ValidationError(f"Party {sorted(side)} does not define a bipartition of {state.system}")

    def _crosses(q: QuestionIndex) -> bool:
        support = set(q.support)
        return bool(support & side) and bool(support - side)

    return _class_sum(state, _crosses)


def entanglement_class(state: BlochState, bipartition: Iterable[int] = (0,)) -> EntanglementClass:
    """Entangled iff the composite information exceeds one bit."""
    composite = composite_information(state, bipartition)
    if composite > 1.0 + settings.entanglement_guard:
        return EntanglementClass.ENTANGLED
    return EntanglementClass.CLASSICALLY_COMPOSED


def one_vs_rest_tangle(state: BlochState, a: int) -> float:
    """Sum of alpha over questions involving gbit a and at least one other gbit."""
    _check_gbit(state, a)
    return _class_sum(state, lambda q: bool(q.indices[a]) and q.weight >= 2)


def pair_tangle(state: BlochState, a: int, b: int) -> float:
    """Sum of alpha over questions supported exactly on {a, b}."""
    _check_gbit(state, a)
    _check_gbit(state, b)
    if a == b:
        raise ValidationError("A pair tangle needs two distinct gbits")
    return _class_sum(state, lambda q: set(q.support) == {a, b})


def residual_tangle(state: BlochState, a: int) -> float:
    """One-vs-rest tangle minus all pair tangles of a; the weight >= 3 questions involving a."""
    _check_gbit(state, a)
    return _class_sum(state, lambda q: bool(q.indices[a]) and q.weight >= 3)


def tangles(state: BlochState) -> Tangles:
    """(tau_A|BC, tau_AB, tau_AC, three-tangle) for three gbits."""
    if state.n != 3:
        raise ValidationError(f"Tangles are defined for three gbits, got n={state.n}")
    result = Tangles(
        tau_a_bc=one_vs_rest_tangle(state, 0),
        tau_ab=pair_tangle(state, 0, 1),
        tau_ac=pair_tangle(state, 0, 2),
        three_tangle=residual_tangle(state, 0),
    )
    logger.debug("Tangles %s", result)
    return result


def tangle_table(state: BlochState) -> Tuple[Tuple[int, float, float], ...]:
    """(gbit, one-vs-rest, residual) for every gbit."""
    return tuple((a, one_vs_rest_tangle(state, a), residual_tangle(state, a)) for a in range(state.n))


__all__ = [
    "EntanglementClass",
    "Tangles",
    "composite_information",
    "entanglement_class",
    "one_vs_rest_tangle",
    "pair_tangle",
    "residual_tangle",
    "tangle_table",
    "tangles",
]
