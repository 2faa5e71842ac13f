"""Bloch states, the information measure and classification."""

from __future__ import annotations

import numpy as np
import pytest

from tests.fixtures import QUBIT1, QUBIT2, QUBIT3, REBIT1, REBIT2, REBIT3, bell_state, make_rng, q, z_plus
from tools.bloch_state import (
    BlochState,
    InfoClassification,
    classify,
    convex_mix,
    information_single,
    information_total,
    marginal_bloch,
    max_information,
    question_information,
    random_ball_state,
    rebit_litmus,
    scaled,
)
from tools.error_handler import InvalidStateError, ValidationError
from tools.interrogation import Interrogation, run_single_shot
from tools.pauli_oracle import (
    bloch_to_density,
    density_to_bloch,
    prepare_from_answers,
    random_density_matrix,
    random_pure_density,
)
from tools.question_algebra import GbitKind


def test_information_single() -> None:
    assert information_single(0.5) == 0.0
    assert information_single(1.0) == 1.0
    assert information_single(0.0) == 1.0
    assert information_single(0.75) == pytest.approx(0.25)
    with pytest.raises(ValidationError):
        information_single(1.5)


def test_state_validation() -> None:
    with pytest.raises(ValidationError):
        BlochState(kind="qubit", n=1, y=(0.5, 0.5))
    with pytest.raises(InvalidStateError):
        BlochState(kind="qubit", n=1, y=(0.5, 0.5, 1.2))
    with pytest.raises(ValidationError):
        BlochState(kind="qubit", n=1, p=1.5, y=(0.5, 0.5, 0.5))
    with pytest.raises(ValidationError):
        BlochState(kind="qubit", n=1, p=-1e-6, y=(0.0, 0.0, 0.0))
    with pytest.raises(ValidationError):
        BlochState(kind="qutrit", n=1, y=(0.5, 0.5, 0.5))


def test_presence_round_off_is_clamped() -> None:
    state = BlochState(kind="qubit", n=1, p=1.0000000000000002, y=(0.5, 0.5, 1.0000000000000002))
    assert state.p == 1.0
    assert BlochState(kind="rebit", n=1, p=-1e-15, y=(0.0, 0.0)).p == 0.0
    moved = BlochState.from_bloch_vector(QUBIT1, [0.0, 0.0, 1.0000000000000002], p=1.0000000000000002)
    assert moved.p == 1.0
    assert moved.y == (0.5, 0.5, 1.0)


@pytest.mark.parametrize("sys", [QUBIT1, QUBIT2, QUBIT3, REBIT1, REBIT2, REBIT3])
def test_random_density_matrices_round_trip(sys) -> None:
    rng = make_rng(0)
    for k in range(300):
        rho = random_density_matrix(sys, rng) if k % 2 else random_pure_density(sys, rng)
        state = density_to_bloch(rho)
        assert 0.0 <= state.p <= 1.0
        assert np.max(np.abs(bloch_to_density(state).matrix - rho.matrix)) < 1e-12
        assert information_total(state) <= max_information(sys) + 1e-9


def test_single_shot_on_random_pure_states() -> None:
    rng = make_rng(0)
    script = (q("11"), q("23"), q("30"))
    for k in range(100):
        record = run_single_shot(Interrogation(QUBIT2, random_pure_density(QUBIT2, rng), script, seed=k))
        for entry in record.entries:
            assert entry.post_state.information == pytest.approx(3.0, abs=1e-9)


def test_state_is_frozen_and_serializable() -> None:
    state = BlochState.no_information(QUBIT1)
    payload = state.to_payload()
    assert payload == {"kind": "qubit", "n": 1, "p": 1.0, "y": [0.5, 0.5, 0.5]}
    assert BlochState.model_validate(payload) == state


def test_no_information_state() -> None:
    state = BlochState.no_information(QUBIT3)
    assert information_total(state) == 0.0
    assert classify(state) is InfoClassification.TOTALLY_MIXED


def test_pure_states_carry_maximal_information() -> None:
    rng = make_rng(5)
    for sys in (QUBIT1, QUBIT2, QUBIT3, REBIT2):
        state = density_to_bloch(random_pure_density(sys, rng))
        assert information_total(state) == pytest.approx(2 ** sys.n - 1, abs=1e-9)
        assert classify(state) is InfoClassification.PURE


def test_bell_state_information() -> None:
    state = density_to_bloch(bell_state())
    assert information_total(state) == pytest.approx(3.0)
    assert question_information(state, q("33")) == pytest.approx(1.0)
    assert state.probability(q("33")) == pytest.approx(0.0)


def test_classify_mixed_and_overfull() -> None:
    assert classify(scaled(density_to_bloch(z_plus()), 0.5)) is InfoClassification.MIXED
    with pytest.raises(InvalidStateError):
        classify(BlochState(kind="qubit", n=1, y=(1.0, 1.0, 1.0)))


def test_max_information() -> None:
    assert max_information(QUBIT3) == 7
    assert max_information(QUBIT1, p=0.5) == pytest.approx(0.25)


def test_presence_probability_scales_information() -> None:
    state = BlochState(kind="qubit", n=1, p=0.5, y=(0.25, 0.25, 0.5))
    assert information_total(state) == pytest.approx(0.25)
    assert classify(state) is InfoClassification.PURE


def test_convex_mix() -> None:
    up = density_to_bloch(z_plus())
    down = BlochState(kind="qubit", n=1, y=(0.5, 0.5, 0.0))
    mix = convex_mix(0.5, up, down)
    assert information_total(mix) == pytest.approx(0.0)
    assert classify(mix) is InfoClassification.TOTALLY_MIXED
    with pytest.raises(ValidationError):
        convex_mix(1.5, up, down)
    with pytest.raises(ValidationError):
        convex_mix(0.5, up, BlochState.no_information(QUBIT2))


def test_scaling_is_quadratic() -> None:
    state = density_to_bloch(random_pure_density(QUBIT2, make_rng(9)))
    for lam in (0.0, 0.3, 0.9):
        assert information_total(scaled(state, lam)) == pytest.approx(lam * lam * information_total(state), abs=1e-12)


def test_marginal_of_bell_state_is_uninformative() -> None:
    state = density_to_bloch(bell_state())
    for keep in ([0], [1]):
        marginal = marginal_bloch(state, keep)
        assert marginal.n == 1
        assert np.allclose(marginal.y_array, 0.5)
    with pytest.raises(ValidationError):
        marginal_bloch(state, [2])


def test_marginal_of_product_state() -> None:
    state = density_to_bloch(prepare_from_answers(QUBIT2, {q("30"): True, q("01"): False}))
    assert marginal_bloch(state, [0]).y == pytest.approx((0.5, 0.5, 1.0))
    assert marginal_bloch(state, [1]).y == pytest.approx((0.0, 0.5, 0.5))


def test_rebit_litmus() -> None:
    rebit = GbitKind.REBIT
    state = density_to_bloch(prepare_from_answers(REBIT2, {q("33", rebit): True}))
    assert rebit_litmus(state) == pytest.approx(1.0)
    individuals = [state.probability(x) for x in (q("01", rebit), q("02", rebit), q("10", rebit), q("20", rebit))]
    assert np.allclose(individuals, 0.5)
    with pytest.raises(ValidationError):
        rebit_litmus(density_to_bloch(bell_state()))


def test_random_ball_state_stays_inside_the_ball() -> None:
    rng = make_rng(13)
    for _ in range(20):
        state = random_ball_state(QUBIT2, rng)
        assert np.linalg.norm(state.bloch_vector) <= 1.0 + 1e-12
