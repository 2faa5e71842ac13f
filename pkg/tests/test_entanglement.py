"""Entanglement classification and informational tangles."""

from __future__ import annotations

import pytest

from tests.fixtures import QUBIT2, QUBIT3, REBIT2, bell_state, ghz_state, make_rng, q
from tools.bloch_state import BlochState
from tools.entanglement import (
    EntanglementClass,
    composite_information,
    entanglement_class,
    pair_tangle,
    residual_tangle,
    tangle_table,
    tangles,
)
from tools.error_handler import ValidationError
from tools.pauli_oracle import density_to_bloch, prepare_from_answers, random_density_matrix
from tools.question_algebra import GbitKind


def test_bell_state_is_entangled() -> None:
    state = density_to_bloch(bell_state())
    assert composite_information(state, (0,)) == pytest.approx(3.0)
    assert entanglement_class(state) is EntanglementClass.ENTANGLED


def test_rebit_bell_state_is_entangled() -> None:
    assert entanglement_class(density_to_bloch(bell_state(GbitKind.REBIT))) is EntanglementClass.ENTANGLED


def test_product_and_mixed_states_are_classically_composed() -> None:
    product = density_to_bloch(prepare_from_answers(QUBIT2, {q("10"): True, q("01"): True}))
    assert composite_information(product, (0,)) == pytest.approx(1.0)
    assert entanglement_class(product) is EntanglementClass.CLASSICALLY_COMPOSED
    assert entanglement_class(BlochState.no_information(REBIT2)) is EntanglementClass.CLASSICALLY_COMPOSED


def test_bipartition_validation() -> None:
    state = density_to_bloch(bell_state())
    with pytest.raises(ValidationError):
        composite_information(state, (0, 1))
    with pytest.raises(ValidationError):
        composite_information(state, ())
    with pytest.raises(ValidationError):
        composite_information(state, (3,))


def test_ghz_tangles() -> None:
    t = tangles(density_to_bloch(ghz_state()))
    assert t.tau_a_bc == pytest.approx(6.0)
    assert t.tau_ab == pytest.approx(1.0)
    assert t.tau_ac == pytest.approx(1.0)
    assert t.three_tangle == pytest.approx(4.0)
    assert t.monogamy_slack == pytest.approx(t.three_tangle)


def test_monogamy_slack_equals_three_tangle() -> None:
    rng = make_rng(31)
    for _ in range(25):
        t = tangles(density_to_bloch(random_density_matrix(QUBIT3, rng, rank=int(rng.integers(1, 9)))))
        assert t.three_tangle >= 0
        assert t.monogamy_slack == pytest.approx(t.three_tangle, abs=1e-12)


def test_tangles_need_three_gbits() -> None:
    state = density_to_bloch(bell_state())
    with pytest.raises(ValidationError):
        tangles(state)
    assert pair_tangle(state, 0, 1) == pytest.approx(3.0)
    assert residual_tangle(state, 0) == 0.0
    with pytest.raises(ValidationError):
        pair_tangle(state, 1, 1)


def test_tangle_table_covers_every_gbit() -> None:
    rows = tangle_table(density_to_bloch(ghz_state()))
    assert [row[0] for row in rows] == [0, 1, 2]
    assert all(row[1] == pytest.approx(6.0) for row in rows)
