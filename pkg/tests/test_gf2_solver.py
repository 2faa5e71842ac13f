"""GF(2) frustration checks and odd/even handedness structure."""

from __future__ import annotations

import pytest

from tests.fixtures import make_rng, q
from tools.correlation_structure import (
    Handedness,
    Parity,
    all_parity_patterns,
    handedness_consistency,
    handedness_witness,
    parities_from_handedness,
)
from tools.error_handler import ValidationError
from tools.gf2_solver import (
    Frustrated,
    ParityConstraint,
    Satisfiable,
    bell_constraints,
    brute_force_check,
    evaluate,
    frustration_check,
    individual_variables,
    question_constraint,
)
from tools.question_algebra import SignedQuestion


def test_constraint_rhs_follows_chain_length() -> None:
    assert ParityConstraint(("a",), 1).rhs == 1
    assert ParityConstraint(("a", "b"), 1).rhs == 0
    assert ParityConstraint(("a", "b", "c"), 0).rhs == 0


def test_constraint_validation() -> None:
    with pytest.raises(ValidationError):
        ParityConstraint((), 1)
    with pytest.raises(ValidationError):
        ParityConstraint(("a",), 2)
    with pytest.raises(ValidationError):
        frustration_check([("a", 1, 2)])


def test_bell_instance_is_frustrated() -> None:
    result = frustration_check(bell_constraints(0))
    assert isinstance(result, Frustrated)
    assert result.inconsistent == (0, 1, 2)
    assert not brute_force_check(bell_constraints(0))


def test_flipped_bell_instance_is_satisfiable() -> None:
    constraints = bell_constraints(1)
    result = frustration_check(constraints)
    assert isinstance(result, Satisfiable)
    assert evaluate(constraints, result.witness)
    assert set(result.witness) == {"A:1", "A:2", "B:1", "B:2"}


def test_tuple_constraints_are_coerced() -> None:
    result = frustration_check([(("x",), 1), ("x", 0)])
    assert not result.satisfiable
    assert result.inconsistent == (0, 1)


def test_individual_variables_and_question_constraints() -> None:
    assert individual_variables(q("102")) == ("A:1", "C:2")
    c = question_constraint([SignedQuestion(q("11"), -1)], 1)
    assert c.variables == ("A:1", "B:1")
    assert c.value == 0
    with pytest.raises(ValidationError):
        question_constraint([], 1)


def test_solver_agrees_with_brute_force() -> None:
    rng = make_rng(7)
    for _ in range(200):
        n_vars = int(rng.integers(1, 9))
        names = [f"x{j}" for j in range(n_vars)]
        constraints = [
            ParityConstraint(
                tuple(rng.choice(names, size=int(rng.integers(1, n_vars + 1)), replace=False)),
                int(rng.integers(2)),
            )
            for _ in range(int(rng.integers(1, 2 * n_vars + 1)))
        ]
        result = frustration_check(constraints)
        assert result.satisfiable == brute_force_check(constraints)
        if isinstance(result, Satisfiable):
            assert evaluate(constraints, result.witness)
        else:
            assert not brute_force_check([constraints[i] for i in result.inconsistent])


def test_four_of_eight_triple_patterns_are_consistent() -> None:
    patterns = list(all_parity_patterns((0, 1, 2)))
    assert len(patterns) == 8
    consistent = [p for p in patterns if handedness_consistency(p)]
    assert len(consistent) == 4
    for p in consistent:
        assert sum(v is Parity.ODD for v in p.values()) in (1, 3)


def test_parities_from_handedness() -> None:
    parities = parities_from_handedness({0: "left", 1: Handedness.LEFT, 2: "right"})
    assert parities == {(0, 1): Parity.ODD, (0, 2): Parity.EVEN, (1, 2): Parity.EVEN}
    assert handedness_consistency(parities)


def test_handedness_witness() -> None:
    assert handedness_witness({(0, 1): "even", (0, 2): "even", (1, 2): "even"}) is None
    witness = handedness_witness({(0, 1): "odd", (0, 2): "even", (1, 2): "even"})
    assert witness == {0: Handedness.LEFT, 1: Handedness.LEFT, 2: Handedness.RIGHT}


def test_parity_map_validation() -> None:
    with pytest.raises(ValidationError):
        handedness_consistency({(0, 1): "odd", (0, 2): "odd"})
    with pytest.raises(ValidationError):
        handedness_consistency({(0, 1): "odd"})
    with pytest.raises(ValidationError):
        handedness_consistency({(0, 1): "odd", (0, 2): "odd", (1, 2): "weird"})
    with pytest.raises(ValidationError):
        handedness_consistency({(0, 0): "odd", (0, 2): "odd", (1, 2): "odd"})
