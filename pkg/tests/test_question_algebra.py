"""Question algebra: indices, compatibility, XNOR composition and closures."""

from __future__ import annotations

import pytest

from tests.fixtures import QUBIT1, QUBIT2, QUBIT3, REBIT1, REBIT2, q
from tools.error_handler import CompositionUndefined, InconsistentQuestionsError, ValidationError
from tools.question_algebra import (
    ALWAYS_FALSE,
    ALWAYS_TRUE,
    GbitKind,
    QuestionIndex,
    QuestionSet,
    SignedQuestion,
    SystemKind,
    compatible_extensions,
    composed_index,
    disagreements,
    enumerate_complete_set,
    extension_classes,
    is_compatible,
    is_complementary,
    is_mutually_compatible,
    logical_closure,
    mirror_sign,
    structural_parity,
    xnor_compose,
)

REBIT = GbitKind.REBIT


@pytest.mark.parametrize(
    "kind,sizes",
    [(GbitKind.QUBIT, [3, 15, 63, 255]), (GbitKind.REBIT, [2, 9, 35, 135])],
)
def test_complete_set_sizes(kind: GbitKind, sizes) -> None:
    for n, expected in enumerate(sizes, start=1):
        sys = SystemKind(kind, n)
        assert len(enumerate_complete_set(sys)) == expected == sys.dimension


def test_complete_set_is_lexicographic() -> None:
    assert enumerate_complete_set(QUBIT1).labels == ["1", "2", "3"]
    assert enumerate_complete_set(REBIT1).labels == ["1", "2"]
    labels = enumerate_complete_set(REBIT2).labels
    assert labels == sorted(labels)
    assert "33" in labels and "03" not in labels and "13" not in labels


def test_index_validation() -> None:
    with pytest.raises(ValidationError):
        QuestionIndex((0, 0))
    with pytest.raises(ValidationError):
        QuestionIndex((4,))
    with pytest.raises(ValidationError):
        QuestionIndex(())
    with pytest.raises(ValidationError):
        QuestionIndex.parse("13", REBIT)
    with pytest.raises(ValidationError):
        QuestionIndex.parse("1a")
    assert QuestionIndex.parse("102").support == (0, 2)
    assert QuestionIndex.parse("102").weight == 2


def test_system_kind_rejects_bad_input() -> None:
    with pytest.raises(ValidationError):
        SystemKind(GbitKind.QUBIT, 0)
    with pytest.raises(ValidationError):
        GbitKind.parse("qutrit")
    assert SystemKind("Rebit", 2).kind is GbitKind.REBIT


def test_signed_question_parse_and_negate() -> None:
    s = SignedQuestion.parse("!12")
    assert s.sign == -1
    assert s.label == "!12"
    assert s.negate() == SignedQuestion(q("12"), 1)
    with pytest.raises(ValidationError):
        SignedQuestion(q("12"), 0)


def test_compatibility_rule() -> None:
    assert disagreements(q("12"), q("21")) == 2
    assert is_compatible(q("11"), q("22"))
    assert is_compatible(q("10"), q("02"))
    assert not is_compatible(q("10"), q("20"))
    assert is_complementary(q("1"), q("3"))
    assert not is_complementary(q("1"), q("1"))
    with pytest.raises(ValidationError):
        is_compatible(q("1"), q("11"))
    with pytest.raises(ValidationError):
        is_compatible(q("11"), q("11", REBIT))


def test_single_gbit_questions_are_pairwise_complementary() -> None:
    members = enumerate_complete_set(QUBIT1).members
    for a in members:
        for b in members:
            assert is_compatible(a, b) == (a == b)


@pytest.mark.parametrize("kind", [GbitKind.QUBIT, GbitKind.REBIT])
def test_bell_relations(kind: GbitKind) -> None:
    assert xnor_compose(q("11", kind), q("22", kind)) == SignedQuestion(q("33", kind), -1)
    assert xnor_compose(q("12", kind), q("21", kind)) == SignedQuestion(q("33", kind), 1)


def test_composition_with_self_and_negation() -> None:
    assert xnor_compose(q("12"), q("12")) is ALWAYS_TRUE
    assert xnor_compose(q("12"), SignedQuestion(q("12"), -1)) is ALWAYS_FALSE
    assert xnor_compose(SignedQuestion(q("12"), -1), SignedQuestion(q("12"), -1)) is ALWAYS_TRUE


def test_composition_of_negations_flips_sign() -> None:
    plain = xnor_compose(q("11"), q("22"))
    negated = xnor_compose(SignedQuestion(q("11"), -1), q("22"))
    assert negated == plain.negate()


def test_complementary_composition_is_undefined() -> None:
    with pytest.raises(CompositionUndefined):
        xnor_compose(q("10"), q("20"))
    with pytest.raises(CompositionUndefined):
        structural_parity(q("1"), q("2"))


def test_composed_index_rule() -> None:
    assert composed_index(q("1230"), q("1302")) == (0, 1, 3, 2)


def test_logical_closure_of_bell_generators() -> None:
    closure = logical_closure([q("11"), q("22")])
    assert [s.label for s in closure] == ["11", "22", "!33"]


def test_logical_closure_detects_contradiction() -> None:
    with pytest.raises(InconsistentQuestionsError):
        logical_closure([q("11"), q("22"), q("33")])
    with pytest.raises(CompositionUndefined):
        logical_closure([q("10"), q("20")])


def test_ghz_closure() -> None:
    gens = [q("211"), q("121"), q("112")]
    assert is_mutually_compatible(gens)
    closure = logical_closure(gens)
    labels = {s.index.label for s in closure}
    assert len(closure) == 7
    assert {"330", "303", "033", "222"} <= labels


def test_rebit_closure_keeps_even_threes() -> None:
    closure = logical_closure([q("112", REBIT), q("121", REBIT), q("211", REBIT)])
    assert all(s.index.indices.count(3) % 2 == 0 for s in closure)


def test_monogamy_extensions() -> None:
    known = [q("110"), q("220")]
    extensions = compatible_extensions(known, {2})
    expected = {q(f"{m}{m}{k}") for m in range(4) for k in (1, 2, 3)}
    assert set(extensions) == expected
    assert not any(x.weight == 2 for x in extensions)
    classes = extension_classes(known, {2})
    assert set(classes) == {q("001"), q("002"), q("003")}
    assert set(classes[q("001")]) == {q("001"), q("111"), q("221"), q("331")}


def test_compatible_extensions_rejects_bad_party() -> None:
    with pytest.raises(ValidationError):
        compatible_extensions([q("110")], {5})
    with pytest.raises(ValidationError):
        compatible_extensions([], {0})


def test_mirror_sign() -> None:
    assert mirror_sign(q("22"), {1}) == -1
    assert mirror_sign(q("22"), {0, 1}) == 1
    assert mirror_sign(q("21"), {1}) == 1
    with pytest.raises(ValidationError):
        mirror_sign(q("11", REBIT), {1})


def test_question_set_payload_round_trip() -> None:
    qset = enumerate_complete_set(QUBIT2)
    restored = QuestionSet.from_payload(qset.to_payload())
    assert restored == qset
    assert qset.position(q("01")) == 0
    assert q("33") in qset
    with pytest.raises(ValidationError):
        qset.position(q("333"))
    with pytest.raises(ValidationError):
        QuestionSet.from_payload({"kind": "qubit", "indices": ["1"]})


def test_question_set_rejects_foreign_members() -> None:
    with pytest.raises(ValidationError):
        QuestionSet(QUBIT3, (q("11"),))
    with pytest.raises(ValidationError):
        QuestionSet(QUBIT2, (q("11"), q("11")))
