"""Symbolic question algebra for N-gbit systems.

A question Q_{mu_1...mu_N} is named by an N-tuple over {0,1,2,3}; entry mu_a is
the individual question asked of gbit a (0 means gbit a is not involved).
Two questions are compatible iff they disagree in an even number of positions
where both entries are non-zero. Compatible questions compose with XNOR; the
result index follows the componentwise rule and the sign is the structural
parity of the corresponding Pauli-string product.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from tools.error_handler import (
    CompositionUndefined,
    InconsistentQuestionsError,
    ValidationError,
)

logger = logging.getLogger(__name__)


class GbitKind(str, Enum):
    QUBIT = "qubit"
    REBIT = "rebit"

    @classmethod
    def parse(cls, value: Union[str, "GbitKind"]) -> "GbitKind":
        if isinstance(value, GbitKind):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValidationError(f"Unknown system kind '{value}'. Supported: qubit, rebit") from None


# Single-site index -> Pauli letter. Rebits use sigma_z for index 2 and realize
# paired 3s as sigma_y factors so that every rebit operator stays real.
SITE_LETTERS: Dict[GbitKind, Dict[int, str]] = {
    GbitKind.QUBIT: {0: "I", 1: "X", 2: "Y", 3: "Z"},
    GbitKind.REBIT: {0: "I", 1: "X", 2: "Z", 3: "Y"},
}

# (a, b) -> (c, k) with a.b = i^k c
_CYCLIC = {("X", "Y"): "Z", ("Y", "Z"): "X", ("Z", "X"): "Y"}


def letter_product(a: str, b: str) -> Tuple[str, int]:
    """Multiply two single-site Pauli letters, returning (letter, power of i)."""
    if a == "I":
        return b, 0
    if b == "I":
        return a, 0
    if a == b:
        return "I", 0
    if (a, b) in _CYCLIC:
        return _CYCLIC[(a, b)], 1
    return _CYCLIC[(b, a)], 3


@dataclass(frozen=True)
class SystemKind:
    """A system of n gbits of a given kind."""

    kind: GbitKind
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GbitKind.parse(self.kind))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"Number of gbits must be a positive integer, got {self.n!r}")

    @property
    def d1(self) -> int:
        """Number of complementary individual questions per gbit."""
        return 3 if self.kind is GbitKind.QUBIT else 2

    @property
    def dimension(self) -> int:
        """Size D_n of the informationally complete set."""
        if self.kind is GbitKind.QUBIT:
            return 4 ** self.n - 1
        return 2 ** (self.n - 1) * (2 ** self.n + 1) - 1

    @property
    def hilbert_dim(self) -> int:
        return 2 ** self.n

    def __str__(self) -> str:
        return f"{self.kind.value} n={self.n}"


@dataclass(frozen=True, order=True)
class QuestionIndex:
    """Index tuple naming one question of the informationally complete set."""

    indices: Tuple[int, ...]
    kind: GbitKind = field(default=GbitKind.QUBIT)

    def __post_init__(self) -> None:
        indices = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "kind", GbitKind.parse(self.kind))
        if not indices:
            raise ValidationError("Question index must have at least one entry")
        if any(i not in (0, 1, 2, 3) for i in indices):
            raise ValidationError(f"Question index entries must lie in {{0,1,2,3}}, got {indices}")
        if not any(indices):
            raise ValidationError("The all-zero index corresponds to no question")
        if self.kind is GbitKind.REBIT and indices.count(3) % 2:
            raise ValidationError(f"Rebit question {self.label} has an odd number of entries equal to 3")

    @classmethod
    def parse(cls, label: str, kind: Union[str, GbitKind] = GbitKind.QUBIT) -> "QuestionIndex":
        text = str(label).strip()
        if not text.isdigit():
            raise ValidationError(f"Question label must be a digit string, got '{label}'")
        return cls(tuple(int(c) for c in text), kind)

    @property
    def n(self) -> int:
        return len(self.indices)

    @property
    def system(self) -> SystemKind:
        return SystemKind(self.kind, self.n)

    @property
    def weight(self) -> int:
        return sum(1 for i in self.indices if i)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(a for a, i in enumerate(self.indices) if i)

    @property
    def label(self) -> str:
        return "".join(str(i) for i in self.indices)

    def __str__(self) -> str:
        return f"Q_{self.label}"


@dataclass(frozen=True)
class SignedQuestion:
    """A question (sign +1) or its negation (sign -1)."""

    index: QuestionIndex
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValidationError(f"Sign must be +1 or -1, got {self.sign!r}")

    @classmethod
    def parse(cls, label: str, kind: Union[str, GbitKind] = GbitKind.QUBIT) -> "SignedQuestion":
        text = str(label).strip()
        if text.startswith("!"):
            return cls(QuestionIndex.parse(text[1:], kind), -1)
        return cls(QuestionIndex.parse(text, kind), 1)

    def negate(self) -> "SignedQuestion":
        return SignedQuestion(self.index, -self.sign)

    @property
    def label(self) -> str:
        return ("!" if self.sign < 0 else "") + self.index.label

    def __str__(self) -> str:
        return ("¬" if self.sign < 0 else "") + str(self.index)


@dataclass(frozen=True)
class Tautology:
    """Result of composing a question with itself (or with its negation)."""

    value: bool

    @property
    def label(self) -> str:
        return "1" if self.value else "0"


ALWAYS_TRUE = Tautology(True)
ALWAYS_FALSE = Tautology(False)

Composition = Union[SignedQuestion, Tautology]
QuestionLike = Union[QuestionIndex, SignedQuestion]


@dataclass(frozen=True)
class QuestionSet:
    """Lexicographically ordered, duplicate-free set of questions of one system."""

    system: SystemKind
    members: Tuple[QuestionIndex, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(self.members))
        if len(set(members)) != len(members):
            raise ValidationError("Question set members must be pairwise distinct")
        for q in members:
            _check_system(q, self.system)
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, q: object) -> bool:
        return q in self.positions

    @cached_property
    def positions(self) -> Dict[QuestionIndex, int]:
        return {q: i for i, q in enumerate(self.members)}

    def position(self, q: QuestionIndex) -> int:
        try:
            return self.positions[q]
        except KeyError:
            raise ValidationError(f"{q} is not a member of the {self.system} question set") from None

    @property
    def labels(self) -> List[str]:
        return [q.label for q in self.members]

    def to_payload(self) -> dict:
        return {"kind": self.system.kind.value, "n": self.system.n, "indices": self.labels}

    @classmethod
    def from_payload(cls, payload: dict) -> "QuestionSet":
        try:
            system = SystemKind(GbitKind.parse(payload["kind"]), int(payload["n"]))
            members = tuple(QuestionIndex.parse(label, system.kind) for label in payload["indices"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"Malformed question set payload: {exc}") from None
        return cls(system, members)


def _check_system(q: QuestionIndex, system: SystemKind) -> None:
    if q.kind is not system.kind or q.n != system.n:
        raise ValidationError(f"{q} ({q.kind.value}, n={q.n}) does not belong to {system}")


def _as_signed(q: QuestionLike) -> SignedQuestion:
    return q if isinstance(q, SignedQuestion) else SignedQuestion(q, 1)


def _as_index(q: QuestionLike) -> QuestionIndex:
    return q.index if isinstance(q, SignedQuestion) else q


def _check_same_system(q1: QuestionIndex, q2: QuestionIndex) -> None:
    if q1.n != q2.n:
        raise ValidationError(f"Mismatched number of gbits: {q1} has n={q1.n}, {q2} has n={q2.n}")
    if q1.kind is not q2.kind:
        raise ValidationError(f"Mismatched system kinds: {q1.kind.value} vs {q2.kind.value}")


def weight(q: QuestionLike) -> int:
    """Number of gbits a question involves."""
    return _as_index(q).weight


def disagreements(q1: QuestionLike, q2: QuestionLike) -> int:
    """Positions where both indices are non-zero and differ."""
    a, b = _as_index(q1), _as_index(q2)
    _check_same_system(a, b)
    return sum(1 for x, y in zip(a.indices, b.indices) if x and y and x != y)


def is_compatible(q1: QuestionLike, q2: QuestionLike) -> bool:
    return disagreements(q1, q2) % 2 == 0


def is_complementary(q1: QuestionLike, q2: QuestionLike) -> bool:
    a, b = _as_index(q1), _as_index(q2)
    return a != b and not is_compatible(a, b)


def composed_index(q1: QuestionLike, q2: QuestionLike) -> Tuple[int, ...]:
    """Componentwise XNOR index: equal -> 0, one zero -> the other, distinct -> the third."""
    a, b = _as_index(q1), _as_index(q2)
    _check_same_system(a, b)
    out = []
    for x, y in zip(a.indices, b.indices):
        if x == y:
            out.append(0)
        elif not x or not y:
            out.append(x or y)
        else:
            out.append(6 - x - y)
    return tuple(out)


def product_phase(q1: QuestionLike, q2: QuestionLike) -> int:
    """Power of i (mod 4) picked up by the Pauli-string product P(q1) P(q2)."""
    a, b = _as_index(q1), _as_index(q2)
    _check_same_system(a, b)
    letters = SITE_LETTERS[a.kind]
    phase = 0
    for x, y in zip(a.indices, b.indices):
        _, k = letter_product(letters[x], letters[y])
        phase += k
    return phase % 4


def structural_parity(q1: QuestionLike, q2: QuestionLike) -> int:
    """Sign epsilon(q1, q2) of the composition of two compatible questions."""
    if not is_compatible(q1, q2):
        raise CompositionUndefined(f"{_as_index(q1)} and {_as_index(q2)} are complementary")
    phase = product_phase(q1, q2)
    if phase not in (0, 2):
        raise CompositionUndefined(f"Product phase i^{phase} of compatible questions is not real")
    return 1 if phase == 0 else -1


def xnor_compose(s1: QuestionLike, s2: QuestionLike) -> Composition:
    """XNOR composition of two compatible (signed) questions."""
    a, b = _as_signed(s1), _as_signed(s2)
    _check_same_system(a.index, b.index)
    if not is_compatible(a.index, b.index):
        raise CompositionUndefined(
            f"{a} <-> {b} is undefined: the questions are complementary",
        )
    sign = a.sign * b.sign
    if a.index == b.index:
        return ALWAYS_TRUE if sign > 0 else ALWAYS_FALSE
    epsilon = structural_parity(a.index, b.index)
    index = QuestionIndex(composed_index(a.index, b.index), a.index.kind)
    return SignedQuestion(index, sign * epsilon)


@lru_cache(maxsize=32)
def enumerate_complete_set(sys: SystemKind) -> QuestionSet:
    """All valid question indices of the system in lexicographic order."""
    members = []
    for indices in itertools.product(range(4), repeat=sys.n):
        if not any(indices):
            continue
        if sys.kind is GbitKind.REBIT and indices.count(3) % 2:
            continue
        members.append(QuestionIndex(indices, sys.kind))
    qset = QuestionSet(sys, tuple(members))
    logger.debug("Enumerated %d questions for %s", len(qset), sys)
    return qset


def is_mutually_compatible(qs: Sequence[QuestionLike]) -> bool:
    """Pairwise compatibility; sufficient for mutual compatibility of independent questions."""
    indices = [_as_index(q) for q in qs]
    return all(is_compatible(a, b) for a, b in itertools.combinations(indices, 2))


def logical_closure(gens: Sequence[QuestionLike]) -> List[SignedQuestion]:
    """All signed questions derivable from the generators by repeated XNOR composition."""
    signed = [_as_signed(g) for g in gens]
    for a, b in itertools.combinations(signed, 2):
        if not is_compatible(a.index, b.index):
            raise CompositionUndefined(f"Generators {a} and {b} are complementary", failed_step="LOGICAL_CLOSURE")

    members: Dict[QuestionIndex, int] = {}
    frontier: List[SignedQuestion] = []

    def _admit(s: SignedQuestion) -> None:
        known = members.get(s.index)
        if known is None:
            members[s.index] = s.sign
            frontier.append(s)
        elif known != s.sign:
            raise InconsistentQuestionsError(
                f"Generators imply both {s.index} and its negation", failed_step="LOGICAL_CLOSURE"
            )

    for s in signed:
        _admit(s)

    while frontier:
        current = frontier.pop()
        for index, sign in list(members.items()):
            result = xnor_compose(current, SignedQuestion(index, sign))
            if isinstance(result, Tautology):
                if not result.value:
                    raise InconsistentQuestionsError(
                        f"Generators imply a contradiction via {current}", failed_step="LOGICAL_CLOSURE"
                    )
                continue
            _admit(result)

    closure = [SignedQuestion(index, members[index]) for index in sorted(members)]
    logger.debug("Closure of %d generators has %d members", len(signed), len(closure))
    return closure


def compatible_extensions(
    known: Sequence[QuestionLike],
    party: Iterable[int],
) -> List[QuestionIndex]:
    """Complete-set questions touching any gbit in `party` that are compatible with all known questions."""
    known_indices = [_as_index(q) for q in known]
    if not known_indices:
        raise ValidationError("At least one known question is required")
    system = known_indices[0].system
    party = set(party)
    if not party or any(a < 0 or a >= system.n for a in party):
        raise ValidationError(f"Party {sorted(party)} is not a subset of gbits 0..{system.n - 1}")
    return [
        q
        for q in enumerate_complete_set(system)
        if party.intersection(q.support) and all(is_compatible(q, k) for k in known_indices)
    ]


def extension_classes(
    known: Sequence[QuestionLike],
    party: Iterable[int],
) -> Dict[QuestionIndex, List[QuestionIndex]]:
    """Group compatible extensions by the coset of the known questions' closure they belong to.

    The representative of a class is its lowest-weight member (ties broken
    lexicographically); questions in one class carry the same information once
    the known questions are answered.
    """
    closure = logical_closure(known)
    classes: Dict[QuestionIndex, List[QuestionIndex]] = {}
    for q in compatible_extensions(known, party):
        coset = [q]
        for c in closure:
            if c.index != q:
                coset.append(QuestionIndex(composed_index(q, c.index), q.kind))
        rep = min(coset, key=lambda x: (x.weight, x.indices))
        classes.setdefault(rep, []).append(q)
    return classes


def mirror_sign(q: QuestionLike, flipped: Iterable[int]) -> int:
    """Sign a qubit question acquires when the y-axis orientation of `flipped` gbits is reversed."""
    index = _as_index(q)
    if index.kind is not GbitKind.QUBIT:
        raise ValidationError("Mirror relabeling is defined for qubit questions only")
    count = sum(1 for a in set(flipped) if index.indices[a] == 2)
    return -1 if count % 2 else 1


__all__ = [
    "ALWAYS_FALSE",
    "ALWAYS_TRUE",
    "GbitKind",
    "QuestionIndex",
    "QuestionSet",
    "SignedQuestion",
    "SystemKind",
    "Tautology",
    "compatible_extensions",
    "composed_index",
    "enumerate_complete_set",
    "extension_classes",
    "is_compatible",
    "is_complementary",
    "is_mutually_compatible",
    "logical_closure",
    "mirror_sign",
    "product_phase",
    "structural_parity",
    "weight",
    "xnor_compose",
]
