"""GF(2) linear constraint solving for XNOR/XOR relations over binary answers.

Rows are kept as int bitsets (bit j <-> variable j). Each row also carries a
provenance bitset over the input constraints so that an inconsistent row
reports exactly which constraints combine into 0 = 1.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from tools.error_handler import ValidationError
from tools.question_algebra import QuestionIndex, SignedQuestion

logger = logging.getLogger(__name__)

GBIT_NAMES = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


@dataclass(frozen=True)
class ParityConstraint:
    """The XNOR chain x_1 <-> x_2 <-> ... <-> x_k has truth value `value`.

    As a linear equation: x_1 ^ ... ^ x_k = value ^ ((k - 1) mod 2). Repeated
    variables are allowed and cancel pairwise.
    """

    variables: Tuple[str, ...]
    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(str(v) for v in self.variables))
        if not self.variables:
            raise ValidationError("A parity constraint needs at least one variable")
        if self.value not in (0, 1):
            raise ValidationError(f"Constraint value must be 0 or 1, got {self.value!r}")

    @property
    def rhs(self) -> int:
        return self.value ^ ((len(self.variables) - 1) % 2)


@dataclass(frozen=True)
class Satisfiable:
    witness: Dict[str, int] = field(default_factory=dict)

    @property
    def satisfiable(self) -> bool:
        return True


@dataclass(frozen=True)
class Frustrated:
    inconsistent: Tuple[int, ...] = ()

    @property
    def satisfiable(self) -> bool:
        return False


FrustrationResult = Union[Satisfiable, Frustrated]
ConstraintLike = Union[ParityConstraint, Tuple[Sequence[str], int]]


def _coerce(constraint: ConstraintLike) -> ParityConstraint:
    if isinstance(constraint, ParityConstraint):
        return constraint
    try:
        variables, value = constraint
    except (TypeError, ValueError):
        raise ValidationError(f"Malformed constraint {constraint!r}") from None
    if isinstance(variables, str):
        variables = (variables,)
    return ParityConstraint(tuple(variables), int(value))


def _variable_order(constraints: Sequence[ParityConstraint]) -> List[str]:
    seen: Dict[str, None] = {}
    for c in constraints:
        for v in c.variables:
            seen.setdefault(v, None)
    return sorted(seen)


def frustration_check(constraints: Sequence[ConstraintLike]) -> FrustrationResult:
    """Gaussian elimination over GF(2); Satisfiable with a witness or Frustrated with a culprit subset."""
    parsed = [_coerce(c) for c in constraints]
    names = _variable_order(parsed)
    column = {name: j for j, name in enumerate(names)}

    rows: List[Tuple[int, int, int]] = []  # (coefficients, rhs, provenance)
    for k, c in enumerate(parsed):
        bits = 0
        for v in c.variables:
            bits ^= 1 << column[v]
        rows.append((bits, c.rhs, 1 << k))

    pivots: List[Tuple[int, int, int, int]] = []  # (col, bits, rhs, provenance)
    for bits, rhs, prov in rows:
        for col, p_bits, p_rhs, p_prov in pivots:
            if (bits >> col) & 1:
                bits ^= p_bits
                rhs ^= p_rhs
                prov ^= p_prov
        if bits == 0:
            if rhs:
                culprit = tuple(k for k in range(len(parsed)) if (prov >> k) & 1)
                logger.debug("Frustrated constraint subset %s", culprit)
                return Frustrated(culprit)
            continue
        col = (bits & -bits).bit_length() - 1
        # keep earlier pivots reduced in the new pivot column
        reduced = []
        for p_col, p_bits, p_rhs, p_prov in pivots:
            if (p_bits >> col) & 1:
                p_bits ^= bits
                p_rhs ^= rhs
                p_prov ^= prov
            reduced.append((p_col, p_bits, p_rhs, p_prov))
        pivots = reduced + [(col, bits, rhs, prov)]

    # free variables default to 1; reduced rows then fix each pivot
    values = [1] * len(names)
    pivot_cols = {p[0] for p in pivots}
    for col, bits, rhs, _ in pivots:
        acc = rhs
        rest = bits & ~(1 << col)
        j = 0
        while rest:
            if rest & 1 and j not in pivot_cols:
                acc ^= values[j]
            rest >>= 1
            j += 1
        values[col] = acc
    return Satisfiable({name: values[j] for j, name in enumerate(names)})


def evaluate(constraints: Sequence[ConstraintLike], assignment: Mapping[str, int]) -> bool:
    """True iff the assignment satisfies every constraint."""
    for c in map(_coerce, constraints):
        acc = 0
        for v in c.variables:
            acc ^= int(assignment[v])
        if acc != c.rhs:
            return False
    return True


def brute_force_check(constraints: Sequence[ConstraintLike]) -> bool:
    """Exhaustive truth-table satisfiability; reference for small instances."""
    parsed = [_coerce(c) for c in constraints]
    names = _variable_order(parsed)
    for values in itertools.product((0, 1), repeat=len(names)):
        if evaluate(parsed, dict(zip(names, values))):
            return True
    return False


def individual_variables(q: QuestionIndex) -> Tuple[str, ...]:
    """Individual-question variables whose XNOR chain is the question, e.g. Q_12 -> ('A:1', 'B:2')."""
    if q.n > len(GBIT_NAMES):
        raise ValidationError(f"At most {len(GBIT_NAMES)} gbits can be named")
    return tuple(f"{GBIT_NAMES[a]}:{mu}" for a, mu in enumerate(q.indices) if mu)


def question_constraint(
    terms: Sequence[Union[QuestionIndex, SignedQuestion]],
    value: int,
) -> ParityConstraint:
    """Constraint 'term_1 <-> ... <-> term_m = value' read over individual-question variables.

    XNOR chains are associative, so the chain of composite terms equals the
    chain of all their individual variables; each negated term flips the value.
    """
    if not terms:
        raise ValidationError("A question constraint needs at least one term")
    variables: List[str] = []
    negations = 0
    for term in terms:
        if isinstance(term, SignedQuestion):
            negations += term.sign < 0
            term = term.index
        variables.extend(individual_variables(term))
    return ParityConstraint(tuple(variables), (value ^ negations) & 1)


def bell_constraints(value: int) -> List[ParityConstraint]:
    """Two gbits: Q_11 = 1, Q_22 = 1 and (Q_12 <-> Q_21) = value, read over individuals."""
    q11, q22, q12, q21 = (QuestionIndex.parse(label) for label in ("11", "22", "12", "21"))
    return [
        question_constraint([q11], 1),
        question_constraint([q22], 1),
        question_constraint([q12, q21], value),
    ]


__all__ = [
    "Frustrated",
    "ParityConstraint",
    "Satisfiable",
    "bell_constraints",
    "brute_force_check",
    "evaluate",
    "frustration_check",
    "individual_variables",
    "question_constraint",
]
