"""Odd/even correlation structure among gbit pairs and local handedness."""

from __future__ import annotations

import itertools
from enum import Enum
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from tools.error_handler import ValidationError
from tools.gf2_solver import ParityConstraint, Satisfiable, frustration_check

Pair = Tuple[int, int]


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


class Handedness(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def _parity(value: Union[str, Parity]) -> Parity:
    try:
        return value if isinstance(value, Parity) else Parity(str(value).lower())
    except ValueError:
        raise ValidationError(f"Parity must be 'even' or 'odd', got {value!r}") from None


def _normalize(pair_parities: Mapping[Pair, Union[str, Parity]]) -> Tuple[Dict[Pair, Parity], Tuple[int, ...]]:
    normalized: Dict[Pair, Parity] = {}
    for pair, value in pair_parities.items():
        a, b = pair
        if a == b:
            raise ValidationError(f"Pair {pair} must name two distinct gbits")
        normalized[(min(a, b), max(a, b))] = _parity(value)
    gbits = tuple(sorted({g for pair in normalized for g in pair}))
    if len(gbits) < 3:
        raise ValidationError("Parities are needed for at least one gbit triple")
    missing = [p for p in itertools.combinations(gbits, 2) if p not in normalized]
    if missing:
        raise ValidationError(f"Incomplete parity map: missing pairs {missing}")
    return normalized, gbits


def handedness_consistency(pair_parities: Mapping[Pair, Union[str, Parity]]) -> bool:
    """Every gbit triple must carry an odd number of odd-parity pairs.

    Parity of a pair refers to Q_33 = Q_11 <-> Q_22 (even) versus
    Q_33 = not(Q_11 <-> Q_22) (odd) for that pair. The triple identity
    Q_{3A3B} <-> Q_{3A3C} <-> Q_{3B3C} = 1 then admits exactly the patterns
    with one or three odd pairs.
    """
    parities, gbits = _normalize(pair_parities)
    for a, b, c in itertools.combinations(gbits, 3):
        odd = sum(parities[p] is Parity.ODD for p in ((a, b), (a, c), (b, c)))
        if odd % 2 == 0:
            return False
    return True


def parities_from_handedness(assignment: Mapping[int, Union[str, Handedness]]) -> Dict[Pair, Parity]:
    """Equally handed gbit pairs are oddly correlated, oppositely handed pairs evenly."""
    hands = {g: Handedness(str(h.value if isinstance(h, Handedness) else h).lower()) for g, h in assignment.items()}
    return {
        (a, b): Parity.ODD if hands[a] is hands[b] else Parity.EVEN
        for a, b in itertools.combinations(sorted(hands), 2)
    }


def handedness_witness(pair_parities: Mapping[Pair, Union[str, Parity]]) -> Optional[Dict[int, Handedness]]:
    """Solve for a per-gbit handedness producing the parities, or None if none exists."""
    parities, gbits = _normalize(pair_parities)
    constraints = []
    for (a, b), parity in sorted(parities.items()):
        # h_a ^ h_b = 1 for even pairs; as an XNOR chain of two variables that is value 0
        constraints.append(ParityConstraint((f"h{a}", f"h{b}"), 1 if parity is Parity.ODD else 0))
    result = frustration_check(constraints)
    if not isinstance(result, Satisfiable):
        return None
    reference = result.witness[f"h{gbits[0]}"]
    return {
        g: Handedness.LEFT if result.witness[f"h{g}"] == reference else Handedness.RIGHT
        for g in gbits
    }


def all_parity_patterns(gbits: Iterable[int]) -> Iterable[Dict[Pair, Parity]]:
    """Every assignment of even/odd to the pairs of the given gbits."""
    pairs = list(itertools.combinations(sorted(gbits), 2))
    for values in itertools.product((Parity.EVEN, Parity.ODD), repeat=len(pairs)):
        yield dict(zip(pairs, values))


__all__ = [
    "Handedness",
    "Parity",
    "all_parity_patterns",
    "handedness_consistency",
    "handedness_witness",
    "parities_from_handedness",
]
