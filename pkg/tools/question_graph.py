"""Compatibility lattice of a complete question set with odd/even triangle labels."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from tools.correlation_structure import Parity
from tools.question_algebra import (
    QuestionIndex,
    SignedQuestion,
    SystemKind,
    enumerate_complete_set,
    is_compatible,
    xnor_compose,
)

logger = logging.getLogger(__name__)

PARITY_COLORS = {Parity.ODD: "red", Parity.EVEN: "green"}


@dataclass(frozen=True)
class Triangle:
    members: Tuple[QuestionIndex, QuestionIndex, QuestionIndex]
    parity: Parity

    @property
    def labels(self) -> List[str]:
        return [q.label for q in self.members]


@dataclass(frozen=True)
class QuestionGraph:
    system: SystemKind
    vertices: Tuple[QuestionIndex, ...]
    edges: Tuple[Tuple[QuestionIndex, QuestionIndex], ...]
    triangles: Tuple[Triangle, ...]

    def compatible_degree(self, q: QuestionIndex) -> int:
        return sum(1 for a, b in self.edges if q in (a, b))

    def complementary_degree(self, q: QuestionIndex) -> int:
        return len(self.vertices) - 1 - self.compatible_degree(q)

    def triangle_count(self, q: QuestionIndex) -> int:
        return sum(1 for t in self.triangles if q in t.members)

    def degree_table(self) -> Dict[str, Tuple[int, int, int]]:
        """label -> (triangles, compatible, complementary)."""
        triangles: Dict[QuestionIndex, int] = {q: 0 for q in self.vertices}
        compatible: Dict[QuestionIndex, int] = {q: 0 for q in self.vertices}
        for t in self.triangles:
            for q in t.members:
                triangles[q] += 1
        for a, b in self.edges:
            compatible[a] += 1
            compatible[b] += 1
        last = len(self.vertices) - 1
        return {q.label: (triangles[q], compatible[q], last - compatible[q]) for q in self.vertices}

    def to_payload(self) -> dict:
        return {
            "kind": self.system.kind.value,
            "n": self.system.n,
            "vertices": [q.label for q in self.vertices],
            "edges": [[a.label, b.label] for a, b in self.edges],
            "triangles": [{"members": t.labels, "parity": t.parity.value} for t in self.triangles],
        }

    def to_dot(self) -> str:
        """DOT rendering; each triangle is a subgraph whose edges carry its parity color."""
        name = f"{self.system.kind.value}_n{self.system.n}"
        lines = [f'graph "{name}" {{', "  node [shape=circle];"]
        lines.extend(f'  "{q.label}";' for q in self.vertices)
        for k, t in enumerate(self.triangles):
            a, b, c = t.labels
            color = PARITY_COLORS[t.parity]
            lines.append(f'  subgraph "triangle_{k}" {{')
            lines.append(f'    label="{t.parity.value}"; color={color}; edge [color={color}];')
            lines.append(f'    "{a}" -- "{b}"; "{b}" -- "{c}"; "{a}" -- "{c}";')
            lines.append("  }")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_lattice(sys: SystemKind) -> QuestionGraph:
    """All compatibility edges and XNOR-closed triangles of the complete set."""
    vertices = enumerate_complete_set(sys).members
    edges = tuple((a, b) for a, b in itertools.combinations(vertices, 2) if is_compatible(a, b))

    triangles: Dict[Tuple[QuestionIndex, ...], Parity] = {}
    for a, b in edges:
        result = xnor_compose(a, b)
        assert isinstance(result, SignedQuestion)
        key = tuple(sorted((a, b, result.index)))
        if key not in triangles:
            triangles[key] = Parity.EVEN if result.sign > 0 else Parity.ODD
    ordered = tuple(Triangle(key, parity) for key, parity in sorted(triangles.items()))
    logger.info("Lattice %s: %d vertices, %d edges, %d triangles", sys, len(vertices), len(edges), len(ordered))
    return QuestionGraph(sys, vertices, edges, ordered)


__all__ = ["PARITY_COLORS", "QuestionGraph", "Triangle", "build_lattice"]
