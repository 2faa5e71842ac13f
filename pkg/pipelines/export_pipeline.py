"""Rendering of complete sets and lattices in table, JSON and DOT formats."""

from __future__ import annotations

import logging
import sys as _sys
from pathlib import Path
from typing import Optional

import pandas as pd

from schemas.response_schemas import LatticePayload, QuestionSetPayload
from tools.error_handler import ValidationError
from tools.question_algebra import SystemKind, enumerate_complete_set
from tools.question_graph import build_lattice

logger = logging.getLogger(__name__)


def render_enumeration(sys: SystemKind, fmt: str = "table") -> str:
    """Complete set with a count header (table) or as {kind, n, count, indices} (json)."""
    qset = enumerate_complete_set(sys)
    if fmt == "json":
        payload = QuestionSetPayload(kind=sys.kind.value, n=sys.n, count=len(qset), indices=qset.labels)
        return payload.model_dump_json(indent=2) + "\n"
    if fmt != "table":
        raise ValidationError(f"enumerate does not support format '{fmt}'")
    lines = [f"# {sys.kind.value} n={sys.n} D={len(qset)}"]
    lines.extend(qset.labels)
    return "\n".join(lines) + "\n"


def render_lattice(sys: SystemKind, fmt: str = "dot") -> str:
    graph = build_lattice(sys)
    if fmt == "dot":
        return graph.to_dot()
    if fmt == "json":
        return LatticePayload.model_validate(graph.to_payload()).model_dump_json(indent=2) + "\n"
    if fmt != "table":
        raise ValidationError(f"lattice does not support format '{fmt}'")
    rows = [
        {"question": label, "triangles": t, "compatible": c, "complementary": k}
        for label, (t, c, k) in graph.degree_table().items()
    ]
    frame = pd.DataFrame(rows, columns=["question", "triangles", "compatible", "complementary"])
    header = (
        f"# {sys.kind.value} n={sys.n}: {len(graph.vertices)} vertices, "
        f"{len(graph.edges)} edges, {len(graph.triangles)} triangles"
    )
    return header + "\n" + frame.to_string(index=False) + "\n"


def write_output(text: str, out: Optional[Path] = None) -> None:
    """Write to a file when a path is given, else to standard output."""
    if out is None:
        _sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info("Wrote %s", out)


__all__ = ["render_enumeration", "render_lattice", "write_output"]
