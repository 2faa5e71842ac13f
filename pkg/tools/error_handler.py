"""Structured error types and report formatting."""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from typing import Any, Optional

from schemas.response_schemas import ErrorReport

logger = logging.getLogger(__name__)

PATH_PATTERN = re.compile(r"([A-Za-z]:\\[^:\n]+|/[^:\n]+)")
TRACEBACK_PATTERN = re.compile(r"Traceback \(most recent call last\):.*", re.DOTALL)


@dataclass
class GbitError(Exception):
    """Base error for all structured toolbox failures."""

    error_category: str
    message: str
    failed_step: Optional[str] = None

    def __str__(self) -> str:
        return self.message


class ValidationError(GbitError):
    def __init__(self, message: str, failed_step: Optional[str] = None):
        super().__init__(error_category="VALIDATION_ERROR", message=message, failed_step=failed_step)


class CompositionUndefined(GbitError):
    """XNOR composition requested for complementary questions."""

    def __init__(self, message: str, failed_step: Optional[str] = "XNOR_COMPOSE"):
        super().__init__(error_category="COMPOSITION_UNDEFINED", message=message, failed_step=failed_step)


class InconsistentQuestionsError(GbitError):
    def __init__(self, message: str, failed_step: Optional[str] = None):
        super().__init__(error_category="INCONSISTENT_QUESTIONS", message=message, failed_step=failed_step)


class InvalidStateError(GbitError):
    def __init__(self, message: str, failed_step: Optional[str] = None):
        super().__init__(error_category="INVALID_STATE", message=message, failed_step=failed_step)


class OracleError(GbitError):
    def __init__(self, message: str, failed_step: Optional[str] = None):
        super().__init__(error_category="ORACLE_ERROR", message=message, failed_step=failed_step)


class ScenarioError(GbitError):
    def __init__(self, message: str, failed_step: Optional[str] = "LOAD_SCENARIO"):
        super().__init__(error_category="SCENARIO_ERROR", message=message, failed_step=failed_step)


def sanitize_error_message(raw_message: str) -> str:
    """Remove stack traces and filesystem paths from error text."""
    without_traceback = TRACEBACK_PATTERN.sub("", raw_message).strip()
    without_paths = PATH_PATTERN.sub("[path]", without_traceback)
    return without_paths.strip() or "An internal error occurred."


def format_error_report(exc: Exception, failed_step: Optional[str] = None) -> ErrorReport:
    """Convert an exception into a safe error payload."""
    if isinstance(exc, GbitError):
        category = exc.error_category
        failed = exc.failed_step or failed_step
        message = sanitize_error_message(exc.message)
        # Expected domain errors should not emit full stack traces.
        logger.warning("Failure category=%s failed_step=%s message=%s", category, failed, message)
    else:
        category = "UNKNOWN_ERROR"
        failed = failed_step
        message = sanitize_error_message(str(exc))
        logger.exception("Failure category=%s failed_step=%s", category, failed, exc_info=exc)

    return ErrorReport(error_category=category, failed_step=failed, error_message=message)


def clean_payload(obj: Any) -> Any:
    """Recursively convert numpy values and pydantic models into JSON-safe types."""
    try:
        import numpy as np
    except ImportError:
        np = None

    if isinstance(obj, dict):
        return {k: clean_payload(v) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [clean_payload(x) for x in obj]
    elif np is not None and isinstance(obj, np.ndarray):
        return clean_payload(obj.tolist())
    elif isinstance(obj, bool) or (np is not None and isinstance(obj, np.bool_)):
        return bool(obj)
    elif np is not None and isinstance(obj, np.integer):
        return int(obj)
    elif np is not None and isinstance(obj, np.floating):
        obj = float(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return obj
    elif isinstance(obj, complex):
        return [obj.real, obj.imag]
    elif hasattr(obj, "model_dump") and callable(obj.model_dump):
        return clean_payload(obj.model_dump(mode="json"))
    return obj
