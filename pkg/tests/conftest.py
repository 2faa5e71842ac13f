"""Pytest configuration: repo-local temp paths and a fresh operator cache per session."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

import numpy as np
import pytest

_TMP = Path(".tmp").resolve()
_TMP.mkdir(parents=True, exist_ok=True)
os.environ["TMPDIR"] = str(_TMP)
os.environ["TEMP"] = str(_TMP)
os.environ["TMP"] = str(_TMP)
tempfile.tempdir = str(_TMP)


def pytest_configure() -> None:
    tempfile.tempdir = str(_TMP)


@pytest.fixture(scope="session", autouse=True)
def _fresh_operator_cache():
    from tools.cache import pauli_cache

    pauli_cache.invalidate()
    yield
    pauli_cache.invalidate()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240617)
