from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch):
    from fwps.config import _ENV_OVERRIDES, CONFIG_ENV, get_settings

    monkeypatch.delenv(CONFIG_ENV, raising=False)
    for name in _ENV_OVERRIDES.values():
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def narrow_width(monkeypatch):
    """Shrink the arithmetic width contract to 8 bits (entries up to 127)."""

    from fwps.config import get_settings

    monkeypatch.setenv("FWPS_ARITHMETIC_BITS", "8")
    get_settings.cache_clear()
    return get_settings()
