from __future__ import annotations

import os
from functools import lru_cache
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field

CONFIG_PATH = Path(__file__).resolve().parent / "config.yaml"
CONFIG_ENV = "FWPS_CONFIG"

_ENV_OVERRIDES = {
    "arithmetic_bits": "FWPS_ARITHMETIC_BITS",
    "coset_bound": "FWPS_COSET_BOUND",
    "json_indent": "FWPS_JSON_INDENT",
}

__all__ = ["CONFIG_PATH", "Settings", "get_settings", "load_settings"]


class Settings(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    arithmetic_bits: int = Field(64, ge=8)
    coset_bound: int = Field(60, ge=1)
    json_indent: int | None = Field(2, ge=0)

    @property
    def max_entry(self) -> int:
        return 2 ** (self.arithmetic_bits - 1) - 1


def _load_config(cfg_path: Path) -> dict:
    if not cfg_path.exists():
        return {}
    data = yaml.safe_load(cfg_path.read_text(encoding="utf-8"))
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise TypeError("Configuration must be a mapping")
    return data


def _env_overrides() -> dict[str, Any]:
    overrides: dict[str, Any] = {}
    for key, name in _ENV_OVERRIDES.items():
        value = os.getenv(name)
        if value is None or not value.strip():
            continue
        text = value.strip()
        if key == "json_indent" and text.lower() in {"none", "null"}:
            overrides[key] = None
            continue
        try:
            overrides[key] = int(text)
        except ValueError as exc:
            raise ValueError(f"{name} must be an integer, got {value!r}") from exc
    return overrides


def load_settings(cfg_path: Path | None = None) -> Settings:
    """Read settings from ``cfg_path`` (or ``FWPS_CONFIG``) and apply env overrides."""

    if cfg_path is None:
        env_path = os.getenv(CONFIG_ENV)
        cfg_path = Path(env_path) if env_path else CONFIG_PATH
    data = _load_config(Path(cfg_path))
    data.update(_env_overrides())
    return Settings(**data)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
