"""Deterministic JSON encoding for CLI payloads."""

from __future__ import annotations

import json
from typing import Any

BIG_INT_LIMIT = 2**53

__all__ = ["BIG_INT_LIMIT", "dumps", "encode_big_ints"]


def encode_big_ints(value: Any) -> Any:
    """Replace integers beyond ``2**53`` with ``{"value": "<decimal>", "big": true}``.

    Key order of mappings is preserved; tuples become lists.
    """

    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        if abs(value) > BIG_INT_LIMIT:
            return {"value": str(value), "big": True}
        return value
    if isinstance(value, dict):
        return {key: encode_big_ints(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_big_ints(item) for item in value]
    return value


def dumps(payload: Any, indent: int | None = 2) -> str:
    return json.dumps(encode_big_ints(payload), ensure_ascii=True, indent=indent) + "\n"
