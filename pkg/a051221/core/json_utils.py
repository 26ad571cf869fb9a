"""JSON helper utilities for reading and writing certificate documents.

Certificates are plain JSON. This module provides thin wrappers so that
models can serialize themselves deterministically and read documents
back without scattering key and type checks across the codebase.
"""

from __future__ import annotations

import json
from typing import Any

from a051221.core.exceptions import A051221ValidationError


def get_int(data: dict[str, Any], key: str, default: int | None = None) -> int:
    """Extract an integer field.

    Args:
        data: The JSON object to read from.
        key: The field name.
        default: Value to use if the field is missing; None makes it required.

    Returns:
        The integer value.

    Raises:
        A051221ValidationError: If the field is required and missing, or not an integer.
    """
    value = data.get(key, default)
    if value is None:
        raise A051221ValidationError(f'missing integer field {key!r}')
    if isinstance(value, bool) or not isinstance(value, int):
        raise A051221ValidationError(f'field {key!r} must be an integer, got {value!r}')
    return value


def get_bool(data: dict[str, Any], key: str, default: bool = False) -> bool:
    """Extract a boolean field, falling back to default when missing."""
    value = data.get(key, default)
    if not isinstance(value, bool):
        raise A051221ValidationError(f'field {key!r} must be a boolean, got {value!r}')
    return value


def get_int_list(data: dict[str, Any], key: str) -> list[int]:
    """Extract a list of integers; a missing field reads as an empty list."""
    values = data.get(key, [])
    if not isinstance(values, list):
        raise A051221ValidationError(f'field {key!r} must be a list, got {values!r}')
    for value in values:
        if isinstance(value, bool) or not isinstance(value, int):
            raise A051221ValidationError(f'field {key!r} holds a non-integer {value!r}')
    return list(values)


def get_object_list(data: dict[str, Any], key: str) -> list[dict[str, Any]]:
    """Extract a list of JSON objects; a missing field reads as an empty list."""
    values = data.get(key, [])
    if not isinstance(values, list) or not all(isinstance(v, dict) for v in values):
        raise A051221ValidationError(f'field {key!r} must be a list of objects')
    return list(values)


def dump_document(document: dict[str, Any]) -> str:
    """Serialize a document to the canonical certificate text.

    Keys keep insertion order, so equal models always produce
    byte-identical output.
    """
    return json.dumps(document, indent=2, ensure_ascii=True) + '\n'


def load_document(text: str) -> dict[str, Any]:
    """Parse certificate text into a JSON object.

    Raises:
        A051221ValidationError: If the text is not a JSON object.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise A051221ValidationError(f'malformed certificate JSON: {exc}') from exc

    if not isinstance(document, dict):
        raise A051221ValidationError('certificate must be a JSON object')
    return document
