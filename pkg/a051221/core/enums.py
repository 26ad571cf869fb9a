"""Enumeration types shared by the arithmetic core."""

from __future__ import annotations

from enum import IntEnum


class Ordering(IntEnum):
    """Result of an exact three-way comparison."""

    LESS = -1
    """
    Left operand is strictly smaller.
    """

    EQUAL = 0
    """
    Both operands denote the same real number.
    """

    GREATER = 1
    """
    Left operand is strictly larger.
    """
