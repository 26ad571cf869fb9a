"""Data models for the known values of A051221."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from a051221.core.json_utils import get_int, get_int_list


@dataclass(frozen=True)
class Representation:
    """A witness 10^x - y^2 for some value.

    Attributes:
        x: Nonnegative exponent.
        y: Nonnegative root.
    """

    x: int
    y: int

    @property
    def value(self) -> int:
        return 10 ** self.x - self.y * self.y

    @property
    def u(self) -> int | None:
        """Exponent u with x = 2u + 1, or None when x is even."""
        if self.x % 2 == 1:
            return (self.x - 1) // 2
        return None

    def to_dict(self) -> dict[str, Any]:
        return {'x': self.x, 'y': self.y}


@dataclass(frozen=True)
class KnownSet:
    """The brute-forced set T(x_max) restricted to [0, bound].

    Attributes:
        x_max: Largest exponent enumerated (x = 0 included).
        bound: Inclusive upper value cap.
        values: Sorted, deduplicated values.
    """

    x_max: int
    bound: int
    values: tuple[int, ...] = field(default_factory=tuple)

    def __contains__(self, value: object) -> bool:
        return value in self._lookup

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    @cached_property
    def _lookup(self) -> frozenset[int]:
        return frozenset(self.values)

    def restricted(self, lo: int, hi: int) -> list[int]:
        """Known values inside [lo, hi]."""
        return [v for v in self.values if lo <= v <= hi]

    def to_bfile_lines(self, offset: int = 0) -> list[str]:
        """Render as b-file lines, "index value", indices starting at offset."""
        return [f'{offset + i} {v}' for i, v in enumerate(self.values)]

    def to_dict(self) -> dict[str, Any]:
        return {
            'x_max':  self.x_max,
            'bound':  self.bound,
            'values': list(self.values),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> KnownSet:
        return cls(
            x_max  = get_int(data, 'x_max'),
            bound  = get_int(data, 'bound'),
            values = tuple(sorted(set(get_int_list(data, 'values')))),
        )
