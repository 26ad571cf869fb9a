"""Data models for fundamental pairs and reduced solutions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from a051221.core.exact_arith import QuadInt
from a051221.core.json_utils import get_int


@dataclass(frozen=True)
class FundamentalPair:
    """A solution (a, b) of 10 b^2 - a^2 = c inside the reduction box.

    Attributes:
        a: Nonnegative rational part, with a <= 3 sqrt(c).
        b: Positive coefficient of sqrt(10), with sqrt(c/10) <= b <= sqrt(c).
        c: The positive value the pair solves for.
    """

    a: int
    b: int
    c: int

    @property
    def element(self) -> QuadInt:
        """The ring element a + b*sqrt(10)."""
        return QuadInt(self.a, self.b)

    @property
    def key(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __str__(self) -> str:
        return f'({self.a},{self.b})'

    def to_dict(self) -> dict[str, Any]:
        return {'a': self.a, 'b': self.b}

    @classmethod
    def from_dict(cls, data: dict[str, Any], c: int | None = None) -> FundamentalPair:
        """Parse {a, b}; c is taken from the argument or from the data."""
        a = get_int(data, 'a')
        b = get_int(data, 'b')
        value = c if c is not None else get_int(data, 'c', 10 * b * b - a * a)
        return cls(a=a, b=b, c=value)


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of reducing a solution (s, t) into the box.

    With s' = -s when conjugated and s' = s otherwise,
    sign * (s' + t*sqrt(10)) == (a + b*sqrt(10)) * UNIT**exponent_k.

    Attributes:
        pair: The canonical fundamental pair (a >= 0, b >= 1).
        exponent_k: Unit exponent K, possibly negative.
        sign: +1 or -1.
        conjugated: Whether the reduced element had a < 0 and was reflected.
    """

    pair: FundamentalPair
    exponent_k: int
    sign: int
    conjugated: bool = False
