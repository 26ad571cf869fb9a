"""Data models for residue sequences and their zero hits."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass


@dataclass(frozen=True)
class ResidueSequence:
    """One full period of t_k mod m for the seed (a, b).

    t_0 = b, t_1 = 6a + 19b, t_{k+2} = 38 t_{k+1} - t_k. The sequence is
    purely periodic, so indexing wraps for every integer k, negative included.

    Attributes:
        a: Seed rational part, reduced mod m.
        b: Seed coefficient of sqrt(10), reduced mod m.
        modulus: The modulus m >= 2.
        period: Least P >= 1 with (t_P, t_{P+1}) == (t_0, t_1).
        values: t_0 .. t_{P-1} mod m.
    """

    a: int
    b: int
    modulus: int
    period: int
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.values[k % self.period]

    def __len__(self) -> int:
        return self.period


@dataclass(frozen=True)
class ZeroHitProfile:
    """Indices within one period where t_k == 0 mod N.

    Attributes:
        modulus_n: The modulus N.
        period_n: Period of the sequence mod N.
        zero_positions: Sorted indices k in [0, period_n), possibly empty.
    """

    modulus_n: int
    period_n: int
    zero_positions: tuple[int, ...]

    def progression(self) -> tuple[int, int] | None:
        """Return (offset, step) when the hits are exactly offset + step*j over the period."""
        return arithmetic_progression(self.zero_positions, self.period_n)


@dataclass(frozen=True)
class JointZeroScan:
    """Zero hits mod N over one joint period, with their residues mod p.

    Attributes:
        a: Seed rational part.
        b: Seed coefficient of sqrt(10).
        modulus_n: The modulus N.
        prime: The modulus p.
        joint_period: Least P with both state pairs back at their start.
        hits: (k, t_k mod p) for every k in [0, joint_period) with t_k == 0 mod N.
    """

    a: int
    b: int
    modulus_n: int
    prime: int
    joint_period: int
    hits: tuple[tuple[int, int], ...]

    @property
    def zero_positions(self) -> list[int]:
        return [k for k, _ in self.hits]

    @property
    def residues(self) -> list[int]:
        return [residue for _, residue in self.hits]

    def progression(self) -> tuple[int, int] | None:
        return arithmetic_progression(self.zero_positions, self.joint_period)


def arithmetic_progression(positions: Sequence[int], period: int) -> tuple[int, int] | None:
    """Describe positions as one residue class offset mod step covering [0, period).

    Returns:
        (offset, step) with positions == range(offset, period, step), or None.
    """
    if not positions:
        return None
    offset = positions[0]
    step = positions[1] - offset if len(positions) > 1 else period
    if step <= 0 or offset >= step or period % step:
        return None
    if list(positions) != list(range(offset, period, step)):
        return None
    return (offset, step)
