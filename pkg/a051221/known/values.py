"""Brute-force generation of the known value set and the representation oracle.

The known set is T(x_max) = {10^x - y^2 : 0 <= x <= x_max, y >= 0} cut to
[0, bound]. Exponent x = 0 is included because the sequence is defined
for x >= 0 and lists 0 = 10^0 - 1^2 as a member.
"""

from __future__ import annotations

import logging

from a051221.core.exact_arith import MAX_ORACLE_EXPONENT, isqrt, perfect_square_root
from a051221.core.exceptions import A051221ValidationError, A051221WidthError
from a051221.known.models import KnownSet, Representation

logger = logging.getLogger(__name__)


def _values_for_exponent(x: int, bound: int) -> list[int]:
    """Values 10^x - y^2 in [0, bound], scanning only the y window that can hit it."""
    power = 10 ** x
    y_lo = isqrt(max(power - bound, 0))
    y_hi = isqrt(power)

    values = []
    for y in range(y_lo, y_hi + 1):
        value = power - y * y
        if 0 <= value <= bound:
            values.append(value)
    return values


def known_set(x_max: int, bound: int) -> KnownSet:
    """Enumerate T(x_max) intersected with [0, bound].

    Args:
        x_max: Largest exponent, x_max >= 0.
        bound: Inclusive value cap, bound >= 0.

    Returns:
        The exhaustive, sorted KnownSet.

    Raises:
        A051221ValidationError: If either argument is negative.
    """
    if x_max < 0 or bound < 0:
        raise A051221ValidationError(
            f'known_set needs x_max >= 0 and bound >= 0, got {x_max}, {bound}'
        )

    found: set[int] = set()
    for x in range(x_max + 1):
        found.update(_values_for_exponent(x, bound))

    logger.debug('T(%d) on [0, %d] has %d values', x_max, bound, len(found))
    return KnownSet(x_max=x_max, bound=bound, values=tuple(sorted(found)))


def known_set_stabilizes(x_max: int, bound: int) -> bool:
    """Whether T(x_max + 1) == T(x_max) on [0, bound], the enumeration stopping rule."""
    return known_set(x_max + 1, bound).values == known_set(x_max, bound).values


def even_exponent_min(x: int) -> int:
    """Smallest positive value of 10^x - y^2 for even x, namely 2*10^(x/2) - 1.

    Raises:
        A051221ValidationError: If x is odd or smaller than 2.
    """
    if x < 2 or x % 2:
        raise A051221ValidationError(f'even_exponent_min needs an even x >= 2, got {x}')
    return 2 * 10 ** (x // 2) - 1


def oracle_scan(c: int, x_limit: int) -> Representation | None:
    """Find the smallest-x representation c = 10^x - y^2 with x <= x_limit.

    This is independent of the Pell machinery: it only asks whether
    10^x - c is a perfect square for each x.

    Raises:
        A051221ValidationError: If c is negative.
        A051221WidthError: If x_limit exceeds MAX_ORACLE_EXPONENT.
    """
    if c < 0:
        raise A051221ValidationError(f'oracle_scan needs c >= 0, got {c}')
    if x_limit > MAX_ORACLE_EXPONENT:
        raise A051221WidthError(
            f'x limit {x_limit} exceeds the oracle width bound {MAX_ORACLE_EXPONENT}'
        )

    for x in range(x_limit + 1):
        remainder = 10 ** x - c
        if remainder < 0:
            continue
        root = perfect_square_root(remainder)
        if root is not None:
            return Representation(x=x, y=root)
    return None
