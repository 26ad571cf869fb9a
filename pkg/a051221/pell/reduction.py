"""Reduction of solutions of 10 t^2 - s^2 = c to fundamental pairs.

Every solution s + t*sqrt(10) equals +-(a + b*sqrt(10)) * UNIT**K, up to
conjugation, for a pair (a, b) in the box

    sqrt(c) * (sqrt(10) - 3) <= a + b*sqrt(10) <= sqrt(c) * (sqrt(10) + 3).

Squaring the box gives c * UNIT_INVERSE <= (a + b*sqrt(10))^2 <= c * UNIT,
which is what the exact comparisons below test. K is found by stepping
through unit multiples rather than by evaluating logarithms.
"""

from __future__ import annotations

from a051221.core.enums import Ordering
from a051221.core.exact_arith import (
    UNIT,
    UNIT_INVERSE,
    QuadInt,
    isqrt,
    perfect_square_root,
    quad_compare,
    quad_mul,
    surd_sign,
    unit_power,
)
from a051221.core.exceptions import A051221InvariantError, A051221ValidationError
from a051221.pell.models import FundamentalPair, ReductionResult

# Each unit step shrinks or grows the element by a factor of about 38.97.
MAX_REDUCTION_STEPS = 64


def fundamental_pairs(c: int) -> list[FundamentalPair]:
    """Enumerate every pair (a, b), a >= 0, in the box for c, sorted by b.

    An empty list means 10 t^2 - s^2 = c has no integer solution at all.

    Raises:
        A051221ValidationError: If c < 1.
    """
    if c < 1:
        raise A051221ValidationError(f'fundamental_pairs needs c >= 1, got {c}')

    b_lo = max(isqrt(c // 10), 1)
    while 10 * b_lo * b_lo < c:
        b_lo += 1
    b_hi = isqrt(c)

    pairs = []
    for b in range(b_lo, b_hi + 1):
        a = perfect_square_root(10 * b * b - c)
        if a is None:
            continue
        if a * a > 9 * c:
            raise A051221InvariantError(f'pair ({a},{b}) for c={c} escapes a^2 <= 9c')
        pairs.append(FundamentalPair(a=a, b=b, c=c))
    return pairs


def in_reduction_box(pair: FundamentalPair) -> bool:
    """Whether c*UNIT_INVERSE <= (a + b*sqrt(10))^2 <= c*UNIT holds exactly."""
    if surd_sign(pair.a, pair.b) <= 0:
        return False
    square = pair.element.square()
    return (
        quad_compare(square, UNIT_INVERSE.scale(pair.c)) is not Ordering.LESS
        and quad_compare(square, UNIT.scale(pair.c)) is not Ordering.GREATER
    )


def reduce_solution(s: int, t: int) -> ReductionResult:
    """Reduce a solution of 10 t^2 - s^2 = c > 0 to its fundamental pair.

    Args:
        s: Rational part of the solution.
        t: Coefficient of sqrt(10).

    Returns:
        ReductionResult whose relation to (s, t) is re-checked before returning.

    Raises:
        A051221ValidationError: If 10 t^2 - s^2 <= 0.
        A051221InvariantError: If the loop does not settle or the round trip fails.
    """
    c = 10 * t * t - s * s
    if c <= 0:
        raise A051221ValidationError(f'({s}, {t}) gives 10t^2 - s^2 = {c}, need > 0')

    element = QuadInt(s, t)
    sign = 1
    if surd_sign(s, t) < 0:
        element = -element
        sign = -1

    upper = UNIT.scale(c)
    lower = UNIT_INVERSE.scale(c)
    exponent = 0
    for _ in range(MAX_REDUCTION_STEPS):
        square = element.square()
        if quad_compare(square, upper) is Ordering.GREATER:
            element = quad_mul(element, UNIT_INVERSE)
            exponent += 1
        elif quad_compare(square, lower) is Ordering.LESS:
            element = quad_mul(element, UNIT)
            exponent -= 1
        else:
            break
    else:
        raise A051221InvariantError(
            f'reduction of ({s}, {t}) did not settle within {MAX_REDUCTION_STEPS} steps'
        )

    a, b = element.s, element.t
    conjugated = a < 0
    if conjugated:
        # -conj(a + b*sqrt(10)) = -a + b*sqrt(10); conjugation inverts the unit power.
        a = -a
        exponent = -exponent

    pair = FundamentalPair(a=a, b=b, c=c)
    if b <= 0 or b * b > c or 10 * b * b < c:
        raise A051221InvariantError(f'reduced pair {pair} for c={c} lies outside the box')

    target = QuadInt(-s if conjugated else s, t).scale(sign)
    if quad_mul(pair.element, unit_power(exponent)) != target:
        raise A051221InvariantError(f'round trip failed reducing ({s}, {t}) to {pair}')

    return ReductionResult(pair=pair, exponent_k=exponent, sign=sign, conjugated=conjugated)
