"""Exact integer primitives for the ring Z[sqrt(10)].

Everything here is integer arithmetic: square roots are floors, surd
comparisons are decided by sign analysis, and no floating point value
is ever produced. All functions are pure and safe to share across
threads and processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime

from a051221.core.enums import Ordering
from a051221.core.exceptions import A051221PrimeError, A051221ValidationError

RADICAND = 10

# Largest exponent whose power of ten the oracle accepts; keeps every
# oracle operand inside a signed 128-bit word for fixed-width checkers.
MAX_ORACLE_EXPONENT = 37


def isqrt(n: int) -> int:
    """Return the floor square root r with r*r <= n < (r+1)*(r+1).

    Raises:
        A051221ValidationError: If n is negative.
    """
    if n < 0:
        raise A051221ValidationError(f'isqrt of a negative number: {n}')
    return math.isqrt(n)


def perfect_square_root(n: int) -> int | None:
    """Return r with r*r == n, or None when n is not a perfect square."""
    root = isqrt(n)
    if root * root == n:
        return root
    return None


@dataclass(frozen=True)
class QuadInt:
    """An element s + t*sqrt(10) of Z[sqrt(10)].

    Attributes:
        s: Rational part.
        t: Coefficient of sqrt(10).
    """

    s: int
    t: int

    def norm(self) -> int:
        """Field norm s^2 - 10 t^2."""
        return self.s * self.s - RADICAND * self.t * self.t

    def conjugate(self) -> QuadInt:
        return QuadInt(self.s, -self.t)

    def square(self) -> QuadInt:
        return quad_mul(self, self)

    def scale(self, k: int) -> QuadInt:
        """Multiply by the rational integer k."""
        return QuadInt(k * self.s, k * self.t)

    def to_tuple(self) -> tuple[int, int]:
        return (self.s, self.t)

    def __mul__(self, other: QuadInt) -> QuadInt:
        return quad_mul(self, other)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.s, -self.t)

    def __str__(self) -> str:
        sign = '-' if self.t < 0 else '+'
        return f'{self.s} {sign} {abs(self.t)}*sqrt(10)'


ONE = QuadInt(1, 0)
UNIT = QuadInt(19, 6)
"""The fundamental unit 19 + 6*sqrt(10), of norm +1."""

UNIT_INVERSE = QuadInt(19, -6)


def quad_mul(x: QuadInt, y: QuadInt) -> QuadInt:
    """Multiply two elements of Z[sqrt(10)]."""
    return QuadInt(
        s = x.s * y.s + RADICAND * x.t * y.t,
        t = x.s * y.t + x.t * y.s,
    )


def quad_pow(x: QuadInt, n: int) -> QuadInt:
    """Raise x to a nonnegative integer power by square-and-multiply.

    Raises:
        A051221ValidationError: If n is negative.
    """
    if n < 0:
        raise A051221ValidationError(f'quad_pow needs a nonnegative exponent, got {n}')

    result = ONE
    base = x
    while n:
        if n & 1:
            result = quad_mul(result, base)
        base = quad_mul(base, base)
        n >>= 1
    return result


def unit_power(k: int) -> QuadInt:
    """Return UNIT**k for any integer k; negative powers use UNIT_INVERSE."""
    if k >= 0:
        return quad_pow(UNIT, k)
    return quad_pow(UNIT_INVERSE, -k)


def surd_sign(p: int, q: int) -> int:
    """Exact sign (-1, 0 or 1) of the real number p + q*sqrt(10).

    Four sign cases:
        p >= 0, q >= 0: positive unless both are zero.
        p <= 0, q <= 0: negative unless both are zero.
        p > 0, q < 0: positive iff p^2 > 10 q^2.
        p < 0, q > 0: positive iff 10 q^2 > p^2.

    Equality p^2 == 10 q^2 only happens at p == q == 0, since sqrt(10)
    is irrational, so the mixed cases never tie.
    """
    if p >= 0 and q >= 0:
        return 0 if p == 0 and q == 0 else 1
    if p <= 0 and q <= 0:
        return -1

    p_squared = p * p
    q_squared = RADICAND * q * q
    if p > 0:
        return 1 if p_squared > q_squared else -1
    return 1 if q_squared > p_squared else -1


def quad_compare(x: QuadInt, y: QuadInt) -> Ordering:
    """Order the real numbers x.s + x.t*sqrt(10) and y.s + y.t*sqrt(10)."""
    return Ordering(surd_sign(x.s - y.s, x.t - y.t))


def mod_pow(base: int, exponent: int, m: int) -> int:
    """Return base**exponent mod m, in [0, m).

    Raises:
        A051221ValidationError: If m < 2 or exponent < 0.
    """
    if m < 2:
        raise A051221ValidationError(f'modulus must be at least 2, got {m}')
    if exponent < 0:
        raise A051221ValidationError(f'exponent must be nonnegative, got {exponent}')
    return pow(base, exponent, m)


@dataclass(frozen=True)
class SignedPowerSubgroup:
    """The subgroup {+-10^m mod p : m >= 0} of the units modulo p.

    Attributes:
        p: Odd prime modulus, coprime to 10.
        elements: The residues, all in [1, p - 1].
    """

    p: int
    elements: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, residue: object) -> bool:
        return residue in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def validate_prime(p: int) -> None:
    """Check that p is an odd prime not dividing 10.

    Raises:
        A051221PrimeError: Otherwise.
    """
    if p <= 1 or RADICAND % p == 0:
        raise A051221PrimeError(f'{p} divides 10 or is not a valid modulus')
    if not isprime(p):
        raise A051221PrimeError(f'{p} is not prime')


@lru_cache(maxsize=None)
def build_signed_subgroup(p: int) -> SignedPowerSubgroup:
    """Build {+-10^m mod p} as the closure of {1, -1} under multiplication by 10.

    Raises:
        A051221PrimeError: If p is not an odd prime coprime to 10.
    """
    validate_prime(p)

    elements: set[int] = set()
    power = 1
    while power not in elements:
        elements.add(power)
        elements.add(p - power)
        power = power * RADICAND % p

    return SignedPowerSubgroup(p=p, elements=frozenset(elements))
