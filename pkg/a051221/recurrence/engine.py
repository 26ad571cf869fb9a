"""The recurrence t_{k+2} = 38 t_{k+1} - t_k reduced modulo fixed moduli.

t_k is the sqrt(10)-coefficient of (a + b*sqrt(10)) * UNIT**k. Its
companion matrix [[0, 1], [-1, 38]] has determinant 1, so it is invertible
modulo every m and every residue sequence is purely periodic: the state
(t_k, t_{k+1}) returns to (t_0, t_1) with no pre-period, and one period
covers all k in Z, negative indices included.

Periods are found by first return of the state pair; nothing is factored.
"""

from __future__ import annotations

import logging
import math

from a051221.core.exact_arith import QuadInt, quad_mul, unit_power
from a051221.core.exceptions import A051221InvariantError, A051221ValidationError
from a051221.recurrence.models import JointZeroScan, ResidueSequence, ZeroHitProfile

logger = logging.getLogger(__name__)

TRACE = 38


def _check_modulus(m: int) -> None:
    if m < 2:
        raise A051221ValidationError(f'modulus must be at least 2, got {m}')


def _period_cap(m: int) -> int:
    # The state pair lives in a set of m^2 elements.
    return 16 * m * m


def seeds(a: int, b: int) -> tuple[int, int]:
    """Exact (t_0, t_1) = (b, 6a + 19b)."""
    return b, 6 * a + 19 * b


def exact_t(a: int, b: int, k: int) -> int:
    """Exact t_k for any integer k, computed in Z[sqrt(10)]."""
    return quad_mul(QuadInt(a, b), unit_power(k)).t


def sequence_mod(a: int, b: int, m: int) -> ResidueSequence:
    """Materialize one period of t_k mod m.

    Raises:
        A051221ValidationError: If m < 2.
        A051221InvariantError: If the state does not return within 16 m^2 steps.
    """
    _check_modulus(m)
    a, b = a % m, b % m
    first, second = b, (6 * a + 19 * b) % m

    values = []
    t0, t1 = first, second
    for step in range(1, _period_cap(m) + 1):
        values.append(t0)
        t0, t1 = t1, (TRACE * t1 - t0) % m
        if t0 == first and t1 == second:
            return ResidueSequence(a=a, b=b, modulus=m, period=step, values=tuple(values))

    raise A051221InvariantError(f'no period found for ({a}, {b}) mod {m}')


def zero_positions(seq: ResidueSequence) -> ZeroHitProfile:
    """All k in [0, period) with t_k == 0 mod the sequence's modulus."""
    return ZeroHitProfile(
        modulus_n      = seq.modulus,
        period_n       = seq.period,
        zero_positions = tuple(k for k, value in enumerate(seq.values) if value == 0),
    )


def scan_joint(a: int, b: int, modulus_n: int, p: int) -> JointZeroScan:
    """Stream one joint period, recording t_k mod p wherever t_k == 0 mod N.

    The recurrence runs once modulo lcm(N, p). By the Chinese remainder
    theorem that state returns exactly when the states mod N and mod p both
    do, so the first return is the joint period lcm(period_N, period_p).
    Nothing beyond the hit list is kept.

    Raises:
        A051221ValidationError: If a modulus is smaller than 2.
        A051221InvariantError: If the state does not return within the cap.
    """
    _check_modulus(modulus_n)
    _check_modulus(p)
    modulus = math.lcm(modulus_n, p)
    first, second = b % modulus, (6 * a + 19 * b) % modulus

    hits: list[tuple[int, int]] = []
    t0, t1 = first, second
    for k in range(_period_cap(modulus)):
        if t0 % modulus_n == 0:
            hits.append((k, t0 % p))
        t0, t1 = t1, (TRACE * t1 - t0) % modulus
        if t0 == first and t1 == second:
            logger.debug(
                'seed (%d,%d): joint period %d mod (%d, %d), %d zero hits',
                a, b, k + 1, modulus_n, p, len(hits),
            )
            return JointZeroScan(
                a            = a,
                b            = b,
                modulus_n    = modulus_n,
                prime        = p,
                joint_period = k + 1,
                hits         = tuple(hits),
            )

    raise A051221InvariantError(f'no joint period found for ({a}, {b}) mod ({modulus_n}, {p})')


def joint_zero_residues(a: int, b: int, modulus_n: int, p: int) -> list[tuple[int, int]]:
    """(k, t_k mod p) for every zero hit mod N in one joint period, ascending k."""
    return list(scan_joint(a, b, modulus_n, p).hits)
