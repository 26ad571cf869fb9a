"""Tests for the exact Z[sqrt(10)] arithmetic core."""

import random
from decimal import Decimal, localcontext

import pytest
from sympy.ntheory import n_order

from a051221.core.enums import Ordering
from a051221.core.exact_arith import (
    UNIT,
    UNIT_INVERSE,
    QuadInt,
    build_signed_subgroup,
    isqrt,
    mod_pow,
    perfect_square_root,
    quad_compare,
    quad_mul,
    quad_pow,
    surd_sign,
    unit_power,
)
from a051221.core.exceptions import A051221PrimeError, A051221ValidationError

BOUND_64 = 2 ** 63


def _random_quad(rng: random.Random) -> QuadInt:
    return QuadInt(rng.randrange(-BOUND_64, BOUND_64), rng.randrange(-BOUND_64, BOUND_64))


class TestIsqrt:
    """Tests for isqrt and perfect_square_root."""

    def test_examples(self):
        assert isqrt(0) == 0
        assert isqrt(31) == 5
        assert isqrt(1999) == 44

    def test_negative_rejected(self):
        with pytest.raises(A051221ValidationError):
            isqrt(-1)

    def test_floor_property_sweep(self):
        for n in range(10 ** 6):
            r = isqrt(n)
            assert r * r <= n < (r + 1) * (r + 1)

    def test_boundaries(self):
        for k in list(range(1, 2000)) + [10 ** 20 + 7, 2 ** 127 - 1]:
            for n in (k * k - 1, k * k, k * k + 1):
                r = isqrt(n)
                assert r * r <= n < (r + 1) * (r + 1)
            assert isqrt(k * k) == k
            assert isqrt(k * k - 1) == k - 1

    def test_perfect_square_root(self):
        assert perfect_square_root(9) == 3
        assert perfect_square_root(33) is None
        assert perfect_square_root(10 * 2 ** 2 - 31) == 3
        assert perfect_square_root(0) == 0


class TestQuadMul:
    """Tests for multiplication in Z[sqrt(10)]."""

    def test_unit_times_conjugate(self):
        assert quad_mul(QuadInt(19, 6), QuadInt(19, -6)) == QuadInt(1, 0)
        assert UNIT.conjugate() == UNIT_INVERSE
        assert UNIT.norm() == 1

    def test_seed_times_unit(self):
        assert quad_mul(QuadInt(3, 2), UNIT) == QuadInt(177, 56)
        assert QuadInt(3, 2) * UNIT == QuadInt(177, 56)

    def test_identity(self):
        x = QuadInt(-12, 7)
        assert quad_mul(QuadInt(1, 0), x) == x
        assert quad_mul(x, QuadInt(1, 0)) == x

    def test_ring_laws_and_norm(self):
        rng = random.Random(51221)
        for _ in range(500):
            x, y, z = _random_quad(rng), _random_quad(rng), _random_quad(rng)
            assert quad_mul(x, y) == quad_mul(y, x)
            assert quad_mul(quad_mul(x, y), z) == quad_mul(x, quad_mul(y, z))
            assert quad_mul(x, y).norm() == x.norm() * y.norm()

    def test_powers(self):
        assert quad_pow(UNIT, 0) == QuadInt(1, 0)
        assert quad_pow(UNIT, 2) == QuadInt(721, 228)
        assert unit_power(-3) * unit_power(3) == QuadInt(1, 0)
        with pytest.raises(A051221ValidationError):
            quad_pow(UNIT, -1)


class TestQuadCompare:
    """Tests for exact comparison of quadratic surds."""

    def test_examples(self):
        assert quad_compare(QuadInt(19, 6), QuadInt(20, 6)) is Ordering.LESS
        assert quad_compare(QuadInt(0, 1), QuadInt(3, 0)) is Ordering.GREATER
        assert quad_compare(QuadInt(3, 2), QuadInt(3, 2)) is Ordering.EQUAL

    def test_box_example(self):
        square = QuadInt(3, 2).square()
        assert square == QuadInt(49, 12)
        assert UNIT.scale(31) == QuadInt(589, 186)
        assert quad_compare(square, UNIT.scale(31)) is Ordering.LESS

    def test_sign_cases(self):
        assert surd_sign(0, 0) == 0
        assert surd_sign(1, 0) == 1
        assert surd_sign(0, -1) == -1
        assert surd_sign(4, -1) == 1
        assert surd_sign(3, -1) == -1
        assert surd_sign(-3, 1) == 1
        assert surd_sign(-4, 1) == -1

    def test_agrees_with_decimal_oracle(self):
        rng = random.Random(10)
        with localcontext() as ctx:
            ctx.prec = 80
            root = Decimal(10).sqrt()
            for _ in range(1000):
                x, y = _random_quad(rng), _random_quad(rng)
                difference = (Decimal(x.s) + Decimal(x.t) * root) - (
                    Decimal(y.s) + Decimal(y.t) * root
                )
                expected = (difference > 0) - (difference < 0)
                assert quad_compare(x, y) == expected


class TestModPow:
    """Tests for mod_pow."""

    def test_examples(self):
        assert mod_pow(10, 0, 7) == 1
        assert mod_pow(10, 2, 160001) == 100

    def test_matches_repeated_multiplication(self):
        value = 1
        for _ in range(625):
            value = value * 10 % 160001
        assert mod_pow(10, 625, 160001) == value
        assert value in (1, 160000)

    def test_invalid_arguments(self):
        with pytest.raises(A051221ValidationError):
            mod_pow(10, 3, 1)
        with pytest.raises(A051221ValidationError):
            mod_pow(10, -1, 7)


class TestSignedSubgroup:
    """Tests for build_signed_subgroup."""

    def test_reference_orders(self):
        assert build_signed_subgroup(160001).order == 1250
        assert build_signed_subgroup(1601).order == 200

    def test_small_primes(self):
        assert build_signed_subgroup(3).elements == frozenset({1, 2})
        assert build_signed_subgroup(3).order == 2
        assert build_signed_subgroup(11).elements == frozenset({1, 10})

    @pytest.mark.parametrize('p', [3, 7, 11, 13, 97, 1601, 160001])
    def test_closure(self, p):
        subgroup = build_signed_subgroup(p)
        assert (2 * (p - 1)) % subgroup.order == 0
        assert len(subgroup) == subgroup.order
        for e in subgroup.elements:
            assert 1 <= e <= p - 1
            assert 10 * e % p in subgroup
            assert p - e in subgroup

    @pytest.mark.parametrize('p', [7, 13, 97, 1601, 160001])
    def test_order_matches_multiplicative_order(self, p):
        order = n_order(10, p)
        minus_one_is_power = pow(10, order // 2, p) == p - 1 if order % 2 == 0 else False
        expected = order if minus_one_is_power else 2 * order
        assert build_signed_subgroup(p).order == expected

    @pytest.mark.parametrize('p', [2, 5, 9, 1, 160000])
    def test_invalid_primes(self, p):
        with pytest.raises(A051221PrimeError):
            build_signed_subgroup(p)
