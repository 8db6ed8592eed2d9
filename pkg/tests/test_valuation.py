import random

import pytest

from newton_gauge.valuation import INFINITY, gcd_nonneg, p_adic_valuation, validate_prime


def test_valuation_of_zero_is_infinity():
    assert p_adic_valuation(0, 2) is INFINITY
    assert p_adic_valuation(0, 97) is INFINITY


def test_small_valuations():
    assert p_adic_valuation(1, 2) == 0
    assert p_adic_valuation(8, 2) == 3
    assert p_adic_valuation(-8, 2) == 3
    assert p_adic_valuation(12, 2) == 2
    assert p_adic_valuation(12, 3) == 1
    assert p_adic_valuation(512, 2) == 9
    assert p_adic_valuation(9, 3) == 2


def test_valuation_product_rule():
    rng = random.Random(7)
    for _ in range(2000):
        p = rng.choice([2, 3, 5, 7])
        a = rng.randint(1, 10**6)
        b = rng.randint(1, 10**6)
        assert p_adic_valuation(a * b, p) == p_adic_valuation(a, p) + p_adic_valuation(b, p)


def test_infinity_ordering_and_arithmetic():
    assert INFINITY > 10**18
    assert not INFINITY < 0
    assert INFINITY == INFINITY
    assert INFINITY != 5
    assert INFINITY + 3 == INFINITY
    assert 3 + INFINITY == INFINITY
    assert max(4, INFINITY) is INFINITY


def test_gcd_nonneg():
    assert gcd_nonneg(-8, 4) == 4
    assert gcd_nonneg(8, -4) == 4
    assert gcd_nonneg(0, 5) == 5
    assert gcd_nonneg(9, 6) == 3
    with pytest.raises(ValueError):
        gcd_nonneg(0, 0)


def test_validate_prime():
    assert validate_prime(2)
    assert validate_prime(3)
    assert validate_prime(97)
    assert not validate_prime(4)
    assert not validate_prime(91)  # 7 * 13
    with pytest.raises(ValueError):
        validate_prime(1)
    with pytest.raises(ValueError):
        validate_prime(-5)
