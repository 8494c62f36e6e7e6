from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modwb.core.numtheory import (
    bernoulli,
    divisor_sigma_table,
    fundamental_split,
    is_prime,
    is_square,
    kronecker,
    mobius,
    parse_rational,
    primes_up_to,
    rational_str,
    valuation,
)


def test_primes_and_mobius():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert not is_prime(1) and is_prime(2) and not is_prime(91)


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(7) == 0


def test_divisor_sigma_table_matches_naive():
    table = divisor_sigma_table(60, 3)
    for n in range(1, 61):
        assert table[n] == sum(d**3 for d in range(1, n + 1) if n % d == 0)


def test_kronecker_against_euler_criterion():
    for p in (3, 5, 7, 11, 13):
        for a in range(1, p):
            assert kronecker(a, p) == (1 if pow(a, (p - 1) // 2, p) == 1 else -1)
    assert kronecker(-4, 3) == -1 and kronecker(-4, 5) == 1 and kronecker(5, 2) == -1


@pytest.mark.parametrize("n, expected", [(-3, (-3, 1)), (-12, (-3, 2)), (-4, (-4, 1)), (-16, (-4, 2)),
                                         (-20, (-20, 1)), (5, (5, 1)), (8, (8, 1)), (36, (1, 6))])
def test_fundamental_split(n, expected):
    assert fundamental_split(n) == expected


@given(st.integers(-10**6, 10**6).filter(lambda n: n % 4 in (0, 1) and n != 0))
def test_fundamental_split_property(n):
    d0, f = fundamental_split(n)
    assert d0 * f * f == n
    assert d0 % 4 in (0, 1)


@given(st.fractions())
def test_rational_string_round_trip(x):
    assert parse_rational(rational_str(x)) == x


def test_valuation_and_squares():
    assert valuation(48, 2) == 4 and valuation(48, 3) == 1 and valuation(5, 2) == 0
    assert is_square(49) and not is_square(50) and is_square(0)
