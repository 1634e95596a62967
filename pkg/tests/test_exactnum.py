from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pythapair.errors import DomainError
from pythapair.exactnum import (
    factorize,
    is_square,
    isqrt,
    sqrt_rat,
    squarefree_divisors,
    squarefree_part,
)


@pytest.mark.parametrize("n, expected", [(0, 0), (10656, None), (14400, 120), (1, 1), (2, None)])
def test_isqrt_examples(n, expected):
    assert isqrt(n) == expected


def test_isqrt_examples_by_direct_multiplication():
    assert 103 * 103 < 10656 < 104 * 104
    assert 120 * 120 == 14400


def test_isqrt_negative():
    with pytest.raises(DomainError):
        isqrt(-4)


def test_isqrt_squares_and_neighbours_up_to_a_million():
    for n in range(0, 10**6 + 1, 997):
        assert isqrt(n * n) == n
        if n:
            assert isqrt(n * n + 1) is None
    assert isqrt(10**6 * 10**6) == 10**6


@pytest.mark.parametrize(
    "r, expected",
    [(1, True), (Fraction(144, 25), True), (-1, False), (0, True), (Fraction(2, 9), False)],
)
def test_is_square(r, expected):
    assert is_square(r) is expected


@pytest.mark.parametrize(
    "r, expected", [(144, Fraction(12)), (Fraction(9, 16), Fraction(3, 4)), (2, None)]
)
def test_sqrt_rat(r, expected):
    assert sqrt_rat(r) == expected


@given(st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6))
def test_square_predicate_agrees_with_root(r):
    root = sqrt_rat(r)
    assert is_square(r) == (root is not None)
    if root is not None:
        assert root >= 0 and root * root == r


@given(st.fractions(max_denominator=10**9))
def test_squares_of_rationals_are_squares(r):
    assert sqrt_rat(r * r) == abs(r)


@pytest.mark.parametrize("n, expected", [(144, 1), (20736, 1), (-18, -2), (12, 3), (-1, -1)])
def test_squarefree_part(n, expected):
    assert squarefree_part(n) == expected


def test_squarefree_part_zero():
    with pytest.raises(DomainError):
        squarefree_part(0)


@given(st.integers(min_value=-10**12, max_value=10**12).filter(bool))
def test_squarefree_part_cofactor_is_square(n):
    d = squarefree_part(n)
    assert n % d == 0 and n // d > 0
    assert isqrt(n // d) is not None
    assert all(e == 1 for e in factorize(d).values()) if abs(d) > 1 else True


def test_squarefree_part_beyond_trial_bound():
    p, q = 1_000_003, 999_983
    assert squarefree_part(p * p * q, trial_bound=100) == q


def test_squarefree_divisors():
    assert squarefree_divisors(144) == [1, 2, 3, 6]
    assert squarefree_divisors(1) == [1]
