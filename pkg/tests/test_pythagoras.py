import random
from math import gcd, isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pythapair.errors import BadParams, NonPositive, NotPythagorean
from pythapair.pythagoras import (
    coprime_opposite_parity,
    from_params,
    is_multiple_of,
    make_pair,
    primitive_pairs,
)


@pytest.mark.parametrize("a, b", [(3, 4), (4, 3)])
def test_make_pair_small(a, b):
    p = make_pair(a, b)
    assert (p.a, p.b, p.c, p.lam, p.m, p.n) == (a, b, 5, 1, 2, 1)


def test_make_pair_errors():
    with pytest.raises(NotPythagorean):
        make_pair(2, 3)
    with pytest.raises(NonPositive):
        make_pair(0, 4)
    with pytest.raises(NonPositive):
        make_pair(-3, 4)


@pytest.mark.parametrize(
    "m, n, lam, expected", [(2, 1, 1, (3, 4, 5)), (3, 2, 1, (5, 12, 13)), (2, 1, 3, (9, 12, 15))]
)
def test_from_params(m, n, lam, expected):
    p = from_params(m, n, lam)
    assert (p.a, p.b, p.c) == expected


@pytest.mark.parametrize("args", [(1, 1, 1), (3, 1, 1), (4, 2, 1), (2, 1, 0), (1, 2, 1)])
def test_from_params_rejects(args):
    with pytest.raises(BadParams):
        from_params(*args)


@given(
    st.integers(2, 60).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m - 1))),
    st.integers(1, 20),
    st.booleans(),
)
def test_round_trip(mn, lam, swap):
    m, n = mn
    if (m - n) % 2 == 0 or gcd(m, n) != 1:
        return
    p = from_params(m, n, lam)
    a, b = (p.b, p.a) if swap else (p.a, p.b)
    q = make_pair(a, b)
    assert (q.m, q.n, q.lam) == (m, n, lam)
    r = from_params(q.m, q.n, q.lam)
    assert {r.a, r.b} == {a, b}


def test_primitive_pairs_have_one_even_leg():
    for p in primitive_pairs(500):
        assert p.lam == 1
        assert (p.a % 2) + (p.b % 2) == 1


@pytest.mark.parametrize(
    "p, q, expected", [((8, 6), (4, 3), True), ((8, 6), (3, 4), True), ((3, 4), (5, 12), False)]
)
def test_is_multiple_of(p, q, expected):
    assert is_multiple_of(make_pair(*p), make_pair(*q)) is expected


def test_multiple_relation_is_an_equivalence_on_a_sample():
    rng = random.Random(7)
    base = primitive_pairs(200)
    pairs = []
    for _ in range(100):
        p = rng.choice(base)
        lam = rng.randint(1, 6)
        pairs.append((lam * p.a, lam * p.b) if rng.random() < 0.5 else (lam * p.b, lam * p.a))
    for p in pairs:
        assert is_multiple_of(p, p)
    for p in pairs:
        for q in pairs:
            assert is_multiple_of(p, q) == is_multiple_of(q, p)
    for p in pairs[:30]:
        for q in pairs[:30]:
            for r in pairs[:30]:
                if is_multiple_of(p, q) and is_multiple_of(q, r):
                    assert is_multiple_of(p, r)


def test_primitive_pairs_up_to_65():
    got = [(p.a, p.b) for p in primitive_pairs(65)]
    brute = set()
    for a in range(1, 66):
        for b in range(1, 66):
            c = isqrt(a * a + b * b)
            if c * c == a * a + b * b and c <= 65 and gcd(a, b) == 1 and a % 2:
                brute.add((a, b))
    assert set(got) == brute
    assert len(got) == 11


def test_coprime_opposite_parity():
    got = list(coprime_opposite_parity(5))
    assert got == [(2, 1), (3, 2), (4, 1), (4, 3), (5, 2), (5, 4)]
