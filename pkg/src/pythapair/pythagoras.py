"""Pythagorean pairs and their Euclid parametrization."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import BadParams, NonPositive, NotPythagorean
from .exactnum import isqrt


@dataclass(frozen=True)
class PythagoreanPair:
    """Positive (a, b) with a^2 + b^2 = c^2.

    ``{a, b} == {lam*(m*m - n*n), lam*2*m*n}`` with m > n >= 1 coprime and of
    opposite parity.  The pair keeps the orientation it was built with.
    """

    a: int
    b: int
    c: int
    lam: int
    m: int
    n: int

    @property
    def is_primitive(self) -> bool:
        return self.lam == 1

    def primitive(self) -> "PythagoreanPair":
        return PythagoreanPair(
            self.a // self.lam, self.b // self.lam, self.c // self.lam, 1, self.m, self.n
        )

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


def make_pair(a: int, b: int) -> PythagoreanPair:
    if a <= 0 or b <= 0:
        raise NonPositive(f"pair entries must be positive, got ({a}, {b})")
    c = isqrt(a * a + b * b)
    if c is None:
        raise NotPythagorean(f"{a}^2 + {b}^2 = {a * a + b * b} is not a square")
    lam = gcd(a, b)
    a1, b1, c1 = a // lam, b // lam, c // lam
    odd = a1 if a1 % 2 else b1
    m = isqrt((c1 + odd) // 2)
    n = isqrt((c1 - odd) // 2)
    # a primitive triple always has exactly one even leg, so both roots exist
    assert m is not None and n is not None
    return PythagoreanPair(a, b, c, lam, m, n)


def from_params(m: int, n: int, lam: int = 1) -> PythagoreanPair:
    if not (m > n >= 1) or lam < 1 or gcd(m, n) != 1 or (m - n) % 2 == 0:
        raise BadParams(
            f"need m > n >= 1 coprime with m - n odd and lam >= 1, got ({m}, {n}, {lam})"
        )
    return PythagoreanPair(
        lam * (m * m - n * n), lam * 2 * m * n, lam * (m * m + n * n), lam, m, n
    )


def same_ratio(k: int, l: int, a: int, b: int) -> bool:
    """True iff {k, l} is a positive rational multiple of {a, b} (unordered)."""
    return k * b == l * a or k * a == l * b


def is_multiple_of(p, q) -> bool:
    """Unordered multiple test; accepts pairs or plain 2-tuples."""
    pa, pb = p if isinstance(p, tuple) else (p.a, p.b)
    qa, qb = q if isinstance(q, tuple) else (q.a, q.b)
    return same_ratio(pa, pb, qa, qb)


def euclid_legs(r: int, s: int) -> tuple[int, int]:
    return r * r - s * s, 2 * r * s


def coprime_opposite_parity(bound: int) -> Iterator[tuple[int, int]]:
    """(r, s) with bound >= r > s >= 1, gcd 1, r - s odd; ordered by r then s."""
    for r in range(2, bound + 1):
        for s in range(1 + r % 2, r, 2):
            if gcd(r, s) == 1:
                yield r, s


def primitive_pairs(max_hyp: int) -> list[PythagoreanPair]:
    """Primitive pairs (m^2 - n^2, 2mn) with hypotenuse <= max_hyp.

    Sorted by hypotenuse, then by m.
    """
    pairs = []
    m = 2
    while m * m + 1 <= max_hyp:
        for n in range(1, m):
            if gcd(m, n) == 1 and (m - n) % 2 and m * m + n * n <= max_hyp:
                pairs.append(from_params(m, n))
        m += 1
    return sorted(pairs, key=lambda p: (p.c, p.m))
