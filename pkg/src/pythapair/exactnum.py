"""Exact integer and rational primitives.

Integers are Python ints and rationals are :class:`fractions.Fraction`, which
is always stored in lowest terms with a positive denominator.  Nothing in the
package touches floating point.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

import sympy

from .errors import DomainError, FactoringLimit

Rat = Fraction
RatLike = Union[int, Fraction]

DEFAULT_TRIAL_BOUND = 10_000


def rat(value: RatLike, den: int = 1) -> Fraction:
    return Fraction(value, den)


def isqrt(n: int) -> Optional[int]:
    """Return s with s*s == n, or None when n is not a perfect square."""
    if n < 0:
        raise DomainError(f"isqrt of negative integer {n}")
    s = math.isqrt(n)
    return s if s * s == n else None


def is_square(r: RatLike) -> bool:
    return sqrt_rat(r) is not None


def sqrt_rat(r: RatLike) -> Optional[Fraction]:
    r = Fraction(r)
    if r < 0:
        return None
    num = isqrt(r.numerator)
    if num is None:
        return None
    den = isqrt(r.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def factorize(n: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}.

    Trial division runs up to ``trial_bound``; a cofactor left over after that
    is handed to sympy.
    """
    n = abs(n)
    if n == 0:
        raise DomainError("cannot factor 0")
    factors: dict[int, int] = {}
    p = 2
    while p <= trial_bound and p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        if p * p > n:
            factors[n] = factors.get(n, 0) + 1
        else:
            for q, e in sympy.factorint(n).items():
                factors[int(q)] = factors.get(int(q), 0) + e
    return factors


def squarefree_part(n: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> int:
    """The squarefree d with n = d * s**2, carrying the sign of n."""
    if n == 0:
        raise DomainError("squarefree part of 0 is undefined")
    d = 1
    for p, e in factorize(n, trial_bound).items():
        if e % 2:
            d *= p
    return d if n > 0 else -d


def squarefree_divisors(
    n: int, max_primes: int = 16, trial_bound: int = DEFAULT_TRIAL_BOUND
) -> list[int]:
    """All positive squarefree divisors of n, ascending.

    Raises FactoringLimit when n has more than ``max_primes`` distinct primes,
    since the divisor set doubles with every prime.
    """
    primes = sorted(factorize(n, trial_bound))
    if len(primes) > max_primes:
        raise FactoringLimit(
            f"{len(primes)} distinct primes exceeds the limit of {max_primes}"
        )
    divs = [1]
    for p in primes:
        divs += [d * p for d in divs]
    return sorted(divs)


def divisors(n: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> list[int]:
    divs = [1]
    for p, e in factorize(n, trial_bound).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def frac_to_json(r: RatLike) -> dict[str, str]:
    r = Fraction(r)
    return {"num": str(r.numerator), "den": str(r.denominator)}


def frac_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))
