"""Bounded search for rational points and rank-positivity evidence.

A rational point of y^2 = x (x^2 + A x + B) has x = d u^2 / e^2 in lowest
terms with d squarefree and d | B, so the search enumerates signed squarefree
divisors of B and coprime u, e up to the height bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import kernels
from .ecgroup import Curve, Point, contains, order_of
from .exactnum import sqrt_rat, squarefree_divisors

POSITIVE_RANK = "PositiveRank"
INCONCLUSIVE = "InconclusiveWithinBound"

DEFAULT_MAX_PRIMES = 16


@dataclass(frozen=True)
class Classification:
    order: Optional[int]

    @property
    def is_torsion(self) -> bool:
        return self.order is not None

    def __str__(self):
        return f"Torsion({self.order})" if self.is_torsion else "InfiniteOrder"


@dataclass
class SearchReport:
    curve_id: str
    height_bound: int
    points_found: list[Point] = field(default_factory=list)
    generator: Optional[Point] = None

    @property
    def verdict(self) -> str:
        return POSITIVE_RANK if self.generator is not None else INCONCLUSIVE


def classify(c: Curve, p: Point) -> Classification:
    return Classification(order_of(c, p))


def candidate_divisors(c: Curve, max_primes: int = DEFAULT_MAX_PRIMES) -> list[int]:
    """Signed squarefree divisors of B ordered by |d|, negative first."""
    pos = squarefree_divisors(int(c.B), max_primes=max_primes)
    return sorted([-d for d in pos] + pos, key=lambda d: (abs(d), d))


def search_points(
    c: Curve,
    height_bound: int,
    curve_id: str = "",
    max_primes: int = DEFAULT_MAX_PRIMES,
) -> SearchReport:
    """Points with x = d u^2/e^2, u, e <= height_bound, plus (0, 0).

    Only the y >= 0 representative of each x is listed.  The generator is the
    first listed point of infinite order.
    """
    if height_bound < 1:
        raise ValueError(f"height bound must be >= 1, got {height_bound}")
    if not c.is_integral:
        raise ValueError("point search needs integral A, B")
    A, B = int(c.A), int(c.B)
    report = SearchReport(curve_id or str(c), height_bound, [Point(0, 0)])
    for d in candidate_divisors(c, max_primes):
        for u, e in kernels.curve_search(A, B, d, height_bound):
            x = Fraction(d * u * u, e * e)
            y = sqrt_rat(c.rhs(x))
            p = Point(x, y)
            assert contains(c, p)
            report.points_found.append(p)
            if report.generator is None and order_of(c, p) is None:
                report.generator = p
    return report


def naive_grid_points(c: Curve, num_bound: int, den_bound: int) -> list[Point]:
    """Points with x = N/D for |N| <= num_bound, 1 <= D <= den_bound; y >= 0."""
    seen = set()
    out = []
    for den in range(1, den_bound + 1):
        for num in range(-num_bound, num_bound + 1):
            x = Fraction(num, den)
            if x in seen:
                continue
            seen.add(x)
            y = sqrt_rat(c.rhs(x))
            if y is not None:
                out.append(Point(x, y))
    return out

