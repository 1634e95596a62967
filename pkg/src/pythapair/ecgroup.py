"""Group law on y^2 = x^3 + A x^2 + B x over the rationals."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt as _isqrt
from typing import Iterable, Optional

from .errors import DomainError, NotIntegral, OffCurve, SizeLimit
from .exactnum import RatLike, factorize, is_square, sqrt_rat

MAZUR_BOUND = 12
MAX_MULTIPLIER = 1 << 16

Z2xZ4 = "Z2xZ4"
Z2xZ8 = "Z2xZ8"
OTHER = "other"


@dataclass(frozen=True)
class Curve:
    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        if self.B == 0 or self.A * self.A - 4 * self.B == 0:
            raise DomainError(f"singular curve A={self.A}, B={self.B}")

    def rhs(self, x: RatLike) -> Fraction:
        return x * (x * (x + self.A) + self.B)

    @property
    def is_integral(self) -> bool:
        return self.A.denominator == 1 and self.B.denominator == 1

    @property
    def discriminant(self) -> Fraction:
        return 16 * self.B**2 * (self.A**2 - 4 * self.B)

    @property
    def j_invariant(self) -> Fraction:
        return j_invariant(0, self.A, 0, self.B, 0)

    def __str__(self):
        return f"y^2 = x^3 + ({self.A})x^2 + ({self.B})x"


@dataclass(frozen=True)
class Point:
    """Affine point (x, y), or the point at infinity when both are None."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("a point needs both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "Point":
        return self if self.is_infinity else Point(self.x, -self.y)

    def sort_key(self):
        return (0, 0, 0) if self.is_infinity else (1, self.x, self.y)

    def __str__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = Point()


def j_invariant(a1, a2, a3, a4, a6) -> Fraction:
    """j-invariant of a general Weierstrass model."""
    a1, a2, a3, a4, a6 = map(Fraction, (a1, a2, a3, a4, a6))
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc == 0:
        raise DomainError("singular Weierstrass model")
    return c4**3 / disc


def contains(c: Curve, p: Point) -> bool:
    return p.is_infinity or p.y * p.y == c.rhs(p.x)


def _check(c: Curve, *points: Point) -> None:
    for p in points:
        if not contains(c, p):
            raise OffCurve(f"{p} is not on {c}")


def _add(c: Curve, p: Point, q: Point) -> Point:
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x:
        if p.y != q.y or p.y == 0:
            return INFINITY
        slope = (3 * p.x * p.x + 2 * c.A * p.x + c.B) / (2 * p.y)
    else:
        slope = (q.y - p.y) / (q.x - p.x)
    x3 = slope * slope - c.A - p.x - q.x
    return Point(x3, slope * (p.x - x3) - p.y)


def add(c: Curve, p: Point, q: Point) -> Point:
    _check(c, p, q)
    return _add(c, p, q)


def double(c: Curve, p: Point) -> Point:
    _check(c, p)
    return _add(c, p, p)


def scalar_mul(c: Curve, k: int, p: Point) -> Point:
    _check(c, p)
    if k < 0:
        raise DomainError(f"multiplier must be nonnegative, got {k}")
    if k > MAX_MULTIPLIER:
        raise SizeLimit(f"multiplier {k} exceeds cap {MAX_MULTIPLIER}")
    result = INFINITY
    addend = p
    while k:
        if k & 1:
            result = _add(c, result, addend)
        k >>= 1
        if k:
            addend = _add(c, addend, addend)
    return result


def order_of(c: Curve, p: Point) -> Optional[int]:
    """Order of p, or None when no multiple up to the Mazur bound vanishes."""
    _check(c, p)
    q = p
    for k in range(1, MAZUR_BOUND + 1):
        if q.is_infinity:
            return k
        q = _add(c, q, p)
    return None


def points_with_x(c: Curve, x: RatLike) -> list[Point]:
    """Rational points with the given x-coordinate (zero, one or two)."""
    y = sqrt_rat(c.rhs(Fraction(x)))
    if y is None:
        return []
    if y == 0:
        return [Point(x, 0)]
    return [Point(x, y), Point(x, -y)]


def two_torsion_roots(c: Curve) -> list[Fraction]:
    """Rational roots of x^3 + A x^2 + B x, ascending."""
    roots = [Fraction(0)]
    s = sqrt_rat(c.A * c.A - 4 * c.B)
    if s is not None:
        roots += [(-c.A - s) / 2, (-c.A + s) / 2]
    return sorted(roots)


def is_halvable(c: Curve, p: Point) -> bool:
    """Whether p lies in 2E(Q); requires full rational 2-torsion."""
    roots = two_torsion_roots(c)
    if len(roots) != 3:
        raise DomainError("halving test needs three rational 2-torsion points")
    if p.is_infinity:
        return True
    return all(is_square(p.x - e) for e in roots)


@dataclass
class TorsionTable:
    points: list[tuple[Point, int]]
    structure: str
    method: str = field(default="lutz-nagell")

    def __len__(self):
        return len(self.points)

    @property
    def order_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(o for _, o in self.points).items()))

    def of_order(self, n: int) -> list[Point]:
        return [p for p, o in self.points if o == n]


def structure_label(orders: Iterable[int]) -> str:
    counts = Counter(orders)
    if counts == Counter({1: 1, 2: 3, 4: 4}):
        return Z2xZ4
    if counts == Counter({1: 1, 2: 3, 4: 4, 8: 8}):
        return Z2xZ8
    return OTHER


def _close(c: Curve, seeds: Iterable[Point], limit: int = 64) -> set[Point]:
    group = {INFINITY}
    frontier = list(seeds)
    while frontier:
        p = frontier.pop()
        if p in group:
            continue
        new = {p} | {_add(c, p, q) for q in group}
        group.add(p)
        frontier.extend(new - group)
        if len(group) > limit:
            raise DomainError("candidate points generate more than a torsion group")
    return group


def _table(c: Curve, pts: Iterable[Point], method: str) -> TorsionTable:
    entries = sorted(((p, order_of(c, p)) for p in pts), key=lambda e: e[0].sort_key())
    return TorsionTable(entries, structure_label(o for _, o in entries), method)


def torsion_subgroup(
    c: Curve, candidate_xs: Optional[Iterable[RatLike]] = None
) -> TorsionTable:
    """The full rational torsion subgroup of an integral curve.

    With ``candidate_xs`` the group is generated from the torsion points over
    those x-coordinates and accepted when it is provably complete: Z2xZ8 is
    maximal among rational torsion groups, and Z2xZ4 is complete when no
    order-4 point halves.  Any other outcome falls back to Lutz-Nagell.
    """
    if not c.is_integral:
        raise NotIntegral(f"torsion enumeration needs integral A, B; got {c}")
    if candidate_xs is not None:
        seeds = [Point(e, 0) for e in two_torsion_roots(c)]
        for x in candidate_xs:
            seeds += [p for p in points_with_x(c, x) if order_of(c, p) is not None]
        table = _table(c, _close(c, seeds), "closed-form")
        if table.structure == Z2xZ8:
            return table
        if table.structure == Z2xZ4 and not any(
            is_halvable(c, p) for p in table.of_order(4)
        ):
            return table
    return _table(c, lutz_nagell_points(c), "lutz-nagell")


def _monotone_root(f, lo: int, hi: int) -> Optional[int]:
    if lo > hi:
        return None
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        return None
    rising = fhi > flo
    while hi - lo > 1:
        mid = (lo + hi) // 2
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm < 0) == rising:
            lo = mid
        else:
            hi = mid
    return None


def integer_roots_cubic(a: int, b: int, d: int) -> list[int]:
    """Integer roots of x^3 + a x^2 + b x + d."""

    def f(x):
        return ((x + a) * x + b) * x + d

    bound = 1 + max(abs(a), abs(b), abs(d))
    roots = set()
    disc = a * a - 3 * b
    if disc <= 0:
        r = _monotone_root(f, -bound, bound)
        if r is not None:
            roots.add(r)
        return sorted(roots)
    s = _isqrt(disc)
    c1, c2 = (-a - s) // 3, (-a + s) // 3
    for x in list(range(c1 - 2, c1 + 3)) + list(range(c2 - 2, c2 + 3)):
        if f(x) == 0:
            roots.add(x)
    for lo, hi in ((-bound, c1 - 2), (c1 + 2, c2 - 2), (c2 + 2, bound)):
        r = _monotone_root(f, lo, hi)
        if r is not None:
            roots.add(r)
    return sorted(roots)


def lutz_nagell_points(c: Curve) -> list[Point]:
    """Torsion points: integral points with y = 0 or y^2 | disc, of finite order."""
    if not c.is_integral:
        raise NotIntegral(f"Lutz-Nagell needs an integral model; got {c}")
    A, B = int(c.A), int(c.B)
    disc = abs(int(c.discriminant))
    found = [INFINITY] + [Point(x, 0) for x in integer_roots_cubic(A, B, 0)]
    ys = [1]
    for p, e in factorize(disc).items():
        ys = [y * p**k for y in ys for k in range(e // 2 + 1)]
    for y in sorted(ys):
        for x in integer_roots_cubic(A, B, -y * y):
            for p in (Point(x, y), Point(x, -y)):
                if order_of(c, p) is not None:
                    found.append(p)
    return found


def isomorphic_by_scaling(c1: Curve, c2: Curve) -> Optional[Fraction]:
    """u^2 with (A2, B2) == (A1 u^2, B1 u^4) for rational u, or None."""
    if c1.A != 0:
        u2 = c2.A / c1.A
    else:
        if c2.A != 0:
            return None
        u2 = sqrt_rat(c2.B / c1.B)
        if u2 is None:
            return None
    if u2 <= 0 or not is_square(u2) or c1.B * u2 * u2 != c2.B:
        return None
    return u2
