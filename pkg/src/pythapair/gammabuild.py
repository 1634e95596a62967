"""The curves attached to a pythagorean pair and their Kubert parametrizations.

Mode ``24`` is y^2 = x^3 + (a^2+b^2) x^2 + a^2 b^2 x (torsion Z2xZ4) and mode
``28`` is y^2 = x^3 + (a^4+b^4) x^2 + a^4 b^4 x (torsion Z2xZ8).  Both factor
as x (x + a^(2e)) (x + b^(2e)) with e = 1 resp. 2.

The "transformed" model is y^2 X = s + A X + s X^2 with s^2 = B, reached by
X = s / x and Y = y X / s.  Torsion coordinates are listed on that model.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import ecgroup
from .ecgroup import Curve, Point
from .errors import DegenerateParams, ZeroX
from .exactnum import RatLike, sqrt_rat
from .pythagoras import PythagoreanPair

MODES = ("24", "28")


def _mode(mode) -> str:
    mode = str(mode)
    if mode not in MODES:
        raise ValueError(f"mode must be '24' or '28', got {mode!r}")
    return mode


@dataclass(frozen=True)
class GammaCurve:
    mode: str
    pair: PythagoreanPair
    curve: Curve

    @property
    def exponent(self) -> int:
        """1 in mode 24, 2 in mode 28: the witness condition uses (a^e k, b^e l)."""
        return 1 if self.mode == "24" else 2

    @property
    def ae(self) -> int:
        return self.pair.a**self.exponent

    @property
    def be(self) -> int:
        return self.pair.b**self.exponent

    @property
    def s(self) -> int:
        """a^e b^e, the square root of B used by the coordinate swap."""
        return self.ae * self.be

    @property
    def label(self) -> str:
        return f"Gamma{self.mode}({self.pair.a},{self.pair.b})"


def build(pair: PythagoreanPair, mode) -> GammaCurve:
    mode = _mode(mode)
    e = 1 if mode == "24" else 2
    a2, b2 = pair.a ** (2 * e), pair.b ** (2 * e)
    return GammaCurve(mode, pair, Curve(a2 + b2, a2 * b2))


@dataclass(frozen=True)
class Kubert28Params:
    mt: int
    nt: int
    tau: Fraction
    d: Fraction
    c: Fraction
    e: Fraction
    atilde: int
    btilde: int

    @property
    def curve(self) -> Curve:
        return Curve(self.atilde, self.btilde)

    @property
    def kubert_j(self) -> Fraction:
        """j-invariant of y^2 + (1-c)xy - ey = x^3 - ex^2."""
        return ecgroup.j_invariant(1 - self.c, -self.e, -self.e, 0, 0)


def kubert28(mt: int, nt: int) -> Kubert28Params:
    if nt == 0:
        raise DegenerateParams("tau = mt/nt needs nt != 0")
    tau = Fraction(mt, nt)
    if 8 * tau * tau == 1:
        raise DegenerateParams("8 tau^2 = 1")
    d = tau * (8 * tau + 2) / (8 * tau * tau - 1)
    if d == 0:
        raise DegenerateParams(f"d = 0 at tau = {tau}")
    e = (2 * d - 1) * (d - 1)
    c = e / d
    w = 2 * mt + nt
    atilde = 256 * mt**4 * w**4 + (4 * mt * mt - w * w) ** 4
    btilde = 256 * mt**4 * nt**4 * w**4 * (4 * mt + nt) ** 4
    if btilde == 0 or atilde * atilde == 4 * btilde or e == 0:
        raise DegenerateParams(f"singular curve at (mt, nt) = ({mt}, {nt})")
    return Kubert28Params(mt, nt, tau, d, c, e, atilde, btilde)


@dataclass(frozen=True)
class Kubert24Params:
    v: Fraction
    e: Fraction
    atilde: Fraction
    btilde: Fraction
    p8: Optional[Fraction] = None
    q2: Optional[Fraction] = None

    @property
    def curve(self) -> Curve:
        return Curve(self.atilde, self.btilde)

    @property
    def kubert_j(self) -> Fraction:
        """j-invariant of y^2 + xy - ey = x^3 - ex^2."""
        return ecgroup.j_invariant(1, -self.e, -self.e, 0, 0)


def kubert24(v: RatLike) -> Kubert24Params:
    v = Fraction(v)
    if v in (0, Fraction(1, 4), Fraction(-1, 4)):
        raise DegenerateParams(f"v = {v} is excluded")
    w = 16 * v * v
    return Kubert24Params(v, v * v - Fraction(1, 16), 2 * (w + 1), (w - 1) ** 2)


def kubert24_for_pair(pair: PythagoreanPair) -> Kubert24Params:
    """Kubert parameters at v = p/q with p = (a-b)/8, q = (a+b)/2."""
    p8 = Fraction(pair.a - pair.b, 8)
    q2 = Fraction(pair.a + pair.b, 2)
    k = kubert24(p8 / q2)
    return Kubert24Params(k.v, k.e, k.atilde, k.btilde, p8, q2)


def transform_x(g: GammaCurve, x2: RatLike) -> Fraction:
    """x0 = s / x2, the coordinate swap onto the transformed model."""
    x2 = Fraction(x2)
    if x2 == 0:
        raise ZeroX("x = 0 maps to infinity on the transformed model")
    return g.s / x2


def untransform_x(g: GammaCurve, x0: RatLike) -> Fraction:
    return transform_x(g, x0)


def transformed_rhs(g: GammaCurve, x0: RatLike) -> Fraction:
    """Y^2 on the transformed model at X = x0 (x0 != 0)."""
    x0 = Fraction(x0)
    return (g.s + g.curve.A * x0 + g.s * x0 * x0) / x0


def transformed_point(g: GammaCurve, p: Point) -> tuple[Fraction, Fraction]:
    x0 = transform_x(g, p.x)
    return x0, p.y * x0 / g.s


def untransform_point(g: GammaCurve, x0: RatLike, y0: RatLike) -> Point:
    x = untransform_x(g, x0)
    return Point(x, Fraction(y0) * g.s / Fraction(x0))


@dataclass(frozen=True)
class TorsionX:
    x0: Fraction
    order: int


# the two points at infinity of the transformed model, as homogeneous triples
TRANSFORMED_INFINITE_POINTS = ((0, 1, 0), (1, 0, 0))


def torsion_xcoords(g: GammaCurve) -> list[TorsionX]:
    """Affine torsion x-coordinates on the transformed model, with orders.

    The orders are the ones attached to the coordinates by the closed forms;
    the points at infinity are listed in ``TRANSFORMED_INFINITE_POINTS``.
    """
    a, b = g.pair.a, g.pair.b
    if g.mode == "24":
        return [
            TorsionX(Fraction(-a, b), 2),
            TorsionX(Fraction(-b, a), 2),
            TorsionX(Fraction(1), 4),
            TorsionX(Fraction(-1), 4),
        ]
    m, n = g.pair.m, g.pair.n
    a2, b2 = a * a, b * b
    return [
        TorsionX(Fraction(-a2, b2), 2),
        TorsionX(Fraction(-b2, a2), 2),
        TorsionX(Fraction(1), 4),
        TorsionX(Fraction(-1), 4),
        TorsionX(Fraction(m * (m + n), n * (m - n)), 8),
        TorsionX(Fraction(n * (m - n), m * (m + n)), 8),
        TorsionX(Fraction(-m * (m - n), n * (m + n)), 8),
        TorsionX(Fraction(-n * (m + n), m * (m - n)), 8),
    ]


def transformed_torsion_points(g: GammaCurve) -> list[tuple[Fraction, Fraction]]:
    """Affine torsion points (X, Y) on the transformed model, Y >= 0 first."""
    pts = []
    for t in torsion_xcoords(g):
        y = sqrt_rat(transformed_rhs(g, t.x0))
        if y is None:
            continue
        pts.append((t.x0, y))
        if y:
            pts.append((t.x0, -y))
    return pts


def torsion_table(g: GammaCurve) -> ecgroup.TorsionTable:
    """Torsion subgroup of the curve, seeded from the closed-form coordinates."""
    xs = [untransform_x(g, t.x0) for t in torsion_xcoords(g)]
    return ecgroup.torsion_subgroup(g.curve, xs)
