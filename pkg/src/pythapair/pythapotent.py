"""From curve points to witness pairs (k, l) and back.

For a pair (a, b) and exponent e (1 in mode 24, 2 in mode 28) a witness is a
pythagorean (k, l) with (a^e k)^2 + (b^e l)^2 a perfect square.  Doubled
points x2 = x(2P) on the attached curve correspond to witnesses through

    sqrt(x2) = b^e l / k,

which is what the two extraction routines compute step by step.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .ecgroup import Point, _add, contains, order_of
from .errors import (
    DegenerateDoubling,
    DegenerateWitness,
    NonSquareLift,
    NotASquareRatio,
    NotAWitness,
    NotExpectedShape,
    OffCurve,
    PythaError,
    SizeLimit,
    TorsionInput,
)
from .exactnum import frac_from_json, frac_to_json, isqrt, sqrt_rat
from .gammabuild import GammaCurve, transform_x
from .pythagoras import same_ratio

DEFAULT_MAX_DIGITS = 4000


@dataclass(frozen=True)
class Extraction28:
    x2: Fraction
    x0: Fraction
    p: int
    q: int


@dataclass(frozen=True)
class Extraction24:
    x2: Fraction
    x0: Fraction
    f: int
    g: int

    def pq(self, ab: int) -> tuple[int, int]:
        """(p, q) = (ab f^2, g^2), so that x0 = p / q."""
        return ab * self.f * self.f, self.g * self.g


@dataclass
class WitnessCertificate:
    mode: str
    a: int
    b: int
    k: int
    l: int
    r: int
    s: int
    branch: str
    x2: Fraction
    hyp_ab: int
    hyp_kl: int
    hyp_combined: int
    rho: Fraction
    t: Fraction
    k_raw: int
    l_raw: int
    point: Optional[Point] = None

    @property
    def is_multiple_of_ab(self) -> bool:
        return same_ratio(self.k, self.l, self.a, self.b)

    def to_json(self) -> dict:
        if self.point is None or self.point.is_infinity:
            raise ValueError("certificate has no affine source point")
        return {
            "mode": self.mode,
            "a": str(self.a),
            "b": str(self.b),
            "k": str(self.k),
            "l": str(self.l),
            "r": str(self.r),
            "s": str(self.s),
            "branch": self.branch,
            "point": {"x": frac_to_json(self.point.x), "y": frac_to_json(self.point.y)},
            "x2": frac_to_json(self.x2),
            "hyp_ab": str(self.hyp_ab),
            "hyp_kl": str(self.hyp_kl),
            "hyp_combined": str(self.hyp_combined),
        }


def _require_mode(gamma: GammaCurve, mode: str) -> None:
    if gamma.mode != mode:
        raise ValueError(f"expected a mode-{mode} curve, got mode {gamma.mode}")


def doubled_x(gamma: GammaCurve, P: Point) -> Fraction:
    if not contains(gamma.curve, P):
        raise OffCurve(f"{P} is not on {gamma.label}")
    if P.is_infinity:
        raise DegenerateDoubling("P is the point at infinity")
    P2 = _add(gamma.curve, P, P)
    if P2.is_infinity:
        raise DegenerateDoubling(f"2P = O for P = {P}")
    if P2.x == 0:
        raise DegenerateDoubling(f"2P = (0, 0) for P = {P}")
    return P2.x


def extract28_from_x2(gamma: GammaCurve, x2) -> Extraction28:
    _require_mode(gamma, "28")
    if x2 == 0:
        raise DegenerateDoubling("x2 = 0")
    x0 = transform_x(gamma, x2)
    root = sqrt_rat(x0)
    if root is None or root == 0:
        raise NotASquareRatio(f"a^2 b^2 / x2 = {x0} is not a nonzero rational square")
    p, q = root.numerator, root.denominator
    a, b = gamma.pair.a, gamma.pair.b
    for v in (a * a * q * q + b * b * p * p, a * a * p * p + b * b * q * q):
        if isqrt(v) is None:
            raise NotASquareRatio(f"x2 = {x2} gives p/q = {root} failing the square conditions")
    return Extraction28(Fraction(x2), x0, p, q)


def extract28(gamma: GammaCurve, P: Point) -> Extraction28:
    return extract28_from_x2(gamma, doubled_x(gamma, P))


def extract24_from_x2(gamma: GammaCurve, x2) -> Extraction24:
    _require_mode(gamma, "24")
    if x2 == 0:
        raise DegenerateDoubling("x2 = 0")
    a, b = gamma.pair.a, gamma.pair.b
    x0 = transform_x(gamma, x2)
    root = sqrt_rat(x0 / (a * b))
    if root is None or root == 0:
        raise NotExpectedShape(f"x0 / (ab) = {x0 / (a * b)} is not a nonzero rational square")
    f, g = root.numerator, root.denominator
    p, q = a * b * f * f, g * g
    for v in (a * (a * q + b * p), b * (a * p + b * q)):
        if v < 0 or isqrt(v) is None:
            raise NotExpectedShape(f"x2 = {x2} gives f/g = {root} failing the square conditions")
    return Extraction24(Fraction(x2), x0, f, g)


def extract24(gamma: GammaCurve, P: Point) -> Extraction24:
    return extract24_from_x2(gamma, doubled_x(gamma, P))


def _pick_branch(num_base: int, root: int, den: int) -> tuple[Fraction, str]:
    """t = (num_base +- root) / den with t > 1, preferring '+'."""
    if den == 0:
        raise DegenerateWitness("vanishing denominator (s = 0)")
    for sign, branch in ((1, "+"), (-1, "-")):
        t = Fraction(num_base + sign * root, den)
        if t > 1:
            return t, branch
    raise DegenerateWitness(f"no branch gives r > s >= 1 (base {num_base}, root {root})")


def rs_from_extraction28(gamma: GammaCurve, p: int, q: int) -> tuple[Fraction, str]:
    a, b = gamma.pair.a, gamma.pair.b
    root = isqrt(a * a * q * q + b * b * p * p)
    if root is None:
        raise NotASquareRatio("a^2 q^2 + b^2 p^2 is not a square")
    return _pick_branch(b * p, root, a * q)


def rs_from_extraction24(gamma: GammaCurve, f: int, g: int) -> tuple[Fraction, str]:
    b = gamma.pair.b
    root = isqrt(g * g + b * b * f * f)
    if root is None:
        raise NotExpectedShape("g^2 + b^2 f^2 is not a square")
    return _pick_branch(b * f, root, g)


def certificate_from_x2(gamma: GammaCurve, x2, point: Optional[Point] = None) -> WitnessCertificate:
    """Run the mode's algorithm on a square x-coordinate x2."""
    a, b = gamma.pair.a, gamma.pair.b
    if gamma.mode == "28":
        ex = extract28_from_x2(gamma, x2)
        t, branch = rs_from_extraction28(gamma, ex.p, ex.q)
        rho = a * (t * t + 1) / (2 * b * t)
    else:
        ex = extract24_from_x2(gamma, x2)
        t, branch = rs_from_extraction24(gamma, ex.f, ex.g)
        rho = b * (t * t + 1) / (t * t - 1)
    r, s = t.numerator, t.denominator
    k_raw, l_raw = r * r - s * s, 2 * r * s
    if k_raw <= 0 or l_raw <= 0:
        raise DegenerateWitness(f"(r, s) = ({r}, {s}) gives a degenerate pair")
    d = gcd(k_raw, l_raw)
    k, l = k_raw // d, l_raw // d
    hyp_kl = isqrt(k * k + l * l)
    combined = isqrt((gamma.ae * k) ** 2 + (gamma.be * l) ** 2)
    if combined is None:
        raise NotAWitness(f"extracted ({k}, {l}) fails the combined square condition")
    return WitnessCertificate(
        gamma.mode, a, b, k, l, r, s, branch, Fraction(x2), gamma.pair.c,
        hyp_kl, combined, rho, t, k_raw, l_raw, point,
    )


def pair_from_point28(gamma: GammaCurve, P: Point) -> WitnessCertificate:
    _require_mode(gamma, "28")
    return certificate_from_x2(gamma, doubled_x(gamma, P), P)


def pair_from_point24(gamma: GammaCurve, P: Point) -> WitnessCertificate:
    _require_mode(gamma, "24")
    return certificate_from_x2(gamma, doubled_x(gamma, P), P)


def pair_from_point(gamma: GammaCurve, P: Point) -> WitnessCertificate:
    return certificate_from_x2(gamma, doubled_x(gamma, P), P)


def is_witness(gamma: GammaCurve, k: int, l: int) -> bool:
    if k <= 0 or l <= 0 or isqrt(k * k + l * l) is None:
        return False
    return isqrt((gamma.ae * k) ** 2 + (gamma.be * l) ** 2) is not None


def point_from_pair(gamma: GammaCurve, k: int, l: int) -> Point:
    """A point with square x-coordinate corresponding to the witness (k, l).

    t = (k + hyp) / l satisfies (t^2 - 1) / (2t) = k / l, the relation the
    algorithms invert; either orientation of (k, l) is accepted.
    """
    if not is_witness(gamma, k, l):
        raise NotAWitness(f"({k}, {l}) is not a {gamma.mode}-witness for {gamma.pair.as_tuple()}")
    d = gcd(k, l)
    k, l = k // d, l // d
    a, b = gamma.pair.a, gamma.pair.b
    t = Fraction(k + isqrt(k * k + l * l), l)
    if gamma.mode == "28":
        p_over_q = a * (t * t - 1) / (2 * b * t)
        x = (a * b / p_over_q) ** 2
    else:
        g_over_f = 2 * b * t / (t * t - 1)
        x = g_over_f**2
    y = sqrt_rat(gamma.curve.rhs(x))
    if y is None:
        raise NonSquareLift(f"x = {x} does not lift to a rational point")
    return Point(x, y)


def _digits(p: Point) -> int:
    return max(
        len(str(abs(v))) for v in (p.x.numerator, p.x.denominator, p.y.numerator, p.y.denominator)
    )


def generate_family(
    gamma: GammaCurve, P: Point, count: int, max_digits: int = DEFAULT_MAX_DIGITS
) -> list[WitnessCertificate]:
    """Certificates from 2iP, i = 1, 2, ..., no two of them multiples."""
    if order_of(gamma.curve, P) is not None:
        raise TorsionInput(f"{P} has finite order")
    out: list[WitnessCertificate] = []
    Q = P
    for _ in range(4 * count + 4):
        if len(out) >= count:
            break
        if _digits(Q) > max_digits:
            raise SizeLimit(f"coordinates exceed {max_digits} digits")
        try:
            cert = pair_from_point(gamma, Q)
        except PythaError:
            cert = None
        if cert is not None and not any(same_ratio(cert.k, cert.l, c.k, c.l) for c in out):
            out.append(cert)
        Q = _add(gamma.curve, Q, P)
    return out


def verify_certificate(obj: dict) -> list[str]:
    """Re-check a JSON certificate with plain integer arithmetic.

    Returns the list of failed checks; empty means the certificate holds.
    Nothing is recomputed through the curve or extraction code.
    """
    try:
        mode = obj["mode"]
        if mode not in ("24", "28"):
            return [f"unknown mode {mode!r}"]
        e = 1 if mode == "24" else 2
        a, b, k, l, r, s = (int(obj[f]) for f in ("a", "b", "k", "l", "r", "s"))
        hab, hkl, hcomb = (int(obj[f]) for f in ("hyp_ab", "hyp_kl", "hyp_combined"))
        x, y = frac_from_json(obj["point"]["x"]), frac_from_json(obj["point"]["y"])
        x2 = frac_from_json(obj["x2"])
        branch = obj["branch"]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        return [f"malformed certificate: {exc!r}"]
    fails = []

    def check(ok: bool, what: str):
        if not ok:
            fails.append(what)

    check(min(a, b, k, l) > 0, "a, b, k, l must be positive")
    check(branch in ("+", "-"), "branch must be '+' or '-'")
    check(hab > 0 and hab * hab == a * a + b * b, "hyp_ab^2 != a^2 + b^2")
    check(hkl > 0 and hkl * hkl == k * k + l * l, "hyp_kl^2 != k^2 + l^2")
    check(
        hcomb > 0 and hcomb * hcomb == (a**e * k) ** 2 + (b**e * l) ** 2,
        "hyp_combined^2 != combined sum",
    )
    check(gcd(k, l) == 1, "(k, l) not primitive")
    check(r > s >= 1, "need r > s >= 1")
    check((r * r - s * s) * l == 2 * r * s * k, "(k, l) not proportional to (r^2 - s^2, 2rs)")
    A, B = a ** (2 * e) + b ** (2 * e), (a * b) ** (2 * e)
    check(y * y == x * x * x + A * x * x + B * x, "point not on the curve")
    if y != 0:
        check(x2 == (x * x - B) ** 2 / (4 * y * y), "x2 != x(2 * point)")
    else:
        fails.append("point has y = 0")
    root = sqrt_rat(x2)
    check(root is not None and root * k == b**e * l, "sqrt(x2) != b^e l / k")
    return fails
