"""Pure-Python versions of the compiled search loops; same contracts."""
from math import gcd, isqrt


def _is_sq(v: int) -> bool:
    return v >= 0 and isqrt(v) ** 2 == v


def witness_scan(ae: int, be: int, bound: int) -> list[tuple[int, int]]:
    out = []
    for r in range(2, bound + 1):
        for s in range(1 + r % 2, r, 2):
            if gcd(r, s) != 1:
                continue
            k, l = r * r - s * s, 2 * r * s
            if _is_sq((ae * k) ** 2 + (be * l) ** 2):
                out.append((k, l))
            if _is_sq((ae * l) ** 2 + (be * k) ** 2):
                out.append((l, k))
    return out


def curve_search(A: int, B: int, d: int, height: int) -> list[tuple[int, int]]:
    out = []
    for e in range(1, height + 1):
        if gcd(d, e) != 1:
            continue
        e2 = e * e
        for u in range(1, height + 1):
            if gcd(u, e) != 1:
                continue
            u2 = u * u
            if _is_sq(d * (d * d * u2 * u2 + A * d * u2 * e2 + B * e2 * e2)):
                out.append((u, e))
    return out
