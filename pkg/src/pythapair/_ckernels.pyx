# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search loops.

Candidates are sieved by quadratic residuosity modulo a handful of small
moduli using machine integers; survivors are confirmed with exact Python
integer square roots, so results match the pure-Python kernels exactly.
"""
from math import gcd, isqrt

cdef enum:
    NMOD = 10
    MAXMOD = 72

cdef unsigned long long MODS[NMOD]
MODS[:] = [64, 63, 65, 11, 17, 19, 23, 29, 31, 37]
cdef unsigned char QR[NMOD][MAXMOD]


cdef void _init_tables():
    cdef int i, x
    for i in range(NMOD):
        for x in range(MAXMOD):
            QR[i][x] = 0
        for x in range(MODS[i]):
            QR[i][(x * x) % MODS[i]] = 1


_init_tables()


cdef long _gcd(long a, long b) nogil:
    while b:
        a, b = b, a % b
    return a


cdef bint _sum_sq_ok(unsigned long long *am, unsigned long long *bm,
                     unsigned long long k, unsigned long long l) nogil:
    cdef int i
    cdef unsigned long long m, x, y
    for i in range(NMOD):
        m = MODS[i]
        x = am[i] * (k % m) % m
        y = bm[i] * (l % m) % m
        if not QR[i][(x * x + y * y) % m]:
            return False
    return True


def witness_scan(ae, be, long bound):
    """(k, l) from coprime opposite-parity (r, s), r <= bound, with
    (ae*k)^2 + (be*l)^2 a perfect square.  Both orientations are tested,
    (r^2 - s^2, 2rs) before (2rs, r^2 - s^2)."""
    cdef unsigned long long am[NMOD]
    cdef unsigned long long bm[NMOD]
    cdef long r, s, k, l
    cdef int i
    for i in range(NMOD):
        am[i] = ae % MODS[i]
        bm[i] = be % MODS[i]
    out = []
    for r in range(2, bound + 1):
        for s in range(1 + r % 2, r, 2):
            if _gcd(r, s) != 1:
                continue
            k = r * r - s * s
            l = 2 * r * s
            if _sum_sq_ok(am, bm, k, l):
                v = (ae * k) ** 2 + (be * l) ** 2
                if isqrt(v) ** 2 == v:
                    out.append((k, l))
            if _sum_sq_ok(am, bm, l, k):
                v = (ae * l) ** 2 + (be * k) ** 2
                if isqrt(v) ** 2 == v:
                    out.append((l, k))
    return out


def curve_search(A, B, d, long height):
    """(u, e) with 1 <= u, e <= height, gcd(u, e) = gcd(d, e) = 1, and
    d*(d^2 u^4 + A d u^2 e^2 + B e^4) a perfect square; ordered by e, then u."""
    cdef unsigned long long Am[NMOD]
    cdef unsigned long long Bm[NMOD]
    cdef unsigned long long dm[NMOD]
    cdef unsigned long long m, u2, e2, t
    cdef long u, e
    cdef int i
    cdef bint ok
    for i in range(NMOD):
        Am[i] = A % MODS[i]
        Bm[i] = B % MODS[i]
        dm[i] = d % MODS[i]
    out = []
    for e in range(1, height + 1):
        if gcd(d, e) != 1:
            continue
        for u in range(1, height + 1):
            if _gcd(u, e) != 1:
                continue
            ok = True
            for i in range(NMOD):
                m = MODS[i]
                u2 = (u % m) * (u % m) % m
                e2 = (e % m) * (e % m) % m
                t = dm[i] * dm[i] % m * u2 % m * u2 % m
                t = (t + Am[i] * dm[i] % m * u2 % m * e2) % m
                t = (t + Bm[i] * e2 % m * e2) % m
                if not QR[i][dm[i] * t % m]:
                    ok = False
                    break
            if ok:
                u2p = u * u
                e2p = e * e
                v = d * (d * d * u2p * u2p + A * d * u2p * e2p + B * e2p * e2p)
                if v >= 0 and isqrt(v) ** 2 == v:
                    out.append((u, e))
    return out
