# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernel; same contract as the pure module.

Term lists are tuples of (rad, num, den) int triples, rad square-free and
strictly increasing, num != 0, den > 0, gcd(num, den) == 1.
"""

from math import gcd, isqrt

BACKEND_NAME = "fast"

cdef dict _SPLIT_CACHE = {}


cdef inline unsigned long long _ugcd(unsigned long long a, unsigned long long b):
    cdef unsigned long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef tuple _split_small(unsigned long long n):
    cdef unsigned long long outer = 1, rad = 1, m = n, p, e
    e = 0
    while m % 2 == 0:
        m //= 2
        e += 1
    outer <<= e >> 1
    if e & 1:
        rad = 2
    p = 3
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            outer *= p ** (e >> 1)
            if e & 1:
                rad *= p
        p += 2
    if m > 1:
        rad *= m
    return outer, rad


def squarefree_split(n):
    """Split n > 0 as outer**2 * rad with rad square-free; return (outer, rad)."""
    hit = _SPLIT_CACHE.get(n)
    if hit is not None:
        return hit
    if n < (1 << 62):
        out = _split_small(n)
    else:
        outer = 1
        rad = 1
        m = n
        e = 0
        while m % 2 == 0:
            m //= 2
            e += 1
        outer <<= e >> 1
        if e & 1:
            rad = 2
        p = 3
        while p * p <= m:
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                outer *= p ** (e >> 1)
                if e & 1:
                    rad *= p
            p += 2
        if m > 1:
            r = isqrt(m)
            if r * r == m:
                outer *= r
            else:
                rad *= m
        out = (outer, rad)
    if len(_SPLIT_CACHE) < (1 << 16):
        _SPLIT_CACHE[n] = out
    return out


cdef tuple _canonical(dict acc):
    cdef list out = []
    for rad in sorted(acc):
        num, den = acc[rad]
        if num == 0:
            continue
        g = gcd(num, den)
        out.append((rad, num // g, den // g))
    return tuple(out)


def add_terms(a, b):
    """Exact sum of two canonical term lists."""
    cdef dict acc = {rad: (num, den) for rad, num, den in a}
    for rad, num, den in b:
        if rad in acc:
            n0, d0 = acc[rad]
            acc[rad] = (n0 * den + num * d0, d0 * den)
        else:
            acc[rad] = (num, den)
    return _canonical(acc)


def mul_terms(a, b):
    """Exact product of two canonical term lists (gcd-merged radicands)."""
    cdef dict acc = {}
    cdef unsigned long long g64
    for r1, n1, d1 in a:
        for r2, n2, d2 in b:
            if r1 < (1 << 62) and r2 < (1 << 62):
                g64 = _ugcd(r1, r2)
                g = g64
            else:
                g = gcd(r1, r2)
            rad = (r1 // g) * (r2 // g)
            num = n1 * n2 * g
            den = d1 * d2
            if rad in acc:
                n0, d0 = acc[rad]
                acc[rad] = (n0 * den + num * d0, d0 * den)
            else:
                acc[rad] = (num, den)
    return _canonical(acc)


def scale_terms(t, num, den):
    """Multiply a canonical term list by the rational num/den."""
    if num == 0:
        return ()
    cdef list out = []
    for rad, n, d in t:
        nn = n * num
        dd = d * den
        g = gcd(nn, dd)
        nn //= g
        dd //= g
        if dd < 0:
            nn, dd = -nn, -dd
        out.append((rad, nn, dd))
    return tuple(out)


def neg_terms(t):
    """Negate a canonical term list."""
    return tuple((rad, -num, den) for rad, num, den in t)
