"""Pure-Python arithmetic kernel.

Interface contract shared with the compiled kernel (_fast):

  * a "term list" is a tuple of (rad, num, den) int triples meaning
    sum_i (num_i/den_i)*sqrt(rad_i), with rad square-free and strictly
    increasing across the tuple, num != 0, den > 0, gcd(num, den) == 1.
  * all functions take and return canonical term lists.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

BACKEND_NAME = "pure"


@lru_cache(maxsize=1 << 16)
def squarefree_split(n: int) -> tuple[int, int]:
    """Split n > 0 as outer**2 * rad with rad square-free; return (outer, rad)."""
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
    return outer, rad


def _canonical(acc: dict[int, tuple[int, int]]) -> tuple[tuple[int, int, int], ...]:
    out = []
    for rad in sorted(acc):
        num, den = acc[rad]
        if num == 0:
            continue
        g = gcd(num, den)
        out.append((rad, num // g, den // g))
    return tuple(out)


def add_terms(a, b):
    """Exact sum of two canonical term lists."""
    acc = {rad: (num, den) for rad, num, den in a}
    for rad, num, den in b:
        if rad in acc:
            n0, d0 = acc[rad]
            acc[rad] = (n0 * den + num * d0, d0 * den)
        else:
            acc[rad] = (num, den)
    return _canonical(acc)


def mul_terms(a, b):
    """Exact product of two canonical term lists.

    sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)*(r2/g)) for g = gcd(r1, r2); the
    reduced product of two square-free numbers is square-free, so no
    factorization is needed here.
    """
    acc: dict[int, tuple[int, int]] = {}
    for r1, n1, d1 in a:
        for r2, n2, d2 in b:
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


def scale_terms(t, num: int, den: int):
    """Multiply a canonical term list by the rational num/den."""
    if num == 0:
        return ()
    out = []
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
