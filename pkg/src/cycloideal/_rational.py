"""Dense polynomial arithmetic over Q (coefficient lists, constant term first)."""

from __future__ import annotations

import math
from fractions import Fraction

from .poly_core import LaurentPoly


def to_fractions(p: LaurentPoly) -> list[Fraction]:
    """Dense rational coefficients of a polynomial with no negative exponents."""
    if p.is_zero():
        return []
    val, dense = p.to_dense()
    if val < 0:
        raise ValueError("expected an ordinary polynomial")
    return [Fraction(0)] * val + [Fraction(c) for c in dense]


def _qtrim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _qtrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _qmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qtrim(out)


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    r = list(a)
    if len(r) < len(b):
        return [], _qtrim(r)
    quot = [Fraction(0)] * (len(r) - len(b) + 1)
    lead = b[-1]
    for i in range(len(r) - len(b), -1, -1):
        c = r[i + len(b) - 1] / lead
        quot[i] = c
        if c:
            for j, y in enumerate(b):
                r[i + j] -= c * y
    return _qtrim(quot), _qtrim(r[: len(b) - 1])


def rational_xgcd(a: list[Fraction], b: list[Fraction]):
    """Extended Euclid over Q: returns ``(g, s, t)`` with ``s a + t b = g`` monic."""
    r0, r1 = _qtrim(list(a)), _qtrim(list(b))
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        quot, rem = _qdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _qsub(s0, _qmul(quot, s1))
        t0, t1 = t1, _qsub(t0, _qmul(quot, t1))
    if not r0:
        return [], [], []
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0]


def rational_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic GCD over Q by the Euclidean algorithm."""
    r0, r1 = _qtrim(list(a)), _qtrim(list(b))
    while r1:
        r0, r1 = r1, _qdivmod(r0, r1)[1]
    if not r0:
        return []
    lead = r0[-1]
    return [c / lead for c in r0]


def primitive_integer(coeffs: list[Fraction]) -> LaurentPoly:
    """Scale a nonzero rational polynomial to primitive integer form, positive leading coefficient."""
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return LaurentPoly.from_dense(0, [c // g for c in ints])
